"""
Convertidor de Datos para el Evaluador APMM
===========================================

Este módulo proporciona funciones de conversión entre las estructuras del
evaluador y su representación JSON determinista, y el formateo de números
para los reportes de texto.

Autor: Equipo Evaluador APMM
Versión: 1.0.0
"""

import json
import math
from enum import Enum
from typing import Any, Optional


class ConvertidorAPMM:
    """
    Clase principal de conversión de datos del evaluador.
    Proporciona métodos estáticos.
    """

    @staticmethod
    def normalizar_numeros(valor: Any) -> Any:
        """
        Convertir recursivamente los float integrales en int.

        Args:
            valor: Estructura JSON (dict, list o escalar)

        Returns:
            Estructura equivalente con 1.0 -> 1
        """
        if isinstance(valor, dict):
            return {clave: ConvertidorAPMM.normalizar_numeros(v) for clave, v in valor.items()}
        if isinstance(valor, list):
            return [ConvertidorAPMM.normalizar_numeros(v) for v in valor]
        if isinstance(valor, float) and math.isfinite(valor) and valor.is_integer():
            return int(valor)
        return valor

    @staticmethod
    def diccionario_a_json(diccionario: Any) -> str:
        """
        Convertir una estructura a JSON determinista.

        Claves ordenadas, sangría de 2, UTF-8 sin escapes y salto de línea final.
        """
        normalizado = ConvertidorAPMM.normalizar_numeros(diccionario)
        return json.dumps(
            normalizado, sort_keys=True, indent=2, ensure_ascii=False,
            default=ConvertidorAPMM._json_serializer
        ) + "\n"

    @staticmethod
    def json_a_diccionario(json_string: str) -> Any:
        """Convertir JSON string a estructura Python."""
        return json.loads(json_string)

    @staticmethod
    def _json_serializer(obj: Any) -> Any:
        """Serializador para enums."""
        if isinstance(obj, Enum):
            return obj.value
        raise TypeError(f"Object of type {type(obj).__name__} is not JSON serializable")

    @staticmethod
    def formatear_numero(numero: Optional[float], decimales: int = 4) -> str:
        """
        Formatear número para tablas de texto; None se muestra como "-".

        Args:
            numero: Número a formatear
            decimales: Número de decimales

        Returns:
            Número formateado como string
        """
        if numero is None:
            return "-"
        if isinstance(numero, int):
            return str(numero)
        return f"{numero:.{decimales}f}"
