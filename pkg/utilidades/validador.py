"""
Validador de Datos para el Evaluador APMM
=========================================

Este módulo proporciona funciones de validación para los valores que llegan
desde archivos y desde la línea de comandos: calificaciones, identificadores
de enunciados, porcentajes y selección de niveles.

Autor: Equipo Evaluador APMM
Versión: 1.0.0
"""

import math
from typing import Any, List, Optional

# Importar constantes
from utilidades.constantes import MARCADOR_BLANCO, LimitesEscala


class ResultadoValidacion:
    """Resultado de una validación."""

    def __init__(self, es_valido: bool, mensaje: str = "", codigo_error: str = "",
                 valor: Any = None):
        """
        Inicializar resultado de validación.

        Args:
            es_valido: Si la validación fue exitosa
            mensaje: Mensaje descriptivo del resultado
            codigo_error: Código de error específico
            valor: Valor ya convertido cuando la validación es exitosa
        """
        self.es_valido = es_valido
        self.mensaje = mensaje
        self.codigo_error = codigo_error
        self.valor = valor

    def __bool__(self):
        """Permitir uso en contextos booleanos."""
        return self.es_valido

    def __str__(self):
        """Representación string del resultado."""
        return f"{'✓' if self.es_valido else '✗'} {self.mensaje}"


class ValidadorAPMM:
    """
    Clase principal de validación del evaluador.
    Proporciona métodos estáticos; los mensajes de error se muestran al usuario.
    """

    @staticmethod
    def validar_calificacion(token: str) -> ResultadoValidacion:
        """
        Validar el token de calificación de una línea de respuestas.

        Args:
            token: "0".."4" o el marcador de blanco "-"

        Returns:
            ResultadoValidacion con valor int o None (blanco)
        """
        if token == MARCADOR_BLANCO:
            return ResultadoValidacion(True, "blank", valor=None)
        if len(token) == 1 and token in "01234":
            return ResultadoValidacion(True, f"rating {token}", valor=int(token))
        return ResultadoValidacion(
            False,
            f"invalid rating '{token}' (expected 0, 1, 2, 3, 4 or {MARCADOR_BLANCO})",
            "CALIFICACION_INVALIDA"
        )

    @staticmethod
    def validar_id_enunciado(id_enunciado: str, ids_conocidos: Optional[frozenset] = None
                             ) -> ResultadoValidacion:
        """
        Validar un id de enunciado.

        Con ids_conocidos se exige pertenencia al modelo; sin ellos sólo se
        verifica que no esté vacío.
        """
        if not id_enunciado:
            return ResultadoValidacion(False, "empty statement id", "ID_VACIO")
        if ids_conocidos is not None and id_enunciado not in ids_conocidos:
            return ResultadoValidacion(
                False, f"unknown statement id {id_enunciado}", "ID_DESCONOCIDO"
            )
        return ResultadoValidacion(True, f"statement {id_enunciado}", valor=id_enunciado)

    @staticmethod
    def validar_porcentaje(valor: str) -> ResultadoValidacion:
        """
        Validar un porcentaje de acuerdo escrito por el usuario.

        Returns:
            ResultadoValidacion con valor float en [0, 100]
        """
        try:
            porcentaje = float(valor)
        except (ValueError, TypeError):
            return ResultadoValidacion(False, f"percentage must be numeric: {valor}",
                                       "PORCENTAJE_FORMATO")

        if math.isnan(porcentaje) or not (LimitesEscala.MINIMO <= porcentaje <= LimitesEscala.MAXIMO):
            return ResultadoValidacion(
                False,
                f"percentage out of range ({LimitesEscala.MINIMO:g}-{LimitesEscala.MAXIMO:g}): {valor}",
                "PORCENTAJE_RANGO"
            )
        return ResultadoValidacion(True, f"percentage {porcentaje:g}", valor=porcentaje)

    @staticmethod
    def validar_seleccion_nivel(valor: str, indices: List[int]) -> ResultadoValidacion:
        """
        Validar la opción --level ("all" o un índice del modelo).

        Returns:
            ResultadoValidacion con la lista de índices seleccionados
        """
        if valor == "all":
            return ResultadoValidacion(True, "all levels", valor=list(indices))
        try:
            indice = int(valor)
        except ValueError:
            return ResultadoValidacion(False, f"level must be an integer or 'all': {valor}",
                                       "NIVEL_FORMATO")
        if indice not in indices:
            return ResultadoValidacion(False, f"unknown level {indice}", "NIVEL_DESCONOCIDO")
        return ResultadoValidacion(True, f"level {indice}", valor=[indice])

