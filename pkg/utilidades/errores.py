"""
Errores del Evaluador APMM
==========================

Jerarquía de excepciones del evaluador. Todas derivan de ValueError.
"""

from typing import List, Optional


class ErrorAPMM(ValueError):
    """Error base del evaluador."""


class ErrorUso(ErrorAPMM):
    """Argumentos de línea de comandos inválidos; uso es el texto de ayuda breve."""

    def __init__(self, mensaje: str, uso: Optional[str] = None):
        self.uso = uso
        super().__init__(mensaje)


class ErrorParseo(ErrorAPMM):
    """Documento mal formado; lleva el número de línea."""

    def __init__(self, mensaje: str, linea: Optional[int] = None):
        self.mensaje = mensaje
        self.linea = linea
        prefijo = f"line {linea}: " if linea is not None else ""
        super().__init__(f"{prefijo}{mensaje}")


class ErrorValidacionModelo(ErrorAPMM):
    """El modelo viola uno o más invariantes."""

    def __init__(self, violaciones: List[str]):
        self.violaciones = list(violaciones)
        super().__init__("invalid model: " + "; ".join(self.violaciones))


class ErrorEntradaEvaluacion(ErrorAPMM):
    """Entradas de evaluación inconsistentes (respuestas, niveles, evaluadores)."""
