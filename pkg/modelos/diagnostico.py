"""
Diagnósticos de Lectura
=======================

Problemas encontrados al leer un archivo de respuestas, siempre con la
línea del archivo a la que se refieren.
"""

from dataclasses import dataclass
from enum import Enum


class SeveridadDiagnostico(Enum):
    """Severidad de un diagnóstico."""
    ERROR = "Error"
    ADVERTENCIA = "Warning"


@dataclass(frozen=True)
class Diagnostico:
    """Diagnóstico de una línea (linea >= 1)."""
    linea: int
    severidad: SeveridadDiagnostico
    mensaje: str

    @property
    def es_error(self) -> bool:
        return self.severidad is SeveridadDiagnostico.ERROR

    def __str__(self) -> str:
        return f"line {self.linea}: {self.severidad.value}: {self.mensaje}"
