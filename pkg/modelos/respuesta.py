"""
Modelos de Respuestas de Evaluadores
====================================

Este módulo define la escala de calificación, las respuestas de un evaluador,
la respuesta consolidada de una organización y las filas de cobertura.

Una calificación en blanco se representa con None.

Autor: Equipo Evaluador APMM
Versión: 1.0.0
"""

from dataclasses import dataclass, field
from enum import Enum, IntEnum
from typing import Dict, List, Optional


class Calificacion(IntEnum):
    """Escala de desempeño 0-4."""
    NO_APLICA = 0
    NO_DE_ACUERDO = 1
    PARCIALMENTE_DE_ACUERDO = 2
    MAYORMENTE_DE_ACUERDO = 3
    COMPLETAMENTE_DE_ACUERDO = 4

    @property
    def expresion(self) -> str:
        """Expresión lingüística de la calificación."""
        return {
            Calificacion.NO_APLICA: "Doesn't Apply",
            Calificacion.NO_DE_ACUERDO: "Not Agree",
            Calificacion.PARCIALMENTE_DE_ACUERDO: "Partially Agree",
            Calificacion.MAYORMENTE_DE_ACUERDO: "Largely Agree",
            Calificacion.COMPLETAMENTE_DE_ACUERDO: "Completely Agree",
        }[self]


class ProcedenciaConsolidacion(Enum):
    """Cómo se obtuvo la calificación consolidada de un enunciado."""
    UNANIME = "unanimous"
    MEDIANA = "median"
    CEROS_SUPRIMIDOS = "zero-suppressed"
    TODO_BLANCO = "all-blank"
    PRIMER_EVALUADOR = "first-rater"


class ReglaConsolidacion(Enum):
    """Regla para fusionar varios evaluadores."""
    MEDIANA = "median"
    PRIMERO = "first"


@dataclass
class ConjuntoRespuestas:
    """Calificaciones de un evaluador, por id de enunciado."""
    id_modelo: str
    organizacion: str
    evaluador: str
    calificaciones: Dict[str, Optional[Calificacion]] = field(default_factory=dict)


@dataclass
class RespuestaConsolidada:
    """Una calificación por enunciado del modelo tras fusionar evaluadores."""
    id_modelo: str
    organizacion: str
    total_evaluadores: int
    calificaciones: Dict[str, Optional[Calificacion]]
    procedencia: Dict[str, ProcedenciaConsolidacion] = field(default_factory=dict)
    evaluadores: List[str] = field(default_factory=list)
    regla: ReglaConsolidacion = ReglaConsolidacion.MEDIANA


@dataclass
class ConteoCobertura:
    """Conteos de un evaluador en un nivel (o en todo el modelo)."""
    respondidos: int = 0
    en_blanco: int = 0
    no_aplica: int = 0

    def sumar(self, otro: "ConteoCobertura") -> "ConteoCobertura":
        return ConteoCobertura(
            self.respondidos + otro.respondidos,
            self.en_blanco + otro.en_blanco,
            self.no_aplica + otro.no_aplica,
        )


@dataclass
class CoberturaEvaluador:
    """Fila del reporte de cobertura para un evaluador."""
    evaluador: str
    por_nivel: Dict[int, ConteoCobertura]
    total: ConteoCobertura
