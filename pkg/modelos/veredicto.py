"""
Veredictos de Evaluación
========================

Resultado de evaluar cada nivel y nivel de madurez de arquitectura (AML)
resultante.

Autor: Equipo Evaluador APMM
Versión: 1.0.0
"""

from dataclasses import dataclass, field
from typing import Dict, List


@dataclass
class VeredictoNivel:
    """
    Veredicto de un nivel.

    aprobado equivale a: acordados >= umbral y, para cada actividad de
    compuerta g, acordados_compuerta[g] >= umbral_compuerta[g].
    """
    indice_nivel: int
    total_enunciados: int
    acordados: int
    umbral: int
    acordados_compuerta: Dict[str, int] = field(default_factory=dict)
    umbral_compuerta: Dict[str, int] = field(default_factory=dict)
    en_blanco: int = 0
    aprobado: bool = False


@dataclass
class ResultadoEvaluacion:
    """Veredictos ascendentes y AML; aml = 0 cuando ningún nivel aprueba."""
    veredictos: List[VeredictoNivel]
    aml: int
    nombre_aml: str

    @property
    def niveles_aprobados(self) -> List[int]:
        return [v.indice_nivel for v in self.veredictos if v.aprobado]

    @property
    def niveles_reprobados_bajo_aml(self) -> List[int]:
        return [v.indice_nivel for v in self.veredictos
                if not v.aprobado and v.indice_nivel < self.aml]


@dataclass
class CeldaPerfil:
    """Enunciados acordados de una actividad en un nivel."""
    indice_nivel: int
    id_actividad: str
    acordados: int
    total: int


@dataclass
class FilaUmbral:
    """N y PT de un nivel, con N y PT de cada actividad de compuerta."""
    indice_nivel: int
    nombre: str
    total_enunciados: int
    umbral: int
    total_compuerta: Dict[str, int] = field(default_factory=dict)
    umbral_compuerta: Dict[str, int] = field(default_factory=dict)
