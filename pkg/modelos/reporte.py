"""
Reporte de Evaluación
=====================

Estructura serializable del reporte de evaluación: una fila por nivel con
N, NA, PT, conteos por compuerta y blancos, más el AML y las notas.
Las claves JSON públicas se fijan con field_name.

Autor: Equipo Evaluador APMM
Versión: 1.0.0
"""

from dataclasses import dataclass, field
from typing import List, Optional

from dataclasses_json import config, dataclass_json


def _clave(nombre: str, **kwargs):
    return field(metadata=config(field_name=nombre), **kwargs)


@dataclass_json
@dataclass
class ModeloReporte:
    id: str = _clave("id")
    nombre: str = _clave("name")


@dataclass_json
@dataclass
class FilaCompuerta:
    actividad: str = _clave("activity")
    acordados: int = _clave("agreed")
    umbral: int = _clave("threshold")


@dataclass_json
@dataclass
class FilaNivel:
    indice: int = _clave("index")
    nombre: str = _clave("name")
    total: int = _clave("total")
    acordados: int = _clave("agreed")
    umbral: int = _clave("threshold")
    compuertas: List[FilaCompuerta] = _clave("gates")
    en_blanco: int = _clave("blanks")
    aprobado: bool = _clave("passed")


@dataclass_json
@dataclass
class FilaActividad:
    nivel: int = _clave("level")
    actividad: str = _clave("activity")
    acordados: int = _clave("agreed")
    total: int = _clave("total")


@dataclass_json
@dataclass
class ReporteEvaluacion:
    """Una fila por nivel del modelo; aml consistente con las filas."""
    modelo: ModeloReporte = _clave("model")
    organizacion: str = _clave("organization")
    evaluadores: List[str] = _clave("raters")
    consolidacion: str = _clave("consolidation")
    niveles: List[FilaNivel] = _clave("levels")
    aml: int = _clave("aml")
    nombre_aml: str = _clave("aml_name")
    notas: List[str] = _clave("notes", default_factory=list)
    actividades: Optional[List[FilaActividad]] = _clave("activities", default=None)
