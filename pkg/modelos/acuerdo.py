"""
Modelos de Acuerdo entre Evaluadores
====================================

Matriz de calificaciones de un nivel (items x evaluadores) y resultados de
Kendall W y kappa de Fleiss. ResultadoAcuerdo se serializa a JSON con las
claves públicas del reporte de acuerdo.

Autor: Equipo Evaluador APMM
Versión: 1.0.0
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import List, Optional, Tuple

import numpy as np
from dataclasses_json import config, dataclass_json


class CategoriaEmam(Enum):
    """Escala de interpretación de kappa."""
    POBRE = "Poor"
    MODERADO = "Moderate"
    SUSTANCIAL = "Substantial"
    EXCELENTE = "Excellent"


@dataclass
class MatrizCalificaciones:
    """Celdas n x m sin blancos; filas = enunciados, columnas = evaluadores."""
    indice_nivel: int
    items: Tuple[str, ...]
    evaluadores: Tuple[str, ...]
    celdas: np.ndarray
    descartados: Tuple[str, ...] = ()

    @property
    def n(self) -> int:
        return len(self.items)

    @property
    def m(self) -> int:
        return len(self.evaluadores)


@dataclass
class ResultadoKendall:
    """W con tie correction, chi² y grados de libertad."""
    w: Optional[float]
    chi_cuadrado: Optional[float]
    grados_libertad: int
    motivo_degenerado: Optional[str] = None

    @property
    def es_degenerado(self) -> bool:
        return self.motivo_degenerado is not None


@dataclass
class ResultadoFleiss:
    """Kappa de Fleiss y su estadístico Z bajo la hipótesis nula."""
    kappa: Optional[float]
    z: Optional[float]
    motivo_degenerado: Optional[str] = None

    @property
    def es_degenerado(self) -> bool:
        return self.kappa is None


def _clave(nombre: str):
    return field(metadata=config(field_name=nombre))


@dataclass_json
@dataclass
class ResultadoAcuerdo:
    """Resultado de acuerdo de un nivel."""
    nivel: int = _clave("level")
    n_items: int = _clave("n_items")
    m_evaluadores: int = _clave("m_raters")
    items_descartados: List[str] = _clave("dropped_items")
    kendall_w: Optional[float] = _clave("kendall_w")
    chi_cuadrado: Optional[float] = _clave("chi_square")
    grados_libertad: int = _clave("df")
    fleiss_kappa: Optional[float] = _clave("fleiss_kappa")
    z: Optional[float] = _clave("z")
    categoria: Optional[CategoriaEmam] = _clave("category")
    motivo_degenerado: Optional[str] = _clave("degenerate_reason")
    significancia_chi: Optional[str] = _clave("chi_square_significance")
    significancia_z: Optional[str] = _clave("z_significance")
