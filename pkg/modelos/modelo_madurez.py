"""
Modelo de Madurez de Proceso de Arquitectura
============================================

Este módulo define el esquema de un modelo de madurez: niveles, actividades,
enunciados, ratio de aprobación y actividades de compuerta. El modelo es
inmutable una vez construido y puede compartirse entre evaluaciones.

Autor: Equipo Evaluador APMM
Versión: 1.0.0
"""

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Dict, FrozenSet, Iterable, List, Optional, Tuple


class Dimension(Enum):
    """Dimensiones que agrupan las actividades del proceso de arquitectura."""
    DISENO_ARQUITECTURA = "design"
    GESTION_LINEA_PRODUCTOS = "management"
    DOCUMENTACION = "documentation"


@dataclass(frozen=True)
class Actividad:
    """Actividad clave del proceso de arquitectura."""
    id: str
    nombre: str
    dimension: Dimension
    es_compuerta: bool = False


@dataclass(frozen=True)
class Nivel:
    """Nivel de madurez; total_enunciados es N del nivel."""
    indice: int
    nombre: str
    total_enunciados: int = 0


@dataclass(frozen=True)
class Enunciado:
    """Enunciado del cuestionario. El texto es sólo para mostrar."""
    id: str
    indice_nivel: int
    id_actividad: str
    texto: str


@dataclass(frozen=True)
class ModeloMadurez:
    """
    Modelo completo como datos.

    Los niveles se guardan en orden ascendente; los enunciados en el orden
    de declaración. Las actividades de compuerta se derivan de las actividades.
    """
    id: str
    nombre: str
    niveles: Tuple[Nivel, ...]
    actividades: Tuple[Actividad, ...]
    enunciados: Tuple[Enunciado, ...]
    ratio_aprobacion: Fraction = Fraction(4, 5)

    @property
    def ids_actividades_compuerta(self) -> FrozenSet[str]:
        return frozenset(a.id for a in self.actividades if a.es_compuerta)

    @property
    def actividades_compuerta(self) -> Tuple[Actividad, ...]:
        return tuple(a for a in self.actividades if a.es_compuerta)

    @property
    def ids_enunciados(self) -> FrozenSet[str]:
        return frozenset(e.id for e in self.enunciados)

    @property
    def total_enunciados(self) -> int:
        return len(self.enunciados)

    def nivel(self, indice: int) -> Optional[Nivel]:
        """Buscar un nivel por índice."""
        for nivel in self.niveles:
            if nivel.indice == indice:
                return nivel
        return None

    def actividad(self, id_actividad: str) -> Optional[Actividad]:
        """Buscar una actividad por id."""
        for actividad in self.actividades:
            if actividad.id == id_actividad:
                return actividad
        return None

    def numero_actividad(self, id_actividad: str) -> Optional[int]:
        """Número de la actividad (1..n) según el orden de declaración."""
        for posicion, actividad in enumerate(self.actividades, start=1):
            if actividad.id == id_actividad:
                return posicion
        return None

    def enunciados_de_nivel(self, indice: int,
                            id_actividad: Optional[str] = None) -> List[Enunciado]:
        """Enunciados de un nivel, opcionalmente filtrados por actividad."""
        return [
            e for e in self.enunciados
            if e.indice_nivel == indice
            and (id_actividad is None or e.id_actividad == id_actividad)
        ]

    def enunciado(self, id_enunciado: str) -> Optional[Enunciado]:
        """Buscar un enunciado por id."""
        return self._indice_enunciados().get(id_enunciado)

    def _indice_enunciados(self) -> Dict[str, Enunciado]:
        return {e.id: e for e in self.enunciados}


def construir_modelo(id_modelo: str,
                     nombre: str,
                     niveles: Iterable[Tuple[int, str]],
                     actividades: Iterable[Actividad],
                     enunciados: Iterable[Enunciado],
                     ratio_aprobacion: Fraction = Fraction(4, 5)) -> ModeloMadurez:
    """
    Construir un modelo calculando el total de enunciados de cada nivel.

    Args:
        id_modelo: Identificador del modelo
        nombre: Nombre para mostrar
        niveles: Pares (índice, nombre) en orden de declaración
        actividades: Actividades en orden de declaración
        enunciados: Enunciados en orden de declaración
        ratio_aprobacion: Ratio de aprobación en (0, 1]

    Returns:
        ModeloMadurez sin validar
    """
    enunciados = tuple(enunciados)
    conteos: Dict[int, int] = {}
    for enunciado in enunciados:
        conteos[enunciado.indice_nivel] = conteos.get(enunciado.indice_nivel, 0) + 1

    niveles_ordenados = sorted(niveles, key=lambda par: par[0])
    return ModeloMadurez(
        id=id_modelo,
        nombre=nombre,
        niveles=tuple(Nivel(indice, nombre_nivel, conteos.get(indice, 0))
                      for indice, nombre_nivel in niveles_ordenados),
        actividades=tuple(actividades),
        enunciados=enunciados,
        ratio_aprobacion=Fraction(ratio_aprobacion),
    )
