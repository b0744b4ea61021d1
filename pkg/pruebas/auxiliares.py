"""
Auxiliares de prueba: modelos pequeños y respuestas construidas a mano.
"""

from fractions import Fraction
from typing import Dict, Iterable, Optional, Sequence, Tuple

from modelos.modelo_madurez import Actividad, Dimension, Enunciado, construir_modelo
from modelos.respuesta import Calificacion, ConjuntoRespuestas, RespuestaConsolidada

ACTIVIDADES_PEQUENAS = (
    Actividad("A", "Activity A", Dimension.DISENO_ARQUITECTURA),
    Actividad("G", "Gate G", Dimension.GESTION_LINEA_PRODUCTOS, es_compuerta=True),
)


def modelo_pequeno(enunciados_por_nivel: Sequence[Tuple[int, int]],
                   ratio: Fraction = Fraction(4, 5)):
    """
    Modelo con actividades A y G (compuerta).

    Args:
        enunciados_por_nivel: (enunciados de A, enunciados de G) por nivel
    """
    niveles = [(i, f"Level {i}") for i in range(1, len(enunciados_por_nivel) + 1)]
    enunciados = []
    for indice, (total_a, total_g) in enumerate(enunciados_por_nivel, start=1):
        for numero in range(1, total_a + 1):
            enunciados.append(Enunciado(f"S.{indice}.1.{numero}", indice, "A", f"a{numero}"))
        for numero in range(1, total_g + 1):
            enunciados.append(Enunciado(f"S.{indice}.2.{numero}", indice, "G", f"g{numero}"))
    return construir_modelo("mini", "Mini model", niveles, ACTIVIDADES_PEQUENAS, enunciados, ratio)


def consolidada(modelo, calificaciones: Dict[str, Optional[int]]) -> RespuestaConsolidada:
    """Respuesta consolidada con blancos para los ids ausentes."""
    return RespuestaConsolidada(
        id_modelo=modelo.id,
        organizacion="Org",
        total_evaluadores=1,
        calificaciones={
            e.id: (None if calificaciones.get(e.id) is None
                   else Calificacion(calificaciones[e.id]))
            for e in modelo.enunciados
        },
        evaluadores=["r1"],
    )


def uniforme(modelo, valor: Optional[int]) -> RespuestaConsolidada:
    return consolidada(modelo, {e.id: valor for e in modelo.enunciados})


def conjunto(modelo, evaluador: str, calificaciones: Dict[str, Optional[int]],
             organizacion: str = "Org") -> ConjuntoRespuestas:
    return ConjuntoRespuestas(
        id_modelo=modelo.id,
        organizacion=organizacion,
        evaluador=evaluador,
        calificaciones={
            k: (None if v is None else Calificacion(v)) for k, v in calificaciones.items()
        },
    )


def conjuntos_desde_columnas(modelo, ids: Sequence[str],
                             filas: Iterable[Sequence[Optional[int]]]):
    """Un ConjuntoRespuestas por columna de la matriz filas (ids x evaluadores)."""
    filas = [list(f) for f in filas]
    m = len(filas[0])
    return [
        conjunto(modelo, f"r{j + 1}", {ids[i]: filas[i][j] for i in range(len(ids))})
        for j in range(m)
    ]
