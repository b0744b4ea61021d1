"""
Casos de Estudio Incorporados
=============================

Respuestas de las organizaciones A y B incluidas con el evaluador, y el
generador de respuestas con conteos objetivo por nivel usado para construir
el caso B.

Caso A: respuesta publicada por enunciado, tratada como una única respuesta
consolidada.

Caso B: sólo se conocen los conteos acordados por nivel (total y VM); la
respuesta por enunciado es sintética. El par publicado del nivel 5
(NA = 0, NA_VM = 1) es imposible porque los enunciados VM son parte del
nivel, así que el objetivo del nivel 5 usa NA = 1.

Autor: Equipo Evaluador APMM
Versión: 1.0.0
"""

from dataclasses import dataclass
from itertools import cycle
from pathlib import Path
from typing import Dict, List, Optional, Tuple

from configuracion.configuracion_general import obtener_ruta_casos
from formatos.archivo_respuestas import leer_archivo_respuestas
from modelos.modelo_madurez import ModeloMadurez
from modelos.respuesta import Calificacion, ConjuntoRespuestas
from servicios.catalogo_modelo import modelo_incorporado
from utilidades.errores import ErrorEntradaEvaluacion
from utilidades.logger import obtener_logger_servicio

logger = obtener_logger_servicio("casos_estudio")

# Nivel -> (NA, NA de la compuerta)
OBJETIVOS_ORG_B: Dict[int, Tuple[int, int]] = {
    1: (9, 0),
    2: (18, 3),
    3: (10, 2),
    4: (3, 2),
    5: (1, 1),
}

# Conteos publicados del nivel 5 para la organización B
PAR_PUBLICADO_ORG_B_NIVEL_5 = (0, 1)


@dataclass(frozen=True)
class CasoEstudio:
    """Caso incluido: archivo de respuestas y nota que lo etiqueta en el reporte."""
    nombre: str
    archivo: str
    nota: str


CASOS: Dict[str, CasoEstudio] = {
    "org-a": CasoEstudio(
        nombre="org-a",
        archivo="org_a.txt",
        nota="fixture org-a: published per-statement ratings, scored as one consolidated response",
    ),
    "org-b": CasoEstudio(
        nombre="org-b",
        archivo="org_b.txt",
        nota=("fixture org-b: synthetic per-statement ratings built to match the published "
              "per-level counts; level 5 uses NA = 1 because NA = 0 with NA_VM = 1 is infeasible"),
    ),
}


def es_objetivo_factible(modelo: ModeloMadurez,
                         indice_nivel: int,
                         acordados: int,
                         acordados_compuerta: int,
                         id_compuerta: str) -> bool:
    """True si existe alguna respuesta con esos conteos en el nivel."""
    total_compuerta = len(modelo.enunciados_de_nivel(indice_nivel, id_compuerta))
    total = len(modelo.enunciados_de_nivel(indice_nivel))
    return (0 <= acordados_compuerta <= total_compuerta
            and 0 <= acordados - acordados_compuerta <= total - total_compuerta)


def construir_respuesta_objetivo(modelo: ModeloMadurez,
                                 objetivos: Dict[int, Tuple[int, int]],
                                 organizacion: str,
                                 evaluador: str,
                                 id_compuerta: Optional[str] = None) -> ConjuntoRespuestas:
    """
    Generar una respuesta determinista con los conteos acordados pedidos.

    Por nivel y en el orden del modelo, los enunciados de la compuerta se
    acuerdan mientras quede cupo de compuerta y los demás mientras quede cupo
    NA - NA_compuerta. Las calificaciones acordadas alternan 4, 3 y las no
    acordadas 2, 1.

    Args:
        modelo: Modelo de madurez
        objetivos: Nivel -> (NA, NA de la compuerta)
        organizacion: Nombre de la organización
        evaluador: Nombre del evaluador
        id_compuerta: Actividad de compuerta (la primera del modelo por defecto)

    Raises:
        ValueError: objetivos imposibles o nivel desconocido
    """
    if id_compuerta is None:
        if not modelo.actividades_compuerta:
            raise ValueError("model has no gating activity")
        id_compuerta = modelo.actividades_compuerta[0].id

    calificaciones: Dict[str, Calificacion] = {}
    for indice_nivel, (acordados, acordados_compuerta) in sorted(objetivos.items()):
        if modelo.nivel(indice_nivel) is None:
            raise ValueError(f"unknown level {indice_nivel}")
        if not es_objetivo_factible(modelo, indice_nivel, acordados,
                                    acordados_compuerta, id_compuerta):
            raise ValueError(
                f"level {indice_nivel}: targets NA={acordados}, "
                f"NA_{id_compuerta}={acordados_compuerta} are infeasible"
            )

        cupo_compuerta = acordados_compuerta
        cupo_resto = acordados - acordados_compuerta
        valores_acordados = cycle((Calificacion.COMPLETAMENTE_DE_ACUERDO,
                                   Calificacion.MAYORMENTE_DE_ACUERDO))
        valores_no_acordados = cycle((Calificacion.PARCIALMENTE_DE_ACUERDO,
                                      Calificacion.NO_DE_ACUERDO))

        for enunciado in modelo.enunciados_de_nivel(indice_nivel):
            if enunciado.id_actividad == id_compuerta:
                acordado = cupo_compuerta > 0
                cupo_compuerta -= acordado
            else:
                acordado = cupo_resto > 0
                cupo_resto -= acordado
            calificaciones[enunciado.id] = next(
                valores_acordados if acordado else valores_no_acordados
            )

    return ConjuntoRespuestas(
        id_modelo=modelo.id,
        organizacion=organizacion,
        evaluador=evaluador,
        calificaciones=calificaciones,
    )


def ruta_caso(nombre: str) -> Path:
    """Ruta del archivo de un caso incluido."""
    if nombre not in CASOS:
        raise ErrorEntradaEvaluacion(
            f"unknown case study '{nombre}' (available: {', '.join(sorted(CASOS))})"
        )
    return obtener_ruta_casos() / CASOS[nombre].archivo


def cargar_caso(nombre: str) -> Tuple[List[ConjuntoRespuestas], str]:
    """
    Cargar las respuestas de un caso incluido.

    Returns:
        (respuestas, nota del caso)

    Raises:
        ErrorEntradaEvaluacion: caso desconocido o archivo con errores
    """
    ruta = ruta_caso(nombre)
    respuestas, diagnosticos = leer_archivo_respuestas(ruta, modelo_incorporado())
    errores = [d for d in diagnosticos if d.es_error]
    if errores:
        raise ErrorEntradaEvaluacion(f"case study '{nombre}': {errores[0]}")
    logger.info(f"Caso '{nombre}' cargado desde {ruta}")
    return [respuestas], CASOS[nombre].nota
