"""
Servicio de Reportes de Evaluación
==================================

Convierte una respuesta consolidada y su resultado de evaluación en el
reporte de evaluación: una fila por nivel, AML y notas de diagnóstico.

Autor: Equipo Evaluador APMM
Versión: 1.0.0
"""

from typing import Iterable, List, Optional

from modelos.modelo_madurez import ModeloMadurez
from modelos.reporte import (
    FilaActividad, FilaCompuerta, FilaNivel, ModeloReporte, ReporteEvaluacion
)
from modelos.respuesta import RespuestaConsolidada
from modelos.veredicto import ResultadoEvaluacion
from servicios.motor_calificacion import nivel_madurez, perfil_actividades
from utilidades.logger import obtener_logger_servicio

logger = obtener_logger_servicio("reportes")


def _notas_diagnostico(resultado: ResultadoEvaluacion) -> List[str]:
    notas = []
    reprobados = resultado.niveles_reprobados_bajo_aml
    if reprobados:
        lista = ", ".join(str(i) for i in reprobados)
        notas.append(
            f"non-contiguous passes: level(s) {lista} fail below AML {resultado.aml}"
        )
    blancos = sum(v.en_blanco for v in resultado.veredictos)
    if blancos:
        notas.append(f"{blancos} blank statement(s) counted as not agreed")
    return notas


def construir_reporte(consolidada: RespuestaConsolidada,
                      modelo: ModeloMadurez,
                      resultado: Optional[ResultadoEvaluacion] = None,
                      detalle: bool = False,
                      notas_extra: Iterable[str] = ()) -> ReporteEvaluacion:
    """
    Construir el reporte de evaluación.

    Args:
        consolidada: Respuesta consolidada de la organización
        modelo: Modelo de madurez
        resultado: Resultado ya calculado (se calcula si falta)
        detalle: Incluir el perfil por actividad
        notas_extra: Notas adicionales (p. ej. etiqueta de un caso de estudio)

    Returns:
        ReporteEvaluacion con una fila por nivel del modelo
    """
    if resultado is None:
        resultado = nivel_madurez(consolidada, modelo)

    filas = []
    for veredicto in resultado.veredictos:
        filas.append(FilaNivel(
            indice=veredicto.indice_nivel,
            nombre=modelo.nivel(veredicto.indice_nivel).nombre,
            total=veredicto.total_enunciados,
            acordados=veredicto.acordados,
            umbral=veredicto.umbral,
            compuertas=[
                FilaCompuerta(
                    actividad=g.id,
                    acordados=veredicto.acordados_compuerta[g.id],
                    umbral=veredicto.umbral_compuerta[g.id],
                )
                for g in modelo.actividades_compuerta
            ],
            en_blanco=veredicto.en_blanco,
            aprobado=veredicto.aprobado,
        ))

    actividades = None
    if detalle:
        actividades = [
            FilaActividad(nivel=c.indice_nivel, actividad=c.id_actividad,
                          acordados=c.acordados, total=c.total)
            for c in perfil_actividades(consolidada, modelo)
        ]

    reporte = ReporteEvaluacion(
        modelo=ModeloReporte(id=modelo.id, nombre=modelo.nombre),
        organizacion=consolidada.organizacion,
        evaluadores=list(consolidada.evaluadores),
        consolidacion=consolidada.regla.value,
        niveles=filas,
        aml=resultado.aml,
        nombre_aml=resultado.nombre_aml,
        notas=list(notas_extra) + _notas_diagnostico(resultado),
        actividades=actividades,
    )
    logger.debug(f"Reporte de '{reporte.organizacion}' con {len(filas)} niveles")
    return reporte
