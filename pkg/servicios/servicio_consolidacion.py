"""
Servicio de Consolidación de Evaluadores
========================================

Fusiona las respuestas de varios evaluadores de una misma organización en
una única respuesta consolidada y genera el reporte de cobertura por
evaluador.

Regla de mediana: se descartan los blancos; si hay calificaciones distintas
de cero, los ceros se descartan y se toma la mediana inferior de las
restantes.

Autor: Equipo Evaluador APMM
Versión: 1.0.0
"""

from collections import Counter
from typing import Dict, List, Optional, Sequence, Tuple

from modelos.modelo_madurez import ModeloMadurez
from modelos.respuesta import (
    Calificacion, CoberturaEvaluador, ConjuntoRespuestas, ConteoCobertura,
    ProcedenciaConsolidacion, ReglaConsolidacion, RespuestaConsolidada
)
from utilidades.errores import ErrorEntradaEvaluacion
from utilidades.logger import obtener_logger_servicio

logger = obtener_logger_servicio("consolidacion")


def validar_respuestas(respuestas: Sequence[ConjuntoRespuestas], modelo: ModeloMadurez) -> None:
    """Verificar lista no vacía, mismo modelo y organización, ids conocidos."""
    if not respuestas:
        raise ErrorEntradaEvaluacion("no responses to consolidate")

    modelos = sorted({r.id_modelo for r in respuestas})
    if len(modelos) > 1:
        raise ErrorEntradaEvaluacion(f"responses reference different models: {', '.join(modelos)}")
    if modelos[0] != modelo.id:
        raise ErrorEntradaEvaluacion(
            f"responses reference model '{modelos[0]}' but model '{modelo.id}' was given"
        )

    organizaciones = sorted({r.organizacion for r in respuestas})
    if len(organizaciones) > 1:
        raise ErrorEntradaEvaluacion(
            f"responses belong to different organizations: {', '.join(organizaciones)}"
        )

    ids_modelo = modelo.ids_enunciados
    for respuesta in respuestas:
        desconocidos = sorted(set(respuesta.calificaciones) - ids_modelo)
        if desconocidos:
            raise ErrorEntradaEvaluacion(
                f"rater '{respuesta.evaluador}': unknown statement id {desconocidos[0]}"
            )


def fusionar_mediana(valores: Sequence[Optional[int]]
                     ) -> Tuple[Optional[Calificacion], ProcedenciaConsolidacion]:
    """
    Fusionar las calificaciones de un enunciado con la regla de mediana.

    Args:
        valores: Una calificación (o None) por evaluador

    Returns:
        (calificación consolidada, procedencia)
    """
    presentes = [int(v) for v in valores if v is not None]
    if not presentes:
        return None, ProcedenciaConsolidacion.TODO_BLANCO
    if len(set(presentes)) == 1:
        return Calificacion(presentes[0]), ProcedenciaConsolidacion.UNANIME

    distintos_de_cero = sorted(v for v in presentes if v != 0)
    mediana = Calificacion(distintos_de_cero[(len(distintos_de_cero) - 1) // 2])
    if len(distintos_de_cero) < len(presentes):
        return mediana, ProcedenciaConsolidacion.CEROS_SUPRIMIDOS
    return mediana, ProcedenciaConsolidacion.MEDIANA


def consolidar(respuestas: Sequence[ConjuntoRespuestas],
               modelo: ModeloMadurez,
               regla: ReglaConsolidacion = ReglaConsolidacion.MEDIANA) -> RespuestaConsolidada:
    """
    Consolidar las respuestas de varios evaluadores.

    Args:
        respuestas: Respuestas de una misma organización y modelo
        modelo: Modelo de madurez
        regla: MEDIANA (por defecto) o PRIMERO (primer evaluador tal cual)

    Returns:
        RespuestaConsolidada con una entrada por enunciado del modelo

    Raises:
        ErrorEntradaEvaluacion: lista vacía, modelos u organizaciones mezclados,
            ids de enunciado desconocidos
    """
    validar_respuestas(respuestas, modelo)

    calificaciones: Dict[str, Optional[Calificacion]] = {}
    procedencia: Dict[str, ProcedenciaConsolidacion] = {}

    for enunciado in modelo.enunciados:
        if regla is ReglaConsolidacion.PRIMERO:
            valor = respuestas[0].calificaciones.get(enunciado.id)
            calificaciones[enunciado.id] = None if valor is None else Calificacion(valor)
            procedencia[enunciado.id] = ProcedenciaConsolidacion.PRIMER_EVALUADOR
        else:
            valores = [r.calificaciones.get(enunciado.id) for r in respuestas]
            calificaciones[enunciado.id], procedencia[enunciado.id] = fusionar_mediana(valores)

    resumen = Counter(p.value for p in procedencia.values())
    logger.info(
        f"Consolidados {len(respuestas)} evaluadores de '{respuestas[0].organizacion}' "
        f"con regla {regla.value}: {dict(sorted(resumen.items()))}"
    )

    return RespuestaConsolidada(
        id_modelo=modelo.id,
        organizacion=respuestas[0].organizacion,
        total_evaluadores=len(respuestas),
        calificaciones=calificaciones,
        procedencia=procedencia,
        evaluadores=[r.evaluador for r in respuestas],
        regla=regla,
    )


def reporte_cobertura(respuestas: Sequence[ConjuntoRespuestas],
                      modelo: ModeloMadurez) -> List[CoberturaEvaluador]:
    """
    Contar, por evaluador y nivel, enunciados respondidos, en blanco y "Doesn't Apply".

    Los enunciados ausentes del archivo cuentan como blancos.
    """
    validar_respuestas(respuestas, modelo)

    filas = []
    for respuesta in respuestas:
        por_nivel: Dict[int, ConteoCobertura] = {}
        for nivel in modelo.niveles:
            valores = [respuesta.calificaciones.get(e.id)
                       for e in modelo.enunciados_de_nivel(nivel.indice)]
            por_nivel[nivel.indice] = ConteoCobertura(
                respondidos=sum(1 for v in valores if v is not None),
                en_blanco=sum(1 for v in valores if v is None),
                no_aplica=sum(1 for v in valores if v is not None and int(v) == 0),
            )

        total = ConteoCobertura()
        for conteo in por_nivel.values():
            total = total.sumar(conteo)
        filas.append(CoberturaEvaluador(respuesta.evaluador, por_nivel, total))

    return filas
