"""
Motor de Calificación APMM
==========================

Escala de desempeño, predicado de enunciado acordado, umbrales de
aprobación por nivel y por actividad de compuerta, y nivel de madurez de
arquitectura (AML).

Todas las funciones son puras sobre entradas inmutables.

Autor: Equipo Evaluador APMM
Versión: 1.0.0
"""

import math
from fractions import Fraction
from typing import List, Mapping, Optional, Union

from modelos.modelo_madurez import ModeloMadurez
from modelos.respuesta import Calificacion, RespuestaConsolidada
from modelos.veredicto import CeldaPerfil, FilaUmbral, ResultadoEvaluacion, VeredictoNivel
from utilidades.constantes import CALIFICACIONES_ACORDADAS, LimitesEscala, NOMBRE_SIN_NIVEL
from utilidades.errores import ErrorEntradaEvaluacion
from utilidades.logger import obtener_logger_servicio

logger = obtener_logger_servicio("motor_calificacion")

Ratio = Union[Fraction, float, int, str]


def escala_desde_porcentaje(porcentaje: float) -> Calificacion:
    """
    Convertir un porcentaje de acuerdo en calificación 1-4.

    Bandas semiabiertas: [0, 33.3) -> 1, [33.3, 66.7) -> 2, [66.7, 80) -> 3,
    [80, 100] -> 4. Nunca devuelve 0.

    Raises:
        ErrorEntradaEvaluacion: porcentaje fuera de [0, 100] o NaN
    """
    valor = float(porcentaje)
    if math.isnan(valor) or not (LimitesEscala.MINIMO <= valor <= LimitesEscala.MAXIMO):
        raise ErrorEntradaEvaluacion(
            f"percentage {porcentaje} out of range [{LimitesEscala.MINIMO:g}, "
            f"{LimitesEscala.MAXIMO:g}]"
        )

    if valor >= LimitesEscala.COMPLETAMENTE:
        return Calificacion.COMPLETAMENTE_DE_ACUERDO
    if valor >= LimitesEscala.MAYORMENTE:
        return Calificacion.MAYORMENTE_DE_ACUERDO
    if valor >= LimitesEscala.PARCIALMENTE:
        return Calificacion.PARCIALMENTE_DE_ACUERDO
    return Calificacion.NO_DE_ACUERDO


def es_acordado(calificacion: Optional[int]) -> bool:
    """Acordado si la calificación es 0, 3 o 4; un blanco nunca lo es."""
    return calificacion is not None and int(calificacion) in CALIFICACIONES_ACORDADAS


def _como_fraccion(ratio: Ratio) -> Fraction:
    # float -> str para que 0.8 sea exactamente 4/5
    if isinstance(ratio, float):
        return Fraction(str(ratio))
    return Fraction(ratio)


def umbral_aprobacion(total: int, ratio: Ratio) -> int:
    """
    Umbral de aprobación: round(total * ratio), empates hacia arriba.

    Args:
        total: Número de enunciados (>= 0)
        ratio: Ratio de aprobación en (0, 1]

    Returns:
        Número mínimo de enunciados acordados
    """
    fraccion = _como_fraccion(ratio)
    if total < 0:
        raise ValueError(f"statement count must be >= 0, got {total}")
    if not (0 < fraccion <= 1):
        raise ValueError(f"pass ratio {ratio} outside (0, 1]")
    return math.floor(total * fraccion + Fraction(1, 2))


def _validar_nivel(modelo: ModeloMadurez, indice_nivel: int) -> None:
    if modelo.nivel(indice_nivel) is None:
        raise ErrorEntradaEvaluacion(f"unknown level {indice_nivel}")


def _calificaciones(respuesta: Union[RespuestaConsolidada, Mapping[str, Optional[int]]]):
    if isinstance(respuesta, RespuestaConsolidada):
        return respuesta.calificaciones
    return respuesta


def contar_acordados(respuesta: RespuestaConsolidada,
                     indice_nivel: int,
                     modelo: ModeloMadurez,
                     id_actividad: Optional[str] = None) -> int:
    """
    Contar los enunciados acordados de un nivel (NA).

    Args:
        respuesta: Respuesta consolidada (o mapa id -> calificación)
        indice_nivel: Índice del nivel
        modelo: Modelo de madurez
        id_actividad: Restringir a una actividad (p. ej. "VM")

    Returns:
        Enunciados del nivel cuya calificación es acordada

    Raises:
        ErrorEntradaEvaluacion: nivel o actividad desconocidos
    """
    _validar_nivel(modelo, indice_nivel)
    if id_actividad is not None and modelo.actividad(id_actividad) is None:
        raise ErrorEntradaEvaluacion(f"unknown activity {id_actividad}")

    calificaciones = _calificaciones(respuesta)
    return sum(
        1 for enunciado in modelo.enunciados_de_nivel(indice_nivel, id_actividad)
        if es_acordado(calificaciones.get(enunciado.id))
    )


def evaluar_nivel(respuesta: RespuestaConsolidada,
                  indice_nivel: int,
                  modelo: ModeloMadurez) -> VeredictoNivel:
    """
    Evaluar un nivel contra su umbral total y los umbrales de compuerta.

    Returns:
        VeredictoNivel con aprobado = NA >= PT y NA_g >= PT_g para cada compuerta g
    """
    _validar_nivel(modelo, indice_nivel)
    calificaciones = _calificaciones(respuesta)
    enunciados = modelo.enunciados_de_nivel(indice_nivel)

    acordados = contar_acordados(respuesta, indice_nivel, modelo)
    umbral = umbral_aprobacion(len(enunciados), modelo.ratio_aprobacion)

    acordados_compuerta = {}
    umbral_compuerta = {}
    for compuerta in modelo.actividades_compuerta:
        acordados_compuerta[compuerta.id] = contar_acordados(
            respuesta, indice_nivel, modelo, compuerta.id
        )
        umbral_compuerta[compuerta.id] = umbral_aprobacion(
            len(modelo.enunciados_de_nivel(indice_nivel, compuerta.id)),
            modelo.ratio_aprobacion
        )

    aprobado = acordados >= umbral and all(
        acordados_compuerta[g] >= umbral_compuerta[g] for g in acordados_compuerta
    )
    en_blanco = sum(1 for e in enunciados if calificaciones.get(e.id) is None)

    logger.debug(
        f"Nivel {indice_nivel}: NA={acordados} PT={umbral} "
        f"compuertas={acordados_compuerta}/{umbral_compuerta} aprobado={aprobado}"
    )
    return VeredictoNivel(
        indice_nivel=indice_nivel,
        total_enunciados=len(enunciados),
        acordados=acordados,
        umbral=umbral,
        acordados_compuerta=acordados_compuerta,
        umbral_compuerta=umbral_compuerta,
        en_blanco=en_blanco,
        aprobado=aprobado,
    )


def nivel_madurez(respuesta: RespuestaConsolidada, modelo: ModeloMadurez) -> ResultadoEvaluacion:
    """
    Calcular el AML: máximo nivel aprobado, o 0 ("Not Rated") si ninguno aprueba.

    No se exige que los niveles inferiores aprueben.
    """
    veredictos = [evaluar_nivel(respuesta, nivel.indice, modelo) for nivel in modelo.niveles]
    aprobados = [v.indice_nivel for v in veredictos if v.aprobado]

    if aprobados:
        aml = max(aprobados)
        nombre_aml = modelo.nivel(aml).nombre
    else:
        aml = 0
        nombre_aml = NOMBRE_SIN_NIVEL

    resultado = ResultadoEvaluacion(veredictos=veredictos, aml=aml, nombre_aml=nombre_aml)
    if resultado.niveles_reprobados_bajo_aml:
        logger.warning(
            f"Niveles {resultado.niveles_reprobados_bajo_aml} reprobados bajo el AML {aml}"
        )
    logger.info(f"AML calculado: {aml} ({nombre_aml})")
    return resultado


def perfil_actividades(respuesta: RespuestaConsolidada,
                       modelo: ModeloMadurez) -> List[CeldaPerfil]:
    """Enunciados acordados por nivel y actividad, en el orden del modelo."""
    celdas = []
    for nivel in modelo.niveles:
        for actividad in modelo.actividades:
            total = len(modelo.enunciados_de_nivel(nivel.indice, actividad.id))
            celdas.append(CeldaPerfil(
                indice_nivel=nivel.indice,
                id_actividad=actividad.id,
                acordados=contar_acordados(respuesta, nivel.indice, modelo, actividad.id),
                total=total,
            ))
    return celdas


def tabla_umbrales(modelo: ModeloMadurez) -> List[FilaUmbral]:
    """N y PT de cada nivel con los de sus actividades de compuerta."""
    filas = []
    for nivel in modelo.niveles:
        total_compuerta = {
            g.id: len(modelo.enunciados_de_nivel(nivel.indice, g.id))
            for g in modelo.actividades_compuerta
        }
        filas.append(FilaUmbral(
            indice_nivel=nivel.indice,
            nombre=nivel.nombre,
            total_enunciados=nivel.total_enunciados,
            umbral=umbral_aprobacion(nivel.total_enunciados, modelo.ratio_aprobacion),
            total_compuerta=total_compuerta,
            umbral_compuerta={
                g: umbral_aprobacion(n, modelo.ratio_aprobacion)
                for g, n in total_compuerta.items()
            },
        ))
    return filas
