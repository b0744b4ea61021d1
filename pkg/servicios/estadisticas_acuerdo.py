"""
Estadísticas de Acuerdo entre Evaluadores
=========================================

Acuerdo por nivel sobre la matriz enunciados x evaluadores:

- W de Kendall con corrección por empates y su chi² (gl = n - 1)
- Kappa de Fleiss sobre las cinco categorías 0-4 y su estadístico Z
  con el error estándar bajo la hipótesis nula
- Categoría de interpretación de kappa y marcas de significancia

Los blancos se eliminan por caso completo: un enunciado en blanco para
cualquier evaluador sale de la matriz.

Autor: Equipo Evaluador APMM
Versión: 1.0.0
"""

from typing import List, Optional, Sequence

import numpy as np
from scipy.stats import chi2, norm, rankdata
from statsmodels.stats import inter_rater

from modelos.acuerdo import (
    CategoriaEmam, MatrizCalificaciones, ResultadoAcuerdo, ResultadoFleiss, ResultadoKendall
)
from modelos.modelo_madurez import ModeloMadurez
from modelos.respuesta import ConjuntoRespuestas
from servicios.servicio_consolidacion import validar_respuestas
from utilidades.constantes import (
    LimitesKappa, MINIMO_EVALUADORES, MINIMO_ITEMS, NUMERO_CATEGORIAS, NivelSignificancia
)
from utilidades.errores import ErrorEntradaEvaluacion
from utilidades.logger import obtener_logger_servicio

logger = obtener_logger_servicio("estadisticas_acuerdo")


def construir_matriz(respuestas: Sequence[ConjuntoRespuestas],
                     indice_nivel: int,
                     modelo: ModeloMadurez) -> MatrizCalificaciones:
    """
    Construir la matriz de calificaciones de un nivel.

    Args:
        respuestas: Respuestas de al menos dos evaluadores
        indice_nivel: Nivel a analizar
        modelo: Modelo de madurez

    Returns:
        Matriz n x m con los enunciados completos y los ids descartados

    Raises:
        ErrorEntradaEvaluacion: menos de 2 evaluadores, nivel desconocido o
            menos de 2 enunciados completos
    """
    if len(respuestas) < MINIMO_EVALUADORES:
        raise ErrorEntradaEvaluacion("fewer than 2 raters")
    validar_respuestas(respuestas, modelo)
    if modelo.nivel(indice_nivel) is None:
        raise ErrorEntradaEvaluacion(f"unknown level {indice_nivel}")

    items: List[str] = []
    descartados: List[str] = []
    filas: List[List[int]] = []
    for enunciado in modelo.enunciados_de_nivel(indice_nivel):
        fila = [r.calificaciones.get(enunciado.id) for r in respuestas]
        if any(valor is None for valor in fila):
            descartados.append(enunciado.id)
            continue
        items.append(enunciado.id)
        filas.append([int(valor) for valor in fila])

    if descartados:
        logger.warning(
            f"Nivel {indice_nivel}: {len(descartados)} enunciados con blancos descartados"
        )
    if len(items) < MINIMO_ITEMS:
        raise ErrorEntradaEvaluacion(
            f"level {indice_nivel}: fewer than 2 complete items after dropping blanks"
        )

    return MatrizCalificaciones(
        indice_nivel=indice_nivel,
        items=tuple(items),
        evaluadores=tuple(r.evaluador for r in respuestas),
        celdas=np.array(filas, dtype=int),
        descartados=tuple(descartados),
    )


def kendall_w(matriz: MatrizCalificaciones) -> ResultadoKendall:
    """
    W de Kendall con rangos medios y corrección por empates.

    W = 12 S / (m²(n³ - n) - m ΣT), con T = Σ(t³ - t) sobre los grupos de
    empates de cada evaluador; chi² = m (n - 1) W.

    Returns:
        ResultadoKendall; degenerado si el denominador es 0
    """
    n, m = matriz.n, matriz.m
    grados_libertad = n - 1

    # Rangos por evaluador (columna), empates con rango medio
    rangos = rankdata(matriz.celdas, axis=0)
    sumas_rango = rangos.sum(axis=1)
    s = float(np.sum((sumas_rango - sumas_rango.mean()) ** 2))

    empates = 0
    for columna in matriz.celdas.T:
        _, conteos = np.unique(columna, return_counts=True)
        empates += int(np.sum(conteos ** 3 - conteos))

    denominador = m * m * (n ** 3 - n) - m * empates
    if denominador == 0:
        logger.warning(f"Nivel {matriz.indice_nivel}: W degenerado")
        return ResultadoKendall(
            w=None, chi_cuadrado=None, grados_libertad=grados_libertad,
            motivo_degenerado="every rater gives all items the same rating"
        )

    w = float(np.clip(12.0 * s / denominador, 0.0, 1.0))
    return ResultadoKendall(
        w=w, chi_cuadrado=m * grados_libertad * w, grados_libertad=grados_libertad
    )


def fleiss_kappa(matriz: MatrizCalificaciones) -> ResultadoFleiss:
    """
    Kappa de Fleiss sobre las categorías 0-4 y su Z bajo la hipótesis nula.

    Returns:
        ResultadoFleiss; degenerado si todas las calificaciones caen en una
        sola categoría (P̄e = 1)
    """
    n, m = matriz.n, matriz.m

    # n_ij: evaluadores que asignan la categoría j al enunciado i
    conteos, _ = inter_rater.aggregate_raters(
        np.asarray(matriz.celdas, dtype=int), n_cat=NUMERO_CATEGORIAS
    )
    proporciones = conteos.sum(axis=0) / (n * m)
    p_esperado = float(np.sum(proporciones ** 2))

    if np.count_nonzero(proporciones) == 1:
        logger.warning(f"Nivel {matriz.indice_nivel}: kappa degenerado")
        return ResultadoFleiss(
            kappa=None, z=None,
            motivo_degenerado="all ratings fall in a single category"
        )

    kappa = float(inter_rater.fleiss_kappa(conteos, method="fleiss"))

    termino = (p_esperado - (2 * m - 3) * p_esperado ** 2
               + 2 * (m - 2) * float(np.sum(proporciones ** 3)))
    if termino <= 0:
        return ResultadoFleiss(kappa=kappa, z=None)

    error_estandar = (np.sqrt(2.0 / (n * m * (m - 1)))
                      * np.sqrt(termino) / (1.0 - p_esperado))
    return ResultadoFleiss(kappa=kappa, z=float(kappa / error_estandar))


def categoria_emam(kappa: float) -> CategoriaEmam:
    """Poor < 0.44 <= Moderate < 0.62 <= Substantial <= 0.78 < Excellent."""
    if kappa < LimitesKappa.MODERADO:
        return CategoriaEmam.POBRE
    if kappa < LimitesKappa.SUSTANCIAL:
        return CategoriaEmam.MODERADO
    if kappa <= LimitesKappa.EXCELENTE:
        return CategoriaEmam.SUSTANCIAL
    return CategoriaEmam.EXCELENTE


def significancia_chi_cuadrado(chi_cuadrado: Optional[float],
                               grados_libertad: int) -> Optional[str]:
    """Comparar chi² con los valores críticos al 1% y al 5%."""
    if chi_cuadrado is None or grados_libertad < 1:
        return None
    if chi_cuadrado > chi2.ppf(0.99, grados_libertad):
        return NivelSignificancia.P_001.value
    if chi_cuadrado > chi2.ppf(0.95, grados_libertad):
        return NivelSignificancia.P_005.value
    return None


def significancia_z(z: Optional[float]) -> Optional[str]:
    """Comparar Z con los valores críticos unilaterales al 1% y al 5%."""
    if z is None:
        return None
    if z > norm.ppf(0.99):
        return NivelSignificancia.P_001.value
    if z > norm.ppf(0.95):
        return NivelSignificancia.P_005.value
    return None


def analizar_acuerdo(respuestas: Sequence[ConjuntoRespuestas],
                     indice_nivel: int,
                     modelo: ModeloMadurez) -> ResultadoAcuerdo:
    """
    Calcular el acuerdo completo de un nivel.

    Args:
        respuestas: Respuestas de al menos dos evaluadores
        indice_nivel: Nivel a analizar
        modelo: Modelo de madurez

    Returns:
        ResultadoAcuerdo listo para emitir
    """
    matriz = construir_matriz(respuestas, indice_nivel, modelo)
    kendall = kendall_w(matriz)
    fleiss = fleiss_kappa(matriz)

    motivos = [r.motivo_degenerado for r in (kendall, fleiss) if r.motivo_degenerado]
    categoria = categoria_emam(fleiss.kappa) if fleiss.kappa is not None else None

    logger.info(
        f"Acuerdo nivel {indice_nivel}: n={matriz.n} m={matriz.m} "
        f"W={kendall.w} kappa={fleiss.kappa}"
    )
    return ResultadoAcuerdo(
        nivel=indice_nivel,
        n_items=matriz.n,
        m_evaluadores=matriz.m,
        items_descartados=list(matriz.descartados),
        kendall_w=kendall.w,
        chi_cuadrado=kendall.chi_cuadrado,
        grados_libertad=kendall.grados_libertad,
        fleiss_kappa=fleiss.kappa,
        z=fleiss.z,
        categoria=categoria,
        motivo_degenerado="; ".join(motivos) if motivos else None,
        significancia_chi=significancia_chi_cuadrado(kendall.chi_cuadrado,
                                                     kendall.grados_libertad),
        significancia_z=significancia_z(fleiss.z),
    )
