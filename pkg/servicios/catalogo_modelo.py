"""
Catálogo de Modelos de Madurez
==============================

Este módulo publica el modelo APMM canónico, valida modelos y lee/escribe
documentos de definición de modelos.

Formato del documento (una declaración por línea, '#' inicia comentario):

    model <id>
    name <nombre visible>
    pass-ratio <decimal o n/d>
    activity <id> <design|management|documentation> <gating|non-gating> <nombre>
    level <índice> <nombre>
    statement <id> <índice-nivel> <id-actividad> <texto hasta fin de línea>

Autor: Equipo Evaluador APMM
Versión: 1.0.0
"""

import re
from decimal import Decimal
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Optional, Set, Tuple

from modelos.datos_apmm import ACTIVIDADES_APMM, ENUNCIADOS_APMM, NIVELES_APMM
from modelos.modelo_madurez import (
    Actividad, Dimension, Enunciado, ModeloMadurez, construir_modelo
)
from utilidades.constantes import (
    ID_MODELO_APMM, NOMBRE_MODELO_APMM, PATRON_ID_ENUNCIADO, RATIO_APROBACION_DEFECTO
)
from utilidades.errores import ErrorParseo, ErrorValidacionModelo
from utilidades.logger import obtener_logger_servicio

logger = obtener_logger_servicio("catalogo_modelo")

_COMPUERTA = {"gating": True, "non-gating": False}
_ENCABEZADOS = ("model", "name", "pass-ratio")


@lru_cache(maxsize=1)
def modelo_incorporado() -> ModeloMadurez:
    """
    Obtener el modelo APMM canónico.

    Returns:
        Modelo con 5 niveles, 6 actividades, 95 enunciados, ratio 0.8 y
        compuerta en VM
    """
    return construir_modelo(
        ID_MODELO_APMM,
        NOMBRE_MODELO_APMM,
        NIVELES_APMM,
        ACTIVIDADES_APMM,
        (Enunciado(id_e, nivel, actividad, texto)
         for id_e, nivel, actividad, texto in ENUNCIADOS_APMM),
        RATIO_APROBACION_DEFECTO,
    )


def validar_modelo(modelo: ModeloMadurez) -> List[str]:
    """
    Validar los invariantes de un modelo.

    Args:
        modelo: Modelo a validar

    Returns:
        Lista de violaciones; vacía si el modelo es válido
    """
    violaciones: List[str] = []

    # Niveles
    indices = [nivel.indice for nivel in modelo.niveles]
    if not indices:
        violaciones.append("model has no levels")
    for indice in sorted({i for i in indices if indices.count(i) > 1}):
        violaciones.append(f"duplicate level index {indice}")
    if indices and sorted(set(indices)) != list(range(1, len(set(indices)) + 1)):
        lista = ", ".join(str(i) for i in sorted(set(indices)))
        violaciones.append(f"non-contiguous level indices: {lista} (must be 1..L)")

    # Actividades
    ids_actividades = [a.id for a in modelo.actividades]
    for id_actividad in _duplicados(ids_actividades):
        violaciones.append(f"duplicate activity id {id_actividad}")

    # Ratio de aprobación
    if not (0 < modelo.ratio_aprobacion <= 1):
        violaciones.append(f"pass ratio {modelo.ratio_aprobacion} outside (0, 1]")

    # Enunciados
    for id_enunciado in _duplicados([e.id for e in modelo.enunciados]):
        violaciones.append(f"duplicate statement id {id_enunciado}")

    conjunto_niveles = set(indices)
    conjunto_actividades = set(ids_actividades)
    for enunciado in modelo.enunciados:
        violaciones.extend(_validar_enunciado(modelo, enunciado,
                                              conjunto_niveles, conjunto_actividades))

    # Conteos cacheados y compuertas
    for nivel in modelo.niveles:
        reales = len(modelo.enunciados_de_nivel(nivel.indice))
        if nivel.total_enunciados != reales:
            violaciones.append(
                f"level {nivel.indice} statement count {nivel.total_enunciados} "
                f"does not match its {reales} statements"
            )
        for compuerta in modelo.actividades_compuerta:
            if not modelo.enunciados_de_nivel(nivel.indice, compuerta.id):
                violaciones.append(
                    f"level {nivel.indice} has no statements for gating activity {compuerta.id}"
                )

    return violaciones


def _validar_enunciado(modelo: ModeloMadurez,
                       enunciado: Enunciado,
                       niveles: Set[int],
                       actividades: Set[str]) -> List[str]:
    """Validar las referencias y el id de un enunciado."""
    violaciones = []
    if enunciado.indice_nivel not in niveles:
        violaciones.append(
            f"statement {enunciado.id} references unknown level {enunciado.indice_nivel}"
        )
    if enunciado.id_actividad not in actividades:
        violaciones.append(
            f'statement {enunciado.id} references unknown activity "{enunciado.id_actividad}"'
        )
    if not enunciado.texto.strip():
        violaciones.append(f"statement {enunciado.id} has empty text")

    # Ids opacos salvo que sigan el esquema S.I.J.K
    coincidencia = re.match(PATRON_ID_ENUNCIADO, enunciado.id)
    if coincidencia:
        nivel_id, actividad_id, numero = (int(g) for g in coincidencia.groups())
        if min(nivel_id, actividad_id, numero) < 1:
            violaciones.append(f"statement id {enunciado.id} has a non-positive component")
        if nivel_id != enunciado.indice_nivel:
            violaciones.append(
                f"statement {enunciado.id}: level component {nivel_id} "
                f"does not match level {enunciado.indice_nivel}"
            )
        numero_actividad = modelo.numero_actividad(enunciado.id_actividad)
        if numero_actividad is not None and actividad_id != numero_actividad:
            violaciones.append(
                f"statement {enunciado.id}: activity component {actividad_id} does not match "
                f"activity {enunciado.id_actividad} (number {numero_actividad})"
            )
    return violaciones


def _duplicados(valores: List[str]) -> List[str]:
    vistos: Set[str] = set()
    duplicados: List[str] = []
    for valor in valores:
        if valor in vistos and valor not in duplicados:
            duplicados.append(valor)
        vistos.add(valor)
    return duplicados


def serializar_modelo(modelo: ModeloMadurez) -> str:
    """
    Serializar un modelo al formato de documento de definición.

    Args:
        modelo: Modelo a serializar

    Returns:
        Documento de texto terminado en salto de línea
    """
    lineas = [
        f"model {modelo.id}",
        f"name {modelo.nombre}",
        f"pass-ratio {_formatear_ratio(modelo.ratio_aprobacion)}",
        "",
    ]
    for actividad in modelo.actividades:
        compuerta = "gating" if actividad.es_compuerta else "non-gating"
        lineas.append(
            f"activity {actividad.id} {actividad.dimension.value} {compuerta} {actividad.nombre}"
        )
    lineas.append("")
    for nivel in modelo.niveles:
        lineas.append(f"level {nivel.indice} {nivel.nombre}")
    lineas.append("")
    for enunciado in modelo.enunciados:
        lineas.append(
            f"statement {enunciado.id} {enunciado.indice_nivel} "
            f"{enunciado.id_actividad} {enunciado.texto}"
        )
    return "\n".join(lineas) + "\n"


def _formatear_ratio(ratio: Fraction) -> str:
    """Decimal exacto cuando existe; n/d en otro caso."""
    denominador = ratio.denominator
    for primo in (2, 5):
        while denominador % primo == 0:
            denominador //= primo
    if denominador == 1:
        return str(Decimal(ratio.numerator) / Decimal(ratio.denominator))
    return f"{ratio.numerator}/{ratio.denominator}"


def parsear_documento_modelo(texto: str) -> ModeloMadurez:
    """
    Leer un documento de definición sin validar invariantes.

    Args:
        texto: Documento completo

    Returns:
        Modelo construido

    Raises:
        ErrorParseo: si el documento está mal formado
    """
    encabezados: Dict[str, Tuple[str, int]] = {}
    actividades: List[Actividad] = []
    niveles: List[Tuple[int, str]] = []
    enunciados: List[Enunciado] = []
    ids_actividades: Set[str] = set()
    indices_niveles: Set[int] = set()

    for numero_linea, linea_cruda in enumerate(texto.splitlines(), start=1):
        linea = linea_cruda.strip()
        if not linea or linea.startswith("#"):
            continue

        palabra, _, resto = linea.partition(" ")
        resto = resto.strip()

        if palabra in _ENCABEZADOS:
            if palabra in encabezados:
                raise ErrorParseo(f"duplicate '{palabra}' header", numero_linea)
            if not resto:
                raise ErrorParseo(f"'{palabra}' header requires a value", numero_linea)
            encabezados[palabra] = (resto, numero_linea)

        elif palabra == "activity":
            partes = resto.split(None, 3)
            if len(partes) != 4:
                raise ErrorParseo(
                    "activity line requires: <id> <dimension> <gating|non-gating> <name>",
                    numero_linea
                )
            id_actividad, dimension, compuerta, nombre = partes
            try:
                dimension_enum = Dimension(dimension)
            except ValueError:
                raise ErrorParseo(f"unknown dimension '{dimension}'", numero_linea)
            if compuerta not in _COMPUERTA:
                raise ErrorParseo(
                    f"expected 'gating' or 'non-gating', found '{compuerta}'", numero_linea
                )
            actividades.append(Actividad(id_actividad, nombre, dimension_enum,
                                         _COMPUERTA[compuerta]))
            ids_actividades.add(id_actividad)

        elif palabra == "level":
            partes = resto.split(None, 1)
            if len(partes) != 2:
                raise ErrorParseo("level line requires: <index> <name>", numero_linea)
            indice = _parsear_entero(partes[0], "level index", numero_linea)
            niveles.append((indice, partes[1]))
            indices_niveles.add(indice)

        elif palabra == "statement":
            partes = resto.split(None, 3)
            if len(partes) != 4:
                raise ErrorParseo(
                    "statement line requires: <id> <level-index> <activity-id> <text>",
                    numero_linea
                )
            id_enunciado, nivel_texto, id_actividad, texto_enunciado = partes
            indice = _parsear_entero(nivel_texto, "level index", numero_linea)
            if indice not in indices_niveles:
                raise ErrorParseo(
                    f"statement {id_enunciado} references undeclared level {indice}",
                    numero_linea
                )
            if id_actividad not in ids_actividades:
                raise ErrorParseo(
                    f"statement {id_enunciado} references undeclared activity {id_actividad}",
                    numero_linea
                )
            enunciados.append(Enunciado(id_enunciado, indice, id_actividad, texto_enunciado))

        else:
            raise ErrorParseo(f"unknown declaration '{palabra}'", numero_linea)

    if "model" not in encabezados:
        raise ErrorParseo("missing 'model' header", 1)

    id_modelo = encabezados["model"][0]
    nombre = encabezados.get("name", (id_modelo, 0))[0]
    ratio = RATIO_APROBACION_DEFECTO
    if "pass-ratio" in encabezados:
        valor, numero_linea = encabezados["pass-ratio"]
        ratio = _parsear_ratio(valor, numero_linea)

    return construir_modelo(id_modelo, nombre, niveles, actividades, enunciados, ratio)


def _parsear_entero(valor: str, descripcion: str, numero_linea: int) -> int:
    try:
        return int(valor)
    except ValueError:
        raise ErrorParseo(f"{descripcion} must be an integer, found '{valor}'", numero_linea)


def _parsear_ratio(valor: str, numero_linea: int) -> Fraction:
    try:
        return Fraction(valor)
    except (ValueError, ZeroDivisionError):
        raise ErrorParseo(f"invalid pass-ratio '{valor}'", numero_linea)


def cargar_modelo(texto: str) -> ModeloMadurez:
    """
    Cargar y validar un documento de definición de modelo.

    Args:
        texto: Documento completo

    Returns:
        Modelo válido

    Raises:
        ErrorParseo: documento mal formado
        ErrorValidacionModelo: el modelo viola invariantes
    """
    modelo = parsear_documento_modelo(texto)
    violaciones = validar_modelo(modelo)
    if violaciones:
        logger.warning(f"Modelo '{modelo.id}' inválido: {len(violaciones)} violaciones")
        raise ErrorValidacionModelo(violaciones)
    logger.info(
        f"Modelo '{modelo.id}' cargado: {len(modelo.niveles)} niveles, "
        f"{modelo.total_enunciados} enunciados"
    )
    return modelo


def resolver_modelo(texto: Optional[str]) -> ModeloMadurez:
    """Modelo personalizado si hay documento, canónico en otro caso."""
    if texto is None:
        return modelo_incorporado()
    return cargar_modelo(texto)
