"""
Archivo de Respuestas de Evaluadores
====================================

Lectura y escritura del formato de respuestas (UTF-8, una línea por dato):

    # comentario hasta fin de línea
    @model apmm
    @org Organización A
    @rater evaluador-1
    S.1.1.1 2
    S.1.1.2 -

Los metadatos preceden a las líneas de datos. La calificación es 0-4 o "-"
(blanco). Los enunciados que no aparecen en el archivo quedan en blanco.

Los problemas de contenido se devuelven como diagnósticos con número de
línea; sólo una entrada ilegible es fatal.

Autor: Equipo Evaluador APMM
Versión: 1.0.0
"""

from pathlib import Path
from typing import Dict, List, Optional, Tuple

from modelos.diagnostico import Diagnostico, SeveridadDiagnostico
from modelos.modelo_madurez import ModeloMadurez
from modelos.respuesta import Calificacion, ConjuntoRespuestas
from utilidades.constantes import MARCADOR_BLANCO
from utilidades.errores import ErrorEntradaEvaluacion, ErrorParseo
from utilidades.logger import obtener_logger
from utilidades.validador import ValidadorAPMM

logger = obtener_logger("formatos.respuestas")

ORGANIZACION_DESCONOCIDA = "unknown"
_METADATOS = {"@model": "model", "@org": "org", "@rater": "rater"}


def _error(linea: int, mensaje: str) -> Diagnostico:
    return Diagnostico(linea, SeveridadDiagnostico.ERROR, mensaje)


def _advertencia(linea: int, mensaje: str) -> Diagnostico:
    return Diagnostico(linea, SeveridadDiagnostico.ADVERTENCIA, mensaje)


def parsear_archivo_respuestas(texto: str,
                               modelo: ModeloMadurez,
                               evaluador_defecto: Optional[str] = None
                               ) -> Tuple[ConjuntoRespuestas, List[Diagnostico]]:
    """
    Leer el texto de un archivo de respuestas.

    Args:
        texto: Contenido del archivo
        modelo: Modelo contra el que se validan los ids
        evaluador_defecto: Nombre del evaluador si falta @rater

    Returns:
        (ConjuntoRespuestas, diagnósticos); sin diagnósticos de error el
        conjunto es utilizable
    """
    diagnosticos: List[Diagnostico] = []
    metadatos: Dict[str, Tuple[str, int]] = {}
    calificaciones: Dict[str, Optional[Calificacion]] = {}
    lineas_enunciado: Dict[str, int] = {}
    hay_datos = False

    lineas = texto.splitlines()
    for numero_linea, linea_cruda in enumerate(lineas, start=1):
        linea = linea_cruda.split("#", 1)[0].strip()
        if not linea:
            continue

        # Metadatos
        if linea.startswith("@"):
            clave, _, valor = linea.partition(" ")
            valor = valor.strip()
            if clave not in _METADATOS:
                diagnosticos.append(_error(numero_linea, f"unknown metadata '{clave}'"))
            elif hay_datos:
                diagnosticos.append(_error(numero_linea, "metadata must precede data lines"))
            elif not valor:
                diagnosticos.append(_error(numero_linea, f"'{clave}' requires a value"))
            elif _METADATOS[clave] in metadatos:
                diagnosticos.append(_error(
                    numero_linea,
                    f"duplicate '{clave}' (first at line {metadatos[_METADATOS[clave]][1]})"
                ))
            else:
                metadatos[_METADATOS[clave]] = (valor, numero_linea)
            continue

        # Datos
        hay_datos = True
        partes = linea.split()
        if len(partes) != 2:
            diagnosticos.append(_error(numero_linea, "expected '<statement-id> <rating>'"))
            continue

        id_enunciado, token = partes
        resultado_id = ValidadorAPMM.validar_id_enunciado(id_enunciado, modelo.ids_enunciados)
        if not resultado_id:
            diagnosticos.append(_error(numero_linea, resultado_id.mensaje))
            continue
        resultado_calificacion = ValidadorAPMM.validar_calificacion(token)
        if not resultado_calificacion:
            diagnosticos.append(_error(numero_linea, resultado_calificacion.mensaje))
            continue
        if id_enunciado in lineas_enunciado:
            diagnosticos.append(_error(
                numero_linea,
                f"duplicate statement {id_enunciado} (first at line {lineas_enunciado[id_enunciado]})"
            ))
            continue

        lineas_enunciado[id_enunciado] = numero_linea
        valor = resultado_calificacion.valor
        calificaciones[id_enunciado] = None if valor is None else Calificacion(valor)

    ultima_linea = max(1, len(lineas))

    # Metadatos ausentes o inconsistentes
    if "model" not in metadatos:
        diagnosticos.append(_advertencia(1, f"missing @model; assuming '{modelo.id}'"))
        id_modelo = modelo.id
    else:
        id_modelo, linea_modelo = metadatos["model"]
        if id_modelo != modelo.id:
            diagnosticos.append(_error(
                linea_modelo, f"response file references model '{id_modelo}', expected '{modelo.id}'"
            ))

    if "org" not in metadatos:
        diagnosticos.append(
            _advertencia(1, f"missing @org; assuming '{ORGANIZACION_DESCONOCIDA}'")
        )
    organizacion = metadatos.get("org", (ORGANIZACION_DESCONOCIDA, 0))[0]

    if "rater" in metadatos:
        evaluador = metadatos["rater"][0]
    else:
        evaluador = evaluador_defecto or ORGANIZACION_DESCONOCIDA
        diagnosticos.append(_advertencia(1, f"missing @rater; assuming '{evaluador}'"))

    sin_calificar = len(modelo.ids_enunciados - set(calificaciones))
    if sin_calificar:
        diagnosticos.append(_advertencia(
            ultima_linea, f"{sin_calificar} statements not rated (treated as blank)"
        ))

    diagnosticos.sort(key=lambda d: d.linea)
    errores = sum(1 for d in diagnosticos if d.es_error)
    logger.debug(
        f"Archivo de '{evaluador}': {len(calificaciones)} enunciados, {errores} errores"
    )

    return ConjuntoRespuestas(
        id_modelo=id_modelo,
        organizacion=organizacion,
        evaluador=evaluador,
        calificaciones=calificaciones,
    ), diagnosticos


def leer_archivo_respuestas(ruta: Path,
                            modelo: ModeloMadurez
                            ) -> Tuple[ConjuntoRespuestas, List[Diagnostico]]:
    """
    Leer un archivo de respuestas del disco; el evaluador por defecto es el
    nombre del archivo sin extensión.

    Raises:
        ErrorParseo: el archivo no es UTF-8 válido
        OSError: el archivo no puede abrirse
    """
    ruta = Path(ruta)
    try:
        texto = ruta.read_bytes().decode("utf-8")
    except UnicodeDecodeError as e:
        raise ErrorParseo(f"{ruta}: not valid UTF-8 ({e.reason})")
    return parsear_archivo_respuestas(texto, modelo, evaluador_defecto=ruta.stem)


def _validar_metadato(clave: str, valor: str) -> None:
    # Debe leerse igual con parsear_archivo_respuestas
    if not valor or valor != valor.strip():
        raise ErrorEntradaEvaluacion(f"{clave} value {valor!r} is empty or padded")
    if "#" in valor or valor.splitlines() != [valor]:
        raise ErrorEntradaEvaluacion(
            f"{clave} value {valor!r} contains '#' or a line break"
        )


def serializar_respuestas(respuestas: ConjuntoRespuestas,
                          modelo: Optional[ModeloMadurez] = None) -> str:
    """
    Escribir un conjunto de respuestas en el formato de archivo.

    Con modelo, los enunciados siguen el orden del modelo; sin él, el orden
    del mapa. Los blancos explícitos se escriben como "-".

    Raises:
        ErrorEntradaEvaluacion: un metadato no es representable en el formato
    """
    for clave, valor in (("@model", respuestas.id_modelo),
                         ("@org", respuestas.organizacion),
                         ("@rater", respuestas.evaluador)):
        _validar_metadato(clave, valor)

    if modelo is not None:
        ids = [e.id for e in modelo.enunciados if e.id in respuestas.calificaciones]
    else:
        ids = list(respuestas.calificaciones)

    lineas = [
        f"@model {respuestas.id_modelo}",
        f"@org {respuestas.organizacion}",
        f"@rater {respuestas.evaluador}",
    ]
    for id_enunciado in ids:
        valor = respuestas.calificaciones[id_enunciado]
        lineas.append(f"{id_enunciado} {MARCADOR_BLANCO if valor is None else int(valor)}")
    return "\n".join(lineas) + "\n"
