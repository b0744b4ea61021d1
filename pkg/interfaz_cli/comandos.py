"""
Comandos del Evaluador APMM
===========================

Punto de entrada de línea de comandos. Los reportes van a stdout (o a
--out) y los diagnósticos a stderr. Códigos de salida: 0 éxito, 1 error de
uso o de lectura, 2 modelo inválido, 3 entradas de evaluación inválidas.

Autor: Equipo Evaluador APMM
Versión: 1.0.0
"""

import argparse
import sys
from pathlib import Path
from typing import List, Optional, Sequence

from formatos.archivo_respuestas import leer_archivo_respuestas
from formatos.emisor_reportes import (
    cobertura_a_diccionario, emitir_acuerdo_texto, emitir_cobertura_texto, emitir_json,
    emitir_reporte_json, emitir_reporte_texto, emitir_umbrales_texto, umbrales_a_diccionario
)
from modelos.modelo_madurez import ModeloMadurez
from modelos.respuesta import ConjuntoRespuestas, ReglaConsolidacion
from servicios.casos_estudio import CASOS, cargar_caso
from servicios.catalogo_modelo import (
    modelo_incorporado, parsear_documento_modelo, resolver_modelo, serializar_modelo,
    validar_modelo
)
from servicios.estadisticas_acuerdo import analizar_acuerdo
from servicios.motor_calificacion import escala_desde_porcentaje, nivel_madurez, tabla_umbrales
from servicios.servicio_consolidacion import consolidar, reporte_cobertura
from servicios.servicio_reportes import construir_reporte
from utilidades.constantes import CodigoSalida, FormatoSalida, NOMBRE_SISTEMA, VERSION_SISTEMA
from utilidades.errores import (
    ErrorEntradaEvaluacion, ErrorParseo, ErrorUso, ErrorValidacionModelo
)
from utilidades.logger import configurar_nivel_logging, obtener_logger
from utilidades.validador import ValidadorAPMM

logger = obtener_logger("interfaz_cli")

EPILOGO = """
Examples:
  # Reproduce the bundled case study of organization A
  python main.py demo org-a

  # Assess an organization from several rater files
  python main.py assess rater1.txt rater2.txt --format json --out report.json

  # Inter-rater agreement for level 3
  python main.py agreement rater1.txt rater2.txt rater3.txt --level 3

  # Map an agreement percentage to the performance scale
  python main.py scale 79.9
"""


class AnalizadorArgumentos(argparse.ArgumentParser):
    """ArgumentParser que lanza ErrorUso en lugar de terminar el proceso."""

    def error(self, message: str):
        raise ErrorUso(message, uso=self.format_usage())


# =============================================================================
# CONSTRUCCIÓN DEL ANALIZADOR
# =============================================================================
def _agregar_formato(parser: argparse.ArgumentParser, con_salida: bool = False):
    parser.add_argument(
        "--format",
        choices=[f.value for f in FormatoSalida],
        default=FormatoSalida.TEXTO.value,
        help="Output format (default: text)"
    )
    if con_salida:
        parser.add_argument("--out", metavar="FILE", help="Write the report to FILE instead of stdout")


def _agregar_modelo(parser: argparse.ArgumentParser):
    parser.add_argument("--model", metavar="FILE",
                        help="Custom model definition (default: canonical APMM)")


def _agregar_reporte(parser: argparse.ArgumentParser):
    parser.add_argument(
        "--consolidation",
        choices=[r.value for r in ReglaConsolidacion],
        default=ReglaConsolidacion.MEDIANA.value,
        help="Rule for merging several raters (default: median)"
    )
    parser.add_argument("--detail", action="store_true",
                        help="Add the per-activity agreed statement profile")


def construir_analizador() -> AnalizadorArgumentos:
    """Construir el analizador con todos los subcomandos."""
    comun = AnalizadorArgumentos(add_help=False)
    comun.add_argument("-v", "--verbose", action="count", default=0,
                       help="Log to stderr (-v info, -vv debug)")

    parser = AnalizadorArgumentos(
        prog="apmm",
        description=f"{NOMBRE_SISTEMA} {VERSION_SISTEMA}: architecture process maturity assessment",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog=EPILOGO,
    )
    subparsers = parser.add_subparsers(dest="comando", metavar="COMMAND")
    subparsers.required = True

    assess = subparsers.add_parser("assess", parents=[comun],
                                   help="Consolidate rater files and compute the AML")
    assess.add_argument("archivos", nargs="+", metavar="RESPONSE_FILE")
    _agregar_modelo(assess)
    _agregar_reporte(assess)
    _agregar_formato(assess, con_salida=True)

    agreement = subparsers.add_parser("agreement", parents=[comun],
                                      help="Inter-rater agreement (Kendall W, Fleiss kappa)")
    agreement.add_argument("archivos", nargs="+", metavar="RESPONSE_FILE")
    _agregar_modelo(agreement)
    agreement.add_argument("--level", default="all", metavar="N|all",
                           help="Level to analyze (default: all)")
    _agregar_formato(agreement, con_salida=True)

    scale = subparsers.add_parser("scale", parents=[comun],
                                  help="Map an agreement percentage to a rating")
    scale.add_argument("porcentaje", metavar="PCT")

    model = subparsers.add_parser("model", parents=[comun],
                                  help="Show or validate the canonical or a custom model")
    model.add_argument("accion", choices=["show", "validate"])
    model.add_argument("archivo", nargs="?", metavar="FILE")

    demo = subparsers.add_parser("demo", parents=[comun],
                                 help="Assess a bundled case study")
    demo.add_argument("caso", choices=sorted(CASOS))
    _agregar_reporte(demo)
    _agregar_formato(demo, con_salida=True)

    thresholds = subparsers.add_parser("thresholds", parents=[comun],
                                       help="Pass thresholds per level and gating activity")
    _agregar_modelo(thresholds)
    _agregar_formato(thresholds, con_salida=True)

    coverage = subparsers.add_parser("coverage", parents=[comun],
                                     help="Answered, blank and Doesn't Apply counts per rater")
    coverage.add_argument("archivos", nargs="+", metavar="RESPONSE_FILE")
    _agregar_modelo(coverage)
    _agregar_formato(coverage, con_salida=True)

    return parser


# =============================================================================
# AUXILIARES
# =============================================================================
def _escribir_salida(texto: str, ruta: Optional[str] = None):
    if ruta:
        Path(ruta).write_text(texto, encoding="utf-8")
        logger.info(f"Reporte escrito en {ruta}")
    else:
        sys.stdout.write(texto)


def _resolver_modelo(ruta: Optional[str]) -> ModeloMadurez:
    return resolver_modelo(Path(ruta).read_text(encoding="utf-8") if ruta else None)


def _leer_respuestas(rutas: Sequence[str], modelo: ModeloMadurez) -> List[ConjuntoRespuestas]:
    """Leer archivos de respuestas; los diagnósticos van a stderr."""
    respuestas = []
    errores = 0
    for ruta in rutas:
        conjunto, diagnosticos = leer_archivo_respuestas(Path(ruta), modelo)
        for diagnostico in diagnosticos:
            print(f"{ruta}: {diagnostico}", file=sys.stderr)
        errores += sum(1 for d in diagnosticos if d.es_error)
        respuestas.append(conjunto)
    if errores:
        raise ErrorParseo(f"{errores} error(s) in response files")
    return respuestas


def _emitir_evaluacion(respuestas: List[ConjuntoRespuestas], modelo: ModeloMadurez,
                       args: argparse.Namespace, notas: Sequence[str] = ()) -> int:
    consolidada = consolidar(respuestas, modelo, ReglaConsolidacion(args.consolidation))
    resultado = nivel_madurez(consolidada, modelo)
    reporte = construir_reporte(consolidada, modelo, resultado,
                                detalle=args.detail, notas_extra=notas)
    if args.format == FormatoSalida.JSON.value:
        _escribir_salida(emitir_reporte_json(reporte), args.out)
    else:
        _escribir_salida(emitir_reporte_texto(reporte), args.out)
    return CodigoSalida.EXITO


# =============================================================================
# SUBCOMANDOS
# =============================================================================
def _comando_assess(args: argparse.Namespace) -> int:
    modelo = _resolver_modelo(args.model)
    return _emitir_evaluacion(_leer_respuestas(args.archivos, modelo), modelo, args)


def _comando_demo(args: argparse.Namespace) -> int:
    respuestas, nota = cargar_caso(args.caso)
    return _emitir_evaluacion(respuestas, modelo_incorporado(), args, notas=[nota])


def _comando_agreement(args: argparse.Namespace) -> int:
    modelo = _resolver_modelo(args.model)
    seleccion = ValidadorAPMM.validar_seleccion_nivel(
        args.level, [n.indice for n in modelo.niveles]
    )
    if not seleccion:
        raise ErrorUso(seleccion.mensaje)

    respuestas = _leer_respuestas(args.archivos, modelo)
    resultados = [analizar_acuerdo(respuestas, indice, modelo) for indice in seleccion.valor]
    if args.format == FormatoSalida.JSON.value:
        _escribir_salida(emitir_reporte_json(resultados), args.out)
    else:
        _escribir_salida(emitir_acuerdo_texto(resultados), args.out)
    return CodigoSalida.EXITO


def _comando_scale(args: argparse.Namespace) -> int:
    validacion = ValidadorAPMM.validar_porcentaje(args.porcentaje)
    if not validacion:
        raise ErrorUso(validacion.mensaje)
    calificacion = escala_desde_porcentaje(validacion.valor)
    _escribir_salida(f"{int(calificacion)} ({calificacion.expresion})\n")
    return CodigoSalida.EXITO


def _comando_model(args: argparse.Namespace) -> int:
    if args.accion == "show":
        _escribir_salida(serializar_modelo(_resolver_modelo(args.archivo)))
        return CodigoSalida.EXITO

    if args.archivo:
        modelo = parsear_documento_modelo(Path(args.archivo).read_text(encoding="utf-8"))
    else:
        modelo = modelo_incorporado()
    violaciones = validar_modelo(modelo)
    for violacion in violaciones:
        print(f"violation: {violacion}", file=sys.stderr)
    if violaciones:
        _escribir_salida(f"invalid: model {modelo.id} ({len(violaciones)} violation(s))\n")
        return CodigoSalida.MODELO_INVALIDO
    _escribir_salida(
        f"valid: model {modelo.id} ({len(modelo.niveles)} levels, "
        f"{len(modelo.actividades)} activities, {modelo.total_enunciados} statements)\n"
    )
    return CodigoSalida.EXITO


def _comando_thresholds(args: argparse.Namespace) -> int:
    modelo = _resolver_modelo(args.model)
    filas = tabla_umbrales(modelo)
    if args.format == FormatoSalida.JSON.value:
        _escribir_salida(emitir_json(umbrales_a_diccionario(modelo, filas)), args.out)
    else:
        _escribir_salida(emitir_umbrales_texto(modelo, filas), args.out)
    return CodigoSalida.EXITO


def _comando_coverage(args: argparse.Namespace) -> int:
    modelo = _resolver_modelo(args.model)
    filas = reporte_cobertura(_leer_respuestas(args.archivos, modelo), modelo)
    if args.format == FormatoSalida.JSON.value:
        _escribir_salida(emitir_json(cobertura_a_diccionario(filas)), args.out)
    else:
        _escribir_salida(emitir_cobertura_texto(filas), args.out)
    return CodigoSalida.EXITO


COMANDOS = {
    "assess": _comando_assess,
    "agreement": _comando_agreement,
    "scale": _comando_scale,
    "model": _comando_model,
    "demo": _comando_demo,
    "thresholds": _comando_thresholds,
    "coverage": _comando_coverage,
}


def ejecutar(argv: Optional[Sequence[str]] = None) -> int:
    """
    Ejecutar el evaluador con los argumentos dados.

    Args:
        argv: Argumentos sin el nombre del programa (sys.argv[1:] por defecto)

    Returns:
        Código de salida (CodigoSalida)
    """
    parser = construir_analizador()
    try:
        args = parser.parse_args(argv)
    except ErrorUso as e:
        sys.stderr.write(e.uso or parser.format_usage())
        print(f"error: {e}", file=sys.stderr)
        return CodigoSalida.ERROR_USO
    except SystemExit as e:
        # --help
        return int(e.code or 0)

    verbosidad = getattr(args, "verbose", 0)
    if verbosidad:
        configurar_nivel_logging("DEBUG" if verbosidad > 1 else "INFO")

    try:
        return int(COMANDOS[args.comando](args))
    except ErrorUso as e:
        sys.stderr.write(parser.format_usage())
        print(f"error: {e}", file=sys.stderr)
        return CodigoSalida.ERROR_USO
    except ErrorValidacionModelo as e:
        for violacion in e.violaciones:
            print(f"violation: {violacion}", file=sys.stderr)
        return CodigoSalida.MODELO_INVALIDO
    except ErrorParseo as e:
        print(f"error: {e}", file=sys.stderr)
        return CodigoSalida.ERROR_USO
    except ErrorEntradaEvaluacion as e:
        print(f"error: {e}", file=sys.stderr)
        return CodigoSalida.ENTRADA_INVALIDA
    except (OSError, UnicodeDecodeError) as e:
        print(f"error: {e}", file=sys.stderr)
        return CodigoSalida.ERROR_USO
