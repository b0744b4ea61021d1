"""
Emisor de Reportes
==================

Emite los reportes del evaluador en texto (tablas de ancho fijo con celdas
separadas por " | ") y en JSON determinista (claves ordenadas, UTF-8, salto
de línea final, números integrales como enteros).

Autor: Equipo Evaluador APMM
Versión: 1.0.0
"""

import json
from typing import Any, Dict, List, Sequence, Union

from modelos.acuerdo import ResultadoAcuerdo
from modelos.modelo_madurez import ModeloMadurez
from modelos.reporte import ReporteEvaluacion
from modelos.respuesta import CoberturaEvaluador, ConteoCobertura
from modelos.veredicto import FilaUmbral
from utilidades.constantes import MARCAS_SIGNIFICANCIA, SEPARADOR_COLUMNAS
from utilidades.convertidor_datos import ConvertidorAPMM
from utilidades.errores import ErrorParseo

Emitible = Union[ReporteEvaluacion, ResultadoAcuerdo, Sequence[ResultadoAcuerdo]]


# =============================================================================
# TABLAS DE TEXTO
# =============================================================================
def _formatear_tabla(encabezados: List[str], filas: List[List[str]],
                     numericas: Sequence[int] = ()) -> List[str]:
    """Tabla de ancho fijo; las columnas numéricas se alinean a la derecha."""
    anchos = [len(e) for e in encabezados]
    for fila in filas:
        anchos = [max(a, len(c)) for a, c in zip(anchos, fila)]

    def linea(celdas: List[str]) -> str:
        partes = [
            c.rjust(anchos[i]) if i in numericas else c.ljust(anchos[i])
            for i, c in enumerate(celdas)
        ]
        return SEPARADOR_COLUMNAS.join(partes).rstrip()

    separador = "-+-".join("-" * a for a in anchos)
    return [linea(encabezados), separador] + [linea(f) for f in filas]


def emitir_reporte_texto(reporte: ReporteEvaluacion) -> str:
    """
    Emitir el reporte de evaluación como texto.

    Una fila por nivel con Level | N | NA | PT | NA_g | PT_g | Pass (un par
    de columnas por compuerta), notas y la línea final "AML: k (nombre)".
    """
    lineas = [
        f"Model: {reporte.modelo.nombre} ({reporte.modelo.id})",
        f"Organization: {reporte.organizacion}",
        f"Raters: {', '.join(reporte.evaluadores)}",
        f"Consolidation: {reporte.consolidacion}",
        "",
    ]

    compuertas = [c.actividad for c in reporte.niveles[0].compuertas] if reporte.niveles else []
    encabezados = ["Level", "N", "NA", "PT"]
    for g in compuertas:
        encabezados += [f"NA_{g}", f"PT_{g}"]
    encabezados.append("Pass")

    filas = []
    for nivel in reporte.niveles:
        fila = [nivel.nombre, str(nivel.total), str(nivel.acordados), str(nivel.umbral)]
        for compuerta in nivel.compuertas:
            fila += [str(compuerta.acordados), str(compuerta.umbral)]
        fila.append("PASS" if nivel.aprobado else "FAIL")
        filas.append(fila)
    lineas += _formatear_tabla(encabezados, filas, numericas=range(1, len(encabezados) - 1))

    if reporte.actividades:
        ids_actividades: List[str] = []
        for celda in reporte.actividades:
            if celda.actividad not in ids_actividades:
                ids_actividades.append(celda.actividad)
        perfil: Dict[int, Dict[str, str]] = {}
        for celda in reporte.actividades:
            perfil.setdefault(celda.nivel, {})[celda.actividad] = f"{celda.acordados}/{celda.total}"
        lineas += ["", "Agreed statements per activity (agreed/total):"]
        lineas += _formatear_tabla(
            ["Level"] + ids_actividades,
            [[str(n)] + [perfil[n].get(a, "") for a in ids_actividades] for n in sorted(perfil)],
            numericas=range(1, len(ids_actividades) + 1),
        )

    if reporte.notas:
        lineas += ["", "Notes:"] + [f"  - {nota}" for nota in reporte.notas]

    lineas += ["", f"AML: {reporte.aml} ({reporte.nombre_aml})"]
    return "\n".join(lineas) + "\n"


def _con_marca(valor: str, significancia: Union[str, None]) -> str:
    return valor + MARCAS_SIGNIFICANCIA.get(significancia, "") if significancia else valor


def emitir_acuerdo_texto(resultados: Sequence[ResultadoAcuerdo]) -> str:
    """Tabla de acuerdo por nivel con marcas de significancia."""
    formatear = ConvertidorAPMM.formatear_numero
    filas = []
    for r in resultados:
        filas.append([
            str(r.nivel), str(r.n_items), str(r.m_evaluadores),
            formatear(r.kendall_w),
            _con_marca(formatear(r.chi_cuadrado), r.significancia_chi), str(r.grados_libertad),
            formatear(r.fleiss_kappa),
            _con_marca(formatear(r.z), r.significancia_z),
            r.categoria.value if r.categoria else "-",
        ])
    lineas = _formatear_tabla(
        ["Level", "n", "m", "W", "Chi2", "df", "Kappa", "Z", "Category"],
        filas, numericas=range(0, 8)
    )

    for r in resultados:
        if r.items_descartados:
            lineas.append(f"Level {r.nivel}: dropped items (blank for some rater): "
                          f"{', '.join(r.items_descartados)}")
        if r.motivo_degenerado:
            lineas.append(f"Level {r.nivel}: degenerate: {r.motivo_degenerado}")

    leyenda = ", ".join(f"{marca} {nivel}" for nivel, marca in MARCAS_SIGNIFICANCIA.items())
    lineas += ["", f"Significance: {leyenda}"]
    return "\n".join(lineas) + "\n"


def emitir_cobertura_texto(filas_cobertura: Sequence[CoberturaEvaluador]) -> str:
    """Tabla de cobertura: una fila por evaluador y nivel, más el total."""
    filas = []
    for cobertura in filas_cobertura:
        conteos = [(str(n), c) for n, c in sorted(cobertura.por_nivel.items())]
        conteos.append(("all", cobertura.total))
        for nivel, conteo in conteos:
            filas.append([cobertura.evaluador, nivel, str(conteo.respondidos),
                          str(conteo.en_blanco), str(conteo.no_aplica)])
    lineas = _formatear_tabla(
        ["Rater", "Level", "Answered", "Blank", "Doesn't Apply"], filas, numericas=(1, 2, 3, 4)
    )
    return "\n".join(lineas) + "\n"


def emitir_umbrales_texto(modelo: ModeloMadurez, filas_umbral: Sequence[FilaUmbral]) -> str:
    """Tabla de N y PT por nivel y por compuerta."""
    compuertas = [g.id for g in modelo.actividades_compuerta]
    encabezados = ["Level", "Name", "N", "PT"]
    for g in compuertas:
        encabezados += [f"N_{g}", f"PT_{g}"]
    filas = []
    for fila in filas_umbral:
        celdas = [str(fila.indice_nivel), fila.nombre, str(fila.total_enunciados), str(fila.umbral)]
        for g in compuertas:
            celdas += [str(fila.total_compuerta[g]), str(fila.umbral_compuerta[g])]
        filas.append(celdas)
    lineas = [f"Model: {modelo.nombre} ({modelo.id}), pass ratio {modelo.ratio_aprobacion}", ""]
    lineas += _formatear_tabla(encabezados, filas,
                               numericas=[0] + list(range(2, len(encabezados))))
    return "\n".join(lineas) + "\n"


# =============================================================================
# JSON
# =============================================================================
def _a_diccionario(objeto: Union[ReporteEvaluacion, ResultadoAcuerdo]) -> Dict[str, Any]:
    diccionario = json.loads(objeto.to_json())
    if isinstance(objeto, ReporteEvaluacion) and diccionario.get("activities") is None:
        diccionario.pop("activities", None)
    return diccionario


def emitir_reporte_json(reporte: Emitible) -> str:
    """
    Emitir un reporte de evaluación, un resultado de acuerdo o una lista de
    resultados de acuerdo como JSON determinista.
    """
    if isinstance(reporte, (ReporteEvaluacion, ResultadoAcuerdo)):
        return ConvertidorAPMM.diccionario_a_json(_a_diccionario(reporte))
    return ConvertidorAPMM.diccionario_a_json([_a_diccionario(r) for r in reporte])


def parsear_reporte_json(texto: str) -> Union[ReporteEvaluacion, ResultadoAcuerdo,
                                               List[ResultadoAcuerdo]]:
    """
    Leer un documento emitido por emitir_reporte_json.

    Raises:
        ErrorParseo: JSON inválido o documento que no es un reporte
    """
    try:
        datos = ConvertidorAPMM.json_a_diccionario(texto)
    except json.JSONDecodeError as e:
        raise ErrorParseo(f"invalid JSON: {e.msg}", e.lineno)

    if isinstance(datos, list):
        return [ResultadoAcuerdo.from_dict(d) for d in datos]
    if isinstance(datos, dict) and "aml" in datos:
        return ReporteEvaluacion.from_dict(datos, infer_missing=True)
    if isinstance(datos, dict) and "kendall_w" in datos:
        return ResultadoAcuerdo.from_dict(datos)
    raise ErrorParseo("document is neither an assessment report nor an agreement result")


def cobertura_a_diccionario(filas_cobertura: Sequence[CoberturaEvaluador]) -> List[Dict[str, Any]]:
    """Estructura JSON del reporte de cobertura."""
    def conteo(c: ConteoCobertura) -> Dict[str, int]:
        return {"answered": c.respondidos, "blank": c.en_blanco, "not_applicable": c.no_aplica}

    return [
        {
            "rater": cobertura.evaluador,
            "levels": [dict(level=n, **conteo(c)) for n, c in sorted(cobertura.por_nivel.items())],
            "total": conteo(cobertura.total),
        }
        for cobertura in filas_cobertura
    ]


def umbrales_a_diccionario(modelo: ModeloMadurez,
                           filas_umbral: Sequence[FilaUmbral]) -> Dict[str, Any]:
    """Estructura JSON de la tabla de umbrales."""
    return {
        "model": {"id": modelo.id, "name": modelo.nombre},
        "pass_ratio": str(modelo.ratio_aprobacion),
        "levels": [
            {
                "index": f.indice_nivel,
                "name": f.nombre,
                "total": f.total_enunciados,
                "threshold": f.umbral,
                "gates": [
                    {"activity": g, "total": f.total_compuerta[g],
                     "threshold": f.umbral_compuerta[g]}
                    for g in f.total_compuerta
                ],
            }
            for f in filas_umbral
        ],
    }


def emitir_json(datos: Any) -> str:
    """JSON determinista de una estructura ya convertida a diccionarios."""
    return ConvertidorAPMM.diccionario_a_json(datos)
