"""
Pruebas de Formatos
===================

Archivo de respuestas con diagnósticos y emisión de reportes en texto y JSON.
"""

import json

import pytest

from formatos.archivo_respuestas import (
    leer_archivo_respuestas, parsear_archivo_respuestas, serializar_respuestas
)
from formatos.emisor_reportes import (
    cobertura_a_diccionario, emitir_acuerdo_texto, emitir_cobertura_texto, emitir_reporte_json,
    emitir_reporte_texto, emitir_umbrales_texto, parsear_reporte_json, umbrales_a_diccionario
)
from modelos.acuerdo import CategoriaEmam, ResultadoAcuerdo
from modelos.diagnostico import SeveridadDiagnostico
from modelos.reporte import ReporteEvaluacion
from servicios.estadisticas_acuerdo import analizar_acuerdo
from servicios.motor_calificacion import tabla_umbrales
from servicios.servicio_consolidacion import consolidar, reporte_cobertura
from servicios.servicio_reportes import construir_reporte
from utilidades.errores import ErrorEntradaEvaluacion, ErrorParseo
from pruebas.auxiliares import conjunto, conjuntos_desde_columnas, modelo_pequeno

CABECERA = "@model apmm\n@org Org\n@rater ana\n"


def _errores(diagnosticos):
    return [d for d in diagnosticos if d.severidad is SeveridadDiagnostico.ERROR]


def _celdas(linea):
    return [c.strip() for c in linea.split("|")]


class TestArchivoRespuestas:

    def test_calificacion_simple(self, modelo):
        respuestas, diagnosticos = parsear_archivo_respuestas(CABECERA + "S.1.1.1 2\n", modelo)
        assert respuestas.calificaciones == {"S.1.1.1": 2}
        assert (respuestas.id_modelo, respuestas.organizacion, respuestas.evaluador) == \
            ("apmm", "Org", "ana")
        assert _errores(diagnosticos) == []

    def test_marcador_de_blanco(self, modelo):
        respuestas, _ = parsear_archivo_respuestas(CABECERA + "S.1.1.1 -\n", modelo)
        assert respuestas.calificaciones == {"S.1.1.1": None}

    def test_id_desconocido(self, modelo):
        _, diagnosticos = parsear_archivo_respuestas(CABECERA + "S.1.1.1 2\nS.9.9.9 3\n", modelo)
        errores = _errores(diagnosticos)
        assert len(errores) == 1
        assert errores[0].linea == 5
        assert "unknown statement id S.9.9.9" in errores[0].mensaje

    def test_enunciado_duplicado(self, modelo):
        _, diagnosticos = parsear_archivo_respuestas(CABECERA + "S.1.1.1 2\nS.1.1.1 3\n", modelo)
        assert [str(d) for d in _errores(diagnosticos)] == \
            ["line 5: Error: duplicate statement S.1.1.1 (first at line 4)"]

    @pytest.mark.parametrize("cuerpo, fragmento", [
        ("S.1.1.1 5\n", "invalid rating '5'"),
        ("S.1.1.1\n", "expected '<statement-id> <rating>'"),
        ("S.1.1.1 2 3\n", "expected '<statement-id> <rating>'"),
        ("@color rojo\n", "unknown metadata '@color'"),
    ])
    def test_lineas_invalidas(self, modelo, cuerpo, fragmento):
        _, diagnosticos = parsear_archivo_respuestas(CABECERA + cuerpo, modelo)
        errores = _errores(diagnosticos)
        assert len(errores) == 1 and errores[0].linea == 4
        assert fragmento in errores[0].mensaje

    def test_metadatos_despues_de_datos(self, modelo):
        texto = "@model apmm\n@org Org\nS.1.1.1 2\n@rater tarde\n"
        _, diagnosticos = parsear_archivo_respuestas(texto, modelo)
        assert any(d.linea == 4 and "metadata must precede data lines" in d.mensaje
                   for d in _errores(diagnosticos))

    def test_modelo_distinto(self, modelo):
        _, diagnosticos = parsear_archivo_respuestas("@model otro\n@org O\n@rater r\n", modelo)
        errores = _errores(diagnosticos)
        assert errores[0].linea == 1 and "model 'otro'" in errores[0].mensaje

    def test_comentarios_y_lineas_vacias(self, modelo):
        texto = "# encabezado\n" + CABECERA + "\nS.1.1.1 3  # nota\n"
        respuestas, diagnosticos = parsear_archivo_respuestas(texto, modelo)
        assert respuestas.calificaciones == {"S.1.1.1": 3}
        assert _errores(diagnosticos) == []

    def test_advertencias(self, modelo):
        respuestas, diagnosticos = parsear_archivo_respuestas("S.1.1.1 4\n", modelo, "archivo")
        assert respuestas.evaluador == "archivo"
        assert respuestas.organizacion == "unknown"
        mensajes = [d.mensaje for d in diagnosticos]
        assert all(d.severidad is SeveridadDiagnostico.ADVERTENCIA for d in diagnosticos)
        assert any("missing @org" in m for m in mensajes)
        assert "94 statements not rated (treated as blank)" in mensajes

    def test_diagnosticos_ordenados_por_linea(self, modelo):
        texto = CABECERA + "S.9.9.9 1\nS.1.1.1 x\n"
        _, diagnosticos = parsear_archivo_respuestas(texto, modelo)
        lineas = [d.linea for d in diagnosticos]
        assert lineas == sorted(lineas)

    def test_serializar_y_volver_a_leer(self, modelo):
        original = conjunto(modelo, "ana", {"S.1.1.1": 4, "S.2.1.1": None, "S.5.5.4": 0})
        texto = serializar_respuestas(original, modelo)
        assert "S.2.1.1 -\n" in texto
        leido, diagnosticos = parsear_archivo_respuestas(texto, modelo)
        assert _errores(diagnosticos) == []
        assert leido == original

    def test_metadatos_con_espacios_internos_se_conservan(self, modelo):
        original = conjunto(modelo, "ana maria", {"S.1.1.1": 3}, organizacion="Org  Uno")
        leido, diagnosticos = parsear_archivo_respuestas(serializar_respuestas(original), modelo)
        assert _errores(diagnosticos) == []
        assert leido == original

    @pytest.mark.parametrize("evaluador, organizacion", [
        ("rater #2", "Org"),
        ("ana", "Org #1"),
        ("ana", ""),
        ("", "Org"),
        (" ana", "Org"),
        ("ana", "Org\n@rater otro"),
    ])
    def test_metadatos_no_representables(self, modelo, evaluador, organizacion):
        respuestas = conjunto(modelo, evaluador, {"S.1.1.1": 4}, organizacion=organizacion)
        with pytest.raises(ErrorEntradaEvaluacion):
            serializar_respuestas(respuestas, modelo)

    def test_leer_desde_disco(self, modelo, tmp_path):
        ruta = tmp_path / "evaluador-3.txt"
        ruta.write_text("@model apmm\n@org Org\nS.1.1.1 2\n", encoding="utf-8")
        respuestas, _ = leer_archivo_respuestas(ruta, modelo)
        assert respuestas.evaluador == "evaluador-3"

    def test_utf8_invalido(self, modelo, tmp_path):
        ruta = tmp_path / "roto.txt"
        ruta.write_bytes(b"@org \xff\xfe\n")
        with pytest.raises(ErrorParseo, match="not valid UTF-8"):
            leer_archivo_respuestas(ruta, modelo)


class TestReporteTexto:

    @pytest.fixture
    def reporte_org_a(self, modelo, respuesta_org_a):
        return construir_reporte(respuesta_org_a, modelo)

    def test_fila_del_nivel_3(self, reporte_org_a):
        lineas = emitir_reporte_texto(reporte_org_a).splitlines()
        fila = next(linea for linea in lineas if linea.startswith("Software Platform"))
        assert _celdas(fila) == ["Software Platform", "22", "22", "18", "4", "3", "PASS"]

    def test_encabezado_de_tabla(self, reporte_org_a):
        lineas = emitir_reporte_texto(reporte_org_a).splitlines()
        encabezado = next(linea for linea in lineas if linea.startswith("Level"))
        assert _celdas(encabezado) == ["Level", "N", "NA", "PT", "NA_VM", "PT_VM", "Pass"]

    def test_ultima_linea(self, reporte_org_a):
        texto = emitir_reporte_texto(reporte_org_a)
        assert texto.endswith("\n")
        assert texto.splitlines()[-1] == "AML: 4 (Software Product Family)"

    def test_nota_de_pasos_no_contiguos(self, reporte_org_a):
        assert "non-contiguous passes: level(s) 1, 2 fail below AML 4" in reporte_org_a.notas
        assert "  - non-contiguous passes: level(s) 1, 2 fail below AML 4" in \
            emitir_reporte_texto(reporte_org_a)

    def test_perfil_por_actividad(self, modelo, respuesta_org_a):
        texto = emitir_reporte_texto(construir_reporte(respuesta_org_a, modelo, detalle=True))
        lineas = texto.splitlines()
        inicio = lineas.index("Agreed statements per activity (agreed/total):")
        assert _celdas(lineas[inicio + 1]) == ["Level", "DE", "RMM", "AAE", "CM", "VM", "AAM"]
        assert _celdas(lineas[inicio + 5])[5] == "4/4"

    def test_blancos_en_notas(self, modelo):
        respuesta = conjunto(modelo, "r", {e.id: 4 for e in modelo.enunciados_de_nivel(1)})
        reporte = construir_reporte(consolidar([respuesta], modelo), modelo)
        assert "80 blank statement(s) counted as not agreed" in reporte.notas
        assert reporte.aml == 1


class TestReporteJson:

    def test_determinista_y_ordenado(self, modelo, respuesta_org_a):
        reporte = construir_reporte(respuesta_org_a, modelo)
        texto = emitir_reporte_json(reporte)
        assert texto == emitir_reporte_json(construir_reporte(respuesta_org_a, modelo))
        assert texto.endswith("}\n")
        datos = json.loads(texto)
        assert list(datos) == sorted(datos)
        assert "activities" not in datos
        assert datos["aml"] == 4 and datos["aml_name"] == "Software Product Family"
        assert datos["levels"][3]["gates"] == [{"activity": "VM", "agreed": 4, "threshold": 3}]

    def test_ida_y_vuelta(self, modelo, respuesta_org_a):
        reporte = construir_reporte(respuesta_org_a, modelo, detalle=True, notas_extra=["caso"])
        leido = parsear_reporte_json(emitir_reporte_json(reporte))
        assert isinstance(leido, ReporteEvaluacion)
        assert leido == reporte

    def test_documento_desconocido(self):
        with pytest.raises(ErrorParseo):
            parsear_reporte_json('{"hola": 1}')
        with pytest.raises(ErrorParseo, match="invalid JSON"):
            parsear_reporte_json("{")


class TestAcuerdoEmitido:

    @pytest.fixture
    def resultados(self):
        modelo = modelo_pequeno([(4, 2), (2, 1)])
        ids = [e.id for e in modelo.enunciados_de_nivel(1)]
        filas = [[4, 4, 3], [1, 1, 1], [2, 3, 2], [0, 0, 0], [4, 3, 4], [None, 2, 2]]
        respuestas = conjuntos_desde_columnas(modelo, ids, filas)
        return [analizar_acuerdo(respuestas, 1, modelo)]

    def test_json_es_lista_y_relee(self, resultados):
        texto = emitir_reporte_json(resultados)
        datos = json.loads(texto)
        assert isinstance(datos, list)
        assert datos[0]["dropped_items"] == ["S.1.2.2"]
        assert set(datos[0]) >= {"level", "kendall_w", "chi_square", "df", "fleiss_kappa", "z",
                                  "category"}
        leidos = parsear_reporte_json(texto)
        assert all(isinstance(r, ResultadoAcuerdo) for r in leidos)
        assert leidos[0].kendall_w == pytest.approx(resultados[0].kendall_w)
        assert leidos[0].categoria is resultados[0].categoria

    def test_texto(self, resultados):
        texto = emitir_acuerdo_texto(resultados)
        lineas = texto.splitlines()
        assert _celdas(lineas[0]) == ["Level", "n", "m", "W", "Chi2", "df", "Kappa", "Z",
                                      "Category"]
        assert _celdas(lineas[2])[:3] == ["1", "5", "3"]
        assert "Level 1: dropped items (blank for some rater): S.1.2.2" in lineas
        assert lineas[-1] == "Significance: * P<0.01, ** P<0.05"

    def test_marcas_en_chi2_y_z(self):
        resultado = ResultadoAcuerdo(
            nivel=2, n_items=18, m_evaluadores=4, items_descartados=[],
            kendall_w=0.8083, chi_cuadrado=58.2, grados_libertad=17,
            fleiss_kappa=0.5, z=1.7, categoria=CategoriaEmam.MODERADO,
            motivo_degenerado=None, significancia_chi="P<0.01", significancia_z="P<0.05",
        )
        celdas = _celdas(emitir_acuerdo_texto([resultado]).splitlines()[2])
        assert celdas[3:8] == ["0.8083", "58.2000*", "17", "0.5000", "1.7000**"]

    def test_cobertura(self, modelo):
        filas = reporte_cobertura([conjunto(modelo, "ana", {"S.1.1.1": 0, "S.1.1.2": None})],
                                  modelo)
        datos = cobertura_a_diccionario(filas)
        assert datos[0]["rater"] == "ana"
        assert datos[0]["levels"][0] == {"level": 1, "answered": 1, "blank": 14,
                                         "not_applicable": 1}
        assert datos[0]["total"]["blank"] == 94
        lineas = emitir_cobertura_texto(filas).splitlines()
        assert _celdas(lineas[0]) == ["Rater", "Level", "Answered", "Blank", "Doesn't Apply"]
        assert _celdas(lineas[-1]) == ["ana", "all", "1", "94", "1"]

    def test_umbrales(self, modelo):
        filas = tabla_umbrales(modelo)
        texto = emitir_umbrales_texto(modelo, filas)
        fila = next(linea for linea in texto.splitlines() if "Software Platform" in linea)
        assert _celdas(fila) == ["3", "Software Platform", "22", "18", "4", "3"]
        datos = umbrales_a_diccionario(modelo, filas)
        assert datos["pass_ratio"] == "4/5"
        assert datos["levels"][0]["gates"] == [{"activity": "VM", "total": 2, "threshold": 2}]
