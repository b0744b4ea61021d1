"""
Pruebas de la Interfaz de Línea de Comandos
===========================================

Subcomandos, salidas y códigos de salida de ejecutar().
"""

import json

import pytest

from formatos.archivo_respuestas import serializar_respuestas
from interfaz_cli.comandos import ejecutar
from servicios.catalogo_modelo import cargar_modelo
from utilidades.constantes import CodigoSalida
from pruebas.auxiliares import conjunto


@pytest.fixture
def archivos_evaluadores(tmp_path, modelo):
    """Tres evaluadores de la misma organización con opiniones distintas."""
    rutas = []
    for j, desplazamiento in enumerate((0, 1, 2), start=1):
        calificaciones = {
            e.id: (k + desplazamiento) % 5 for k, e in enumerate(modelo.enunciados)
        }
        ruta = tmp_path / f"evaluador{j}.txt"
        ruta.write_text(serializar_respuestas(conjunto(modelo, f"r{j}", calificaciones, "Org X"),
                                              modelo), encoding="utf-8")
        rutas.append(str(ruta))
    return rutas


class TestDemo:

    def test_org_a_texto(self, capsys):
        assert ejecutar(["demo", "org-a"]) == CodigoSalida.EXITO
        salida = capsys.readouterr().out
        assert salida.splitlines()[-1] == "AML: 4 (Software Product Family)"
        assert "fixture org-a" in salida

    def test_org_a_json_estable(self, capsys):
        ejecutar(["demo", "org-a", "--format", "json"])
        primera = capsys.readouterr().out
        ejecutar(["demo", "org-a", "--format", "json"])
        assert capsys.readouterr().out == primera
        datos = json.loads(primera)
        assert datos["aml"] == 4
        assert [n["passed"] for n in datos["levels"]] == [False, False, True, True, False]

    def test_org_b(self, capsys):
        assert ejecutar(["demo", "org-b"]) == CodigoSalida.EXITO
        assert capsys.readouterr().out.splitlines()[-1] == "AML: 2 (Standardized Infrastructure)"

    def test_caso_desconocido(self, capsys):
        assert ejecutar(["demo", "org-z"]) == CodigoSalida.ERROR_USO
        assert "usage:" in capsys.readouterr().err


class TestScale:

    @pytest.mark.parametrize("porcentaje, salida", [
        ("79.9", "3 (Largely Agree)\n"),
        ("80", "4 (Completely Agree)\n"),
        ("0", "1 (Not Agree)\n"),
    ])
    def test_escala(self, capsys, porcentaje, salida):
        assert ejecutar(["scale", porcentaje]) == CodigoSalida.EXITO
        assert capsys.readouterr().out == salida

    def test_fuera_de_rango(self, capsys):
        assert ejecutar(["scale", "120"]) == CodigoSalida.ERROR_USO
        capturado = capsys.readouterr()
        assert capturado.out == ""
        assert "error: percentage out of range" in capturado.err


class TestAssess:

    def test_sin_archivos(self, capsys):
        assert ejecutar(["assess"]) == CodigoSalida.ERROR_USO
        error = capsys.readouterr().err
        assert error.startswith("usage:")
        assert "error:" in error

    def test_tres_evaluadores(self, capsys, archivos_evaluadores):
        assert ejecutar(["assess", *archivos_evaluadores, "--detail"]) == CodigoSalida.EXITO
        salida = capsys.readouterr().out
        assert "Organization: Org X" in salida
        assert "Raters: r1, r2, r3" in salida
        assert "Agreed statements per activity (agreed/total):" in salida
        assert salida.splitlines()[-1].startswith("AML: ")

    def test_salida_a_archivo(self, capsys, tmp_path, archivos_evaluadores):
        destino = tmp_path / "reporte.json"
        codigo = ejecutar(["assess", *archivos_evaluadores, "--format", "json",
                           "--out", str(destino)])
        assert codigo == CodigoSalida.EXITO
        assert capsys.readouterr().out == ""
        assert json.loads(destino.read_text(encoding="utf-8"))["consolidation"] == "median"

    def test_archivo_con_errores(self, capsys, tmp_path):
        ruta = tmp_path / "malo.txt"
        ruta.write_text("@model apmm\n@org O\n@rater r\nS.9.9.9 3\n", encoding="utf-8")
        assert ejecutar(["assess", str(ruta)]) == CodigoSalida.ERROR_USO
        error = capsys.readouterr().err
        assert f"{ruta}: line 4: Error: unknown statement id S.9.9.9" in error

    def test_archivo_inexistente(self, capsys, tmp_path):
        assert ejecutar(["assess", str(tmp_path / "no.txt")]) == CodigoSalida.ERROR_USO
        assert "error:" in capsys.readouterr().err

    def test_organizaciones_mezcladas(self, capsys, tmp_path, archivos_evaluadores):
        otra = tmp_path / "otra.txt"
        otra.write_text("@model apmm\n@org Otra\n@rater z\nS.1.1.1 3\n", encoding="utf-8")
        codigo = ejecutar(["assess", archivos_evaluadores[0], str(otra)])
        assert codigo == CodigoSalida.ENTRADA_INVALIDA
        assert "different organizations" in capsys.readouterr().err

    def test_modelo_invalido(self, capsys, tmp_path, archivos_evaluadores):
        modelo = tmp_path / "modelo.txt"
        modelo.write_text(
            "model mini\nactivity A design non-gating A\nactivity G management gating G\n"
            "level 1 Uno\nstatement S.1.1.1 1 A texto\n",
            encoding="utf-8",
        )
        codigo = ejecutar(["assess", archivos_evaluadores[0], "--model", str(modelo)])
        assert codigo == CodigoSalida.MODELO_INVALIDO
        assert "violation: level 1 has no statements for gating activity G" in \
            capsys.readouterr().err


class TestModel:

    def test_validar_canonico(self, capsys):
        assert ejecutar(["model", "validate"]) == CodigoSalida.EXITO
        assert capsys.readouterr().out == \
            "valid: model apmm (5 levels, 6 activities, 95 statements)\n"

    def test_validar_archivo_invalido(self, capsys, tmp_path):
        ruta = tmp_path / "modelo.txt"
        ruta.write_text("model m\nactivity G management gating G\nlevel 1 Uno\nlevel 3 Tres\n"
                        "statement S.1.1.1 1 G a\nstatement S.3.1.1 3 G b\n", encoding="utf-8")
        assert ejecutar(["model", "validate", str(ruta)]) == CodigoSalida.MODELO_INVALIDO
        capturado = capsys.readouterr()
        assert capturado.out.startswith("invalid: model m")
        assert "violation: non-contiguous level indices" in capturado.err

    def test_mostrar_es_recargable(self, capsys, modelo):
        assert ejecutar(["model", "show"]) == CodigoSalida.EXITO
        assert cargar_modelo(capsys.readouterr().out) == modelo


class TestAgreement:

    def test_un_evaluador(self, capsys, archivos_evaluadores):
        assert ejecutar(["agreement", archivos_evaluadores[0]]) == CodigoSalida.ENTRADA_INVALIDA
        assert "fewer than 2 raters" in capsys.readouterr().err

    def test_nivel_json(self, capsys, archivos_evaluadores):
        codigo = ejecutar(["agreement", *archivos_evaluadores, "--level", "3", "--format", "json"])
        assert codigo == CodigoSalida.EXITO
        datos = json.loads(capsys.readouterr().out)
        assert isinstance(datos, list) and len(datos) == 1
        assert (datos[0]["level"], datos[0]["n_items"], datos[0]["m_raters"]) == (3, 22, 3)

    def test_todos_los_niveles_texto(self, capsys, archivos_evaluadores):
        assert ejecutar(["agreement", *archivos_evaluadores]) == CodigoSalida.EXITO
        salida = capsys.readouterr().out
        assert salida.splitlines()[-1] == "Significance: * P<0.01, ** P<0.05"
        filas = [linea for linea in salida.splitlines() if linea.split("|")[0].strip().isdigit()]
        assert len(filas) == 5

    def test_nivel_desconocido(self, capsys, archivos_evaluadores):
        codigo = ejecutar(["agreement", *archivos_evaluadores, "--level", "9"])
        assert codigo == CodigoSalida.ERROR_USO
        assert "unknown level 9" in capsys.readouterr().err


class TestThresholdsYCoverage:

    def test_umbrales(self, capsys):
        assert ejecutar(["thresholds"]) == CodigoSalida.EXITO
        filas = [[c.strip() for c in linea.split("|")]
                 for linea in capsys.readouterr().out.splitlines() if "|" in linea]
        assert ["3", "Software Platform", "22", "18", "4", "3"] in filas

    def test_cobertura_json(self, capsys, tmp_path):
        ruta = tmp_path / "parcial.txt"
        ruta.write_text("@model apmm\n@org O\n@rater ana\nS.1.1.1 0\nS.1.1.2 -\n",
                        encoding="utf-8")
        assert ejecutar(["coverage", str(ruta), "--format", "json"]) == CodigoSalida.EXITO
        datos = json.loads(capsys.readouterr().out)
        assert datos[0]["rater"] == "ana"
        assert datos[0]["total"] == {"answered": 1, "blank": 94, "not_applicable": 1}


def test_ayuda(capsys):
    assert ejecutar(["--help"]) == CodigoSalida.EXITO
    assert "demo" in capsys.readouterr().out
