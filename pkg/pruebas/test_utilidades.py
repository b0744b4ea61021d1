"""
Pruebas de Configuración y Utilidades
=====================================

Configuración por entorno, gestor de logs, validador de entradas del CLI y
convertidor JSON.
"""

import io
import logging
import sys

import pytest

from configuracion.configuracion_general import (
    ConfiguracionGeneral, obtener_config, obtener_ruta_casos
)
from modelos.acuerdo import CategoriaEmam
from utilidades.convertidor_datos import ConvertidorAPMM
from utilidades.logger import (
    GestorLogs, configurar_nivel_logging, gestor_logs, obtener_logger, obtener_logger_servicio
)
from utilidades.validador import ValidadorAPMM


class TestConfiguracion:

    def test_rutas(self):
        config = obtener_config()
        completa = config.obtener_configuracion_completa()
        assert completa["rutas"]["casos"] == str(obtener_ruta_casos())
        assert (obtener_ruta_casos() / "org_a.txt").is_file()

    def test_nivel_desde_entorno(self, monkeypatch):
        monkeypatch.setenv("APMM_LOG_NIVEL", "debug")
        assert ConfiguracionGeneral().LOG_NIVEL == "DEBUG"

    def test_nivel_invalido_usa_warning(self, monkeypatch, capsys):
        monkeypatch.setenv("APMM_LOG_NIVEL", "verbose")
        assert ConfiguracionGeneral().LOG_NIVEL == "WARNING"
        assert "invalid APMM_LOG_NIVEL 'VERBOSE'" in capsys.readouterr().err

    def test_validar_nivel_invalido(self):
        config = ConfiguracionGeneral()
        config.LOG_NIVEL = "RUIDOSO"
        with pytest.raises(ValueError, match="Nivel de log inválido"):
            config.validar_configuracion()


class TestLogger:

    def test_logger_reutilizado(self):
        assert obtener_logger("prueba.utilidades") is obtener_logger("prueba.utilidades")

    def test_consola_fuera_de_stdout(self):
        logger = obtener_logger_servicio("prueba")
        assert logger.name == "servicio.prueba"
        assert logger.propagate is False
        consolas = [h for h in logger.handlers if isinstance(h, logging.StreamHandler)
                    and not isinstance(h, logging.FileHandler)]
        assert len(consolas) == 1
        assert consolas[0].stream is not sys.stdout

    def test_cambio_de_nivel_global(self):
        original = gestor_logs.nivel_actual
        logger = obtener_logger("prueba.nivel")
        try:
            configurar_nivel_logging("debug")
            assert logger.level == logging.DEBUG
        finally:
            configurar_nivel_logging(original)
        assert logger.level == getattr(logging, original)

    def test_formato_de_consola_configurable(self, monkeypatch):
        monkeypatch.setenv("APMM_LOG_FORMATO", "%(levelname)s|%(message)s")
        salida = io.StringIO()
        monkeypatch.setattr(sys, "stderr", salida)
        gestor = GestorLogs()
        gestor.config = ConfiguracionGeneral()
        gestor.crear_logger("prueba.formato").warning("hola")
        assert salida.getvalue() == "WARNING|hola\n"

    def test_archivo_de_log_configurado(self, monkeypatch, tmp_path):
        monkeypatch.setenv("APMM_LOG_ARCHIVO", "true")
        monkeypatch.setenv("APMM_RUTA_LOGS", str(tmp_path))
        gestor = GestorLogs()
        gestor.config = ConfiguracionGeneral()
        por_defecto = gestor.crear_logger("prueba.archivo")
        propio = gestor.crear_logger("prueba.archivo_propio", archivo_log="propio.log")
        try:
            rutas = {h.baseFilename for lg in (por_defecto, propio) for h in lg.handlers
                     if isinstance(h, logging.FileHandler)}
            assert rutas == {str(gestor.config.LOG_ARCHIVO), str(tmp_path / "propio.log")}
            assert gestor.config.LOG_ARCHIVO == tmp_path / "evaluador_apmm.log"
        finally:
            for lg in (por_defecto, propio):
                for h in lg.handlers:
                    h.close()


class TestValidador:

    @pytest.mark.parametrize("token, valor", [("0", 0), ("4", 4), ("-", None)])
    def test_calificaciones_validas(self, token, valor):
        resultado = ValidadorAPMM.validar_calificacion(token)
        assert resultado and resultado.valor == valor

    @pytest.mark.parametrize("token", ["5", "04", "x", "3.0", ""])
    def test_calificaciones_invalidas(self, token):
        resultado = ValidadorAPMM.validar_calificacion(token)
        assert not resultado
        assert resultado.codigo_error == "CALIFICACION_INVALIDA"
        assert str(resultado).startswith("✗")

    def test_id_de_enunciado(self):
        conocidos = frozenset({"S.1.1.1"})
        assert ValidadorAPMM.validar_id_enunciado("S.1.1.1", conocidos)
        assert ValidadorAPMM.validar_id_enunciado("S.1.1.2", conocidos).codigo_error == \
            "ID_DESCONOCIDO"
        assert not ValidadorAPMM.validar_id_enunciado("")

    @pytest.mark.parametrize("texto, valido", [
        ("79.9", True), ("0", True), ("100", True),
        ("100.5", False), ("-1", False), ("nan", False), ("mucho", False),
    ])
    def test_porcentaje(self, texto, valido):
        assert bool(ValidadorAPMM.validar_porcentaje(texto)) is valido

    def test_seleccion_de_nivel(self):
        indices = [1, 2, 3]
        assert ValidadorAPMM.validar_seleccion_nivel("all", indices).valor == [1, 2, 3]
        assert ValidadorAPMM.validar_seleccion_nivel("2", indices).valor == [2]
        assert ValidadorAPMM.validar_seleccion_nivel("9", indices).mensaje == "unknown level 9"
        assert not ValidadorAPMM.validar_seleccion_nivel("dos", indices)


class TestConvertidor:

    def test_normalizar_numeros(self):
        datos = {"a": [1.0, 2.5, {"b": 3.0}], "c": float("inf"), "d": True}
        assert ConvertidorAPMM.normalizar_numeros(datos) == \
            {"a": [1, 2.5, {"b": 3}], "c": float("inf"), "d": True}
        assert isinstance(ConvertidorAPMM.normalizar_numeros(1.0), int)

    def test_json_determinista(self):
        texto = ConvertidorAPMM.diccionario_a_json({"b": 1.0, "a": "Organización"})
        assert texto == '{\n  "a": "Organización",\n  "b": 1\n}\n'

    def test_enums(self):
        assert ConvertidorAPMM.diccionario_a_json([CategoriaEmam.SUSTANCIAL]) == \
            '[\n  "Substantial"\n]\n'

    @pytest.mark.parametrize("numero, texto", [(None, "-"), (3, "3"), (0.5, "0.5000"),
                                               (-1 / 3, "-0.3333")])
    def test_formatear_numero(self, numero, texto):
        assert ConvertidorAPMM.formatear_numero(numero) == texto
