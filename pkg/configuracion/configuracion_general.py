"""
Configuración General del Evaluador APMM
========================================

Este módulo contiene la configuración general del evaluador de madurez.
Maneja variables de entorno, rutas de datos y parámetros de logging.

La configuración sólo afecta al comportamiento ambiental (logs y rutas);
los resultados de una evaluación nunca dependen del entorno.

Autor: Equipo Evaluador APMM
Versión: 1.0.0
"""

import os
import sys
from pathlib import Path
from dotenv import load_dotenv
from typing import Dict, Any

# Cargar variables de entorno
load_dotenv('configuracion.env')

NIVELES_LOG_VALIDOS = ('DEBUG', 'INFO', 'WARNING', 'ERROR', 'CRITICAL')


class ConfiguracionGeneral:
    """
    Clase principal para manejar la configuración del evaluador.
    Centraliza el acceso a variables de entorno y rutas.
    """

    def __init__(self):
        """Inicializar configuración general."""
        self.cargar_configuracion()
        self.validar_configuracion()

    def cargar_configuracion(self):
        """Cargar todas las configuraciones desde variables de entorno."""

        # Identificación del sistema
        self.NOMBRE_SISTEMA = os.getenv('APMM_NOMBRE') or 'Evaluador APMM'
        self.VERSION_SISTEMA = os.getenv('APMM_VERSION', '1.0.0')

        # Rutas del sistema
        self.RUTA_BASE = Path(__file__).parent.parent
        self.RUTA_DATOS = self.RUTA_BASE / 'datos'
        self.RUTA_CASOS = self.RUTA_DATOS / 'casos'
        self.RUTA_LOGS = Path(os.getenv('APMM_RUTA_LOGS', str(self.RUTA_BASE / 'logs')))

        # Configuración de logging
        self.LOG_NIVEL = os.getenv('APMM_LOG_NIVEL', 'WARNING').upper()
        if self.LOG_NIVEL not in NIVELES_LOG_VALIDOS:
            print(f"warning: invalid APMM_LOG_NIVEL '{self.LOG_NIVEL}'; using WARNING",
                  file=sys.stderr)
            self.LOG_NIVEL = 'WARNING'
        self.LOG_ARCHIVO_HABILITADO = os.getenv('APMM_LOG_ARCHIVO', 'False').lower() == 'true'
        self.LOG_ARCHIVO = self.RUTA_LOGS / 'evaluador_apmm.log'
        self.LOG_FORMATO = os.getenv(
            'APMM_LOG_FORMATO',
            '%(asctime)s - %(name)s - %(levelname)s - %(message)s'
        )

    def validar_configuracion(self):
        """Validar que la configuración sea correcta."""
        errores = []

        if self.LOG_NIVEL not in NIVELES_LOG_VALIDOS:
            errores.append(f"Nivel de log inválido: {self.LOG_NIVEL}")

        if not self.NOMBRE_SISTEMA.strip():
            errores.append("Nombre del sistema vacío")

        if errores:
            raise ValueError("Errores en configuración: " + "; ".join(errores))

    def obtener_configuracion_completa(self) -> Dict[str, Any]:
        """Obtener diccionario con toda la configuración."""
        return {
            'sistema': {
                'nombre': self.NOMBRE_SISTEMA,
                'version': self.VERSION_SISTEMA,
            },
            'rutas': {
                'base': str(self.RUTA_BASE),
                'datos': str(self.RUTA_DATOS),
                'casos': str(self.RUTA_CASOS),
                'logs': str(self.RUTA_LOGS),
            },
            'logging': {
                'nivel': self.LOG_NIVEL,
                'archivo_habilitado': self.LOG_ARCHIVO_HABILITADO,
                'archivo': str(self.LOG_ARCHIVO),
                'formato': self.LOG_FORMATO,
            }
        }


# Instancia global de configuración
configuracion = ConfiguracionGeneral()


# Funciones de acceso rápido
def obtener_config() -> ConfiguracionGeneral:
    """Obtener instancia de configuración global."""
    return configuracion


def obtener_ruta_casos() -> Path:
    """Obtener ruta de los casos de estudio incluidos."""
    return configuracion.RUTA_CASOS
