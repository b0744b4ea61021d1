"""
Constantes del Evaluador APMM
=============================

Este módulo define las constantes utilizadas en el evaluador de madurez,
incluyendo códigos de salida, escala de desempeño, bandas de kappa y
valores por defecto.

Autor: Equipo Evaluador APMM
Versión: 1.0.0
"""

from enum import Enum, IntEnum
from fractions import Fraction

# =============================================================================
# INFORMACIÓN DEL SISTEMA
# =============================================================================
NOMBRE_SISTEMA = "Evaluador APMM"
VERSION_SISTEMA = "1.0.0"


# =============================================================================
# CÓDIGOS DE SALIDA
# =============================================================================
class CodigoSalida(IntEnum):
    """Códigos de salida del CLI."""
    EXITO = 0
    ERROR_USO = 1
    MODELO_INVALIDO = 2
    ENTRADA_INVALIDA = 3


# =============================================================================
# ESCALA DE DESEMPEÑO
# =============================================================================
class LimitesEscala:
    """Bordes inferiores (inclusivos) de cada banda porcentual."""
    MINIMO = 0.0
    MAXIMO = 100.0
    PARCIALMENTE = 33.3
    MAYORMENTE = 66.7
    COMPLETAMENTE = 80.0


CALIFICACIONES_ACORDADAS = frozenset({0, 3, 4})

MARCADOR_BLANCO = "-"

NOMBRE_SIN_NIVEL = "Not Rated"


# =============================================================================
# MODELO CANÓNICO
# =============================================================================
ID_MODELO_APMM = "apmm"
NOMBRE_MODELO_APMM = "Architecture Process Maturity Model"
RATIO_APROBACION_DEFECTO = Fraction(4, 5)

# Patrón S.I.J.K de los identificadores de enunciados
PATRON_ID_ENUNCIADO = r"^S\.(\d+)\.(\d+)\.(\d+)$"


# =============================================================================
# ESTADÍSTICAS DE ACUERDO
# =============================================================================
class LimitesKappa:
    """Bandas de interpretación de kappa."""
    MODERADO = 0.44
    SUSTANCIAL = 0.62
    EXCELENTE = 0.78


NUMERO_CATEGORIAS = 5
MINIMO_EVALUADORES = 2
MINIMO_ITEMS = 2


class NivelSignificancia(Enum):
    """Niveles de significancia reportados."""
    P_001 = "P<0.01"
    P_005 = "P<0.05"


MARCAS_SIGNIFICANCIA = {
    NivelSignificancia.P_001.value: "*",
    NivelSignificancia.P_005.value: "**",
}


# =============================================================================
# FORMATOS
# =============================================================================
class FormatoSalida(Enum):
    """Formatos de salida de reportes."""
    TEXTO = "text"
    JSON = "json"


SEPARADOR_COLUMNAS = " | "
