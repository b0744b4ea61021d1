"""
Fixtures compartidas de las pruebas del evaluador.
"""

import os
import sys

# Agregar el directorio raíz al path
sys.path.append(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

import pytest  # noqa: E402

from modelos.respuesta import ReglaConsolidacion  # noqa: E402
from servicios.casos_estudio import cargar_caso  # noqa: E402
from servicios.catalogo_modelo import modelo_incorporado  # noqa: E402
from servicios.servicio_consolidacion import consolidar  # noqa: E402


@pytest.fixture
def modelo():
    """Modelo APMM canónico."""
    return modelo_incorporado()


@pytest.fixture
def respuestas_org_a():
    respuestas, _ = cargar_caso("org-a")
    return respuestas


@pytest.fixture
def respuesta_org_a(modelo, respuestas_org_a):
    """Respuesta consolidada del caso A."""
    return consolidar(respuestas_org_a, modelo, ReglaConsolidacion.PRIMERO)


@pytest.fixture
def respuesta_org_b(modelo):
    respuestas, _ = cargar_caso("org-b")
    return consolidar(respuestas, modelo)
