"""
Aplicación Principal del Evaluador APMM
=======================================

Punto de entrada del evaluador de madurez del proceso de arquitectura.

    python main.py demo org-a
    python main.py assess evaluador1.txt evaluador2.txt --format json

Autor: Equipo Evaluador APMM
Versión: 1.0.0
"""

import os
import sys

# Agregar el directorio raíz al path
sys.path.append(os.path.dirname(os.path.abspath(__file__)))

from interfaz_cli.comandos import ejecutar  # noqa: E402


def main() -> int:
    """Función principal."""
    return ejecutar(sys.argv[1:])


if __name__ == "__main__":
    sys.exit(main())
