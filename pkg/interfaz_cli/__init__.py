"""
Interfaz de Línea de Comandos del Evaluador APMM
"""
