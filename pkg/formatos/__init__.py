"""
Formatos de Entrada y Salida
============================

Archivos de respuestas de evaluadores y emisión de reportes en texto y JSON.
"""
