"""
cli - punto de entrada de línea de comandos.
"""
from .app import EXIT_BUDGET, EXIT_INPUT, EXIT_OK, build_parser, main, run

__all__ = ['EXIT_BUDGET', 'EXIT_INPUT', 'EXIT_OK', 'build_parser', 'main', 'run']
