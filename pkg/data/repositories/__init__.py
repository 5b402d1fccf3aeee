from .results_repository import SCHEMA_VERSION, ResultsRepository

__all__ = ['SCHEMA_VERSION', 'ResultsRepository']
