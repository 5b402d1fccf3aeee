from .models import ClassificationRow, DensityBucket, NetworkAudit, SweepRecord
from .repositories import SCHEMA_VERSION, ResultsRepository
from .results_logger import ResultsLogger

__all__ = [
    'ClassificationRow',
    'DensityBucket',
    'NetworkAudit',
    'SweepRecord',
    'SCHEMA_VERSION',
    'ResultsRepository',
    'ResultsLogger',
]
