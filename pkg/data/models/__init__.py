from .classification_row import ClassificationRow, DensityBucket, density_fraction, truncate
from .sweep_record import SweepRecord
from .network_audit import NetworkAudit

__all__ = ['ClassificationRow', 'DensityBucket', 'density_fraction', 'truncate', 'SweepRecord', 'NetworkAudit']
