"""
Results Logger Service

Servicio que registra filas de clasificación, barridos y auditorías en el
repositorio de resultados.
"""
from typing import Optional

from data.models.classification_row import ClassificationRow
from data.models.network_audit import NetworkAudit
from data.models.sweep_record import SweepRecord
from data.repositories.results_repository import ResultsRepository
from utils.utils import Utils


class ResultsLogger:
    """
    Registra cada resultado como una línea JSON en `<experiment>.jsonl`.
    """

    def __init__(self, experiment: str, repository: Optional[ResultsRepository] = None):
        """
        Args:
            experiment: Nombre del fichero de resultados (sin extensión)
            repository: Repositorio (si no se proporciona, crea uno nuevo)
        """
        self.experiment = experiment
        self.repository = repository or ResultsRepository()

    def log_classification(self, row: ClassificationRow) -> None:
        metrics = row.to_dict()
        config = {'order': metrics.pop('order')}
        path = self.repository.append(self.experiment, "classification", config, metrics)
        Utils.log("Results", f"Order {row.order} row saved to {path}")

    def log_sweep(self, record: SweepRecord) -> None:
        metrics = record.to_dict()
        config = metrics.pop('config')
        path = self.repository.append(self.experiment, "sweep", config, metrics)
        Utils.log("Results", f"Sweep {config.get('model')} n={config.get('n')} saved to {path}")

    def log_audit(self, audit: NetworkAudit) -> None:
        metrics = audit.to_dict()
        config = {'name': metrics.pop('name')}
        path = self.repository.append(self.experiment, "audit", config, metrics)
        Utils.log("Results", f"Audit {audit.name} saved to {path}")
