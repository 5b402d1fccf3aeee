import json
from pathlib import Path
from typing import Any, Dict, Iterable, List, Optional

import pandas as pd

from utils.settings import get_settings


SCHEMA_VERSION = 1


class ResultsRepository:
    """
    Repositorio de resultados de experimentos.

    Cada registro se añade como una línea JSON
    {"schema", "type", "config", "metrics"}; las tablas finales se escriben
    en CSV con pandas. Un fichero por nombre de experimento.
    """

    def __init__(self, results_dir: Optional[str] = None):
        """
        Args:
            results_dir: Directorio de salida (por defecto ANTIDIM_RESULTS_DIR)
        """
        self.results_dir = Path(results_dir or get_settings().results_dir)

    def _ensure_directory(self):
        self.results_dir.mkdir(parents=True, exist_ok=True)

    def jsonl_path(self, name: str) -> Path:
        return self.results_dir / f"{name}.jsonl"

    def csv_path(self, name: str) -> Path:
        return self.results_dir / f"{name}.csv"

    # ==================== JSON-LINES ====================

    @staticmethod
    def make_record(record_type: str, config: Dict[str, Any], metrics: Dict[str, Any]) -> Dict[str, Any]:
        return {'schema': SCHEMA_VERSION, 'type': record_type, 'config': config, 'metrics': metrics}

    def append(self, name: str, record_type: str, config: Dict[str, Any], metrics: Dict[str, Any]) -> Path:
        """
        Añade un registro al fichero JSON-lines `name`.

        Returns:
            Ruta del fichero
        """
        self._ensure_directory()
        path = self.jsonl_path(name)
        line = json.dumps(self.make_record(record_type, config, metrics), sort_keys=True)
        with open(path, "a", encoding="utf-8") as f:
            f.write(line + "\n")
        return path

    def read_records(self, name: str, record_type: Optional[str] = None) -> List[Dict[str, Any]]:
        """Registros del fichero `name`, opcionalmente filtrados por tipo."""
        path = self.jsonl_path(name)
        if not path.exists():
            return []
        records = []
        with open(path, "r", encoding="utf-8") as f:
            for line in f:
                if not line.strip():
                    continue
                record = json.loads(line)
                if record.get('schema') != SCHEMA_VERSION:
                    continue
                if record_type is None or record.get('type') == record_type:
                    records.append(record)
        return records

    # ==================== CSV ====================

    def write_table(self, name: str, rows: Iterable[Dict[str, Any]]) -> Path:
        """Escribe (sobrescribe) la tabla CSV `name`."""
        self._ensure_directory()
        path = self.csv_path(name)
        pd.DataFrame(list(rows)).to_csv(path, index=False)
        return path

    def read_table(self, name: str) -> pd.DataFrame:
        return pd.read_csv(self.csv_path(name))
