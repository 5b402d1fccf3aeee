from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, Optional

from data.models.classification_row import density_fraction, truncate


@dataclass
class SweepRecord:
    """
    Modelo del resultado de un barrido aleatorio para una configuración.

    distinct_found es None cuando la deduplicación canónica está desactivada
    (n por encima de ANTIDIM_DISTINCT_LIMIT).
    """
    config: Dict[str, Any]
    generated: int = 0
    connected: int = 0
    found: int = 0
    undecided: int = 0
    distinct_found: Optional[int] = None
    connectivity: Dict[int, int] = field(default_factory=dict)
    max_found_edges: Optional[int] = None

    @property
    def distinct_enabled(self) -> bool:
        return self.distinct_found is not None

    @property
    def max_found_density(self) -> Optional[str]:
        if self.max_found_edges is None:
            return None
        return truncate(density_fraction(self.config['n'], self.max_found_edges), 2)

    @property
    def found_rate(self) -> Fraction:
        return Fraction(self.found, self.generated) if self.generated else Fraction(0)

    def to_dict(self) -> dict:
        return {
            'config': dict(self.config),
            'generated': self.generated,
            'connected': self.connected,
            'found': self.found,
            'undecided': self.undecided,
            'distinct_found': self.distinct_found,
            'distinct_enabled': self.distinct_enabled,
            'connectivity': {str(k): v for k, v in sorted(self.connectivity.items())},
            'max_found_edges': self.max_found_edges,
            'max_found_density': self.max_found_density,
        }

    def to_table_row(self) -> dict:
        row = {key: self.config.get(key) for key in ('model', 'n', 'm', 'p', 'seed')}
        row.update({
            'generated': self.generated,
            'connected': self.connected,
            'found': self.found,
            'distinct_found': self.distinct_found,
            'connectivity': " ".join(f"{k}:{v}" for k, v in sorted(self.connectivity.items())),
            'max_found_edges': self.max_found_edges,
            'max_found_density': self.max_found_density,
        })
        return row

    @classmethod
    def from_dict(cls, data: dict) -> 'SweepRecord':
        return cls(
            config=dict(data['config']),
            generated=data.get('generated', 0),
            connected=data.get('connected', 0),
            found=data.get('found', 0),
            undecided=data.get('undecided', 0),
            distinct_found=data.get('distinct_found'),
            connectivity={int(k): v for k, v in data.get('connectivity', {}).items()},
            max_found_edges=data.get('max_found_edges'),
        )
