from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional


def truncate(value: Fraction, digits: int) -> str:
    """Decimal string of a non-negative fraction cut (not rounded) to `digits` decimals."""
    scaled = (value.numerator * 10 ** digits) // value.denominator
    whole, frac = divmod(scaled, 10 ** digits)
    return f"{whole}.{frac:0{digits}d}"


def density_fraction(n: int, m: int) -> Fraction:
    if n < 2:
        return Fraction(0)
    return Fraction(2 * m, n * (n - 1))


@dataclass
class DensityBucket:
    """Una fila del desglose por densidad: grafos encontrados y resto."""
    density: str
    found: int = 0
    others: int = 0

    def to_dict(self) -> dict:
        return {'density': self.density, 'found': self.found, 'others': self.others}


@dataclass
class ClassificationRow:
    """
    Modelo de una fila de clasificación exhaustiva para un orden.

    found cuenta los grafos 1-métricos antidimensionales; la conectividad y
    la densidad máxima se calculan sólo sobre ellos.
    """
    order: int
    total: Optional[int] = None
    connected: int = 0
    found: int = 0
    skipped: int = 0       # entradas no conexas
    undecided: int = 0
    connectivity: Dict[int, int] = field(default_factory=dict)
    max_density: Optional[Fraction] = None
    found_geodetic: int = 0
    breakdown: Optional[List[DensityBucket]] = None

    @property
    def ratio(self) -> str:
        if not self.connected:
            return truncate(Fraction(0), 6)
        return truncate(Fraction(self.found, self.connected), 6)

    @property
    def max_density_str(self) -> Optional[str]:
        return None if self.max_density is None else truncate(self.max_density, 2)

    def connectivity_str(self) -> str:
        return " ".join(f"{k}:{v}" for k, v in sorted(self.connectivity.items()))

    def to_dict(self) -> dict:
        return {
            'order': self.order,
            'total': self.total,
            'connected': self.connected,
            'found': self.found,
            'ratio': self.ratio,
            'connectivity': {str(k): v for k, v in sorted(self.connectivity.items())},
            'max_density': self.max_density_str,
            'found_geodetic': self.found_geodetic,
            'skipped': self.skipped,
            'undecided': self.undecided,
            'breakdown': [b.to_dict() for b in self.breakdown] if self.breakdown is not None else None,
        }

    def to_table_row(self) -> dict:
        """Columnas de la tabla CSV: order,total,connected,found,ratio,connectivity,max_density."""
        return {
            'order': self.order,
            'total': self.total,
            'connected': self.connected,
            'found': self.found,
            'ratio': self.ratio,
            'connectivity': self.connectivity_str(),
            'max_density': self.max_density_str,
        }

    @classmethod
    def from_dict(cls, data: dict) -> 'ClassificationRow':
        max_density = data.get('max_density')
        breakdown = data.get('breakdown')
        return cls(
            order=data['order'],
            total=data.get('total'),
            connected=data.get('connected', 0),
            found=data.get('found', 0),
            skipped=data.get('skipped', 0),
            undecided=data.get('undecided', 0),
            connectivity={int(k): v for k, v in data.get('connectivity', {}).items()},
            max_density=Fraction(max_density) if max_density is not None else None,
            found_geodetic=data.get('found_geodetic', 0),
            breakdown=[DensityBucket(**b) for b in breakdown] if breakdown is not None else None,
        )
