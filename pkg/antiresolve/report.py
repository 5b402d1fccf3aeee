"""
Informes de análisis: veredicto, testigo y cotas con su procedencia.
"""
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, List, Optional, Tuple


class Verdict(str, Enum):
    """
    Outcome of the "is Adim(G) = 1" question.

    UNDECIDED only appears when a wall-time budget ran out; the report then
    carries the bounds gathered so far.
    """
    IS_ONE = "IS_ONE"
    NOT_ONE = "NOT_ONE"
    UNDECIDED = "UNDECIDED"


class BoundKind(str, Enum):
    LOWER = "LOWER"
    UPPER = "UPPER"


# Etiquetas de procedencia de cada cota
SOURCE_TRIVIAL = "trivial"
SOURCE_MAX_DEGREE = "max-degree"
SOURCE_MODULE = "module"
SOURCE_DIAMETER_TWO = "diameter-two"
SOURCE_CONNECTIVITY_ECC = "connectivity-eccentricity"
SOURCE_REGULAR_DIAMETER_TWO = "regular-diameter-two"
SOURCE_ADIM1 = "adim1"
SOURCE_ORACLE = "oracle"


@dataclass(frozen=True)
class Bound:
    kind: BoundKind
    value: int
    source: str

    def to_dict(self) -> dict:
        return {'kind': self.kind.value, 'value': self.value, 'source': self.source}


@dataclass(frozen=True)
class Witness:
    """A set S whose metric partition has minimum class size k."""
    S: Tuple[int, ...]
    k: int

    def to_dict(self) -> dict:
        return {'S': list(self.S), 'k': self.k}


@dataclass
class AdimReport:
    """
    Verdict on Adim(G) = 1 with bounds and provenance.

    Attributes:
        verdict: IS_ONE, NOT_ONE or UNDECIDED.
        witness: For NOT_ONE, a set S with partition k > 1.
        bounds: Every bound that fired, in the order it fired.
        exact: Exact Adim(G) when known.
        decided_by: Name of the stage that settled the verdict.
        elapsed: Wall time in seconds (not serialized).
    """
    verdict: Verdict
    witness: Optional[Witness] = None
    bounds: List[Bound] = field(default_factory=list)
    exact: Optional[int] = None
    decided_by: Optional[str] = None
    elapsed: float = 0.0

    def add(self, kind: BoundKind, value: int, source: str) -> None:
        bound = Bound(kind, value, source)
        if bound not in self.bounds:
            self.bounds.append(bound)

    @property
    def lower(self) -> int:
        return max((b.value for b in self.bounds if b.kind is BoundKind.LOWER), default=1)

    @property
    def upper(self) -> Optional[int]:
        values = [b.value for b in self.bounds if b.kind is BoundKind.UPPER]
        return min(values) if values else None

    @property
    def is_one(self) -> bool:
        return self.verdict is Verdict.IS_ONE

    def to_dict(self) -> dict:
        return {
            'verdict': self.verdict.value,
            'witness': self.witness.to_dict() if self.witness else None,
            'bounds': [b.to_dict() for b in self.bounds],
            'exact': self.exact,
            'decided_by': self.decided_by,
        }


@dataclass
class AdimTable:
    """
    Exhaustive result of the oracle.

    Attributes:
        adim: Largest realized k.
        adim_k: Smallest k-ARS size for every realized k.
        witnesses: One smallest set per realized k.
    """
    adim: int
    adim_k: Dict[int, int]
    witnesses: Dict[int, Tuple[int, ...]]

    def anonymity_level(self, ell: int) -> Optional[int]:
        """(k, ell)-anonymity k: smallest realized k with adim_k <= ell, or None."""
        eligible = [k for k, size in self.adim_k.items() if size <= ell]
        return min(eligible) if eligible else None

    def to_dict(self) -> dict:
        return {
            'adim': self.adim,
            'adim_k': {str(k): v for k, v in sorted(self.adim_k.items())},
            'witnesses': {str(k): list(v) for k, v in sorted(self.witnesses.items())},
        }
