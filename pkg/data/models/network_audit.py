from dataclasses import dataclass
from typing import Optional


@dataclass
class NetworkAudit:
    """
    Modelo de la auditoría de una red real.

    Las estadísticas de cabecera (n, m, densidad, Δ, δ) son las de la
    componente analizada; `dropped` cuenta los vértices fuera de ella. Los
    campos file_* guardan las mismas estadísticas del fichero completo y
    coinciden con las de cabecera cuando la red es conexa.
    """
    name: str
    n: int
    m: int
    density: float
    max_degree: int
    min_degree: int
    connected: bool = True
    dropped: int = 0
    verdict: str = "UNDECIDED"
    decided_by: Optional[str] = None
    witness_k: Optional[int] = None
    seconds: float = 0.0
    file_n: Optional[int] = None
    file_m: Optional[int] = None
    file_density: Optional[float] = None
    file_max_degree: Optional[int] = None
    file_min_degree: Optional[int] = None

    def __post_init__(self):
        if self.file_n is None:
            self.file_n = self.n
        if self.file_m is None:
            self.file_m = self.m
        if self.file_density is None:
            self.file_density = self.density
        if self.file_max_degree is None:
            self.file_max_degree = self.max_degree
        if self.file_min_degree is None:
            self.file_min_degree = self.min_degree

    @property
    def note(self) -> str:
        if self.connected:
            return "connected"
        return f"largest component ({self.dropped} vertices dropped)"

    def to_dict(self) -> dict:
        return {
            'name': self.name,
            'n': self.n,
            'm': self.m,
            'density': self.density,
            'max_degree': self.max_degree,
            'min_degree': self.min_degree,
            'file_n': self.file_n,
            'file_m': self.file_m,
            'file_density': self.file_density,
            'file_max_degree': self.file_max_degree,
            'file_min_degree': self.file_min_degree,
            'connected': self.connected,
            'dropped': self.dropped,
            'note': self.note,
            'verdict': self.verdict,
            'decided_by': self.decided_by,
            'witness_k': self.witness_k,
            'seconds': self.seconds,
        }

    @classmethod
    def from_dict(cls, data: dict) -> 'NetworkAudit':
        return cls(
            name=data.get('name', ''),
            n=data['n'],
            m=data['m'],
            density=data.get('density', 0.0),
            max_degree=data.get('max_degree', 0),
            min_degree=data.get('min_degree', 0),
            connected=data.get('connected', True),
            dropped=data.get('dropped', 0),
            verdict=data.get('verdict', 'UNDECIDED'),
            decided_by=data.get('decided_by'),
            witness_k=data.get('witness_k'),
            seconds=data.get('seconds', 0.0),
            file_n=data.get('file_n'),
            file_m=data.get('file_m'),
            file_density=data.get('file_density'),
            file_max_degree=data.get('file_max_degree'),
            file_min_degree=data.get('file_min_degree'),
        )
