"""
Configuración de modelos aleatorios y manifiestos de barrido.
"""
from enum import Enum
from typing import List, Literal, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, ValidationError, model_validator

from graphcore import ParameterError


def _parameter_error(exc: ValidationError) -> ParameterError:
    """Flattens a pydantic ValidationError into one ParameterError message."""
    parts = []
    for error in exc.errors():
        message = error["msg"].removeprefix("Value error, ")
        where = ".".join(str(part) for part in error["loc"])
        parts.append(f"{where}: {message}" if where else message)
    return ParameterError("; ".join(parts))


class RandomModel(str, Enum):
    BARABASI_ALBERT = "ba"
    GNM = "gnm"
    GNP = "gnp"


class RandomModelConfig(BaseModel):
    """
    Parameters of one random model.

    Attributes:
        model: ba, gnm or gnp.
        n: Order.
        m: Edges per step (ba) or total edges (gnm).
        p: Edge probability (gnp).
        seed: Base seed; per-sample seeds derive from (seed, index).
        samples: Number of graphs in a sweep.
        ba_initial: Seed graph of the BA growth: K_{m+1} ("complete") or K_{1,m} ("star").
    """
    model: RandomModel
    n: int = Field(ge=1)
    m: Optional[int] = Field(default=None, ge=0)
    p: Optional[float] = None
    seed: int = Field(default=0, ge=0, lt=2**64)
    samples: int = Field(default=1, ge=1)
    ba_initial: Literal["complete", "star"] = "complete"

    model_config = ConfigDict(frozen=True)

    def __init__(self, **data):
        try:
            super().__init__(**data)
        except ValidationError as exc:
            raise _parameter_error(exc) from exc

    @model_validator(mode="after")
    def _check_parameters(self):
        if self.model is RandomModel.BARABASI_ALBERT:
            if self.m is None or self.p is not None:
                raise ParameterError("ba takes m (edges per step) and no p")
            if not 1 <= self.m < self.n:
                raise ParameterError(f"ba needs 1 <= m < n, got m={self.m}, n={self.n}")
        elif self.model is RandomModel.GNM:
            if self.m is None or self.p is not None:
                raise ParameterError("gnm takes m (total edges) and no p")
            if self.m > self.n * (self.n - 1) // 2:
                raise ParameterError(f"gnm needs m <= n(n-1)/2 = {self.n * (self.n - 1) // 2}, got {self.m}")
        else:
            if self.p is None or self.m is not None:
                raise ParameterError("gnp takes p and no m")
            if not 0.0 <= self.p <= 1.0:
                raise ParameterError(f"gnp needs 0 <= p <= 1, got {self.p}")
        return self

    def label(self) -> str:
        if self.model is RandomModel.GNP:
            return f"{self.model.value}(n={self.n},p={self.p:.6f})"
        return f"{self.model.value}(n={self.n},m={self.m})"


class SweepManifest(BaseModel):
    """
    JSON sweep manifest, expanded into one RandomModelConfig per (n, m) or (n, p).

    Either `n` or `n_range` (inclusive) is given. For gnm/ba either `m` or
    `m_range` (inclusive, stepped by `m_step`); `m_range` values above
    n(n-1)/2 are skipped. For gnp either `p` or `p_threshold`, which uses
    p = (1 + epsilon) ln(n) / n for each n.
    """
    model: RandomModel
    n: Optional[int] = Field(default=None, ge=1)
    n_range: Optional[Tuple[int, int]] = None
    m: Optional[int] = Field(default=None, ge=0)
    m_range: Optional[Tuple[int, int]] = None
    m_step: int = Field(default=1, ge=1)
    p: Optional[float] = None
    p_threshold: bool = False
    epsilon: float = Field(default=0.001, gt=0)
    seed: int = Field(default=0, ge=0, lt=2**64)
    samples: int = Field(default=1000, ge=1)
    ba_initial: Literal["complete", "star"] = "complete"

    def __init__(self, **data):
        try:
            super().__init__(**data)
        except ValidationError as exc:
            raise _parameter_error(exc) from exc

    @classmethod
    def from_json(cls, text: str) -> "SweepManifest":
        """Parses a JSON manifest. Raises ParameterError on malformed JSON or invalid fields."""
        try:
            return cls.model_validate_json(text)
        except ValidationError as exc:
            raise _parameter_error(exc) from exc

    @model_validator(mode="after")
    def _check_ranges(self):
        if (self.n is None) == (self.n_range is None):
            raise ParameterError("manifest needs exactly one of n / n_range")
        if self.model is RandomModel.GNP and (self.p is None) == (not self.p_threshold):
            raise ParameterError("gnp manifest needs exactly one of p / p_threshold")
        if self.model is not RandomModel.GNP and (self.m is None) == (self.m_range is None):
            raise ParameterError(f"{self.model.value} manifest needs exactly one of m / m_range")
        return self

    def orders(self) -> List[int]:
        if self.n is not None:
            return [self.n]
        lo, hi = self.n_range
        return list(range(lo, hi + 1))

    def expand(self) -> List[RandomModelConfig]:
        from randgen.generators import connectivity_threshold_p, derive_seed

        configs: List[RandomModelConfig] = []
        for n in self.orders():
            if self.model is RandomModel.GNP:
                p = connectivity_threshold_p(n, self.epsilon) if self.p_threshold else self.p
                grid = [(None, min(p, 1.0))]
            elif self.m is not None:
                grid = [(self.m, None)]
            else:
                lo, hi = self.m_range
                top = n * (n - 1) // 2 if self.model is RandomModel.GNM else n - 1
                grid = [(m, None) for m in range(lo, min(hi, top) + 1, self.m_step)]
            for m, p in grid:
                configs.append(RandomModelConfig(
                    model=self.model,
                    n=n,
                    m=m,
                    p=p,
                    seed=derive_seed(self.seed, len(configs)),
                    samples=self.samples,
                    ba_initial=self.ba_initial,
                ))
        return configs
