from dataclasses import dataclass
from typing import Iterable, Iterator, List, Tuple

import numpy as np
import pandas as pd

from ossermanCliff.exceptions import AmbiguousClustering
from ossermanCliff.utils.linalg import check_finite


@dataclass(frozen=True)
class SpectrumProfile:
    """Clustered eigenvalues with multiplicities, ascending by value."""

    pairs: Tuple[Tuple[float, int], ...] = ()

    def __post_init__(self):
        pairs = tuple((float(v), int(m)) for v, m in self.pairs)
        if any(m < 1 for _, m in pairs):
            raise ValueError("multiplicities must be positive")
        object.__setattr__(self, "pairs", tuple(sorted(pairs)))

    def __iter__(self) -> Iterator[Tuple[float, int]]:
        return iter(self.pairs)

    def __len__(self) -> int:
        return len(self.pairs)

    @property
    def values(self) -> np.ndarray:
        return np.array([v for v, _ in self.pairs])

    @property
    def multiplicities(self) -> List[int]:
        return [m for _, m in self.pairs]

    @property
    def dim(self) -> int:
        """Total count of eigenvalues (n − 1 for a restricted Jacobi operator)."""
        return sum(self.multiplicities)

    @property
    def max_multiplicity(self) -> int:
        return max(self.multiplicities) if self.pairs else 0

    @property
    def eigenvalues(self) -> np.ndarray:
        """Expanded eigenvalue list, each value repeated by its multiplicity."""
        return np.repeat(self.values, self.multiplicities) if self.pairs else np.zeros(0)

    def multiplicity_of(self, value: float, atol: float = 1e-9) -> int:
        for v, m in self.pairs:
            if abs(v - value) <= atol * max(1.0, abs(value)):
                return m
        return 0

    def matches(self, other: "SpectrumProfile", rel_tol: float = 1e-9) -> bool:
        if self.multiplicities != other.multiplicities:
            return False
        scale = max(1.0, float(np.max(np.abs(self.values))) if self.pairs else 1.0)
        return bool(np.all(np.abs(self.values - other.values) <= rel_tol * scale))

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame(self.pairs, columns=["eigenvalue", "multiplicity"])

    def to_dict(self) -> list:
        return [{"eigenvalue": v, "multiplicity": m} for v, m in self.pairs]

    @classmethod
    def from_dict(cls, items: Iterable[dict]) -> "SpectrumProfile":
        return cls(tuple((d["eigenvalue"], d["multiplicity"]) for d in items))

    def __str__(self):
        inner = ", ".join(f"({v:.12g}, {m})" for v, m in self.pairs)
        return "{" + inner + "}"


def cluster_spectrum(eigenvalues, rel_tol: float = 1e-9) -> SpectrumProfile:
    """
    Gap-based clustering of a real spectrum.

    Neighbouring eigenvalues closer than ``rel_tol * scale`` merge, where scale
    is the largest magnitude floored at 1. A gap between that threshold and ten
    times it cannot be classified and raises AmbiguousClustering.

    Args:
        eigenvalues (array_like): real eigenvalues (any order).
        rel_tol (float): relative merge tolerance.

    Returns:
        SpectrumProfile: cluster means with their multiplicities.
    """
    vals = np.sort(check_finite(eigenvalues, "eigenvalues").ravel())
    if vals.size == 0:
        return SpectrumProfile(())
    scale = max(1.0, float(np.max(np.abs(vals))))
    threshold = rel_tol * scale
    gaps = np.diff(vals)
    unclear = (gaps > threshold) & (gaps < 10.0 * threshold)
    if np.any(unclear):
        i = int(np.flatnonzero(unclear)[0])
        raise AmbiguousClustering(
            f"eigenvalues {vals[i]:.15g} and {vals[i + 1]:.15g} are separated by "
            f"{gaps[i]:.3e}, within a factor 10 of the merge threshold {threshold:.3e}"
        )
    groups = np.split(vals, np.flatnonzero(gaps > threshold) + 1)
    return SpectrumProfile(tuple((float(np.mean(g)), len(g)) for g in groups))
