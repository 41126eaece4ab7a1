"""Sorted spectra and the spectral order."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from src.utils.config import settings
from src.utils.errors import CriterionError


@dataclass(frozen=True, eq=False)
class Spectrum:
    """Eigenvalues λ_1 ≤ … ≤ λ_n with the ambient interval [0, 2ρ∞]."""

    values: np.ndarray
    ambient: tuple[float, float]

    def __post_init__(self) -> None:
        values = np.sort(np.asarray(self.values, dtype=float))
        values.setflags(write=False)
        object.__setattr__(self, "values", values)
        object.__setattr__(self, "ambient", (float(self.ambient[0]), float(self.ambient[1])))

    def __len__(self) -> int:
        return int(self.values.size)

    def __getitem__(self, k: int) -> float:
        return float(self.values[k])

    def padded(self, length: int, value: float) -> np.ndarray:
        """Values extended to ``length`` entries by repeating ``value``."""
        if length < len(self):
            raise ValueError("cannot pad to a shorter length")
        return np.concatenate([self.values, np.full(length - len(self), float(value))])

    def allclose(self, other: "Spectrum", atol: float = 1e-9) -> bool:
        return len(self) == len(other) and bool(np.allclose(self.values, other.values, rtol=0.0, atol=atol))

    def to_dict(self) -> dict:
        return {"values": self.values.tolist(), "ambient": list(self.ambient)}


def spectrally_leq(a: Spectrum, b: Spectrum, ambient_max: float) -> bool:
    """λ_k(a) ≤ λ_k(b) for all k, with ``b`` padded by ``ambient_max``."""
    if len(a) < len(b):
        raise CriterionError(
            f"spectral order needs the smaller operator to have at least as many eigenvalues ({len(a)} < {len(b)})"
        )
    padded = b.padded(len(a), ambient_max)
    # solver error grows with the operator norm, which is at most 2ρ∞
    slack = settings.order_tol * max(1.0, ambient_max)
    return bool(np.all(a.values <= padded + slack))


__all__ = ["Spectrum", "spectrally_leq"]
