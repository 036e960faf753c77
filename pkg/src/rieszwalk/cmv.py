"""Finite CMV evolution operators built from Verblunsky coefficients.

A CMV operator is pentadiagonal: rows 0 and 1 are special, then the sparsity
pattern repeats in 2x4 blocks shifted right by two columns per block row.
The finite matrix here is the plain truncation of the infinite one, which
leaves every interior column orthonormal; only the last two columns feel the
cut.  Storage is by diagonals (offsets -2..+2), so one application costs
O(dimension).

Transitions are read along rows: row r lists the amplitudes for one step out
of basis state r.  Applying the operator to a state vector therefore
contracts over the row index.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterator, Sequence, Union

import numpy as np

AlphaLike = Union["VerblunskyCoefficient", Fraction, complex, float, int]


class CoefficientOutOfDisk(ValueError):
    """A Verblunsky coefficient must have modulus strictly below 1."""


class DimensionMismatch(ValueError):
    """State vector length does not match the operator dimension."""


class DimensionTooSmall(ValueError):
    """Truncation too small for the requested number of exact steps."""


class VerblunskyCoefficient:
    """A point of the open unit disk together with rho = sqrt(1 - |value|^2).

    For exact rational input the complement 1 - value^2 is formed exactly and
    rounded to float once, so rho carries no avoidable rounding error.
    """

    __slots__ = ("value", "rho")

    def __init__(self, value: AlphaLike):
        if isinstance(value, VerblunskyCoefficient):
            self.value = value.value
            self.rho = value.rho
            return
        if isinstance(value, (Fraction, int)):
            if abs(value) >= 1:
                raise CoefficientOutOfDisk(f"|{value}| >= 1")
            self.rho = math.sqrt(1 - value * value)
            self.value = complex(value)
            return
        z = complex(value)
        mag2 = z.real * z.real + z.imag * z.imag
        if mag2 >= 1.0:
            raise CoefficientOutOfDisk(f"|{z}| >= 1")
        self.rho = math.sqrt(1.0 - mag2)
        self.value = z

    def __repr__(self) -> str:
        return f"VerblunskyCoefficient({self.value!r})"


class BandedUnitary:
    """Unitary with bandwidth 2, stored as five diagonals.

    ``bands[o + 2, r]`` holds the entry at (row r, column r + o).  Instances
    are immutable after construction.
    """

    __slots__ = ("bands", "dimension")

    def __init__(self, bands: np.ndarray):
        if bands.ndim != 2 or bands.shape[0] != 5:
            raise ValueError("bands must have shape (5, dimension)")
        self.bands = bands
        self.dimension = bands.shape[1]
        self.bands.flags.writeable = False

    def entry(self, row: int, col: int) -> complex:
        if not (0 <= row < self.dimension and 0 <= col < self.dimension):
            raise IndexError("entry outside the matrix")
        o = col - row
        if abs(o) > 2:
            return 0j
        return complex(self.bands[o + 2, row])

    def to_dense(self) -> np.ndarray:
        dense = np.zeros((self.dimension, self.dimension), dtype=complex)
        for o in range(-2, 3):
            for r in range(max(0, -o), min(self.dimension, self.dimension - o)):
                dense[r, r + o] = self.bands[o + 2, r]
        return dense

    def nonzero_entries(self) -> Iterator[tuple[int, int, complex]]:
        """Yield (row, col, value) for every non-zero entry, row-major."""
        for r in range(self.dimension):
            for o in range(-2, 3):
                c = r + o
                if 0 <= c < self.dimension:
                    v = self.bands[o + 2, r]
                    if v != 0:
                        yield r, c, complex(v)


def build_cmv(alphas: Sequence[AlphaLike], dim: int) -> BandedUnitary:
    """Truncated CMV operator from the first ``dim`` Verblunsky coefficients."""
    if dim < 2:
        raise ValueError("dim must be >= 2")
    if len(alphas) < dim:
        raise ValueError(f"need at least {dim} coefficients, got {len(alphas)}")
    coeff = [VerblunskyCoefficient(a) for a in alphas[:dim]]

    def a(j: int) -> complex:
        # j = -1 encodes the boundary: a fictitious coefficient -1 makes the
        # first two rows come out of the same block formula as the rest.
        return -1.0 + 0j if j < 0 else coeff[j].value

    def r(j: int) -> float:
        return 0.0 if j < 0 else coeff[j].rho

    bands = np.zeros((5, dim), dtype=complex)

    def put(row: int, col: int, value: complex) -> None:
        if col >= 0:
            bands[col - row + 2, row] = value

    for row in range(dim):
        k = 2 * (row // 2)
        if row % 2 == 0:
            put(row, k - 1, r(k - 1) * np.conj(a(k)))
            put(row, k, -a(k - 1) * np.conj(a(k)))
            if k + 1 < dim:
                put(row, k + 1, r(k) * np.conj(a(k + 1)))
            if k + 2 < dim:
                put(row, k + 2, r(k) * r(k + 1))
        else:
            put(row, k - 1, r(k - 1) * r(k))
            put(row, k, -a(k - 1) * r(k))
            put(row, k + 1, -a(k) * np.conj(a(k + 1)))
            if k + 2 < dim:
                put(row, k + 2, -a(k) * r(k + 1))
    return BandedUnitary(bands)


def apply_from_source(state: Sequence[complex], M: BandedUnitary) -> np.ndarray:
    """One step of the dynamics: out[c] = sum_r state[r] * M[r, c]."""
    v = np.asarray(state, dtype=complex)
    n = M.dimension
    if v.shape != (n,):
        raise DimensionMismatch(f"state has shape {v.shape}, operator dimension {n}")
    out = np.zeros(n, dtype=complex)
    for o in range(-2, 3):
        band = M.bands[o + 2]
        if o >= 0:
            out[o:] += v[: n - o] * band[: n - o]
        else:
            out[: n + o] += v[-o:] * band[-o:]
    return out


def unitarity_defect(M: BandedUnitary) -> float:
    """Worst orthonormality violation among interior column pairs.

    The last two columns are clipped by the truncation and excluded.  Columns
    further than 4 apart have disjoint support, so only nearby pairs are
    formed.
    """
    n = M.dimension
    if n < 5:
        raise ValueError("defect needs dimension >= 5")
    # colband[c, t] = entry at (row c - 2 + t, column c)
    colband = np.zeros((n, 5), dtype=complex)
    for t in range(5):
        o = 2 - t
        if o >= 0:
            colband[o:, t] = M.bands[o + 2, : n - o]
        else:
            colband[: n + o, t] = M.bands[o + 2, -o:]
    worst = 0.0
    for d in range(5):
        overlap = np.zeros(n - d, dtype=complex)
        for t in range(d, 5):
            overlap += np.conj(colband[: n - d, t]) * colband[d:, t - d]
        interior = overlap[: n - 2 - d]
        if d == 0:
            interior = interior - 1.0
        if interior.size:
            worst = max(worst, float(np.max(np.abs(interior))))
    return worst


def spectral_moment(M: BandedUnitary, n: int) -> complex:
    """Entry (0, 0) of M^n, exact for the truncation by finite propagation."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if M.dimension < 2 * n + 3:
        raise DimensionTooSmall(
            f"moment {n} needs dimension >= {2 * n + 3}, have {M.dimension}"
        )
    v = np.zeros(M.dimension, dtype=complex)
    v[0] = 1.0
    for _ in range(n):
        v = apply_from_source(v, M)
    return complex(v[0])
