"""Sign-vector combinatorics and eigenvalue-multiplicity tables.

A sign vector is a point of {-1, +1}^k.  Its weight mu is the sum of
j * sign_j, its parity nu is the product of the signs, and the shifted
half-weight residue mod n drives every multiplicity in the package.

The multiplicity table is a filtered scan of all 2**k bit patterns.  Three
interchangeable backends implement the scan: a compiled kernel (selected
at import when available), a vectorized numpy twin, and the literal
per-vector definition used for cross-checks.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Literal

import numpy as np

from .core import CyclicFlatManifold, SpinStructure

try:
    from ._countkern import dplus_residue_counts as _native_counts
except ImportError:  # pragma: no cover - depends on the build environment
    _native_counts = None

#: Which scan kernel import selected: "native" (compiled) or "numpy".
KERNEL_BACKEND = "native" if _native_counts is not None else "numpy"

Backend = Literal["auto", "native", "numpy", "python"]

_NUMPY_CHUNK = 1 << 22


@dataclass(frozen=True)
class SignVector:
    """A vector in {-1, +1}^k packed as a bit pattern.

    Bit j-1 set means entry j is +1; clear means -1.
    """

    bits: int
    k: int

    def __post_init__(self) -> None:
        if self.k < 1:
            raise ValueError(f"k must be a positive integer, got {self.k}")
        if not 0 <= self.bits < (1 << self.k):
            raise ValueError(f"bits must lie in [0, 2^{self.k}), got {self.bits}")

    @property
    def signs(self) -> tuple[int, ...]:
        return tuple(1 if (self.bits >> j) & 1 else -1 for j in range(self.k))

    def negated(self) -> SignVector:
        return SignVector(self.bits ^ ((1 << self.k) - 1), self.k)

    def __str__(self) -> str:
        return "(" + ",".join(str(s) for s in self.signs) + ")"


def sign_vector(signs: tuple[int, ...] | list[int]) -> SignVector:
    """Pack an explicit (+1/-1) tuple into a SignVector."""
    if not signs or any(s not in (-1, 1) for s in signs):
        raise ValueError("signs must be a non-empty sequence over {-1, +1}")
    bits = sum(1 << j for j, s in enumerate(signs) if s == 1)
    return SignVector(bits, len(signs))


def mu(eps: SignVector) -> int:
    """Weighted sum of the entries: sum of sign_j * j for j = 1..k."""
    total = 0
    for j in range(eps.k):
        total += (j + 1) if (eps.bits >> j) & 1 else -(j + 1)
    return total


def nu(eps: SignVector) -> int:
    """Product of the entries: +1 iff the number of -1 entries is even."""
    minus_count = eps.k - int(eps.bits).bit_count()
    return 1 if minus_count % 2 == 0 else -1


def enumerate_dplus(k: int) -> Iterator[SignVector]:
    """Yield the 2**(k-1) sign vectors with nu = +1, in ascending bit order."""
    if k < 1:
        raise ValueError(f"k must be a positive integer, got {k}")
    kpar = k & 1
    for bits in range(1 << k):
        if bits.bit_count() & 1 == kpar:
            yield SignVector(bits, k)


def residue_shift(m: CyclicFlatManifold, structure: SpinStructure) -> int:
    """Additive residue shift of the spin structure: 0 for plus, k for minus."""
    return 0 if structure is SpinStructure.PLUS else m.k


def half_mu(eps: SignVector, m: CyclicFlatManifold) -> int:
    """The integer (mu + delta*n) / 2; the division is always exact."""
    total = mu(eps) + m.delta * m.n
    assert total % 2 == 0, "mu + delta*n must be even"
    return total // 2


def residue(eps: SignVector, m: CyclicFlatManifold, structure: SpinStructure) -> int:
    """Shifted half-weight residue in [0, n)."""
    if eps.k != m.k:
        raise ValueError(f"sign vector length {eps.k} does not match k = {m.k}")
    return (half_mu(eps, m) + residue_shift(m, structure)) % m.n


@dataclass(frozen=True)
class MultiplicityTable:
    """Doubled residue counts (A_0, ..., A_{n-1}) for one spin structure."""

    n: int
    structure: SpinStructure
    counts: tuple[int, ...]

    def total(self) -> int:
        return sum(self.counts)


def _weight_offset(m: CyclicFlatManifold) -> int:
    # half_mu(eps) = w(eps) + offset, where w is the sum of j over +1 slots
    return (m.delta * m.n - m.k * (m.k + 1) // 2) // 2


def _counts_numpy(k: int, n: int, offset: int) -> list[int]:
    """Vectorized twin of the compiled kernel, chunked to bound memory."""
    counts = np.zeros(n, dtype=np.int64)
    total = 1 << k
    kpar = k & 1
    for lo in range(0, total, _NUMPY_CHUNK):
        block = np.arange(lo, min(lo + _NUMPY_CHUNK, total), dtype=np.uint64)
        keep = (np.bitwise_count(block).astype(np.int64) & 1) == kpar
        block = block[keep]
        weight = np.zeros(block.shape, dtype=np.int64)
        for j in range(k):
            weight += ((block >> np.uint64(j)) & np.uint64(1)).astype(np.int64) * (j + 1)
        counts += np.bincount((weight + offset) % n, minlength=n)
    return [int(c) for c in counts]


def residue_histogram(k: int, n: int, offset: int, backend: Backend = "auto") -> list[int]:
    """Counts of (w + offset) mod n over positive-parity patterns (not doubled)."""
    if backend == "auto":
        backend = "native" if _native_counts is not None else "numpy"
    if backend == "native":
        if _native_counts is None:
            raise RuntimeError("compiled kernel is not available in this build")
        return _native_counts(k, n, offset)
    if backend == "numpy":
        return _counts_numpy(k, n, offset)
    if backend == "python":
        counts = [0] * n
        for eps in enumerate_dplus(k):
            w = sum(j + 1 for j in range(k) if (eps.bits >> j) & 1)
            counts[(w + offset) % n] += 1
        return counts
    raise ValueError(f"unknown backend {backend!r}")


def multiplicity_table(
    m: CyclicFlatManifold,
    structure: SpinStructure,
    backend: Backend = "auto",
) -> MultiplicityTable:
    """Doubled counts of positive-parity sign vectors per residue class.

    The "python" backend goes through :func:`residue` vector by vector and
    serves as the definitional cross-check for the scan kernels.
    """
    if backend == "python":
        counts = [0] * m.n
        for eps in enumerate_dplus(m.k):
            counts[residue(eps, m, structure)] += 2
    else:
        base = residue_histogram(m.k, m.n, _weight_offset(m), backend=backend)
        shift = residue_shift(m, structure)
        counts = [2 * base[(r - shift) % m.n] for r in range(m.n)]
    return MultiplicityTable(n=m.n, structure=structure, counts=tuple(counts))
