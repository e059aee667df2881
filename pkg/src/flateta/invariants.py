"""Exact eta invariants, harmonic-spinor dimensions, and integrality checks.

Eta values are exact rationals.  For odd k the closed form is a weighted
sum over the multiplicity table; for even k the invariant vanishes and the
closed form is never applied.  The checks in this module decide
integrality statements that floating point could not.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .combinatorics import Backend, MultiplicityTable, multiplicity_table
from .core import CyclicFlatManifold, SpinStructure, make_manifold


@dataclass(frozen=True)
class EtaResult:
    """Exact eta value together with the table it was computed from."""

    manifold: CyclicFlatManifold
    structure: SpinStructure
    value: Fraction
    table: MultiplicityTable


def eta(
    m: CyclicFlatManifold,
    structure: SpinStructure,
    backend: Backend = "auto",
) -> EtaResult:
    """Eta invariant of the Dirac operator for the given spin structure.

    For odd k the plus-structure sum runs over r = 1..n-1 (the r = 0
    eigenvalue classes are symmetric and cancel) with weights 1 - 2r/n,
    and the minus-structure sum runs over r = 0..n-1 with weights
    1 - (2r+1)/n.  For even k the invariant is 0 by the vanishing of the
    spectral asymmetry; the table is still attached.
    """
    table = multiplicity_table(m, structure, backend=backend)
    if m.k % 2 == 0:
        value = Fraction(0)
    elif structure is SpinStructure.PLUS:
        value = Fraction(
            sum(c * (m.n - 2 * r) for r, c in enumerate(table.counts) if r >= 1), m.n
        )
    else:
        value = Fraction(
            sum(c * (m.n - 2 * r - 1) for r, c in enumerate(table.counts)), m.n
        )
    return EtaResult(manifold=m, structure=structure, value=value, table=table)


def harmonic_dim(
    m: CyclicFlatManifold,
    structure: SpinStructure,
    backend: Backend = "auto",
) -> int:
    """Dimension of the space of harmonic spinors, by the doubled-count formula.

    For the plus structure this is the residue-zero entry of the
    multiplicity table; for the minus structure the kernel is trivial
    (the lift has n-th power -1, so no constant section is invariant).
    """
    if structure is SpinStructure.MINUS:
        return 0
    return multiplicity_table(m, SpinStructure.PLUS, backend=backend).counts[0]


class IntegralityVerdict(Enum):
    """Outcome of the prime-dimension integrality check."""

    NOT_APPLICABLE = "not_applicable"
    INTEGRAL = "integral"
    NON_INTEGRAL = "non_integral"


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def prime_integrality_check(
    m: CyclicFlatManifold,
    structure: SpinStructure,
    backend: Backend = "auto",
) -> IntegralityVerdict:
    """Test eta for integrality when n is prime, n > 3 and 4 divides n+1."""
    if not (_is_prime(m.n) and m.n > 3 and (m.n + 1) % 4 == 0):
        return IntegralityVerdict.NOT_APPLICABLE
    value = eta(m, structure, backend=backend).value
    return (
        IntegralityVerdict.INTEGRAL
        if value.denominator == 1
        else IntegralityVerdict.NON_INTEGRAL
    )


class ParityVerdict(Enum):
    """Outcome of the structure-difference parity check."""

    EVEN_DIFFERENCE = "even"
    VIOLATION = "violation"
    NOT_APPLICABLE = "not_applicable"


def eta_difference(m: CyclicFlatManifold, backend: Backend = "auto") -> Fraction:
    """Exact difference eta(plus) - eta(minus)."""
    return (
        eta(m, SpinStructure.PLUS, backend=backend).value
        - eta(m, SpinStructure.MINUS, backend=backend).value
    )


def parity_difference_check(
    m: CyclicFlatManifold, backend: Backend = "auto"
) -> ParityVerdict:
    """Test whether eta(plus) - eta(minus) is an even integer.

    For even k both invariants vanish, the difference is 0, and the check
    reports an even difference.
    """
    d = eta_difference(m, backend=backend)
    if d.denominator == 1 and d.numerator % 2 == 0:
        return ParityVerdict.EVEN_DIFFERENCE
    return ParityVerdict.VIOLATION


@dataclass(frozen=True)
class ThresholdRow:
    """One row of the harmonic-positivity report."""

    k: int
    n: int
    harmonic_plus: int
    is_positive: bool
    expected_positive: bool

    @property
    def consistent(self) -> bool:
        return self.is_positive == self.expected_positive


def positivity_threshold_report(
    k_max: int, backend: Backend = "auto"
) -> tuple[ThresholdRow, ...]:
    """Compare harmonic dimensions against the claimed threshold n >= 5.

    The claim "positive exactly when n >= 5" fails at k = 2 (n = 5), where
    direct enumeration finds no admissible sign vector: |mu| <= 3 < 5, so
    mu can never be congruent to n mod 2n.  The report surfaces the
    mismatch instead of asserting the threshold.
    """
    if k_max < 1:
        raise ValueError(f"k_max must be a positive integer, got {k_max}")
    rows = []
    for k in range(1, k_max + 1):
        m = make_manifold(k)
        h = harmonic_dim(m, SpinStructure.PLUS, backend=backend)
        rows.append(
            ThresholdRow(
                k=k,
                n=m.n,
                harmonic_plus=h,
                is_positive=h > 0,
                expected_positive=m.n >= 5,
            )
        )
    return tuple(rows)
