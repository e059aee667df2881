"""Catalog entries for sweeps, with lossless JSON/CSV/text rendering.

Exact rationals are serialized as integer pairs in JSON and as "num/den"
strings in CSV; floats never appear in the exact fields, so integrality
verdicts survive a round trip.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from fractions import Fraction

from . import oracle
from .core import SpinStructure, make_manifold
from .invariants import (
    ThresholdRow,
    eta,
    harmonic_dim,
    parity_difference_check,
    prime_integrality_check,
)
from .verification import oracle_agreement_verdict


@dataclass(frozen=True)
class CatalogEntry:
    """One (k, structure) row of a sweep."""

    n: int
    k: int
    structure: str
    multiplicities: tuple[int, ...]
    eta: Fraction
    harmonic_dim: int
    checks: dict[str, str] = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "structure": self.structure,
            "multiplicities": list(self.multiplicities),
            "eta": {"numerator": self.eta.numerator, "denominator": self.eta.denominator},
            "harmonic_dim": self.harmonic_dim,
            "checks": dict(self.checks),
        }

    @classmethod
    def from_dict(cls, data: dict) -> CatalogEntry:
        return cls(
            n=data["n"],
            k=data["k"],
            structure=data["structure"],
            multiplicities=tuple(data["multiplicities"]),
            eta=Fraction(data["eta"]["numerator"], data["eta"]["denominator"]),
            harmonic_dim=data["harmonic_dim"],
            checks=dict(data["checks"]),
        )


def _threshold_verdict(row: ThresholdRow) -> str:
    return "consistent" if row.consistent else "inconsistent"


def build_catalog_entry(
    k: int, structure: SpinStructure, with_oracle: bool = False
) -> CatalogEntry:
    """Compute one catalog row; oracle checks only when requested and feasible."""
    m = make_manifold(k)
    result = eta(m, structure)
    h = harmonic_dim(m, structure)
    row = ThresholdRow(
        k=k,
        n=m.n,
        harmonic_plus=harmonic_dim(m, SpinStructure.PLUS),
        is_positive=harmonic_dim(m, SpinStructure.PLUS) > 0,
        expected_positive=m.n >= 5,
    )
    checks = {
        "prime_integrality": prime_integrality_check(m, structure).value,
        "parity_difference": parity_difference_check(m).value,
        "positivity_threshold": _threshold_verdict(row),
    }
    if with_oracle and k <= oracle.MAX_K:
        checks["oracle_agreement"] = oracle_agreement_verdict(m.n)
    return CatalogEntry(
        n=m.n,
        k=k,
        structure=structure.value,
        multiplicities=result.table.counts,
        eta=result.value,
        harmonic_dim=h,
        checks=checks,
    )


def sweep_entries(
    k_min: int, k_max: int, with_oracle: bool = False
) -> list[CatalogEntry]:
    """Catalog rows for k = k_min..k_max, both structures, deterministic order."""
    if not 1 <= k_min <= k_max <= 25:
        raise ValueError(f"need 1 <= k_min <= k_max <= 25, got {k_min}..{k_max}")
    entries = []
    for k in range(k_min, k_max + 1):
        for structure in (SpinStructure.PLUS, SpinStructure.MINUS):
            entries.append(build_catalog_entry(k, structure, with_oracle=with_oracle))
    return entries


def entries_to_json(entries: list[CatalogEntry]) -> str:
    return json.dumps([e.to_dict() for e in entries], indent=2)


def entries_from_json(text: str) -> list[CatalogEntry]:
    return [CatalogEntry.from_dict(item) for item in json.loads(text)]


def entries_to_csv(entries: list[CatalogEntry]) -> str:
    """CSV with A-columns padded to the largest n in the sweep."""
    max_n = max(e.n for e in entries) if entries else 0
    check_keys = ["prime_integrality", "parity_difference", "positivity_threshold"]
    if any("oracle_agreement" in e.checks for e in entries):
        check_keys.append("oracle_agreement")
    header = (
        ["n", "k", "structure", "eta", "harmonic_dim"]
        + [f"A{r}" for r in range(max_n)]
        + check_keys
    )
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    for e in entries:
        mult = [str(c) for c in e.multiplicities]
        mult += [""] * (max_n - len(mult))
        writer.writerow(
            [e.n, e.k, e.structure, f"{e.eta.numerator}/{e.eta.denominator}", e.harmonic_dim]
            + mult
            + [e.checks.get(key, "") for key in check_keys]
        )
    return buf.getvalue()


def entries_to_text(entries: list[CatalogEntry]) -> str:
    lines = [f"{'n':>3} {'k':>3} {'structure':<9} {'eta':>10} {'harmonic':>8}  checks"]
    for e in entries:
        eta_str = (
            str(e.eta.numerator)
            if e.eta.denominator == 1
            else f"{e.eta.numerator}/{e.eta.denominator}"
        )
        checks = " ".join(f"{key}={val}" for key, val in e.checks.items())
        lines.append(
            f"{e.n:>3} {e.k:>3} {e.structure:<9} {eta_str:>10} {e.harmonic_dim:>8}  {checks}"
        )
    return "\n".join(lines) + "\n"
