"""Closed-form bounds and counting formulas, exact over Python integers."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, prod
from typing import Optional

from .core import BicliqueError, KSet


def _check_range(d: int, k: int):
    if not (1 <= k <= d):
        raise BicliqueError(f"need 1 <= k <= d, got d={d}, k={k}")


def alon_upper(d: int, k: int) -> int:
    """sum_{i=0}^{k} 2^i C(d, i)."""
    _check_range(d, k)
    return sum(2**i * comb(d, i) for i in range(k + 1))


def koli_upper(d: int, k: int) -> int:
    """2^k C(d, k) + sum_{i=1}^{k-1} 2^i C(d-1, i-1)."""
    _check_range(d, k)
    return 2**k * comb(d, k) + sum(2**i * comb(d - 1, i - 1) for i in range(1, k))


def regular_upper(d: int, k: int) -> tuple[int, int]:
    """Upper bound on n_r(K, d), as (statement form, proof-end form).

    The two are computed independently; they coincide by Pascal's rule.
    """
    _check_range(d, k)
    statement = 2 ** (k - 1) * comb(d, k) + 2 ** (k - 1) * comb(d - 1, k) + 2**k - 1
    proof = 2**k * comb(d, k) - 2 ** (k - 1) * comb(d - 1, k - 1) + 2**k - 1
    return statement, proof


def lower_bounds(d: int, k: int) -> tuple[Fraction, int]:
    """((d/k)^k exactly, prod_{i<k} (floor((d+i)/k) + 1))."""
    _check_range(d, k)
    return Fraction(d, k) ** k, prod((d + i) // k + 1 for i in range(k))


def monomial_dim(d: int, k: int) -> int:
    """Number of mixed-free multilinear monomials in x_1..x_d, y_1..y_d of degree <= k."""
    if not (0 <= k <= d):
        raise BicliqueError(f"need 0 <= k <= d, got d={d}, k={k}")
    return sum(2**i * comb(d, i) for i in range(k + 1))


def script_a_count(d: int, k: int) -> int:
    _check_range(d, k)
    return sum(2**i * comb(d - 1, i) for i in range(k))


def script_a_k_count(d: int, k: int) -> int:
    _check_range(d, k)
    return 2 ** (k - 1) * comb(d - 1, k - 1)


def script_b_count(d: int, k: int) -> int:
    """Closed form sum_{j=1}^{k-1} 2^j C(d, j) - 2^k + 2."""
    _check_range(d, k)
    return sum(2**j * comb(d, j) for j in range(1, k)) - 2**k + 2


def script_b_block_count(d: int, k: int, i: int) -> int:
    """|B_i| via the two-branch per-block formula, 1 <= i <= d-1."""
    _check_range(d, k)
    if not (1 <= i <= d - 1):
        raise BicliqueError(f"block index must satisfy 1 <= i <= d-1, got i={i}, d={d}")
    top = k - 2 if i <= d - k + 1 else d - i - 1
    return sum(2 ** (j + 1) * comb(d - i, j) for j in range(top + 1))


def counting_formulas(d: int, k: int) -> tuple[int, int, int, int]:
    """(monomial_dim, script_a_count, script_a_k_count, script_b_count)."""
    _check_range(d, k)
    return monomial_dim(d, k), script_a_count(d, k), script_a_k_count(d, k), script_b_count(d, k)


def hockey_stick_holds(m: int, n: int) -> bool:
    return sum(comb(m + i, m) for i in range(n + 1)) == comb(m + n + 1, m + 1)


@dataclass(frozen=True)
class BoundReport:
    d: int
    k: int
    k_set: Optional[KSet]
    ratio_lower: Fraction
    product_lower: int
    alon_upper: int
    koli_upper: int
    regular_upper: int
    regular_upper_proof_form: int
    monomial_dim: int
    script_a_count: int
    script_a_k_count: int
    script_b_count: int

    def as_dict(self) -> dict:
        return {
            "d": self.d,
            "k": self.k,
            "k_set": list(self.k_set.elements) if self.k_set else None,
            "ratio_lower": str(self.ratio_lower),
            "product_lower": self.product_lower,
            "alon_upper": self.alon_upper,
            "koli_upper": self.koli_upper,
            "regular_upper": self.regular_upper,
            "regular_upper_proof_form": self.regular_upper_proof_form,
            "monomial_dim": self.monomial_dim,
            "script_a_count": self.script_a_count,
            "script_a_k_count": self.script_a_k_count,
            "script_b_count": self.script_b_count,
        }


def bound_report(d: int, k: Optional[int] = None, k_set: Optional[KSet] = None) -> BoundReport:
    """All bounds for ``(d, k)``; with a KSet, ``k`` is taken as ``|K|``."""
    if k_set is not None:
        if k is not None and k != k_set.k:
            raise BicliqueError(f"k={k} disagrees with |K|={k_set.k}")
        k = k_set.k
    if k is None:
        raise BicliqueError("bound_report needs k or k_set")
    ratio, prod_lower = lower_bounds(d, k)
    reg, reg_proof = regular_upper(d, k)
    dim, a, ak, b = counting_formulas(d, k)
    return BoundReport(
        d=d,
        k=k,
        k_set=k_set,
        ratio_lower=ratio,
        product_lower=prod_lower,
        alon_upper=alon_upper(d, k),
        koli_upper=koli_upper(d, k),
        regular_upper=reg,
        regular_upper_proof_form=reg_proof,
        monomial_dim=dim,
        script_a_count=a,
        script_a_k_count=ak,
        script_b_count=b,
    )
