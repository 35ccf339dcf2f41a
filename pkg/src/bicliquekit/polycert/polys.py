"""Multilinear polynomials in x_1..x_d, y_1..y_d with exact integer coefficients.

Monomials are pairs of bitmasks (bit ``j-1`` stands for index ``j``). Products
clamp exponents as they go (``x_j * x_j -> x_j``), which is exact on the 0/1
cube and keeps every intermediate multilinear.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, NamedTuple, Optional, Sequence

import numpy as np

from ..core import BicliqueError, KSet, SignaturePair, _mask
from ..kernels.evaluate import INT64_SAFE, evaluate_many


class Monomial(NamedTuple):
    xs: int
    ys: int

    @property
    def degree(self) -> int:
        return self.xs.bit_count() + self.ys.bit_count()

    @property
    def mixed(self) -> bool:
        return bool(self.xs & self.ys)

    def variables(self, d: int) -> tuple[int, ...]:
        """Variable indices under the order x_1 < ... < x_d < y_1 < ... < y_d."""
        return tuple(j for j in range(d) if self.xs >> j & 1) + tuple(d + j for j in range(d) if self.ys >> j & 1)

    def __str__(self):
        parts = [f"x{j + 1}" for j in range(self.xs.bit_length()) if self.xs >> j & 1]
        parts += [f"y{j + 1}" for j in range(self.ys.bit_length()) if self.ys >> j & 1]
        return "*".join(parts) or "1"


ONE = Monomial(0, 0)


class MultilinearPoly:
    __slots__ = ("d", "terms")

    def __init__(self, d: int, terms: Optional[dict] = None):
        self.d = d
        self.terms: dict[Monomial, int] = {}
        limit = (1 << d) - 1
        for mono, c in (terms or {}).items():
            mono = Monomial(*mono)
            if (mono.xs | mono.ys) & ~limit:
                raise BicliqueError(f"monomial {mono} uses an index above d={d}")
            if c:
                self.terms[mono] = self.terms.get(mono, 0) + c
                if not self.terms[mono]:
                    del self.terms[mono]

    @classmethod
    def constant(cls, d: int, c: int) -> "MultilinearPoly":
        return cls(d, {ONE: c})

    @classmethod
    def monomial(cls, d: int, xs: Iterable[int] = (), ys: Iterable[int] = (), coeff: int = 1) -> "MultilinearPoly":
        return cls(d, {Monomial(_mask(xs), _mask(ys)): coeff})

    @classmethod
    def linear(cls, d: int, xs: Iterable[int], ys: Iterable[int], const: int = 0) -> "MultilinearPoly":
        terms = {Monomial(1 << (j - 1), 0): 1 for j in xs}
        terms.update({Monomial(0, 1 << (j - 1)): 1 for j in ys})
        if const:
            terms[ONE] = const
        return cls(d, terms)

    def __add__(self, other: "MultilinearPoly") -> "MultilinearPoly":
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0) + c
        return MultilinearPoly(max(self.d, other.d), {m: c for m, c in out.items() if c})

    def __neg__(self):
        return MultilinearPoly(self.d, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return MultilinearPoly(self.d, {m: c * other for m, c in self.terms.items()})
        out: dict[Monomial, int] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = Monomial(m1.xs | m2.xs, m1.ys | m2.ys)
                out[m] = out.get(m, 0) + c1 * c2
        return MultilinearPoly(max(self.d, other.d), {m: c for m, c in out.items() if c})

    __rmul__ = __mul__

    def __eq__(self, other):
        return isinstance(other, MultilinearPoly) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    @property
    def degree(self) -> int:
        return max((m.degree for m in self.terms), default=0)

    def is_mixed_free(self) -> bool:
        return not any(m.mixed for m in self.terms)

    def coefficient(self, xs: Iterable[int] = (), ys: Iterable[int] = ()) -> int:
        return self.terms.get(Monomial(_mask(xs), _mask(ys)), 0)

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for m in sorted(self.terms, key=lambda m: (m.degree, m.variables(self.d))):
            c = self.terms[m]
            parts.append(f"{c}" if m == ONE else f"{c}*{m}")
        return " + ".join(parts)


@dataclass(frozen=True)
class EvaluationPoint:
    x: tuple[int, ...]
    y: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "x", tuple(int(v) for v in self.x))
        object.__setattr__(self, "y", tuple(int(v) for v in self.y))
        if len(self.x) != len(self.y):
            raise BicliqueError(f"x and y widths differ: {len(self.x)} vs {len(self.y)}")
        if any(v not in (0, 1) for v in self.x + self.y):
            raise BicliqueError("evaluation points must be 0/1 vectors")

    @classmethod
    def of_sets(cls, d: int, x_set: Iterable[int], y_set: Iterable[int]) -> "EvaluationPoint":
        """The point (v_X, v_Y) of characteristic vectors."""
        xs, ys = set(x_set), set(y_set)
        return cls(tuple(int(j in xs) for j in range(1, d + 1)), tuple(int(j in ys) for j in range(1, d + 1)))

    @property
    def d(self) -> int:
        return len(self.x)

    @property
    def masks(self) -> tuple[int, int]:
        return (
            sum(1 << j for j, v in enumerate(self.x) if v),
            sum(1 << j for j, v in enumerate(self.y) if v),
        )


def evaluate(poly: MultilinearPoly, at: EvaluationPoint) -> int:
    if at.d != poly.d:
        raise BicliqueError(f"point width {at.d} does not match polynomial d={poly.d}")
    px, py = at.masks
    return sum(c for m, c in poly.terms.items() if m.xs & px == m.xs and m.ys & py == m.ys)


def evaluate_table(polys: Sequence[MultilinearPoly], points: Sequence[tuple[int, int]], backend=None) -> np.ndarray:
    """Values of every polynomial at every point given as ``(xmask, ymask)``.

    Falls back to Python integers (object array) when int64 could overflow.
    """
    xm, ym, coeff, offsets = [], [], [], [0]
    big = False
    for p in polys:
        total = sum(abs(c) for c in p.terms.values())
        if total >= INT64_SAFE or p.d > 64:
            big = True
        for m, c in p.terms.items():
            xm.append(m.xs)
            ym.append(m.ys)
            coeff.append(c)
        offsets.append(len(xm))
    if big:
        out = np.empty((len(polys), len(points)), dtype=object)
        for i, p in enumerate(polys):
            for q, (px, py) in enumerate(points):
                out[i, q] = sum(c for m, c in p.terms.items() if m.xs & px == m.xs and m.ys & py == m.ys)
        return out
    px = np.array([p[0] for p in points], dtype=np.uint64)
    py = np.array([p[1] for p in points], dtype=np.uint64)
    return evaluate_many(
        np.array(xm, dtype=np.uint64),
        np.array(ym, dtype=np.uint64),
        np.array(coeff, dtype=np.int64),
        np.array(offsets, dtype=np.int64),
        px,
        py,
        backend=backend,
    )


# -- the proof polynomials --------------------------------------------------------


def poly_P(pair: SignaturePair, k_set: KSet, d: Optional[int] = None) -> MultilinearPoly:
    """prod_{l in K} (v_A . x + v_B . y - l), expanded and reduced."""
    if d is None:
        d = max(1, pair.max_element())
    if pair.max_element() > d:
        raise BicliqueError(f"signature {pair} does not fit in d={d}")
    poly = MultilinearPoly.constant(d, 1)
    for l in k_set:
        poly = poly * MultilinearPoly.linear(d, pair.a, pair.b, -l)
    return poly


def poly_Q(m_set: Iterable[int], n_set: Iterable[int], d: int) -> MultilinearPoly:
    """prod_{i in M} x_i prod_{i in N} y_i."""
    m_set, n_set = frozenset(m_set), frozenset(n_set)
    if m_set & n_set:
        raise BicliqueError(f"M and N overlap in {sorted(m_set & n_set)}")
    return MultilinearPoly.monomial(d, m_set, n_set)


def check_script_b_member(i: int, i_set, j_set, d: int, k: Optional[int] = None):
    """Raise naming the first failed membership clause of (I, J) in B_i."""
    i_set, j_set = frozenset(i_set), frozenset(j_set)
    top = d - i + 1
    union = i_set | j_set
    if not (1 <= i <= d - 1):
        raise BicliqueError(f"block index i={i} outside 1..{d - 1}")
    if any(not (1 <= e <= top) for e in union):
        raise BicliqueError(f"I, J must be subsets of [{top}] (clause I,J ⊆ [d-i+1])")
    if i_set & j_set:
        raise BicliqueError("I and J must be disjoint (clause I ∩ J = ∅)")
    if top not in union:
        raise BicliqueError(f"{top} must lie in I ∪ J (clause d-i+1 ∈ I ∪ J)")
    if len(union) == top:
        raise BicliqueError(f"|I ∪ J| must differ from {top} (clause |I ∪ J| ≠ d-i+1)")
    if k is not None and len(union) > k - 1:
        raise BicliqueError(f"|I ∪ J| = {len(union)} exceeds k-1 = {k - 1} (clause |I ∪ J| ≤ k-1)")


def poly_R(i: int, i_set, j_set, d: int, k: Optional[int] = None) -> MultilinearPoly:
    """x_I y_J (sum_{j not in J, j <= d-i} x_j + sum_{j not in I, j <= d-i} y_j - (d-i))."""
    check_script_b_member(i, i_set, j_set, d, k)
    i_set, j_set = frozenset(i_set), frozenset(j_set)
    low = range(1, d - i + 1)
    form = MultilinearPoly.linear(d, [j for j in low if j not in j_set], [j for j in low if j not in i_set], -(d - i))
    return MultilinearPoly.monomial(d, i_set, j_set) * form


# -- factored (unexpanded) evaluation, used as an independent check ----------------


def _dot(mask_a: int, point_mask: int) -> int:
    return (mask_a & point_mask).bit_count()


def P_factored(pair: SignaturePair, k_set: KSet, px: int, py: int) -> int:
    a, b = pair.masks
    s = _dot(a, px) + _dot(b, py)
    out = 1
    for l in k_set:
        out *= s - l
    return out


def Q_factored(m_set, n_set, px: int, py: int) -> int:
    m, n = _mask(m_set), _mask(n_set)
    return int(px & m == m and py & n == n)


def R_factored(i: int, i_set, j_set, d: int, px: int, py: int) -> int:
    im, jm = _mask(i_set), _mask(j_set)
    if px & im != im or py & jm != jm:
        return 0
    low = (1 << (d - i)) - 1
    return _dot(px, low & ~jm) + _dot(py, low & ~im) - (d - i)


# -- index sets and the monomial basis ---------------------------------------------


def _pair_key(pair):
    m_set, n_set = pair
    return (len(m_set) + len(n_set), len(n_set), sorted(m_set), sorted(n_set))


def _signed_splits(elements: Sequence[int], forced, forced_side: Optional[str] = None):
    """All (M, N) with M ∪ N = elements ∪ {forced}, M ∩ N = ∅.

    ``forced_side`` pins ``forced`` to ``"N"``; otherwise it may go either way.
    """
    elements = list(elements)
    whole = frozenset(elements)
    for mask in range(1 << len(elements)):
        m = frozenset(e for t, e in enumerate(elements) if mask >> t & 1) if mask else frozenset()
        n = whole - m
        if forced_side == "N":
            yield m, n | {forced}
        else:
            yield m | {forced}, n
            yield m, n | {forced}


def enumerate_script_A(d: int, k: int) -> list[tuple[frozenset, frozenset]]:
    """{(M, N): M ∩ N = ∅, d ∈ N, |M ∪ N| <= k}, canonically ordered."""
    if not (1 <= k <= d):
        raise BicliqueError(f"need 1 <= k <= d, got d={d}, k={k}")
    out = []
    for size in range(k):
        for rest in combinations(range(1, d), size):
            out.extend(_signed_splits(rest, d, "N"))
    return sorted(out, key=_pair_key)


def enumerate_script_A_k(d: int, k: int) -> list[tuple[frozenset, frozenset]]:
    """The top layer |M ∪ N| = k of script A."""
    if not (1 <= k <= d):
        raise BicliqueError(f"need 1 <= k <= d, got d={d}, k={k}")
    out = []
    for rest in combinations(range(1, d), k - 1):
        out.extend(_signed_splits(rest, d, "N"))
    return sorted(out, key=_pair_key)


def enumerate_script_B_block(d: int, k: int, i: int) -> list[tuple[frozenset, frozenset]]:
    top = d - i + 1
    out = []
    for size in range(0, min(k - 1, top - 1)):
        for rest in combinations(range(1, top), size):
            out.extend(_signed_splits(rest, top))
    return sorted(out, key=_pair_key)


def enumerate_script_B(d: int, k: int) -> list[tuple[int, frozenset, frozenset]]:
    """Triples (i, I, J) over all blocks 1 <= i <= d-1, block by block."""
    if not (1 <= k <= d):
        raise BicliqueError(f"need 1 <= k <= d, got d={d}, k={k}")
    return [(i, I, J) for i in range(1, d) for I, J in enumerate_script_B_block(d, k, i)]


def monomial_basis(d: int, k: int) -> list[Monomial]:
    """Mixed-free multilinear monomials of degree <= k, graded then lexicographic
    in the variable order x_1 < ... < x_d < y_1 < ... < y_d."""
    if not (0 <= k <= d):
        raise BicliqueError(f"need 0 <= k <= d, got d={d}, k={k}")
    out = []

    def extend(start, left, xs, ys):
        # variables in increasing index order, skipping y_j once x_j is taken
        if left == 0:
            out.append(Monomial(xs, ys))
            return
        for v in range(start, 2 * d - left + 1):
            if v < d:
                extend(v + 1, left - 1, xs | 1 << v, ys)
            elif not xs >> (v - d) & 1:
                extend(v + 1, left - 1, xs, ys | 1 << (v - d))

    for deg in range(k + 1):
        extend(0, deg, 0, 0)
    return out
