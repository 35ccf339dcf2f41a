"""Rank certificates for the polynomial families behind the upper bounds.

A family is written over the mixed-free monomial basis of degree <= k and
its rank computed mod a fixed 62-bit prime. Full rank there proves
independence over Q; any deficiency is resolved by exact elimination.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import prod
from typing import Optional, Sequence

from .. import bounds
from ..core import BicliqueError, Cover, KSet, SignaturePair, is_regular, signatures_of_cover, verify_type
from ..kernels.modrank import PRIME, rank_mod_p, to_residues
from .linalg import bareiss_rank
from .polys import (
    MultilinearPoly,
    enumerate_script_A,
    enumerate_script_A_k,
    enumerate_script_B,
    evaluate_table,
    monomial_basis,
    poly_P,
    poly_Q,
    poly_R,
)


@dataclass
class RankCertificate:
    family_size: int
    ambient_dim: int
    rank: int
    method: str
    primes: tuple[int, ...] = ()
    kind: str = "family"
    expected_rank: Optional[int] = None
    checks: dict[str, bool] = field(default_factory=dict)

    def __post_init__(self):
        if self.rank > min(self.family_size, self.ambient_dim):
            raise AssertionError(f"rank {self.rank} exceeds min(family, ambient)")

    @property
    def independent(self) -> bool:
        return self.rank == self.family_size

    @property
    def ok(self) -> bool:
        expected = self.family_size if self.expected_rank is None else self.expected_rank
        return self.rank == expected and all(self.checks.values())

    def as_dict(self) -> dict:
        return {
            "kind": self.kind,
            "family_size": self.family_size,
            "ambient_dim": self.ambient_dim,
            "rank": self.rank,
            "expected_rank": self.expected_rank,
            "independent": self.independent,
            "method": self.method,
            "primes": [str(p) for p in self.primes],
            "checks": dict(sorted(self.checks.items())),
            "ok": self.ok,
        }


def coefficient_matrix(polys: Sequence[MultilinearPoly], d: int, k: int) -> list[list[int]]:
    basis = monomial_basis(d, k)
    index = {m: c for c, m in enumerate(basis)}
    rows = []
    for r, p in enumerate(polys):
        row = [0] * len(basis)
        for m, c in p.terms.items():
            col = index.get(m)
            if col is None:
                why = "a mixed monomial" if m.mixed else f"degree {m.degree} > {k}"
                raise BicliqueError(f"polynomial {r} has term {m} outside the basis ({why})")
            row[col] = c
        rows.append(row)
    return rows


def rank_exact(
    polys: Sequence[MultilinearPoly], d: int, k: int, method: str = "auto", backend: Optional[str] = None
) -> RankCertificate:
    """Rank of ``polys`` in the span of ``monomial_basis(d, k)``.

    ``method``: ``"auto"`` (modular, exact on deficiency), ``"modular"`` or
    ``"exact"``.
    """
    if method not in ("auto", "modular", "exact"):
        raise BicliqueError(f"unknown rank method {method!r}")
    rows = coefficient_matrix(polys, d, k)
    dim = bounds.monomial_dim(d, k)
    if not rows:
        return RankCertificate(0, dim, 0, "exact-fraction-free")
    if method in ("auto", "modular"):
        r = rank_mod_p(to_residues(rows), backend=backend)
        if r == len(rows) or method == "modular":
            return RankCertificate(len(rows), dim, r, "modular", (PRIME,))
    return RankCertificate(len(rows), dim, bareiss_rank(rows), "exact-fraction-free")


def _refuse_unless_typed(cover: Cover, k_set: KSet):
    if cover.host.kind != "complete":
        raise BicliqueError("certification needs a cover of a complete graph")
    report = verify_type(cover, k_set)
    if not report.ok:
        shown = ", ".join(f"{e}:{c}" for e, c in report.violations[:5])
        raise BicliqueError(f"cover is not of type {k_set}: {len(report.violations)} violating edges ({shown})")
    if k_set.k > cover.d:
        raise BicliqueError(f"|K| = {k_set.k} exceeds cover size d = {cover.d}")


def _signature_points(sigs: Sequence[SignaturePair]) -> list[tuple[int, int]]:
    """The points (v_B, v_A) for each signature, as masks."""
    return [(p.masks[1], p.masks[0]) for p in sigs]


def relation_one_holds(p_polys, sigs, k_set: KSet, backend=None) -> bool:
    """P_i(v_Bi, v_Ai) = prod(-l) and P_i(v_Bj, v_Aj) = 0 for i != j."""
    table = evaluate_table(p_polys, _signature_points(sigs), backend=backend)
    diag = prod(-l for l in k_set)
    n = len(sigs)
    return all(table[i, j] == (diag if i == j else 0) for i in range(n) for j in range(n))


def certify_koli(cover: Cover, k_set: KSet, method: str = "auto", backend=None) -> RankCertificate:
    """Certify that {P_i} ∪ {Q_(M,N) : (M,N) in A} is independent for this cover."""
    _refuse_unless_typed(cover, k_set)
    d, k = cover.d, k_set.k
    sigs = signatures_of_cover(cover)
    p_polys = [poly_P(s, k_set, d) for s in sigs]
    q_polys = [poly_Q(m, n, d) for m, n in enumerate_script_A(d, k)]
    cert = rank_exact(p_polys + q_polys, d, k, method=method, backend=backend)
    cert.kind = "koli"
    cert.expected_rank = len(sigs) + bounds.script_a_count(d, k)
    cert.checks["relation_one"] = relation_one_holds(p_polys, sigs, k_set, backend=backend)
    cert.checks["family_count"] = len(q_polys) == bounds.script_a_count(d, k)
    return cert


def certify_regular(cover: Cover, k_set: KSet, method: str = "auto", backend=None) -> RankCertificate:
    """Certify {P_i} ∪ {Q_(M,N) : A_k} ∪ {R^i_(I,J) : B} is independent for a regular cover."""
    _refuse_unless_typed(cover, k_set)
    if not is_regular(cover):
        raise BicliqueError("certify_regular needs a regular cover (every biclique spans all vertices)")
    d, k = cover.d, k_set.k
    sigs = signatures_of_cover(cover)
    p_polys = [poly_P(s, k_set, d) for s in sigs]
    q_polys = [poly_Q(m, n, d) for m, n in enumerate_script_A_k(d, k)]
    r_polys = [poly_R(i, I, J, d, k) for i, I, J in enumerate_script_B(d, k)]
    cert = rank_exact(p_polys + q_polys + r_polys, d, k, method=method, backend=backend)
    cert.kind = "regular"
    cert.expected_rank = len(sigs) + bounds.script_a_k_count(d, k) + bounds.script_b_count(d, k)

    points = _signature_points(sigs)
    cert.checks["relation_one"] = relation_one_holds(p_polys, sigs, k_set, backend=backend)
    cert.checks["r_vanish_on_signatures"] = (
        not r_polys or not evaluate_table(r_polys, points, backend=backend).any()
    )
    top = 1 << (d - 1)
    shifted = [(bm, am & ~top) for am, bm in (s.masks for s in sigs) if am & top]
    unshifted = [(bm, am) for am, bm in (s.masks for s in sigs) if am & top]
    free_of_yd = [p for p, s in zip(p_polys, sigs) if not s.masks[1] & top]
    if shifted and free_of_yd:
        cert.checks["shift_invariance"] = bool(
            (evaluate_table(free_of_yd, shifted, backend=backend) == evaluate_table(free_of_yd, unshifted, backend=backend)).all()
        )
    return cert


def certify_lemma_b(d: int, k: int, method: str = "auto", backend=None) -> RankCertificate:
    """Rank of the whole R-family against its closed-form size."""
    polys = [poly_R(i, I, J, d, k) for i, I, J in enumerate_script_B(d, k)]
    cert = rank_exact(polys, d, k, method=method, backend=backend)
    cert.kind = "lemma-b"
    cert.expected_rank = bounds.script_b_count(d, k)
    return cert
