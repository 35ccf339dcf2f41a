"""Proof polynomials, monomial basis and rank certificates."""

from .certify import (
    RankCertificate,
    certify_koli,
    certify_lemma_b,
    certify_regular,
    coefficient_matrix,
    rank_exact,
    relation_one_holds,
)
from .linalg import bareiss_rank
from .polys import (
    EvaluationPoint,
    Monomial,
    MultilinearPoly,
    P_factored,
    Q_factored,
    R_factored,
    check_script_b_member,
    enumerate_script_A,
    enumerate_script_A_k,
    enumerate_script_B,
    enumerate_script_B_block,
    evaluate,
    evaluate_table,
    monomial_basis,
    poly_P,
    poly_Q,
    poly_R,
)

__all__ = [
    "EvaluationPoint",
    "Monomial",
    "MultilinearPoly",
    "P_factored",
    "Q_factored",
    "R_factored",
    "RankCertificate",
    "bareiss_rank",
    "certify_koli",
    "certify_lemma_b",
    "certify_regular",
    "check_script_b_member",
    "coefficient_matrix",
    "enumerate_script_A",
    "enumerate_script_A_k",
    "enumerate_script_B",
    "enumerate_script_B_block",
    "evaluate",
    "evaluate_table",
    "monomial_basis",
    "poly_P",
    "poly_Q",
    "poly_R",
    "rank_exact",
    "relation_one_holds",
]
