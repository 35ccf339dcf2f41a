"""Biclique covers of type K: constructions, exact bounds, exhaustive search
and rank certificates for the linear-algebra upper bounds."""

from ._accel import HAVE_NUMBA, backend_name
from .core import (
    Biclique,
    BicliqueError,
    Cover,
    CrossFamily,
    HostGraph,
    KSet,
    SignaturePair,
    achieved_type,
    cover_of_signatures,
    cover_to_family,
    coverage_count,
    family_to_cover,
    is_regular,
    is_uniform,
    signatures_of_cover,
    verify_cross_family,
    verify_type,
)

__version__ = "0.1.0"
