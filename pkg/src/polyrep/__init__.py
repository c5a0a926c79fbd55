"""Counting representations n = a + b with ab a multiple of a polygonal number."""

from .arith import divisor_count_excluding, factorize, is_prime, is_square, kronecker, ord_p
from .closedform import (
    SUPPORTED_FAMILIES,
    UnsupportedFamily,
    closed_r,
    r_theorem3,
    r_theorem4,
    rprime_from_R,
    table_FI,
    unsolvable_cor1,
)
from .harness import VerificationReport, benchmark, run_suite, scan_unsolvable
from .polygonal import DomainError, Family, is_t_polygonal, polygonal, polygonal_index
from .qforms import QuadForm, reduced_forms, represent_count
from .repcount import (
    QPair,
    Representation,
    count_representations,
    qpair_from_representation,
    qsolutions,
    representation_from_qpair,
    representations,
)

__version__ = "0.1.0"

__all__ = [
    "DomainError",
    "Family",
    "QPair",
    "QuadForm",
    "Representation",
    "SUPPORTED_FAMILIES",
    "UnsupportedFamily",
    "VerificationReport",
    "benchmark",
    "closed_r",
    "count_representations",
    "divisor_count_excluding",
    "factorize",
    "is_prime",
    "is_square",
    "is_t_polygonal",
    "kronecker",
    "ord_p",
    "polygonal",
    "polygonal_index",
    "qpair_from_representation",
    "qsolutions",
    "r_theorem3",
    "r_theorem4",
    "reduced_forms",
    "represent_count",
    "representation_from_qpair",
    "representations",
    "rprime_from_R",
    "run_suite",
    "scan_unsolvable",
    "table_FI",
    "unsolvable_cor1",
]
