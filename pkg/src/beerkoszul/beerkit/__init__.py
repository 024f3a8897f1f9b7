"""Series-specific constructions for U(yb_G) and its quadratic dual."""

from .algebra import BeerAlgebra, action_orbits, build_beer
from .monomials import Block, ReducedMonomial, block_series, reduced_monomials
from .reduction import PairTable, Reduction, ReductionError, algorithm_reduce, pair_table, random_words
from .relations import LEMMAS, InapplicableLemma, NamedRelation, paper_relations, tr_relations
from .report import MISMATCH, PASS, UNPRINTED, VerificationReport, verification_report

__all__ = [
    "BeerAlgebra",
    "Block",
    "InapplicableLemma",
    "LEMMAS",
    "MISMATCH",
    "NamedRelation",
    "PASS",
    "PairTable",
    "ReducedMonomial",
    "Reduction",
    "ReductionError",
    "UNPRINTED",
    "VerificationReport",
    "action_orbits",
    "algorithm_reduce",
    "block_series",
    "build_beer",
    "pair_table",
    "paper_relations",
    "random_words",
    "reduced_monomials",
    "tr_relations",
    "verification_report",
]
