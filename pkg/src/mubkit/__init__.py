"""Mutually unbiased bases from the Schwinger clock and shift matrices."""
from mubkit.constructions import (
    CliqueSet,
    Method,
    MubSet,
    build_generic_triple,
    construct_mubs,
    max_coprime_clique,
    tensor_combine,
)
from mubkit.matrix import PhaseMatrix, eval_dense
from mubkit.verification import brute_force_inner_products, verify_mum

__version__ = "0.1.0"
