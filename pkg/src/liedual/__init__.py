"""Exact Chevalley-Eilenberg homology of small Lie algebras and their
enveloping algebras, with checks of the dualizing automorphism, Ext
concentration and Hochschild-Poincare duality."""

from liedual.lie import (
    Character, LieAlgebra, LieIdeal, LieModule, adjoint_module, dual_module, exterior_power,
    quotient_algebra, tensor_module, trace_character, trivial_module, unimodular_character,
    validate,
)
from liedual.pbw import FilteredAutomorphism, UEAElement, apply_automorphism, dualizing_automorphism

__version__ = "0.1.0"
