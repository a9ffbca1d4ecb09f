"""Exact Jack, interpolation Jack and binomial-type polynomial identities over Q(d)."""
from .binomialtype import bernoulli_poly, binomial_family, kernel_0F0
from .interpolation import binom_coeff, ijack_P
from .jack import jack_P, jack_Phi, jack_Psi, jack_table
from .scalars import SYMBOLIC, DRat, SpecializedField

__version__ = "0.1.0"

__all__ = [
    "DRat", "SYMBOLIC", "SpecializedField", "jack_table", "jack_P", "jack_Phi", "jack_Psi",
    "ijack_P", "binom_coeff", "kernel_0F0", "binomial_family", "bernoulli_poly",
]
