"""Exact Fourier analysis of rational Beatty sets modulo q, perfect-cover
verification and construction, and the finite classification search."""

from .beatty import BeattyParams, dft_direct, ft_closed_form, ft_magnitude
from .covering import CoveringInstance, construct_cfc, covering_criterion, is_perfect_cover
from .cyclotomic import CycloElt, cyclotomic_poly, root_power

__all__ = [
    "BeattyParams",
    "CoveringInstance",
    "CycloElt",
    "construct_cfc",
    "covering_criterion",
    "cyclotomic_poly",
    "dft_direct",
    "ft_closed_form",
    "ft_magnitude",
    "is_perfect_cover",
    "root_power",
]

__version__ = "0.1.0"
