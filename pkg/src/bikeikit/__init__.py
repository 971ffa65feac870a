"""Bikei counting invariants and bikei-module enhanced polynomials of
unoriented surface-links given as marked graph diagrams."""

from .bikei import Bikei, alexander, enumerate_bikei, is_hom, takasaki, trivial, verify
from .coloring import Coloring, counting_invariant, enumerate_colorings
from .diagram import Crossing, MarkedGraphDiagram, MarkedVertex, fuzz_moves, parse, serialize, smooth
from .enhance import InvariantPolynomial, bead_module_size, bead_system, enhanced_polynomial
from .errors import BikeiKitError, InputError, Rejection, WorkBoundError
from .module import BikeiModule, constant_module, reidemeister2_violation, search_modules, verify_module
from .ring import kernel_count, smith_diagonal

__version__ = "0.1.0"

__all__ = [
    "Bikei", "BikeiKitError", "BikeiModule", "Coloring", "Crossing", "InputError",
    "InvariantPolynomial", "MarkedGraphDiagram", "MarkedVertex", "Rejection", "WorkBoundError",
    "alexander", "bead_module_size", "bead_system", "constant_module", "counting_invariant",
    "enhanced_polynomial", "enumerate_bikei", "enumerate_colorings", "fuzz_moves", "is_hom",
    "kernel_count", "parse", "reidemeister2_violation", "search_modules", "serialize",
    "smith_diagonal", "smooth", "takasaki", "trivial", "verify", "verify_module",
]
