"""Double Grothendieck polynomials, their specializations, and the Hecke pipe-dream sum."""

from .errors import (
    BoxNotInDiagram, GrothkitError, IndexOutOfRange, NotAPermutation, PreconditionViolated,
    RankMismatch,
)
from .grothendieck import GrothCache, fixed_point_product, groth, groth_top, specialize
from .laurent import LaurentPoly
from .permutation import Permutation, bruhat_leq, hecke_eval, parse
from .pipedream import BoxRef, Diagram, bottom_diagram, br_rhs, enumerate_hecke

__version__ = "0.1.0"
