"""froblab: exact Frobenius / quasi-Frobenius decisions, Taft algebras and
weak Hopf axiom checks over cyclotomic fields."""
from .kernel import BACKEND
from .scalars import CycScalar, field_context, format_scalar, parse_scalar

__version__ = "0.1.0"

__all__ = ["BACKEND", "CycScalar", "field_context", "format_scalar", "parse_scalar", "__version__"]
