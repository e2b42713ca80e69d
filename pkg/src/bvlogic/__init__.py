"""Boolean-valued semantics for first-order logic, with a de Bruijn proof kernel,
finite complete Boolean algebras, B-valued set models and forcing combinatorics."""

from . import boolalg, combinatorics, corpus, proof, semantics, setmodels, syntax
from .errors import SizeGuardError

__version__ = "0.1.0"

__all__ = ["boolalg", "combinatorics", "corpus", "proof", "semantics", "setmodels", "syntax", "SizeGuardError"]
