"""Exact-arithmetic engine for Hopf-algebraic cyclic structures.

The interesting entry points:

* :mod:`hopfcyc.hopf` - structure-constant Hopf algebras and axiom checks;
* :mod:`hopfcyc.rep` - modules/comodules, compatibility and stability;
* :mod:`hopfcyc.trace` - invariants, equivariant functionals, swap maps;
* :mod:`hopfcyc.cyclic` - tower builders and the relation verifier;
* :mod:`hopfcyc.homology` - Hochschild and cyclic (co)homology dimensions;
* :mod:`hopfcyc.service` - the FastAPI app; :mod:`hopfcyc.cli` - the client.
"""

__version__ = "0.1.0"
