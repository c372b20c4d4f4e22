"""Exact computer algebra for finite-dimensional commutative baric algebras
over Q(l), where l is an abstract root of 2X^2 + X + 3.

Subpackages cover field arithmetic (numberfield), structure-constant
algebras (algebra), sparse polynomial expansion (sympoly), the free-magma
identity engine (terms, identities), Peirce decompositions (peirce), train
equations (trains), the .alg file format (algfile) and the CLI (cli).
"""

from baric._kernel import BACKEND as kernel_backend

__all__ = ["kernel_backend"]
__version__ = "0.1.0"
