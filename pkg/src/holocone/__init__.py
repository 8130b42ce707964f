"""Exact-arithmetic engine for holomorphic Horn cones of U(p,q).

Subpackages cover weight/chamber arithmetic, Littlewood-Richardson
coefficients, Sym(M_{p,q}) branching multiplicities, exact rational
polyhedra, Schubert calculus on block flag varieties, and facet
certification.  The `holocone` console script exposes the batch CLI.
"""

__version__ = "1.0.0"
