"""Exact computations for the ABCT variety V(3, n) in the Grassmannian G(3, n).

Submodules: ``symfunc`` (Schur arithmetic in three variables), ``abct_class``
(class, degree, Eulerian coefficient), ``grassmann`` (Veronese maps, Pluecker
coordinates, ranks), ``matroid_strata``, ``minor_groebner`` and ``cli``.
"""

__version__ = "0.1.0"
