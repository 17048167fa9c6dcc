"""Exact computations with W-symmetric polytopes, their polytopal algebras and quotients.

The main entry points are :func:`wtoric.pipeline.run` for a full job and the
building blocks in :mod:`wtoric.roots`, :mod:`wtoric.polytope`,
:mod:`wtoric.algebra` and :mod:`wtoric.iso`.
"""

__version__ = "0.1.0"
