"""Exact computational toolkit for classical real reductive Lie algebras.

Submodules:

- ``scalars``: the exact coefficient field Q(i, sqrt(r), ...).
- ``linalg``: matrices, echelon forms, kernels, characteristic polynomials.
- ``algebra``: real form structures (theta, Killing-type form, brackets).
- ``catalog``: constructors for the classical families and split-form table.
- ``roots``: restricted root systems, Weyl groups, type recognition.
- ``triples``: principal normal triples, split subalgebras, section data.
- ``dimensions``: curve/bundle dimension bookkeeping.
- ``cli``: the ``hkr`` command line tool.
"""

__version__ = "0.1.0"
