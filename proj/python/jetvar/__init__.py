"""Exact variational calculus on jet spaces (C++ core)."""

from ._jetvar import (  # noqa: F401
    InvariantError,
    JetContext,
    ParseError,
    Poly,
    PreconditionError,
    act,
    canonical,
    compose,
    euler_lagrange,
    helmholtz,
    identity,
    invariants,
    inverse,
    is_trivial,
    poincare_cartan,
    trivial_from_lambda,
)
