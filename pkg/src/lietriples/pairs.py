"""Involutions, symmetric-pair splits, and the transitive-triple conditions.

A triple descriptor packages an ambient algebra g with two commuting
involutions (sigma cutting out h, theta the Cartan involution) and a
reductive subalgebra l.  The three conditions checked here are
(i) l reductively embedded, (ii) l + h = g, (iii) l cap h compact, where
compactness of a subalgebra means negative definiteness of the restricted
ambient Killing form.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .liealg import LieAlgebra, killing_form, restrict_form
from .ratlin import (
    RatMatrix,
    SubspaceBasis,
    kernel,
    rank,
    signature,
    subspace_intersection,
    subspace_sum,
)


class Involution:
    """A linear involutive automorphism of a Lie algebra, as a matrix."""

    __slots__ = ("matrix",)

    def __init__(self, matrix: RatMatrix):
        if matrix.rows != matrix.cols:
            raise ValueError("involution matrix must be square")
        object.__setattr__(self, "matrix", matrix)

    def __setattr__(self, name, value):
        raise AttributeError("Involution is immutable")

    def apply(self, vec: Sequence) -> list:
        return self.matrix.apply(vec)

    def validate(self, g: LieAlgebra) -> None:
        m = self.matrix
        if m.rows != g.dim:
            raise ValueError("involution has wrong dimension")
        if m @ m != RatMatrix.identity(g.dim):
            raise ValueError("involution does not square to the identity")
        for i in range(g.dim):
            for j in range(i + 1, g.dim):
                lhs = m.apply(g.bracket_basis(i, j))
                rhs = g.bracket(m.column(i), m.column(j))
                if lhs != rhs:
                    raise ValueError(
                        f"involution is not an automorphism at basis pair ({i},{j})"
                    )

    def commutes_with(self, other: "Involution") -> bool:
        return self.matrix @ other.matrix == other.matrix @ self.matrix


def involution_from_images(g: LieAlgebra, images: Sequence[Sequence]) -> Involution:
    """Involution sending basis vector i to the given coordinate vector."""
    return Involution(RatMatrix.from_columns(g.dim, [list(v) for v in images]))


def conjugation_involution(g: LieAlgebra, s: RatMatrix) -> Involution:
    """Involution X -> S X S^-1 of a matrix-realized algebra.

    Requires S^2 to be a scalar multiple of the identity so that conjugation
    is involutive; each image is re-expanded in the algebra basis exactly.
    """
    if g.matrices is None:
        raise ValueError("conjugation involution needs a matrix realization")
    from .ratlin import inverse, solve
    from .liealg import _vectorize

    s_inv = inverse(s)
    span = RatMatrix.from_columns(
        g.matrices[0].rows ** 2, [_vectorize(m) for m in g.matrices]
    )
    images = []
    for m in g.matrices:
        conj = s @ m @ s_inv
        coords = solve(span, _vectorize(conj))
        if coords is None:
            raise ValueError("conjugation does not preserve the algebra")
        images.append(coords)
    return involution_from_images(g, images)


def negative_transpose_involution(g: LieAlgebra) -> Involution:
    """Involution X -> -X^T of a matrix-realized algebra."""
    if g.matrices is None:
        raise ValueError("needs a matrix realization")
    from .ratlin import solve
    from .liealg import _vectorize

    span = RatMatrix.from_columns(
        g.matrices[0].rows ** 2, [_vectorize(m) for m in g.matrices]
    )
    images = []
    for m in g.matrices:
        coords = solve(span, _vectorize(m.transpose().scale(-1)))
        if coords is None:
            raise ValueError("negative transpose does not preserve the algebra")
        images.append(coords)
    return involution_from_images(g, images)


def swap_involution(g: LieAlgebra) -> Involution:
    """The factor swap (X, Y) -> (Y, X) on a direct sum of equal factors."""
    if g.dim % 2 != 0:
        raise ValueError("not a direct sum of two equal factors")
    half = g.dim // 2
    images = []
    for i in range(g.dim):
        v = [Fraction(0)] * g.dim
        v[(i + half) % g.dim] = Fraction(1)
        images.append(v)
    return involution_from_images(g, images)


def eigenspace_split(
    g: LieAlgebra, inv: Involution
) -> tuple[SubspaceBasis, SubspaceBasis]:
    """(+1, -1) eigenspaces of an involution; they always fill the algebra."""
    ident = RatMatrix.identity(g.dim)
    plus = kernel(inv.matrix - ident)
    minus = kernel(inv.matrix + ident)
    return plus, minus


class TripleDescriptor:
    """A candidate triple: ambient g, involutions sigma / theta, subalgebra l.

    h and k are always derived from the involutions, never stored; l_frame
    optionally fixes a preferred ordered basis of l (columns, in
    g-coordinates) used for enveloping-algebra work and evidence records.
    """

    __slots__ = ("g", "sigma", "theta", "l", "name", "l_frame")

    def __init__(
        self,
        g: LieAlgebra,
        sigma: Involution,
        theta: Involution,
        l: SubspaceBasis,
        name: str = "",
        l_frame: Optional[RatMatrix] = None,
    ):
        object.__setattr__(self, "g", g)
        object.__setattr__(self, "sigma", sigma)
        object.__setattr__(self, "theta", theta)
        object.__setattr__(self, "l", l)
        object.__setattr__(self, "name", name)
        object.__setattr__(self, "l_frame", l_frame)

    def __setattr__(self, name, value):
        raise AttributeError("TripleDescriptor is immutable")

    @property
    def h(self) -> SubspaceBasis:
        return eigenspace_split(self.g, self.sigma)[0]

    @property
    def q(self) -> SubspaceBasis:
        return eigenspace_split(self.g, self.sigma)[1]

    @property
    def k(self) -> SubspaceBasis:
        return eigenspace_split(self.g, self.theta)[0]

    @property
    def s(self) -> SubspaceBasis:
        return eigenspace_split(self.g, self.theta)[1]

    def validate(self) -> None:
        from .liealg import is_subalgebra

        self.sigma.validate(self.g)
        self.theta.validate(self.g)
        if not self.sigma.commutes_with(self.theta):
            raise ValueError("sigma and theta do not commute")
        if not is_subalgebra(self.g, self.l):
            raise ValueError("l is not a subalgebra")
        if self.l_frame is not None:
            if self.l_frame.cols != self.l.dim or rank(self.l_frame) != self.l.dim:
                raise ValueError("l_frame does not have full rank")
            framed = SubspaceBasis(self.g.dim, self.l_frame.transpose().entries)
            if framed != self.l:
                raise ValueError("l_frame does not span l")

    def __repr__(self):
        return f"TripleDescriptor({self.name or 'unnamed'}, dim g = {self.g.dim})"


@dataclass(frozen=True)
class TripleReport:
    reductive: bool
    transitive: bool
    compact_intersection: bool
    dims: dict
    verdict: str

    @property
    def is_transitive_triple(self) -> bool:
        return self.verdict == "TransitiveTriple"


def is_reductively_embedded(g: LieAlgebra, l: SubspaceBasis) -> bool:
    """True when the ambient Killing form restricted to l is nondegenerate."""
    gram = restrict_form(killing_form(g), l)
    return rank(gram) == l.dim


def is_infinitesimally_transitive(
    g: LieAlgebra, h: SubspaceBasis, l: SubspaceBasis
) -> bool:
    return subspace_sum(l, h).dim == g.dim


def is_compact_subalgebra(g: LieAlgebra, s: SubspaceBasis) -> bool:
    """Negative definiteness of the restricted Killing form; 0 is compact."""
    if s.dim == 0:
        return True
    gram = restrict_form(killing_form(g), s)
    return signature(gram) == (0, s.dim, 0)


def check_transitive_triple(t: TripleDescriptor) -> TripleReport:
    g = t.g
    h = t.h
    l = t.l
    lh = subspace_intersection(l, h)
    b = killing_form(g)
    reductive = rank(restrict_form(b, l)) == l.dim
    transitive = subspace_sum(l, h).dim == g.dim
    compact = lh.dim == 0 or signature(restrict_form(b, lh)) == (0, lh.dim, 0)
    dims = {
        "g": g.dim,
        "h": h.dim,
        "l": l.dim,
        "l_cap_h": lh.dim,
    }
    verdict = (
        "TransitiveTriple" if (reductive and transitive and compact) else "NotTransitiveTriple"
    )
    return TripleReport(
        reductive=reductive,
        transitive=transitive,
        compact_intersection=compact,
        dims=dims,
        verdict=verdict,
    )
