"""Restricted roots, minimal parabolic subalgebras, and sphericity.

All spectra are required to be rational: eigenvalues of ad(a) are found by
exact characteristic polynomials and integer root search, and any failure to
split raises IrrationalSpectrum rather than approximating.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .liealg import (
    LieAlgebra,
    centralizer,
    subalgebra_on_own_basis,
    subspace_in_subalgebra_coords,
)
from .pairs import TripleDescriptor, check_transitive_triple
from .ratlin import (
    RatMatrix,
    SubspaceBasis,
    kernel,
    solve,
    subspace_intersection,
    subspace_sum,
)


class IrrationalSpectrum(ArithmeticError):
    """An ad-action failed to diagonalize over the rationals."""


@dataclass(frozen=True)
class RestrictedRootSystem:
    a_basis: SubspaceBasis
    roots: tuple
    root_spaces: dict
    zero_space: SubspaceBasis

    def multiplicity(self, root) -> int:
        return self.root_spaces[root].dim


@dataclass(frozen=True)
class ParabolicSubalgebra:
    m: SubspaceBasis
    a: SubspaceBasis
    n: SubspaceBasis
    p: SubspaceBasis


def char_poly(a: RatMatrix) -> list:
    """Coefficients c[0..n] of det(x I - A) = sum c_k x^k (monic)."""
    n = a.rows
    c = [Fraction(0)] * (n + 1)
    c[n] = Fraction(1)
    m = RatMatrix.zeros(n, n)
    ident = RatMatrix.identity(n)
    for k in range(1, n + 1):
        m = a @ m + ident.scale(c[n - k + 1])
        c[n - k] = Fraction(-1, k) * (a @ m).trace()
    return c


def _poly_eval_int(coeffs: Sequence[int], x: int) -> int:
    acc = 0
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def rational_eigenvalues(a: RatMatrix) -> list[Fraction]:
    """Distinct rational roots of the characteristic polynomial.

    The matrix is scaled to integer entries, whose monic integer
    characteristic polynomial can only have integer rational roots; those
    are bounded by the Gershgorin radius, so candidates are scanned with a
    divisibility filter and no factoring.  Irrational eigenvalues are simply
    not returned; the caller checks eigenspace completeness.
    """
    n = a.rows
    scale = 1
    for i in range(n):
        for j in range(n):
            d = a[i, j].denominator
            scale = scale * d // _gcd(scale, d)
    m = a.scale(scale)
    coeffs = [int(c) for c in char_poly(m)]
    shift = 0
    while shift <= n and coeffs[shift] == 0:
        shift += 1
    roots = set()
    if shift > 0:
        roots.add(Fraction(0))
    reduced = coeffs[shift:]
    if len(reduced) <= 1:
        return sorted(roots)
    const = reduced[0]
    radius = max(
        sum(abs(int(m[i, j])) for j in range(n)) for i in range(n)
    )
    for t in range(1, radius + 1):
        if const % t:
            continue
        for cand in (t, -t):
            if _poly_eval_int(reduced, cand) == 0:
                roots.add(Fraction(cand, scale))
    return sorted(roots)


def _gcd(a: int, b: int) -> int:
    a, b = abs(a), abs(b)
    while b:
        a, b = b, a % b
    return a


def _eigenspace(a: RatMatrix, lam: Fraction) -> SubspaceBasis:
    n = a.rows
    shifted = RatMatrix(
        [[a[i, j] - (lam if i == j else Fraction(0)) for j in range(n)] for i in range(n)]
    )
    return kernel(shifted)


def _restrict_operator(op: RatMatrix, space: SubspaceBasis) -> RatMatrix:
    """Matrix of an operator on an invariant subspace, in its echelon basis."""
    mat = space.matrix()
    cols = []
    for v in space.vectors:
        image = op.apply(list(v))
        c = solve(mat, image)
        if c is None:
            raise IrrationalSpectrum("operator does not preserve the subspace")
        cols.append(c)
    return RatMatrix.from_columns(space.dim, cols)


def joint_eigenspaces(
    ambient_dim: int, operators: Sequence[RatMatrix]
) -> list[tuple[tuple, SubspaceBasis]]:
    """Simultaneous rational eigenspace decomposition of commuting operators.

    Raises IrrationalSpectrum when the eigenspaces of any operator fail to
    fill the space it acts on.
    """
    spaces: list[tuple[tuple, SubspaceBasis]] = [((), SubspaceBasis.full(ambient_dim))]
    for op in operators:
        refined = []
        for tag, space in spaces:
            if space.dim == 0:
                continue
            restricted = _restrict_operator(op, space)
            eigvals = rational_eigenvalues(restricted)
            covered = 0
            for lam in eigvals:
                sub = _eigenspace(restricted, lam)
                if sub.dim == 0:
                    continue
                covered += sub.dim
                lifted = SubspaceBasis(
                    ambient_dim, [space.matrix().apply(list(v)) for v in sub.vectors]
                )
                refined.append((tag + (lam,), lifted))
            if covered != space.dim:
                raise IrrationalSpectrum(
                    "ad action does not split over the rationals "
                    f"(covered {covered} of {space.dim} dimensions)"
                )
        spaces = refined
    return spaces


def maximal_abelian_in_s(
    l_alg: LieAlgebra, s_l: SubspaceBasis, reverse: bool = False
) -> SubspaceBasis:
    """Greedy maximal abelian subspace of s_l.

    Starts from the first canonical basis vector of s_l (last when reverse
    is set) and keeps extending inside the commutant until no element of
    s_l outside the current subspace commutes with all of it.
    """
    if s_l.dim == 0:
        return s_l
    order = list(s_l.vectors)
    if reverse:
        order.reverse()
    chosen = [list(order[0])]
    a = SubspaceBasis(l_alg.dim, chosen)
    while True:
        z = centralizer(l_alg, a, within=s_l)
        candidates = list(z.vectors)
        if reverse:
            candidates.reverse()
        ext = next((v for v in candidates if not a.contains(v)), None)
        if ext is None:
            return a
        chosen.append(list(ext))
        a = SubspaceBasis(l_alg.dim, chosen)


def restricted_roots(l_alg: LieAlgebra, a: SubspaceBasis) -> RestrictedRootSystem:
    """Joint ad(a) eigenspace decomposition of l with rational functionals.

    Roots are coordinate row vectors with respect to the canonical basis of
    a; the zero functional's space is kept separately as zero_space.
    """
    if a.dim == 0:
        return RestrictedRootSystem(
            a_basis=a,
            roots=(),
            root_spaces={},
            zero_space=SubspaceBasis.full(l_alg.dim),
        )
    operators = [l_alg.ad(list(v)) for v in a.vectors]
    decomposition = joint_eigenspaces(l_alg.dim, operators)
    root_spaces = {}
    zero_space = SubspaceBasis.zero(l_alg.dim)
    for tag, space in decomposition:
        if all(x == 0 for x in tag):
            zero_space = space
        else:
            root_spaces[tag] = space
    roots = tuple(sorted(root_spaces.keys()))
    # opposite roots must pair with equal multiplicities
    for r in roots:
        neg = tuple(-x for x in r)
        if neg not in root_spaces or root_spaces[neg].dim != root_spaces[r].dim:
            raise IrrationalSpectrum(f"root {r} has no matching opposite root space")
    total = zero_space.dim + sum(sp.dim for sp in root_spaces.values())
    if total != l_alg.dim:
        raise IrrationalSpectrum("root space decomposition does not fill the algebra")
    return RestrictedRootSystem(
        a_basis=a, roots=roots, root_spaces=root_spaces, zero_space=zero_space
    )


def _lex_positive(root: tuple) -> bool:
    for x in root:
        if x != 0:
            return x > 0
    return False


def minimal_parabolic(
    l_alg: LieAlgebra,
    k_l: SubspaceBasis,
    s_l: SubspaceBasis,
    reverse: bool = False,
) -> tuple[ParabolicSubalgebra, RestrictedRootSystem]:
    """Minimal parabolic m + a + n of a reductive algebra with Cartan split.

    Positivity of roots is lexicographic against the canonical ordered basis
    of a, n is the sum of the positive root spaces, and m is the centralizer
    of a inside k_l.
    """
    a = maximal_abelian_in_s(l_alg, s_l, reverse=reverse)
    rrs = restricted_roots(l_alg, a)
    n_space = SubspaceBasis.zero(l_alg.dim)
    for root in rrs.roots:
        if _lex_positive(root):
            n_space = subspace_sum(n_space, rrs.root_spaces[root])
    m_space = centralizer(l_alg, a, within=k_l)
    p_space = subspace_sum(subspace_sum(m_space, a), n_space)
    return ParabolicSubalgebra(m=m_space, a=a, n=n_space, p=p_space), rrs


def cartan_split_of_l(
    t: TripleDescriptor,
) -> tuple[LieAlgebra, RatMatrix, SubspaceBasis, SubspaceBasis]:
    """l as its own algebra plus its Cartan split, from the ambient theta.

    Returns (l_alg, P, k_l, s_l) with P the column frame of l in ambient
    coordinates and k_l, s_l in l-coordinates.  Requires theta(l) = l.
    """
    frame = t.l_frame if t.l_frame is not None else t.l.matrix()
    labels = None
    if t.l_frame is None:
        labels = [f"Z{i}" for i in range(t.l.dim)]
    l_alg, p = subalgebra_on_own_basis(t.g, [frame.column(j) for j in range(frame.cols)], labels)
    theta_cols = []
    for j in range(p.cols):
        image = t.theta.apply(p.column(j))
        c = solve(p, image)
        if c is None:
            raise ValueError("theta does not preserve l; no Cartan split available")
        theta_cols.append(c)
    theta_l = RatMatrix.from_columns(p.cols, theta_cols)
    ident = RatMatrix.identity(p.cols)
    k_l = kernel(theta_l - ident)
    s_l = kernel(theta_l + ident)
    return l_alg, p, k_l, s_l


def is_spherical_triple(
    t: TripleDescriptor, reverse: bool = False
) -> tuple[bool, dict]:
    """Sphericity through the open-orbit dimension count p_L + (l cap h) = l.

    Returns (verdict, evidence); evidence holds every dimension entering the
    count plus the restricted root data.  Requires a transitive triple.
    """
    report = check_transitive_triple(t)
    if not report.is_transitive_triple:
        raise ValueError(f"not a transitive triple: {report}")
    l_alg, p, k_l, s_l = cartan_split_of_l(t)
    parabolic, rrs = minimal_parabolic(l_alg, k_l, s_l, reverse=reverse)
    lh_ambient = subspace_intersection(t.l, t.h)
    lh = subspace_in_subalgebra_coords(p, lh_ambient)
    span = subspace_sum(parabolic.p, lh)
    verdict = span.dim == l_alg.dim
    evidence = {
        "dim_l": l_alg.dim,
        "dim_k_l": k_l.dim,
        "dim_s_l": s_l.dim,
        "dim_a": parabolic.a.dim,
        "dim_m": parabolic.m.dim,
        "dim_n": parabolic.n.dim,
        "dim_p": parabolic.p.dim,
        "dim_l_cap_h": lh.dim,
        "dim_p_plus_l_cap_h": span.dim,
        "roots": [
            {
                "root": [str(x) for x in root],
                "multiplicity": rrs.root_spaces[root].dim,
            }
            for root in rrs.roots
        ],
    }
    return verdict, evidence
