"""Real Lie algebras as exact rational structure constants.

A LieAlgebra is a fixed ordered basis together with the sparse structure
tensor [X_i, X_j] = sum_k c[i][j][k] X_k and, when available, a matrix
realization that is kept consistent with the tensor.  The constructors below
cover everything the shipped catalog needs: sl(n,R), so(p,q), realified
u(p,q)/su(p,q), split G2 and direct sums.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Optional, Sequence

from .ratlin import (
    RatMatrix,
    SubspaceBasis,
    kernel,
    rank,
    solve,
)

Rat = Fraction


class NotClosed(ValueError):
    """A commutator escaped the span of the proposed basis."""


class DependentBasis(ValueError):
    """The proposed basis matrices are linearly dependent."""


class LieAlgebra:
    """Finite-dimensional real Lie algebra over an ordered rational basis."""

    __slots__ = ("dim", "basis_labels", "_table", "matrices")

    def __init__(
        self,
        basis_labels: Sequence[str],
        table: dict,
        matrices: Optional[Sequence[RatMatrix]] = None,
    ):
        """table maps (i, j) with i < j to a dict {k: coefficient}."""
        dim = len(basis_labels)
        clean: dict = {}
        for (i, j), comps in table.items():
            if not (0 <= i < j < dim):
                raise ValueError("structure table must be indexed by i < j")
            entry = {k: Fraction(v) for k, v in comps.items() if Fraction(v) != 0}
            if entry:
                clean[(i, j)] = entry
        object.__setattr__(self, "dim", dim)
        object.__setattr__(self, "basis_labels", tuple(basis_labels))
        object.__setattr__(self, "_table", clean)
        object.__setattr__(
            self, "matrices", tuple(matrices) if matrices is not None else None
        )

    def __setattr__(self, name, value):
        raise AttributeError("LieAlgebra is immutable")

    # -- brackets ---------------------------------------------------------

    def bracket_basis_sparse(self, i: int, j: int) -> dict:
        """[X_i, X_j] as a sparse {index: coefficient} dict."""
        if i == j:
            return {}
        if i < j:
            return self._table.get((i, j), {})
        return {k: -v for k, v in self._table.get((j, i), {}).items()}

    def structure_constant(self, i: int, j: int, k: int) -> Fraction:
        return self.bracket_basis_sparse(i, j).get(k, Fraction(0))

    def bracket_basis(self, i: int, j: int) -> list:
        """[X_i, X_j] as a dense coordinate list."""
        out = [Fraction(0)] * self.dim
        for k, c in self.bracket_basis_sparse(i, j).items():
            out[k] = c
        return out

    def bracket(self, v: Sequence, w: Sequence) -> list:
        """Bracket of two coordinate vectors, as a dense coordinate list."""
        out = [Fraction(0)] * self.dim
        nz_v = [(i, Fraction(x)) for i, x in enumerate(v) if x != 0]
        nz_w = [(j, Fraction(x)) for j, x in enumerate(w) if x != 0]
        for i, a in nz_v:
            for j, b in nz_w:
                if i == j:
                    continue
                ab = a * b
                for k, c in self.bracket_basis_sparse(i, j).items():
                    out[k] += ab * c
        return out

    def ad(self, v: Sequence) -> RatMatrix:
        """Matrix of ad(v) acting on coordinates."""
        cols = []
        for j in range(self.dim):
            col = [Fraction(0)] * self.dim
            for i, a in enumerate(v):
                if a == 0:
                    continue
                for k, c in self.bracket_basis_sparse(i, j).items():
                    col[k] += Fraction(a) * c
            cols.append(col)
        return RatMatrix.from_columns(self.dim, cols)

    def ad_basis(self, i: int) -> RatMatrix:
        v = [0] * self.dim
        v[i] = 1
        return self.ad(v)

    # -- validation -------------------------------------------------------

    def check_jacobi(self) -> None:
        """Jacobi identity on all basis triples i < j < k (others follow)."""
        for i in range(self.dim):
            for j in range(i + 1, self.dim):
                bij = self.bracket_basis_sparse(i, j)
                for k in range(j + 1, self.dim):
                    acc = [Fraction(0)] * self.dim
                    for m, c in bij.items():
                        for t, d in self.bracket_basis_sparse(m, k).items():
                            acc[t] += c * d
                    for m, c in self.bracket_basis_sparse(j, k).items():
                        for t, d in self.bracket_basis_sparse(i, m).items():
                            acc[t] -= c * d
                    for m, c in self.bracket_basis_sparse(i, k).items():
                        for t, d in self.bracket_basis_sparse(j, m).items():
                            acc[t] += c * d
                    # [[i,j],k] - [i,[j,k]] + [j,[i,k]] rewritten: the three
                    # cyclic terms with [x,[y,z]] expanded via ad.
                    if any(x != 0 for x in acc):
                        raise ValueError(
                            f"Jacobi identity fails on basis triple ({i},{j},{k})"
                        )

    def check_matrix_consistency(self) -> None:
        if self.matrices is None:
            return
        mats = self.matrices
        for i in range(self.dim):
            for j in range(i + 1, self.dim):
                comm = mats[i] @ mats[j] - mats[j] @ mats[i]
                expected = RatMatrix.zeros(comm.rows, comm.cols)
                for k, c in self.bracket_basis_sparse(i, j).items():
                    expected = expected + mats[k].scale(c)
                if comm != expected:
                    raise ValueError(
                        f"matrix realization disagrees with structure tensor "
                        f"at pair ({i},{j})"
                    )

    def validate(self) -> None:
        self.check_jacobi()
        self.check_matrix_consistency()

    def __repr__(self):
        return f"LieAlgebra(dim {self.dim}: {', '.join(self.basis_labels)})"


class KillingForm:
    """Gram matrix B(X_i, X_j) = trace(ad X_i ad X_j) of a Lie algebra."""

    __slots__ = ("gram",)

    def __init__(self, gram: RatMatrix):
        if not gram.is_symmetric():
            raise ValueError("Killing gram must be symmetric")
        object.__setattr__(self, "gram", gram)

    def __setattr__(self, name, value):
        raise AttributeError("KillingForm is immutable")

    def __eq__(self, other):
        return isinstance(other, KillingForm) and self.gram == other.gram


def _vectorize(m: RatMatrix) -> list:
    return [x for row in m.entries for x in row]


def from_matrix_basis(
    mats: Sequence[RatMatrix], labels: Optional[Sequence[str]] = None
) -> LieAlgebra:
    """Lie algebra spanned by matrices, with exactly solved structure constants.

    Raises DependentBasis if the matrices are linearly dependent and NotClosed
    if some commutator falls outside their span.
    """
    mats = [m if isinstance(m, RatMatrix) else RatMatrix(m) for m in mats]
    if not mats:
        raise DependentBasis("empty basis")
    n = mats[0].rows
    if any(m.rows != n or m.cols != n for m in mats):
        raise ValueError("basis matrices must be square of equal size")
    span = RatMatrix.from_columns(n * n, [_vectorize(m) for m in mats])
    if rank(span) != len(mats):
        raise DependentBasis("basis matrices are linearly dependent")
    if labels is None:
        labels = [f"X{i}" for i in range(len(mats))]
    table: dict = {}
    for i in range(len(mats)):
        for j in range(i + 1, len(mats)):
            comm = mats[i] @ mats[j] - mats[j] @ mats[i]
            coeffs = solve(span, _vectorize(comm))
            if coeffs is None:
                raise NotClosed(
                    f"commutator of basis elements {i} and {j} leaves the span"
                )
            entry = {k: c for k, c in enumerate(coeffs) if c != 0}
            if entry:
                table[(i, j)] = entry
    return LieAlgebra(labels, table, matrices=mats)


# -- catalog constructors --------------------------------------------------


def sl(n: int) -> LieAlgebra:
    """sl(n, R).  For n = 2 the basis is the classical (H, E, F)."""
    if n < 2:
        raise ValueError("sl(n) needs n >= 2")
    mats = []
    labels = []
    if n == 2:
        mats = [
            RatMatrix([[1, 0], [0, -1]]),
            RatMatrix([[0, 1], [0, 0]]),
            RatMatrix([[0, 0], [1, 0]]),
        ]
        labels = ["H", "E", "F"]
    else:
        for i in range(n - 1):
            d = [[0] * n for _ in range(n)]
            d[i][i], d[i + 1][i + 1] = 1, -1
            mats.append(RatMatrix(d))
            labels.append(f"H{i + 1}")
        for i in range(n):
            for j in range(n):
                if i == j:
                    continue
                e = [[0] * n for _ in range(n)]
                e[i][j] = 1
                mats.append(RatMatrix(e))
                labels.append(f"E{i + 1}{j + 1}")
    return from_matrix_basis(mats, labels)


def so_form_signs(p: int, q: int) -> list[int]:
    return [1] * p + [-1] * q


def so(p: int, q: int) -> LieAlgebra:
    """so(p, q): real matrices with X^T J + J X = 0, J = diag(I_p, -I_q).

    Basis is M[k,l] = E_kl - eps_k eps_l E_lk for k < l, ordered
    lexicographically; the coordinate of a matrix on M[k,l] is simply its
    (k,l) entry, which keeps all decompositions trivial.
    """
    m = p + q
    if m < 2:
        raise ValueError("so(p, q) needs p + q >= 2")
    eps = so_form_signs(p, q)
    mats = []
    labels = []
    for k in range(m):
        for l in range(k + 1, m):
            e = [[0] * m for _ in range(m)]
            e[k][l] = 1
            e[l][k] = -eps[k] * eps[l]
            mats.append(RatMatrix(e))
            labels.append(f"M[{k + 1},{l + 1}]")
    return from_matrix_basis(mats, labels)


def so_coordinates(p: int, q: int, mat: RatMatrix) -> list:
    """Coordinates of a matrix of so(p, q) in the basis produced by so()."""
    m = p + q
    out = []
    for k in range(m):
        for l in range(k + 1, m):
            out.append(mat[k, l])
    return out


def realify(z_real: RatMatrix, z_imag: RatMatrix) -> RatMatrix:
    """Real 2m x 2m matrix of a complex matrix in interleaved coordinates.

    Coordinates are ordered (re_1, im_1, re_2, im_2, ...); the complex entry
    a + b i becomes the 2x2 block [[a, -b], [b, a]].
    """
    m = z_real.rows
    out = [[Fraction(0)] * (2 * m) for _ in range(2 * m)]
    for i in range(m):
        for j in range(m):
            a = z_real[i, j]
            b = z_imag[i, j]
            out[2 * i][2 * j] = a
            out[2 * i][2 * j + 1] = -b
            out[2 * i + 1][2 * j] = b
            out[2 * i + 1][2 * j + 1] = a
    return RatMatrix(out)


def _upq_basis_complex(p: int, q: int) -> tuple[list, list]:
    """Complex (real, imag) parts of the u(p, q) basis, with labels.

    Order: the diagonals i E_kk first, then for each k < l the pair
    A[k,l] = E_kl - eps E_lk and B[k,l] = i (E_kl + eps E_lk).
    """
    m = p + q
    eps = so_form_signs(p, q)
    basis = []
    labels = []
    for k in range(m):
        re = [[Fraction(0)] * m for _ in range(m)]
        im = [[Fraction(0)] * m for _ in range(m)]
        im[k][k] = Fraction(1)
        basis.append((RatMatrix(re), RatMatrix(im)))
        labels.append(f"iD{k + 1}")
    for k in range(m):
        for l in range(k + 1, m):
            s = eps[k] * eps[l]
            re = [[Fraction(0)] * m for _ in range(m)]
            im = [[Fraction(0)] * m for _ in range(m)]
            re[k][l] = Fraction(1)
            re[l][k] = Fraction(-s)
            basis.append((RatMatrix(re), RatMatrix(im)))
            labels.append(f"A[{k + 1},{l + 1}]")
            re = [[Fraction(0)] * m for _ in range(m)]
            im = [[Fraction(0)] * m for _ in range(m)]
            im[k][l] = Fraction(1)
            im[l][k] = Fraction(s)
            basis.append((RatMatrix(re), RatMatrix(im)))
            labels.append(f"B[{k + 1},{l + 1}]")
    return basis, labels


def u(p: int, q: int) -> LieAlgebra:
    """Realification of u(p, q), as real (2m x 2m) matrices, m = p + q.

    With the interleaved coordinate convention the image lies inside
    so(2p, 2q) for p = 1 literally (same defining form diag(I_2, -I_2q)).
    """
    if p + q < 1:
        raise ValueError("u(p, q) needs p + q >= 1")
    basis, labels = _upq_basis_complex(p, q)
    mats = [realify(re, im) for re, im in basis]
    return from_matrix_basis(mats, labels)


def su(p: int, q: int) -> LieAlgebra:
    """Realified su(p, q): the trace-zero part of u(p, q)."""
    m = p + q
    if m < 2:
        raise ValueError("su(p, q) needs p + q >= 2")
    basis, labels = _upq_basis_complex(p, q)
    mats = []
    out_labels = []
    # Replace the m diagonal generators by the m - 1 traceless differences.
    for k in range(m - 1):
        re = [[Fraction(0)] * m for _ in range(m)]
        im = [[Fraction(0)] * m for _ in range(m)]
        im[k][k] = Fraction(1)
        im[k + 1][k + 1] = Fraction(-1)
        mats.append(realify(RatMatrix(re), RatMatrix(im)))
        out_labels.append(f"iH{k + 1}")
    for (re, im), lab in zip(basis[m:], labels[m:]):
        mats.append(realify(re, im))
        out_labels.append(lab)
    return from_matrix_basis(mats, out_labels)


def direct_sum(a: LieAlgebra, b: LieAlgebra) -> LieAlgebra:
    """Block direct sum; labels get _1 / _2 suffixes."""
    labels = [f"{lab}_1" for lab in a.basis_labels] + [
        f"{lab}_2" for lab in b.basis_labels
    ]
    table: dict = {}
    for (i, j), comps in a._table.items():
        table[(i, j)] = dict(comps)
    off = a.dim
    for (i, j), comps in b._table.items():
        table[(i + off, j + off)] = {k + off: v for k, v in comps.items()}
    matrices = None
    if a.matrices is not None and b.matrices is not None:
        na = a.matrices[0].rows
        nb = b.matrices[0].rows
        matrices = []
        for m in a.matrices:
            rows = [list(m.row(i)) + [0] * nb for i in range(na)]
            rows += [[0] * (na + nb) for _ in range(nb)]
            matrices.append(RatMatrix(rows))
        for m in b.matrices:
            rows = [[0] * (na + nb) for _ in range(na)]
            rows += [[0] * na + list(m.row(i)) for i in range(nb)]
            matrices.append(RatMatrix(rows))
    return LieAlgebra(labels, table, matrices=matrices)


def diagonal_subalgebra(ab: LieAlgebra) -> SubspaceBasis:
    """Diagonal {(X, X)} inside a direct sum of two equal-dimension factors."""
    if ab.dim % 2 != 0:
        raise ValueError("not a direct sum of two equal factors")
    half = ab.dim // 2
    vectors = []
    for i in range(half):
        v = [Fraction(0)] * ab.dim
        v[i] = Fraction(1)
        v[i + half] = Fraction(1)
        vectors.append(v)
    return SubspaceBasis(ab.dim, vectors)


def g2_split() -> LieAlgebra:
    """Split G2 (dim 14) in a root-graded basis with integer constants.

    The hard-coded tables live in _g2data and were generated from the
    derivation algebra of the split octonions; the accompanying 7-dimensional
    matrix realization preserves the form diag(I_4, -I_3), so the matrices
    land literally inside so(4, 3).  Tables are validated by the test suite,
    not trusted.
    """
    from . import _g2data

    labels = _g2data.BASIS_LABELS
    table: dict = {}
    for i, j, k, num, den in _g2data.STRUCTURE:
        table.setdefault((i, j), {})[k] = Fraction(num, den)
    mats = [
        RatMatrix([[Fraction(n, d) for (n, d) in row] for row in m])
        for m in _g2data.REP7
    ]
    return LieAlgebra(labels, table, matrices=mats)


# -- forms and subspace calculus -------------------------------------------


def killing_form(g: LieAlgebra) -> KillingForm:
    """B(X_i, X_j) = trace(ad X_i ad X_j), computed exactly and sparsely."""
    n = g.dim
    # ad_i as sparse column maps: ad[i][j] = {k: c} means [X_i, X_j] has
    # coefficient c on X_k.
    ads = [
        {j: g.bracket_basis_sparse(i, j) for j in range(n) if g.bracket_basis_sparse(i, j)}
        for i in range(n)
    ]
    gram = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            total = Fraction(0)
            for m, col in ads[j].items():
                back = ads[i]
                for k, c in col.items():
                    # contribution to the (m, m) diagonal entry of ad_i ad_j
                    d = back.get(k, {}).get(m)
                    if d is not None:
                        total += c * d
            gram[i][j] = total
            gram[j][i] = total
    return KillingForm(RatMatrix(gram))


def restrict_form(form, s: SubspaceBasis) -> RatMatrix:
    """Gram matrix of a symmetric form on the canonical basis of s."""
    gram = form.gram if isinstance(form, KillingForm) else form
    if s.dim == 0:
        return RatMatrix([])
    p = s.matrix()
    return p.transpose() @ gram @ p


def gram_on_vectors(form, vectors: Sequence[Sequence]) -> RatMatrix:
    """Gram matrix of a symmetric form on an explicit list of vectors."""
    gram = form.gram if isinstance(form, KillingForm) else form
    p = RatMatrix.from_columns(gram.rows, [list(v) for v in vectors])
    return p.transpose() @ gram @ p


def centralizer(
    g: LieAlgebra, s: SubspaceBasis, within: Optional[SubspaceBasis] = None
) -> SubspaceBasis:
    """{x in within : [x, s] = 0}, via the kernel of the stacked ad system."""
    if within is None:
        within = SubspaceBasis.full(g.dim)
    if within.dim == 0:
        return within
    if s.dim == 0:
        return within
    w_vecs = [list(v) for v in within.vectors]
    rows = []
    for sv in s.vectors:
        ad_s = g.ad(sv)
        # column a of the block is [within_a, sv] = -ad(sv) within_a
        images = [ad_s.apply(wv) for wv in w_vecs]
        for coord in range(g.dim):
            rows.append([-img[coord] for img in images])
    ker = kernel(RatMatrix(rows))
    vectors = []
    for kv in ker.vectors:
        out = [Fraction(0)] * g.dim
        for a, c in enumerate(kv):
            if c != 0:
                for t in range(g.dim):
                    out[t] += c * w_vecs[a][t]
        vectors.append(out)
    return SubspaceBasis(g.dim, vectors)


def is_subalgebra(g: LieAlgebra, s: SubspaceBasis) -> bool:
    vecs = list(s.vectors)
    for i in range(len(vecs)):
        for j in range(i + 1, len(vecs)):
            if not s.contains(g.bracket(vecs[i], vecs[j])):
                return False
    return True


def subalgebra_on_own_basis(
    g: LieAlgebra, basis_vectors: Sequence[Sequence], labels: Optional[Sequence[str]] = None
) -> tuple[LieAlgebra, RatMatrix]:
    """A subalgebra of g as a LieAlgebra in its own right.

    Returns (algebra, P) where the columns of P are the chosen basis vectors
    in g-coordinates, so P maps new coordinates to ambient ones.  Brackets
    are re-solved through P; raises NotClosed when the span is not closed.
    """
    p = RatMatrix.from_columns(g.dim, [list(v) for v in basis_vectors])
    if rank(p) != p.cols:
        raise DependentBasis("subalgebra basis is linearly dependent")
    if labels is None:
        labels = [f"Z{i}" for i in range(p.cols)]
    table: dict = {}
    cols = [p.column(j) for j in range(p.cols)]
    for i in range(p.cols):
        for j in range(i + 1, p.cols):
            br = g.bracket(cols[i], cols[j])
            coeffs = solve(p, br)
            if coeffs is None:
                raise NotClosed("span is not closed under the bracket")
            entry = {k: c for k, c in enumerate(coeffs) if c != 0}
            if entry:
                table[(i, j)] = entry
    mats = None
    if g.matrices is not None:
        mats = []
        for j in range(p.cols):
            acc = RatMatrix.zeros(g.matrices[0].rows, g.matrices[0].cols)
            for i, c in enumerate(p.column(j)):
                if c != 0:
                    acc = acc + g.matrices[i].scale(c)
            mats.append(acc)
    return LieAlgebra(labels, table, matrices=mats), p


def subspace_in_subalgebra_coords(
    p: RatMatrix, s: SubspaceBasis
) -> SubspaceBasis:
    """Re-express a subspace of g contained in span(P) in P-coordinates."""
    vectors = []
    for v in s.vectors:
        coeffs = solve(p, v)
        if coeffs is None:
            raise ValueError("subspace is not contained in the subalgebra")
        vectors.append(coeffs)
    return SubspaceBasis(p.cols, vectors)
