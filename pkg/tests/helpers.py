"""Shared oracle helpers for the test suite.

These implement independent routes to quantities the library also computes;
they stay deliberately naive (dense loops, no reuse of library shortcuts).
"""

from fractions import Fraction

from lietriples.ratlin import RatMatrix, kernel


def invariant_form_space(mats):
    """All symmetric F with X^T F + F X = 0 for every X in mats."""
    n = mats[0].rows
    idx = {}
    count = 0
    for i in range(n):
        for j in range(i, n):
            idx[(i, j)] = count
            count += 1
    rows = []
    for x in mats:
        for a in range(n):
            for b in range(a, n):
                row = [Fraction(0)] * count
                for k in range(n):
                    row[idx[(min(k, b), max(k, b))]] += x[k, a]
                    row[idx[(min(a, k), max(a, k))]] += x[k, b]
                rows.append(row)
    ker = kernel(RatMatrix(rows))
    forms = []
    for v in ker.vectors:
        f = [[Fraction(0)] * n for _ in range(n)]
        for (i, j), t in idx.items():
            f[i][j] = v[t]
            f[j][i] = v[t]
        forms.append(RatMatrix(f))
    return forms


def adjoint_casimir_matrix(g):
    """Sum ad(X_i) ad(Y_i) over Killing-dual bases, as an explicit matrix."""
    from lietriples.liealg import killing_form
    from lietriples.ratlin import inverse

    gram = killing_form(g).gram
    ginv = inverse(gram)
    n = g.dim
    total = RatMatrix.zeros(n, n)
    ads = [g.ad_basis(i) for i in range(n)]
    for i in range(n):
        for j in range(n):
            if ginv[i, j] != 0:
                total = total + (ads[i] @ ads[j]).scale(ginv[i, j])
    return total


def normal_order_words(words, bracket_fn):
    """Normal-order formal words of length <= 2 by adjacent swaps.

    words: list of (coefficient, index-tuple).  bracket_fn(a, b) must return
    the dense coordinate list of [Y_a, Y_b].  Returns (quad, lin, const)
    dictionaries in the same shape Quad2 uses.  This is a deliberately
    different algorithm from the library's matrix-transform path.
    """
    from fractions import Fraction

    quad = {}
    lin = {}
    const = Fraction(0)
    stack = list(words)
    while stack:
        c, w = stack.pop()
        if c == 0:
            continue
        if len(w) == 0:
            const += c
        elif len(w) == 1:
            lin[w[0]] = lin.get(w[0], Fraction(0)) + c
        else:
            a, b = w
            if a <= b:
                quad[(a, b)] = quad.get((a, b), Fraction(0)) + c
            else:
                stack.append((c, (b, a)))
                for k, d in enumerate(bracket_fn(a, b)):
                    if d != 0:
                        stack.append((c * d, (k,)))
    quad = {k: v for k, v in quad.items() if v != 0}
    lin = {k: v for k, v in lin.items() if v != 0}
    return quad, lin, const


def words_in_new_basis(words, s_matrix):
    """Substitute X_i = sum_a S[a, i] Y_a into every word."""
    out = []
    n = s_matrix.rows
    for c, w in words:
        if len(w) == 0:
            out.append((c, w))
        elif len(w) == 1:
            (i,) = w
            for a in range(n):
                if s_matrix[a, i] != 0:
                    out.append((c * s_matrix[a, i], (a,)))
        else:
            i, j = w
            for a in range(n):
                sa = s_matrix[a, i]
                if sa == 0:
                    continue
                for b in range(n):
                    sb = s_matrix[b, j]
                    if sb != 0:
                        out.append((c * sa * sb, (a, b)))
    return out


def naive_reduce(algebra, words, h):
    """Reduce formal ambient words modulo U(g) h by word rewriting.

    Independent of env2: builds the adapted basis, substitutes, normal
    orders by swaps, drops words whose last index lies in the h block, and
    relabels the survivors back to ambient coordinates.
    """
    from fractions import Fraction

    from lietriples.ratlin import RatMatrix, inverse

    pivots = set(h.pivots())
    front = [i for i in range(algebra.dim) if i not in pivots]
    cols = []
    for i in front:
        e = [Fraction(0)] * algebra.dim
        e[i] = Fraction(1)
        cols.append(e)
    cols.extend(list(v) for v in h.vectors)
    t = RatMatrix.from_columns(algebra.dim, cols)
    s = inverse(t)
    cache = {}

    def bracket_fn(a, b):
        if (a, b) not in cache:
            cache[(a, b)] = s.apply(algebra.bracket(t.column(a), t.column(b)))
        return cache[(a, b)]

    quad, lin, const = normal_order_words(words_in_new_basis(words, s), bracket_fn)
    nf = len(front)
    out_quad = {(front[i], front[j]): c for (i, j), c in quad.items() if j < nf}
    out_lin = {front[i]: c for i, c in lin.items() if i < nf}
    return out_quad, out_lin, const


def naive_transfer(built):
    """The whole Casimir transfer, recomputed by word rewriting.

    Uses a reversed greedy complement (a different w than the library
    default picks), so agreement also re-exercises complement independence.
    Returns (quad, lin, const) in l-coordinates, reduced mod U(l)(l cap h).
    """
    from fractions import Fraction

    from lietriples.liealg import killing_form
    from lietriples.ratlin import RatMatrix, SubspaceBasis, inverse

    g = built.g
    d = built.descriptor
    gram = killing_form(g).gram
    ginv = inverse(gram)
    words = [
        (ginv[i, j], (i, j))
        for i in range(g.dim)
        for j in range(g.dim)
        if ginv[i, j] != 0
    ]

    frame = built.frame
    frame_cols = [list(frame.column(j)) for j in range(frame.cols)]
    chosen = list(frame_cols)
    base = SubspaceBasis(g.dim, chosen)
    for hv in reversed(list(d.h.vectors)):
        if base.dim == g.dim:
            break
        if not base.contains(hv):
            chosen.append(list(hv))
            base = SubspaceBasis(g.dim, chosen)
    assert base.dim == g.dim
    t = RatMatrix.from_columns(g.dim, chosen)
    s = inverse(t)
    cache = {}

    def bracket_fn(a, b):
        if (a, b) not in cache:
            cache[(a, b)] = s.apply(g.bracket(t.column(a), t.column(b)))
        return cache[(a, b)]

    quad, lin, const = normal_order_words(words_in_new_basis(words, s), bracket_fn)
    n_l = frame.cols
    surv = [(c, k) for k, c in quad.items() if k[1] < n_l]
    surv += [(c, (i,)) for i, c in lin.items() if i < n_l]
    if const != 0:
        surv.append((const, ()))

    from lietriples.ratlin import solve, subspace_intersection

    lh_ambient = subspace_intersection(d.l, d.h)
    lh = SubspaceBasis(n_l, [solve(frame, list(v)) for v in lh_ambient.vectors])
    return naive_reduce(built.l_alg, surv, lh)
