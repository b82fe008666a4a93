import random
from fractions import Fraction

import pytest

from lietriples.ratlin import (
    AmbientMismatch,
    NonSymmetric,
    RatMatrix,
    SubspaceBasis,
    inverse,
    kernel,
    rank,
    signature,
    solve,
    subspace_intersection,
    subspace_sum,
)


def rand_matrix(rng, rows, cols, span=4):
    return RatMatrix(
        [
            [Fraction(rng.randint(-span, span), rng.randint(1, 3)) for _ in range(cols)]
            for _ in range(rows)
        ]
    )


def rand_invertible(rng, n):
    while True:
        m = RatMatrix([[rng.randint(-3, 3) for _ in range(n)] for _ in range(n)])
        if rank(m) == n:
            return m


# -- rank ---------------------------------------------------------------


def test_rank_identity():
    assert rank(RatMatrix.identity(2)) == 2


def test_rank_zero_matrix():
    assert rank(RatMatrix.zeros(3, 3)) == 0


def test_rank_dependent_rows():
    assert rank(RatMatrix([[1, 2], [2, 4]])) == 1


# -- kernel -------------------------------------------------------------


def test_kernel_identity_empty():
    assert kernel(RatMatrix.identity(3)).dim == 0


def test_kernel_zero_map_full():
    k = kernel(RatMatrix.zeros(3, 3))
    assert k.dim == 3
    assert k == SubspaceBasis.full(3)


def test_kernel_line():
    k = kernel(RatMatrix([[1, 1]]))
    assert k.vectors == ((Fraction(1), Fraction(-1)),)


# -- solve --------------------------------------------------------------


def test_solve_identity():
    assert solve(RatMatrix.identity(2), [3, 4]) == [Fraction(3), Fraction(4)]


def test_solve_inconsistent():
    assert solve(RatMatrix.zeros(2, 2), [1, 0]) is None


def test_solve_diagonal():
    assert solve(RatMatrix([[2, 0], [0, 4]]), [1, 2]) == [
        Fraction(1, 2),
        Fraction(1, 2),
    ]


# -- signature ----------------------------------------------------------


def test_signature_diag():
    assert signature(RatMatrix.diagonal([1, -1])) == (1, 1, 0)


def test_signature_zero():
    assert signature(RatMatrix.zeros(2, 2)) == (0, 0, 2)


def test_signature_hyperbolic_block():
    assert signature(RatMatrix([[0, 1], [1, 0]])) == (1, 1, 0)


def test_signature_requires_symmetric():
    with pytest.raises(NonSymmetric):
        signature(RatMatrix([[0, 1], [0, 0]]))


# -- subspaces ----------------------------------------------------------


def test_subspace_sum_lines():
    a = SubspaceBasis(2, [[1, 0]])
    b = SubspaceBasis(2, [[0, 1]])
    assert subspace_sum(a, b).dim == 2


def test_subspace_sum_idempotent():
    v = SubspaceBasis(3, [[1, 2, 3]])
    assert subspace_sum(v, v) == v


def test_subspace_sum_skew_lines_fill_plane():
    a = SubspaceBasis(2, [[1, 1]])
    b = SubspaceBasis(2, [[1, -1]])
    assert subspace_sum(a, b) == SubspaceBasis.full(2)


def test_intersection_self():
    x = SubspaceBasis(3, [[1, 0, 2], [0, 1, 1]])
    assert subspace_intersection(x, x) == x


def test_intersection_complementary_lines():
    a = SubspaceBasis(2, [[1, 0]])
    b = SubspaceBasis(2, [[0, 1]])
    assert subspace_intersection(a, b).dim == 0


def test_intersection_generic_planes():
    a = SubspaceBasis(3, [[1, 0, 0], [0, 1, 0]])
    b = SubspaceBasis(3, [[1, 0, 1], [0, 1, 1]])
    inter = subspace_intersection(a, b)
    assert inter.dim == 1
    assert a.contains(inter.vectors[0]) and b.contains(inter.vectors[0])


def test_ambient_mismatch():
    with pytest.raises(AmbientMismatch):
        subspace_sum(SubspaceBasis(2, [[1, 0]]), SubspaceBasis(3, [[1, 0, 0]]))


def test_inverse_roundtrip():
    m = RatMatrix([[2, 1], [1, 1]])
    assert m @ inverse(m) == RatMatrix.identity(2)


# -- property suites ------------------------------------------------------


def test_rank_nullity_random():
    rng = random.Random(101)
    for _ in range(120):
        rows = rng.randint(1, 6)
        cols = rng.randint(1, 6)
        m = rand_matrix(rng, rows, cols)
        assert rank(m) + kernel(m).dim == cols


def test_dimension_formula_random():
    rng = random.Random(202)
    for _ in range(120):
        n = rng.randint(2, 5)
        a = SubspaceBasis(n, [[rng.randint(-3, 3) for _ in range(n)] for _ in range(rng.randint(0, n))])
        b = SubspaceBasis(n, [[rng.randint(-3, 3) for _ in range(n)] for _ in range(rng.randint(0, n))])
        total = subspace_sum(a, b)
        inter = subspace_intersection(a, b)
        assert a.dim + b.dim == total.dim + inter.dim


def test_signature_congruence_invariance():
    rng = random.Random(303)
    for _ in range(110):
        n = rng.randint(1, 5)
        raw = rand_matrix(rng, n, n, span=3)
        sym = raw + raw.transpose()
        p = rand_invertible(rng, n)
        assert signature(sym) == signature(p.transpose() @ sym @ p)


def test_canonical_form_equality_matches_containment():
    rng = random.Random(404)
    agreements = 0
    for _ in range(150):
        n = rng.randint(2, 4)
        a = SubspaceBasis(n, [[rng.randint(-2, 2) for _ in range(n)] for _ in range(rng.randint(1, n))])
        b = SubspaceBasis(n, [[rng.randint(-2, 2) for _ in range(n)] for _ in range(rng.randint(1, n))])
        same_span = a.contains_subspace(b) and b.contains_subspace(a)
        assert (a == b) == same_span
        agreements += 1
    assert agreements == 150


def test_solve_returns_exact_solutions_random():
    rng = random.Random(505)
    for _ in range(120):
        rows = rng.randint(1, 5)
        cols = rng.randint(1, 5)
        m = rand_matrix(rng, rows, cols)
        x = [Fraction(rng.randint(-3, 3)) for _ in range(cols)]
        v = m.apply(x)
        got = solve(m, v)
        assert got is not None
        assert m.apply(got) == v


def test_signature_of_so3_killing_form():
    from lietriples.liealg import killing_form, so

    assert signature(killing_form(so(3, 0)).gram) == (0, 3, 0)
