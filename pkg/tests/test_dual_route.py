"""Cross-checks of the enveloping-algebra machinery against an independent
word-rewriting implementation (tests/helpers.py).  The two code paths share
only the exact linear algebra layer; the reduction algorithms differ.
"""

import random
from fractions import Fraction

from helpers import naive_reduce, naive_transfer
from lietriples.env2 import Quad2, reduce_mod_left_ideal
from lietriples.liealg import sl, so
from lietriples.pairs import conjugation_involution, eigenspace_split
from lietriples.ratlin import RatMatrix


def quad2_to_words(q):
    words = [(c, k) for k, c in q.quad.items()]
    words += [(c, (i,)) for i, c in q.lin.items()]
    if q.const != 0:
        words.append((q.const, ()))
    return words


def test_naive_reduce_agrees_on_random_elements_sl2():
    from lietriples.ratlin import SubspaceBasis

    g = sl(2)
    h = SubspaceBasis(3, [[0, 1, 0]])  # span{E}
    rng = random.Random(777)
    for _ in range(60):
        quad = {}
        for _ in range(rng.randint(0, 4)):
            i, j = sorted((rng.randrange(3), rng.randrange(3)))
            quad[(i, j)] = Fraction(rng.randint(-4, 4), rng.randint(1, 3))
        lin = {rng.randrange(3): Fraction(rng.randint(-4, 4)) for _ in range(rng.randint(0, 2))}
        q = Quad2(g, quad, lin, Fraction(rng.randint(-2, 2)))
        reduced = reduce_mod_left_ideal(q, h)
        nq, nl, nc = naive_reduce(g, quad2_to_words(q), h)
        assert nq == reduced.quad and nl == reduced.lin and nc == reduced.const


def test_naive_reduce_agrees_on_random_elements_so24():
    g = so(2, 4)
    sigma = conjugation_involution(g, RatMatrix.diagonal([-1, 1, 1, 1, 1, 1]))
    h, _ = eigenspace_split(g, sigma)  # the so(1,4) block, a subalgebra
    rng = random.Random(778)
    for _ in range(25):
        quad = {}
        for _ in range(rng.randint(0, 5)):
            i, j = sorted((rng.randrange(15), rng.randrange(15)))
            quad[(i, j)] = Fraction(rng.randint(-3, 3), rng.randint(1, 2))
        lin = {rng.randrange(15): Fraction(rng.randint(-3, 3)) for _ in range(rng.randint(0, 3))}
        q = Quad2(g, quad, lin, Fraction(rng.randint(-2, 2)))
        reduced = reduce_mod_left_ideal(q, h)
        nq, nl, nc = naive_reduce(g, quad2_to_words(q), h)
        assert nq == reduced.quad and nl == reduced.lin and nc == reduced.const


def test_naive_transfer_matches_iota_for_all_entries(built_catalog):
    for name, bt in built_catalog.items():
        image = bt.iota_of_casimir()
        nq, nl, nc = naive_transfer(bt)
        assert nq == image.quad, name
        assert nl == image.lin, name
        assert nc == image.const, name
