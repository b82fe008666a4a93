"""Hard-coded split G2 tables.

Generated by tools/generate_g2_tables.py from the derivation algebra
of the split octonions; do not edit by hand.  BASIS_LABELS orders the
basis as (Cartan H1 H2, root vectors E1..E6 by height, F1..F6 the
opposite root vectors).  STRUCTURE holds (i, j, k, num, den) entries
of [X_i, X_j] for i < j.  REP7 holds the 7-dimensional representation
as (num, den) entry pairs; the matrices satisfy X^T J + J X = 0 for
J = diag(1, 1, 1, 1, -1, -1, -1).
"""

BASIS_LABELS = ('H1', 'H2', 'E1', 'E2', 'E3', 'E4', 'E5', 'E6', 'F1', 'F2', 'F3', 'F4', 'F5', 'F6')

STRUCTURE = [
    (0, 2, 2, -3, 1),
    (0, 3, 3, 2, 1),
    (0, 4, 4, -1, 1),
    (0, 5, 5, 1, 1),
    (0, 6, 6, 3, 1),
    (0, 8, 8, 3, 1),
    (0, 9, 9, -2, 1),
    (0, 10, 10, 1, 1),
    (0, 11, 11, -1, 1),
    (0, 12, 12, -3, 1),
    (1, 2, 2, 2, 1),
    (1, 3, 3, -1, 1),
    (1, 4, 4, 1, 1),
    (1, 6, 6, -1, 1),
    (1, 7, 7, 1, 1),
    (1, 8, 8, -2, 1),
    (1, 9, 9, 1, 1),
    (1, 10, 10, -1, 1),
    (1, 12, 12, 1, 1),
    (1, 13, 13, -1, 1),
    (2, 3, 4, -1, 1),
    (2, 6, 7, -1, 1),
    (2, 8, 1, 1, 1),
    (2, 10, 9, 1, 1),
    (2, 13, 12, 1, 1),
    (3, 4, 5, 2, 1),
    (3, 5, 6, 3, 1),
    (3, 9, 0, 1, 1),
    (3, 10, 8, -3, 1),
    (3, 11, 10, -2, 1),
    (3, 12, 11, -1, 1),
    (4, 5, 7, 3, 1),
    (4, 8, 3, 1, 1),
    (4, 9, 2, -3, 1),
    (4, 10, 0, 1, 1),
    (4, 10, 1, 3, 1),
    (4, 11, 9, 2, 1),
    (4, 13, 11, -1, 1),
    (5, 9, 4, -2, 1),
    (5, 10, 3, 2, 1),
    (5, 11, 0, 2, 1),
    (5, 11, 1, 3, 1),
    (5, 12, 9, 1, 1),
    (5, 13, 10, 1, 1),
    (6, 9, 5, -1, 1),
    (6, 11, 3, 1, 1),
    (6, 12, 0, 1, 1),
    (6, 12, 1, 1, 1),
    (6, 13, 8, -1, 1),
    (7, 8, 6, 1, 1),
    (7, 10, 5, -1, 1),
    (7, 11, 4, 1, 1),
    (7, 12, 2, -1, 1),
    (7, 13, 0, 1, 1),
    (7, 13, 1, 2, 1),
    (8, 9, 10, 1, 1),
    (8, 12, 13, 1, 1),
    (9, 10, 11, -2, 1),
    (9, 11, 12, -3, 1),
    (10, 11, 13, -3, 1),
]

REP7 = [
    [
        [(0, 1), (0, 1), (0, 1), (0, 1), (0, 1), (0, 1), (0, 1)],
        [(0, 1), (0, 1), (0, 1), (0, 1), (1, 1), (0, 1), (0, 1)],
        [(0, 1), (0, 1), (0, 1), (0, 1), (0, 1), (1, 1), (0, 1)],
        [(0, 1), (0, 1), (0, 1), (0, 1), (0, 1), (0, 1), (-2, 1)],
        [(0, 1), (1, 1), (0, 1), (0, 1), (0, 1), (0, 1), (0, 1)],
        [(0, 1), (0, 1), (1, 1), (0, 1), (0, 1), (0, 1), (0, 1)],
        [(0, 1), (0, 1), (0, 1), (-2, 1), (0, 1), (0, 1), (0, 1)],
    ],
    [
        [(0, 1), (0, 1), (0, 1), (0, 1), (0, 1), (0, 1), (0, 1)],
        [(0, 1), (0, 1), (0, 1), (0, 1), (0, 1), (0, 1), (0, 1)],
        [(0, 1), (0, 1), (0, 1), (0, 1), (0, 1), (-1, 1), (0, 1)],
        [(0, 1), (0, 1), (0, 1), (0, 1), (0, 1), (0, 1), (1, 1)],
        [(0, 1), (0, 1), (0, 1), (0, 1), (0, 1), (0, 1), (0, 1)],
        [(0, 1), (0, 1), (-1, 1), (0, 1), (0, 1), (0, 1), (0, 1)],
        [(0, 1), (0, 1), (0, 1), (1, 1), (0, 1), (0, 1), (0, 1)],
    ],
    [
        [(0, 1), (0, 1), (0, 1), (0, 1), (0, 1), (0, 1), (0, 1)],
        [(0, 1), (0, 1), (0, 1), (0, 1), (0, 1), (0, 1), (0, 1)],
        [(0, 1), (0, 1), (0, 1), (-1, 2), (0, 1), (0, 1), (1, 2)],
        [(0, 1), (0, 1), (1, 2), (0, 1), (0, 1), (1, 2), (0, 1)],
        [(0, 1), (0, 1), (0, 1), (0, 1), (0, 1), (0, 1), (0, 1)],
        [(0, 1), (0, 1), (0, 1), (1, 2), (0, 1), (0, 1), (-1, 2)],
        [(0, 1), (0, 1), (1, 2), (0, 1), (0, 1), (1, 2), (0, 1)],
    ],
    [
        [(0, 1), (0, 1), (0, 1), (1, 1), (0, 1), (0, 1), (1, 1)],
        [(0, 1), (0, 1), (1, 2), (0, 1), (0, 1), (-1, 2), (0, 1)],
        [(0, 1), (-1, 2), (0, 1), (0, 1), (1, 2), (0, 1), (0, 1)],
        [(-1, 1), (0, 1), (0, 1), (0, 1), (0, 1), (0, 1), (0, 1)],
        [(0, 1), (0, 1), (1, 2), (0, 1), (0, 1), (-1, 2), (0, 1)],
        [(0, 1), (-1, 2), (0, 1), (0, 1), (1, 2), (0, 1), (0, 1)],
        [(1, 1), (0, 1), (0, 1), (0, 1), (0, 1), (0, 1), (0, 1)],
    ],
    [
        [(0, 1), (0, 1), (1, 1), (0, 1), (0, 1), (1, 1), (0, 1)],
        [(0, 1), (0, 1), (0, 1), (-1, 2), (0, 1), (0, 1), (1, 2)],
        [(-1, 1), (0, 1), (0, 1), (0, 1), (0, 1), (0, 1), (0, 1)],
        [(0, 1), (1, 2), (0, 1), (0, 1), (-1, 2), (0, 1), (0, 1)],
        [(0, 1), (0, 1), (0, 1), (-1, 2), (0, 1), (0, 1), (1, 2)],
        [(1, 1), (0, 1), (0, 1), (0, 1), (0, 1), (0, 1), (0, 1)],
        [(0, 1), (1, 2), (0, 1), (0, 1), (-1, 2), (0, 1), (0, 1)],
    ],
    [
        [(0, 1), (1, 1), (0, 1), (0, 1), (-1, 1), (0, 1), (0, 1)],
        [(-1, 1), (0, 1), (0, 1), (0, 1), (0, 1), (0, 1), (0, 1)],
        [(0, 1), (0, 1), (0, 1), (1, 2), (0, 1), (0, 1), (1, 2)],
        [(0, 1), (0, 1), (-1, 2), (0, 1), (0, 1), (-1, 2), (0, 1)],
        [(-1, 1), (0, 1), (0, 1), (0, 1), (0, 1), (0, 1), (0, 1)],
        [(0, 1), (0, 1), (0, 1), (-1, 2), (0, 1), (0, 1), (-1, 2)],
        [(0, 1), (0, 1), (1, 2), (0, 1), (0, 1), (1, 2), (0, 1)],
    ],
    [
        [(0, 1), (0, 1), (0, 1), (0, 1), (0, 1), (0, 1), (0, 1)],
        [(0, 1), (0, 1), (0, 1), (1, 2), (0, 1), (0, 1), (1, 2)],
        [(0, 1), (0, 1), (0, 1), (0, 1), (0, 1), (0, 1), (0, 1)],
        [(0, 1), (-1, 2), (0, 1), (0, 1), (1, 2), (0, 1), (0, 1)],
        [(0, 1), (0, 1), (0, 1), (1, 2), (0, 1), (0, 1), (1, 2)],
        [(0, 1), (0, 1), (0, 1), (0, 1), (0, 1), (0, 1), (0, 1)],
        [(0, 1), (1, 2), (0, 1), (0, 1), (-1, 2), (0, 1), (0, 1)],
    ],
    [
        [(0, 1), (0, 1), (0, 1), (0, 1), (0, 1), (0, 1), (0, 1)],
        [(0, 1), (0, 1), (1, 2), (0, 1), (0, 1), (1, 2), (0, 1)],
        [(0, 1), (-1, 2), (0, 1), (0, 1), (1, 2), (0, 1), (0, 1)],
        [(0, 1), (0, 1), (0, 1), (0, 1), (0, 1), (0, 1), (0, 1)],
        [(0, 1), (0, 1), (1, 2), (0, 1), (0, 1), (1, 2), (0, 1)],
        [(0, 1), (1, 2), (0, 1), (0, 1), (-1, 2), (0, 1), (0, 1)],
        [(0, 1), (0, 1), (0, 1), (0, 1), (0, 1), (0, 1), (0, 1)],
    ],
    [
        [(0, 1), (0, 1), (0, 1), (0, 1), (0, 1), (0, 1), (0, 1)],
        [(0, 1), (0, 1), (0, 1), (0, 1), (0, 1), (0, 1), (0, 1)],
        [(0, 1), (0, 1), (0, 1), (1, 2), (0, 1), (0, 1), (1, 2)],
        [(0, 1), (0, 1), (-1, 2), (0, 1), (0, 1), (1, 2), (0, 1)],
        [(0, 1), (0, 1), (0, 1), (0, 1), (0, 1), (0, 1), (0, 1)],
        [(0, 1), (0, 1), (0, 1), (1, 2), (0, 1), (0, 1), (1, 2)],
        [(0, 1), (0, 1), (1, 2), (0, 1), (0, 1), (-1, 2), (0, 1)],
    ],
    [
        [(0, 1), (0, 1), (0, 1), (-1, 1), (0, 1), (0, 1), (1, 1)],
        [(0, 1), (0, 1), (-1, 2), (0, 1), (0, 1), (-1, 2), (0, 1)],
        [(0, 1), (1, 2), (0, 1), (0, 1), (1, 2), (0, 1), (0, 1)],
        [(1, 1), (0, 1), (0, 1), (0, 1), (0, 1), (0, 1), (0, 1)],
        [(0, 1), (0, 1), (1, 2), (0, 1), (0, 1), (1, 2), (0, 1)],
        [(0, 1), (-1, 2), (0, 1), (0, 1), (-1, 2), (0, 1), (0, 1)],
        [(1, 1), (0, 1), (0, 1), (0, 1), (0, 1), (0, 1), (0, 1)],
    ],
    [
        [(0, 1), (0, 1), (-1, 1), (0, 1), (0, 1), (1, 1), (0, 1)],
        [(0, 1), (0, 1), (0, 1), (1, 2), (0, 1), (0, 1), (1, 2)],
        [(1, 1), (0, 1), (0, 1), (0, 1), (0, 1), (0, 1), (0, 1)],
        [(0, 1), (-1, 2), (0, 1), (0, 1), (-1, 2), (0, 1), (0, 1)],
        [(0, 1), (0, 1), (0, 1), (-1, 2), (0, 1), (0, 1), (-1, 2)],
        [(1, 1), (0, 1), (0, 1), (0, 1), (0, 1), (0, 1), (0, 1)],
        [(0, 1), (1, 2), (0, 1), (0, 1), (1, 2), (0, 1), (0, 1)],
    ],
    [
        [(0, 1), (-1, 1), (0, 1), (0, 1), (-1, 1), (0, 1), (0, 1)],
        [(1, 1), (0, 1), (0, 1), (0, 1), (0, 1), (0, 1), (0, 1)],
        [(0, 1), (0, 1), (0, 1), (-1, 2), (0, 1), (0, 1), (1, 2)],
        [(0, 1), (0, 1), (1, 2), (0, 1), (0, 1), (-1, 2), (0, 1)],
        [(-1, 1), (0, 1), (0, 1), (0, 1), (0, 1), (0, 1), (0, 1)],
        [(0, 1), (0, 1), (0, 1), (-1, 2), (0, 1), (0, 1), (1, 2)],
        [(0, 1), (0, 1), (1, 2), (0, 1), (0, 1), (-1, 2), (0, 1)],
    ],
    [
        [(0, 1), (0, 1), (0, 1), (0, 1), (0, 1), (0, 1), (0, 1)],
        [(0, 1), (0, 1), (0, 1), (-1, 2), (0, 1), (0, 1), (1, 2)],
        [(0, 1), (0, 1), (0, 1), (0, 1), (0, 1), (0, 1), (0, 1)],
        [(0, 1), (1, 2), (0, 1), (0, 1), (1, 2), (0, 1), (0, 1)],
        [(0, 1), (0, 1), (0, 1), (1, 2), (0, 1), (0, 1), (-1, 2)],
        [(0, 1), (0, 1), (0, 1), (0, 1), (0, 1), (0, 1), (0, 1)],
        [(0, 1), (1, 2), (0, 1), (0, 1), (1, 2), (0, 1), (0, 1)],
    ],
    [
        [(0, 1), (0, 1), (0, 1), (0, 1), (0, 1), (0, 1), (0, 1)],
        [(0, 1), (0, 1), (-1, 2), (0, 1), (0, 1), (1, 2), (0, 1)],
        [(0, 1), (1, 2), (0, 1), (0, 1), (1, 2), (0, 1), (0, 1)],
        [(0, 1), (0, 1), (0, 1), (0, 1), (0, 1), (0, 1), (0, 1)],
        [(0, 1), (0, 1), (1, 2), (0, 1), (0, 1), (-1, 2), (0, 1)],
        [(0, 1), (1, 2), (0, 1), (0, 1), (1, 2), (0, 1), (0, 1)],
        [(0, 1), (0, 1), (0, 1), (0, 1), (0, 1), (0, 1), (0, 1)],
    ],
]
