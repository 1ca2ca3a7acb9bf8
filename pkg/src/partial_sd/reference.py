"""
Published numeric tables, transcribed as printed.

These are inputs to the ``verify`` suite. Recomputed values are
authoritative; a mismatch here is reported as an erratum when independent
checks side with the recomputation.
"""

from fractions import Fraction as Q

# h-transformation matrices, keyed by (d, l)
H_MATRICES = {
    (4, 3): (
        (1, 0, 0, 0, 0),
        (1, 2, 1, 1, 1),
        (1, 1, 2, 1, 1),
        (1, 1, 1, 2, 1),
        (0, 0, 0, 0, 1),
    ),
    (4, 2): (
        (1, 0, 0, 0, 0),
        (5, 5, 5, 2, 1),
        (5, 5, 6, 5, 5),
        (1, 2, 3, 5, 5),
        (0, 0, 0, 0, 1),
    ),
}

# top eigenvectors of h_matrix(d, l), keyed by (d, l)
PERRON_VECTORS = {
    (4, 3): (0, 1, 1, 1, 0),
    (4, 2): (0, 1, Q(5, 3), 1, 0),
    (4, 1): (0, 1, Q(7, 2), 1, 0),
    (5, 4): (0, 1, 1, 1, 1, 0),
    (5, 3): (0, 1, Q(12, 7), Q(12, 7), 1, 0),
    (5, 2): (0, 1, Q(46, 11), Q(46, 11), 1, 0),
    (5, 1): (0, 1, Q(17, 2), Q(17, 2), 1, 0),
    (6, 5): (0, 1, 1, 1, 1, 1, 0),
    (6, 4): (0, 1, Q(7, 4), Q(7, 4), Q(7, 4), 1, 0),
    (6, 3): (0, 1, Q(1941, 437), Q(2146, 437), Q(1941, 437), 1, 0),
    (6, 2): (0, 1, Q(5431, 527), Q(8906, 527), Q(5431, 527), 1, 0),
    (6, 1): (0, 1, Q(586, 33), Q(5459, 132), Q(586, 33), 1, 0),
}

# distribution tables over S_d^l: {(d, statistic): {l: counts by value}}
DISTRIBUTIONS = {
    (5, "descent"): {
        4: (1, 1, 1, 1, 1),
        3: (1, 6, 6, 6, 1),
        2: (1, 16, 26, 16, 1),
    },
    (5, "excedance"): {
        4: (1, 1, 1, 1, 1),
        3: (1, 6, 6, 6, 1),
        2: (1, 14, 30, 14, 1),
    },
    (6, "descent"): {
        5: (1, 1, 1, 1, 1, 1),
        4: (1, 7, 7, 7, 7, 1),
        3: (1, 22, 37, 37, 22, 1),
        2: (1, 42, 137, 137, 42, 1),
    },
    (6, "excedance"): {
        5: (1, 1, 1, 1, 1, 1),
        4: (1, 7, 7, 7, 7, 1),
        3: (1, 17, 42, 42, 17, 1),
        2: (1, 33, 146, 146, 33, 1),
    },
}

# l-descent sets of three permutations in S_6^4
DESCENT_EXAMPLES = (
    ((4, 3, 2, 1, 6, 5), 4, frozenset({5})),
    ((6, 5, 2, 1, 3, 4), 4, frozenset({1, 2})),
    ((6, 4, 3, 2, 5, 1), 4, frozenset({1, 5})),
)
