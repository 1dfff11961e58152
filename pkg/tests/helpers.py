"""Shared helpers for the test suite."""

from itertools import combinations

from normtrace_ramp import enumerate_points, validate_params

# desk-scale parameter triples (field order at most 64)
DESK_PARAMS = [
    (2, 2, 3),
    (2, 3, 7),
    (2, 4, 5),
    (3, 2, 2),
    (3, 2, 4),
    (3, 3, 13),
    (4, 2, 5),
    (4, 3, 3),
    (4, 3, 7),
    (5, 2, 2),
    (5, 2, 3),
    (5, 2, 6),
]


def partition(q, s, u):
    return enumerate_points(validate_params(q, s, u))


def all_subsets(n, max_size=None):
    top = n if max_size is None else max_size
    for size in range(top + 1):
        yield from combinations(range(n), size)
