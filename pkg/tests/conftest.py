"""Shared independent oracles for the test suite.

The extremal oracle enumerates every subset of the ground set outright; it
shares only the freeness predicate with the library, never the search.
"""

from itertools import combinations

from qgeom import Geometry, pg_size
from qgeom.embed import EmbedSearcher


def brute_force_ex(H, n):
    """Naive ex_q(H; n): enumerate all 2^N subsets of PG(n-1, q).

    Subsets are masks over point indices; a subset is H-free iff it
    includes no minimal copy of H (a |H|-point subset containing H,
    precomputed by exhaustive search over all |H|-subsets).
    """
    f = H.field
    total = pg_size(n, f)
    assert total <= 15, "oracle is only meant for desk-scale ground sets"
    h = len(H.points)
    searcher = EmbedSearcher(H)
    copies = []
    for T in combinations(range(total), h):
        if searcher.find(frozenset(T), n) is not None:
            copies.append(sum(1 << i for i in T))
    best = 0
    for mask in range(1 << total):
        if any(cm & mask == cm for cm in copies):
            continue
        size = bin(mask).count("1")
        if size > best:
            best = size
    return best


def subset_geometry(f, n, indices):
    return Geometry(field=f, ambient=n, points=tuple(indices))
