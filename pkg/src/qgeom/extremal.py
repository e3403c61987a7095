"""Exact extremal numbers ex_q(H; n) and the sparse-flat search.

ex_exact runs a branch-and-bound over the points of PG(n-1, q) in index
order with the classic include/exclude scheme.  The bound at a node is
|current set| + points still undecided; freeness when including point p is
checked by an anchored embedding search (only embeddings whose image uses
p can newly appear, because the set was H-free before).  The only symmetry
breaking is cheap and sound: the lowest-index included point must be the
minimum-index point of its orbit under coordinate permutations.

Budgets are mandatory with defaults; running out degrades the result
status to "lower-bound" instead of failing.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from functools import lru_cache
from itertools import permutations

from .embed import EmbedSearcher, contains
from .errors import FieldMismatch
from .geometry import Geometry, critical_exponent, g_size
from .projective import (
    canonical_vec,
    enumerate_points,
    iter_flats,
    flat_points,
    pg_size,
    point_index,
    span,
)


@dataclass
class Budget:
    node_cap: int = 10 ** 8
    time_cap: float | None = None


@dataclass
class ExtremalResult:
    value: int
    witness: Geometry
    status: str  # "exact" or "lower-bound"
    nodes: int = 0


@dataclass
class DensityRow:
    n: int
    ex: int
    total: int
    density: Fraction
    limit: Fraction
    status: str


def is_free(S, H):
    """True iff S contains no restriction of H."""
    if S.field != H.field:
        raise FieldMismatch("geometries over different fields")
    return contains(S, H) is None


@lru_cache(maxsize=None)
def _orbit_minimal(n, f):
    """Point indices that are minimal in their coordinate-permutation orbit."""
    pts = enumerate_points(n, f)
    if n > 7:
        return frozenset(range(len(pts)))
    idx = {p.vec: p.index for p in pts}
    minimal = set()
    for p in pts:
        best = min(idx[canonical_vec(tuple(p.vec[j] for j in perm), f)]
                   for perm in permutations(range(n)))
        if best == p.index:
            minimal.add(p.index)
    return frozenset(minimal)


def ex_exact(H, n, budget=None):
    """Largest H-free point set in PG(n-1, q), with a witness.

    Exact unless the budget runs out, in which case the best set found so
    far is reported with status "lower-bound".
    """
    assert n >= 1
    f = H.field
    budget = budget or Budget()
    searcher = EmbedSearcher(H)
    total = pg_size(n, f)
    first_ok = _orbit_minimal(n, f)
    deadline = None if budget.time_cap is None else time.monotonic() + budget.time_cap

    best = []
    chosen = []
    nodes = 0
    exhausted = False

    def dfs(i):
        nonlocal best, nodes, exhausted
        nodes += 1
        if exhausted or nodes > budget.node_cap or \
                (deadline is not None and time.monotonic() > deadline):
            exhausted = True
            return
        if len(chosen) > len(best):
            best = list(chosen)
        if i == total or len(chosen) + (total - i) <= len(best):
            return
        allowed = chosen or i in first_ok
        if allowed and searcher.find(frozenset(chosen) | {i}, n, anchor=i):
            pass  # including i would create an H-restriction
        elif allowed:
            chosen.append(i)
            dfs(i + 1)
            chosen.pop()
        dfs(i + 1)

    dfs(0)
    witness = Geometry(field=f, ambient=n, points=tuple(best))
    assert is_free(witness, H), "witness failed independent re-validation"
    return ExtremalResult(value=len(best), witness=witness,
                          status="lower-bound" if exhausted else "exact",
                          nodes=nodes)


def bose_burton_value(m, n, f):
    """ex_q(PG(m-1, q); n) in closed form: the size of G(n-1, q, m-1)."""
    assert 1 <= m <= n
    return g_size(n, f, m - 1)


def find_sparse_flat(G, m, c):
    """A rank-m flat F of the ambient PG with rank(F intersect G) <= m - c.

    Flats are enumerated lazily; returns the first hit or None after
    exhausting all rank-m flats.
    """
    assert 1 <= c < m <= G.ambient
    f, n = G.field, G.ambient
    gset = G.point_set
    for F in iter_flats(n, f, m):
        hit = [p.vec for p in flat_points(F) if p.index in gset]
        if span(hit, n, f).rank <= m - c:
            return F
    return None


def density_table(H, n_range, budget=None):
    """One DensityRow per rank in n_range, with the exact limit 1 - q^(1-c)."""
    rows = []
    n_list = list(n_range)
    if not n_list:
        return rows
    f = H.field
    c = critical_exponent(H)
    limit = 1 - Fraction(1, f.q ** (c - 1))
    for n in n_list:
        res = ex_exact(H, n, budget=budget)
        total = pg_size(n, f)
        rows.append(DensityRow(n=n, ex=res.value, total=total,
                               density=Fraction(res.value, total),
                               limit=limit, status=res.status))
    return rows


def density_rows_to_csv(rows):
    """CSV serialization: exact rationals split into numerator/denominator."""
    lines = ["n,ex,total,density_num,density_den,limit_num,limit_den,status"]
    for r in rows:
        lines.append("%d,%d,%d,%d,%d,%d,%d,%s" % (
            r.n, r.ex, r.total,
            r.density.numerator, r.density.denominator,
            r.limit.numerator, r.limit.denominator, r.status))
    return "\n".join(lines) + "\n"
