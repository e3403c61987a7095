"""Geometries: finite point sets in PG(n-1, q), and the PG/AG/G families.

A geometry is a simple set of point indices into the fixed enumeration of
its ambient projective space.  G(m-1, q, c) is PG(m-1, q) with the points
of a rank-(m-c) flat removed; the removed flat is always the one spanned
by the first m-c standard basis vectors so that serializations are
byte-identical across runs.  G(m-1, q, 1) is the affine geometry
AG(m-1, q) and G(m-1, q, m) is PG(m-1, q) itself.

All densities and ratios derived from these sets are exact rationals.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import EmptyGeometry
from .field import FieldSpec, field_make
from .projective import (
    canonical_vec,
    enumerate_points,
    iter_flats,
    pg_size,
    point_index,
    rref,
    span,
)


@dataclass(frozen=True)
class Geometry:
    field: FieldSpec
    ambient: int
    points: tuple  # sorted, duplicate-free point indices

    def __post_init__(self):
        pts = tuple(sorted(self.points))
        assert len(pts) == len(set(pts)), "geometries are simple point sets"
        assert all(0 <= i < pg_size(self.ambient, self.field) for i in pts)
        object.__setattr__(self, "points", pts)

    @property
    def point_set(self):
        return frozenset(self.points)

    def point_vecs(self):
        all_pts = enumerate_points(self.ambient, self.field)
        return [all_pts[i].vec for i in self.points]

    def __len__(self):
        return len(self.points)


def _standard_flat_points(m, f, r):
    """Indices of the points of the flat spanned by the first r basis vectors."""
    hit = set()
    for i, pt in enumerate(enumerate_points(m, f)):
        if not any(pt.vec[r:]):
            hit.add(i)
    return hit


def make_pg(m, f):
    """PG(m-1, q): every point of the rank-m space."""
    return Geometry(field=f, ambient=m, points=tuple(range(pg_size(m, f))))


def make_g(m, f, c):
    """G(m-1, q, c): PG(m-1, q) minus the canonical rank-(m-c) flat."""
    assert 0 <= c <= m
    removed = _standard_flat_points(m, f, m - c)
    keep = tuple(i for i in range(pg_size(m, f)) if i not in removed)
    return Geometry(field=f, ambient=m, points=keep)


def make_ag(m, f):
    """AG(m-1, q), the rank-m affine geometry: q^(m-1) points."""
    return make_g(m, f, 1)


def g_size(n, f, c):
    """|G(n-1, q, c)| = (q^n - q^(n-c))/(q - 1), exactly."""
    assert 0 <= c <= n
    return (f.q ** n - f.q ** (n - c)) // (f.q - 1)


def geometry_rank(H):
    """Rank of the flat spanned by H's points (0 for the empty geometry)."""
    return span(H.point_vecs(), H.ambient, H.field).rank


def span_coordinates(H):
    """Coordinates of H's points in the RREF basis of their span.

    Returns (rank, pivots, coord vectors aligned with H.points).  Because
    the span basis is in reduced echelon form, the coordinate vector of a
    member v is just v restricted to the pivot columns.
    """
    vecs = H.point_vecs()
    basis, pivots = rref(vecs, H.ambient, H.field)
    coords = [tuple(v[c] for c in pivots) for v in vecs]
    return len(basis), pivots, coords


def critical_exponent(H):
    """Least c >= 1 such that some rank-(m-c) flat of span(H) avoids H.

    Works in coordinates of the span, so only the rank m of H matters,
    not the ambient.  The rank-0 flat is disjoint from everything, so the
    answer always lands in [1, m].
    """
    if not H.points:
        raise EmptyGeometry("critical exponent of the empty geometry")
    f = H.field
    m, _, coords = span_coordinates(H)
    inside = frozenset(point_index(v, m, f) for v in coords)
    for c in range(1, m + 1):
        for F in iter_flats(m, f, m - c):
            if _flat_disjoint(F, inside, m, f):
                return c
    raise AssertionError("unreachable: the rank-0 flat is always disjoint")


def _flat_disjoint(F, point_indices, n, f):
    from .projective import flat_points

    return all(p.index not in point_indices for p in flat_points(F))


def complement_geometry(H):
    """All points of the ambient PG not in H."""
    keep = tuple(i for i in range(pg_size(H.ambient, H.field))
                 if i not in H.point_set)
    return Geometry(field=H.field, ambient=H.ambient, points=keep)


def geometry_to_json(H):
    """Plain-dict form of the documented geometry JSON schema."""
    all_pts = enumerate_points(H.ambient, H.field)
    return {
        "q": H.field.q,
        "p": H.field.p,
        "k": H.field.k,
        "modulus": list(H.field.modulus),
        "ambient": H.ambient,
        "points": [list(all_pts[i].vec) for i in H.points],
    }


def geometry_from_json(obj):
    """Parse and validate the geometry JSON schema.

    Coordinates are re-canonicalized; duplicate points (after
    canonicalization) are rejected.
    """
    f = field_make(int(obj["q"]))
    if f.p != int(obj["p"]) or f.k != int(obj["k"]):
        raise ValueError("field header (p, k) inconsistent with q")
    if tuple(int(x) for x in obj.get("modulus", [])) != f.modulus:
        raise ValueError("modulus differs from the frozen table entry")
    n = int(obj["ambient"])
    if n < 1:
        raise ValueError("ambient rank must be at least 1")
    indices = []
    for coords in obj["points"]:
        v = tuple(int(x) for x in coords)
        if len(v) != n:
            raise ValueError("point coordinate list has wrong length")
        if not all(0 <= x < f.q for x in v):
            raise ValueError("coordinate code out of range for GF(%d)" % f.q)
        indices.append(point_index(canonical_vec(v, f), n, f))
    if len(indices) != len(set(indices)):
        raise ValueError("duplicate points: geometries are simple point sets")
    return Geometry(field=f, ambient=n, points=tuple(sorted(indices)))
