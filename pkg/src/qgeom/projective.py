"""Points and flats of PG(n-1, q).

Vectors are tuples of field element codes, coordinate 0 first.  A point is
the canonical representative of a rank-1 subspace: the unique scalar
multiple whose first nonzero coordinate is 1.  Points are indexed by the
lexicographic order of their canonical vectors (coordinates compared by
code), which is the order iter_canonical_vectors yields them in.

Flats are subspaces stored as reduced row-echelon bases, which are unique
per subspace, so flats compare and hash structurally.  Rank here always
means subspace dimension: a rank-k flat carries (q^k - 1)/(q - 1) points.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, product

from .errors import PointInFlat, ZeroVector
from .field import FieldSpec

Vector = tuple


@dataclass(frozen=True)
class Point:
    vec: Vector
    index: int


@dataclass(frozen=True)
class Flat:
    basis: tuple  # RREF rows, possibly empty (the rank-0 flat)
    n: int        # ambient rank
    field: FieldSpec

    @property
    def rank(self):
        return len(self.basis)


def canonical_vec(v, f):
    """Scale v so its first nonzero coordinate is 1."""
    for c in v:
        if c:
            if c == 1:
                return tuple(v)
            s = f.inv(c)
            return tuple(f.mul(s, x) for x in v)
    raise ZeroVector("cannot canonicalize the zero vector")


def iter_canonical_vectors(n, f):
    """Yield every canonical vector of length n in lexicographic order.

    Vectors with a later leading 1 start with more zeros and therefore
    come first; within one leading position the free tail runs in
    lexicographic order of codes.
    """
    q = f.q
    for lead in range(n - 1, -1, -1):
        head = (0,) * lead + (1,)
        for tail in product(range(q), repeat=n - lead - 1):
            yield head + tail


@lru_cache(maxsize=None)
def enumerate_points(n, f):
    """All points of PG(n-1, q) as a tuple, position = index."""
    return tuple(Point(vec=v, index=i)
                 for i, v in enumerate(iter_canonical_vectors(n, f)))


@lru_cache(maxsize=None)
def _point_index_map(n, f):
    return {pt.vec: pt.index for pt in enumerate_points(n, f)}


def point_index(v, n, f):
    """Index of the point spanned by v in the fixed enumeration."""
    return _point_index_map(n, f)[canonical_vec(v, f)]


def canonical_point(v, f, n=None):
    if n is None:
        n = len(v)
    cv = canonical_vec(v, f)
    return Point(vec=cv, index=point_index(cv, n, f))


def pg_size(n, f):
    """(q^n - 1)/(q - 1): the number of points of PG(n-1, q)."""
    return (f.q ** n - 1) // (f.q - 1)


def gaussian_binomial(n, k, q):
    """Number of rank-k flats of PG(n-1, q), by the product formula."""
    num = den = 1
    for i in range(k):
        num *= q ** (n - i) - 1
        den *= q ** (k - i) - 1
    assert num % den == 0
    return num // den


def rref(rows, n, f, transform=False):
    """Reduced row echelon form over GF(q).

    Returns (rows, pivots) or, with transform=True, (rows, pivots, T)
    where T satisfies result = T @ input (rows of T aligned with the
    returned rows; only the rows kept are returned).
    """
    m = len(rows)
    R = [list(r) for r in rows]
    T = [[1 if i == j else 0 for j in range(m)] for i in range(m)]
    pivots = []
    pr = 0
    for col in range(n):
        piv = None
        for i in range(pr, m):
            if R[i][col]:
                piv = i
                break
        if piv is None:
            continue
        R[pr], R[piv] = R[piv], R[pr]
        T[pr], T[piv] = T[piv], T[pr]
        c = R[pr][col]
        if c != 1:
            s = f.inv(c)
            R[pr] = [f.mul(s, x) for x in R[pr]]
            T[pr] = [f.mul(s, x) for x in T[pr]]
        for i in range(m):
            if i != pr and R[i][col]:
                factor = R[i][col]
                R[i] = [f.sub(x, f.mul(factor, y)) for x, y in zip(R[i], R[pr])]
                T[i] = [f.sub(x, f.mul(factor, y)) for x, y in zip(T[i], T[pr])]
        pivots.append(col)
        pr += 1
        if pr == m:
            break
    out = tuple(tuple(r) for r in R[:pr])
    if transform:
        return out, tuple(pivots), tuple(tuple(t) for t in T[:pr])
    return out, tuple(pivots)


def reduce_vector(v, basis, pivots, f):
    """Remainder of v after elimination against RREF rows."""
    v = list(v)
    for row, c in zip(basis, pivots):
        if v[c]:
            factor = v[c]
            v = [f.sub(x, f.mul(factor, y)) for x, y in zip(v, row)]
    return tuple(v)


def span(points, n, f):
    """The flat spanned by a collection of points (or raw vectors)."""
    rows = [p.vec if isinstance(p, Point) else tuple(p) for p in points]
    basis, _ = rref(rows, n, f)
    return Flat(basis=basis, n=n, field=f)


def flat_contains_point(F, p):
    v = p.vec if isinstance(p, Point) else tuple(p)
    assert len(v) == F.n, "ambient rank mismatch"
    return not any(reduce_vector(v, F.basis, _pivots_of(F), F.field))


def _pivots_of(F):
    # RREF pivots are recoverable as the first nonzero column of each row.
    pivots = []
    for row in F.basis:
        for c, x in enumerate(row):
            if x:
                pivots.append(c)
                break
    return tuple(pivots)


def nullspace(rows, n, f):
    """RREF basis of {x : rows @ x = 0} (orthogonal complement of the row space)."""
    basis, pivots = rref(rows, n, f)
    free = [c for c in range(n) if c not in pivots]
    out = []
    for c in free:
        x = [0] * n
        x[c] = 1
        for row, pc in zip(basis, pivots):
            x[pc] = f.neg(row[c])
        out.append(tuple(x))
    nb, _ = rref(out, n, f)
    return nb


def flat_intersect(F1, F2):
    """Intersection of two flats, via double orthogonal complement."""
    assert F1.n == F2.n and F1.field == F2.field, "ambient mismatch"
    n, f = F1.n, F1.field
    n1 = nullspace(F1.basis, n, f)
    n2 = nullspace(F2.basis, n, f)
    basis = nullspace(n1 + n2, n, f)
    return Flat(basis=basis, n=n, field=f)


def flat_points(F):
    """The (q^r - 1)/(q - 1) points lying on F."""
    f, n, r = F.field, F.n, F.rank
    pts = set()
    for coeffs in iter_canonical_vectors(r, f) if r else ():
        v = [0] * n
        for a, row in zip(coeffs, F.basis):
            if a:
                v = [f.add(x, f.mul(a, y)) for x, y in zip(v, row)]
        pts.add(canonical_point(tuple(v), f, n))
    return pts


def iter_flats(n, f, k):
    """Yield every rank-k flat of PG(n-1, q) exactly once.

    Flats are generated directly as RREF matrices: choose the pivot
    columns, then run over all assignments of the free entries (row i may
    be nonzero only right of its pivot and outside later pivot columns).
    """
    q = f.q
    if k == 0:
        yield Flat(basis=(), n=n, field=f)
        return
    for pivots in combinations(range(n), k):
        pivset = set(pivots)
        free = [(i, j) for i in range(k) for j in range(pivots[i] + 1, n)
                if j not in pivset]
        for assignment in product(range(q), repeat=len(free)):
            rows = [[0] * n for _ in range(k)]
            for i, pc in enumerate(pivots):
                rows[i][pc] = 1
            for (i, j), val in zip(free, assignment):
                rows[i][j] = val
            yield Flat(basis=tuple(tuple(r) for r in rows), n=n, field=f)


def enumerate_flats(n, f, k):
    return list(iter_flats(n, f, k))


def extend_flat(F, p):
    """The flat spanned by F and one extra point; rank grows by exactly 1."""
    if flat_contains_point(F, p):
        raise PointInFlat("point already lies on the flat")
    v = p.vec if isinstance(p, Point) else tuple(p)
    basis, _ = rref(list(F.basis) + [v], F.n, F.field)
    return Flat(basis=basis, n=F.n, field=F.field)
