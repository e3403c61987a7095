"""Restriction search, witness checking, and the sparse-flat dual view.

A geometry H restricts into a host G when some injective linear map on
span(H) carries every point of H to a point of G.  Finding a flat that
meets G sparsely is the same question asked of the complement: G has a
rank-m flat meeting it in a rank-(m-c) flat exactly when the complement
of G contains G(m-1, q, c).
"""

from qgeom import (
    complement_geometry,
    contains,
    field_make,
    find_sparse_flat,
    make_ag,
    make_g,
    make_pg,
    verify_witness,
)

f2 = field_make(2)
fano = make_pg(3, f2)
line = make_pg(2, f2)

w = contains(fano, line)
print("line in Fano plane:", "yes" if w else "no")
print("  witness map rows:", w.map)
print("  image points:", w.point_map)
print("  independent re-check:", verify_witness(fano, line, w))

affine = make_ag(3, f2)
print("\nline in AG(2,2):", "found" if contains(affine, line) else "none")

pg3 = make_pg(4, f2)
flat = find_sparse_flat(pg3, 3, 2)
print("\nrank-3 flat meeting PG(3,2) in a rank-1 flat:",
      "impossible (PG has no sparse flats)" if flat is None else flat)

dual_host = complement_geometry(make_g(4, f2, 2))
flat = find_sparse_flat(make_g(4, f2, 2), 3, 2)
witness = contains(dual_host, make_g(3, f2, 2))
print("sparse flat in G(3,2,2):", "found" if flat else "none",
      "/ dual containment:", "found" if witness else "none")
