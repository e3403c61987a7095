"""Extremal densities for a forbidden restriction drift toward a limit.

For a forbidden geometry with critical exponent c over GF(q) the extremal
density ex(n) / |PG(n-1, q)| approaches 1 - q^(1-c) as n grows.  We print
the first few rows of the table, as exact fractions, next to that limit.
"""

from qgeom import critical_exponent, density_table, field_make, make_ag, make_pg

f2 = field_make(2)
f3 = field_make(3)

for name, guest, n_range in (
    ("a line PG(1,2)", make_pg(2, f2), range(2, 5)),
    ("the Fano plane PG(2,2)", make_pg(3, f2), range(3, 5)),
    ("a cap-set pattern AG(1,3)", make_ag(2, f3), range(2, 4)),
):
    rows = density_table(guest, n_range)
    print("forbidding %s  (critical exponent %d, limit %s):"
          % (name, critical_exponent(guest), rows[0].limit))
    for row in rows:
        print("  n=%d  ex=%-3d of %-3d  density=%s  status=%s"
              % (row.n, row.ex, row.total, row.density, row.status))
    print()
