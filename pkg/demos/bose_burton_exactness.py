"""How large can a point set in PG(n-1, q) be without containing PG(m-1, q)?

The classical answer: delete a rank-(n-m+1) flat from PG(n-1, q); what is
left is extremal.  This script computes the exact extremal numbers by
branch-and-bound and lines them up against the closed-form sizes.
"""

from qgeom import bose_burton_value, ex_exact, field_make, g_size, make_pg

f2 = field_make(2)

print("forbidding a line PG(1,2):")
for n in (2, 3, 4):
    res = ex_exact(make_pg(2, f2), n)
    closed = bose_burton_value(2, n, f2)
    print("  n=%d  search=%-3d closed-form=%-3d status=%s"
          % (n, res.value, closed, res.status))

print("\nforbidding the Fano plane PG(2,2):")
for n in (3, 4):
    res = ex_exact(make_pg(3, f2), n)
    closed = g_size(n, f2, 2)
    print("  n=%d  search=%-3d closed-form=%-3d witness size=%d"
          % (n, res.value, closed, len(res.witness)))

f3 = field_make(3)
res = ex_exact(make_pg(2, f3), 2)
print("\nforbidding a full line over GF(3) in PG(1,3): %d of 4 points"
      % res.value)
