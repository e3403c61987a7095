import pytest

from qgeom import DivisionByZero, NotPrimePower, Unsupported, field_make
from qgeom.field import _MODULI, fe_add, fe_inv, fe_mul, is_irreducible

SUPPORTED = [2, 3, 4, 5, 7, 8, 9, 11, 13, 16]
AXIOM_GRID = [2, 3, 4, 5, 7, 8, 9, 16]


def test_field_make_prime():
    f = field_make(2)
    assert (f.p, f.k, f.modulus) == (2, 1, ())


def test_field_make_gf9():
    f = field_make(9)
    assert (f.p, f.k) == (3, 2)
    assert f.modulus == (2, 2, 1)  # x^2 + 2x + 2


def test_field_make_rejects_non_prime_power():
    with pytest.raises(NotPrimePower):
        field_make(6)
    with pytest.raises(NotPrimePower):
        field_make(12)


def test_field_make_rejects_large():
    with pytest.raises(Unsupported):
        field_make(17)
    with pytest.raises(Unsupported):
        field_make(25)


def test_moduli_are_irreducible():
    for q, mod in _MODULI.items():
        p = field_make(q).p
        assert is_irreducible(list(mod), p)
    # and a reducible control: x^2 + 1 = (x+1)^2 over GF(2)
    assert not is_irreducible([1, 0, 1], 2)


def test_gf2_addition_is_xor():
    f = field_make(2)
    assert fe_add(f, 1, 1) == 0


def test_gf4_multiplication_reduces_by_modulus():
    # codes: 2 = x, 3 = x + 1; x * x = x^2 = x + 1 mod x^2+x+1
    f = field_make(4)
    assert fe_mul(f, 2, 2) == 3


def test_gf5_inverse():
    f = field_make(5)
    assert fe_inv(f, 3) == 2


def test_inverse_of_zero_raises():
    with pytest.raises(DivisionByZero):
        fe_inv(field_make(7), 0)


@pytest.mark.parametrize("q", AXIOM_GRID)
def test_field_axioms_exhaustive(q):
    f = field_make(q)
    elems = range(q)
    for a in elems:
        assert f.add(a, 0) == a
        assert f.mul(a, 1) == a
        assert f.add(a, f.neg(a)) == 0
        if a:
            assert f.mul(a, f.inv(a)) == 1
        for b in elems:
            assert f.add(a, b) == f.add(b, a)
            assert f.mul(a, b) == f.mul(b, a)
            for c in elems:
                assert f.add(f.add(a, b), c) == f.add(a, f.add(b, c))
                assert f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c))
                assert f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c))


@pytest.mark.parametrize("q", AXIOM_GRID)
def test_frobenius_is_additive(q):
    f = field_make(q)

    def frob(a):
        # a^p by repeated multiplication
        r = a
        for _ in range(f.p - 1):
            r = f.mul(r, a)
        return r

    for a in range(q):
        for b in range(q):
            assert frob(f.add(a, b)) == f.add(frob(a), frob(b))


@pytest.mark.parametrize("q", SUPPORTED)
def test_log_antilog_tables_consistent(q):
    f = field_make(q)
    for a in range(1, q):
        assert f._exp[f._log[a]] == a
