from fractions import Fraction

import pytest

from qgeom import (
    EmptyGeometry,
    Geometry,
    complement_geometry,
    critical_exponent,
    enumerate_points,
    field_make,
    g_size,
    geometry_from_json,
    geometry_rank,
    geometry_to_json,
    make_ag,
    make_g,
    make_pg,
    pg_size,
    span,
)

F2 = field_make(2)
F3 = field_make(3)


def test_make_pg_sizes():
    assert len(make_pg(3, F2)) == 7
    assert len(make_pg(2, F3)) == 4
    assert len(make_pg(1, F2)) == 1


def test_make_g_examples():
    assert make_g(3, F2, 3) == make_pg(3, F2)
    assert len(make_g(3, F2, 1)) == 4  # AG(2,2)
    assert len(make_g(3, F2, 2)) == 6


def test_make_ag_sizes():
    assert len(make_ag(2, F3)) == 3
    assert len(make_ag(3, F2)) == 4
    assert len(make_ag(3, F3)) == 9


@pytest.mark.parametrize("q", [2, 3, 4])
def test_g_size_matches_construction(q):
    f = field_make(q)
    for m in range(1, 6):
        for c in range(m + 1):
            assert len(make_g(m, f, c)) == g_size(m, f, c)


@pytest.mark.parametrize("q", [2, 3])
def test_g_family_endpoints(q):
    f = field_make(q)
    for m in range(1, 5):
        assert make_g(m, f, m).point_set == make_pg(m, f).point_set
        assert make_g(m, f, 1).point_set == make_ag(m, f).point_set


def test_g_size_values():
    assert g_size(3, F2, 1) == 4
    assert g_size(2, F3, 1) == 3
    assert g_size(4, F2, 2) == 12


def test_geometry_rank():
    assert geometry_rank(make_pg(3, F2)) == 3
    two = Geometry(field=F2, ambient=3, points=(0, 1))
    assert geometry_rank(two) == 2
    assert geometry_rank(Geometry(field=F2, ambient=3, points=())) == 0


@pytest.mark.parametrize("q", [2, 3])
def test_g_rank_is_m_for_positive_c(q):
    f = field_make(q)
    for m in range(1, 5):
        for c in range(1, m + 1):
            assert geometry_rank(make_g(m, f, c)) == m


def test_critical_exponent_examples():
    assert critical_exponent(make_pg(3, F2)) == 3
    assert critical_exponent(make_ag(3, F3)) == 1
    assert critical_exponent(make_g(4, F2, 2)) == 2


@pytest.mark.parametrize("q", [2, 3])
def test_critical_exponent_of_g_family(q):
    f = field_make(q)
    for m in range(1, 5):
        for c in range(1, m + 1):
            assert critical_exponent(make_g(m, f, c)) == c


def test_critical_exponent_uses_span_not_ambient():
    # a full line inside a bigger ambient space: indices 0,1,2 are
    # (0,0,0,1), (0,0,1,0), (0,0,1,1), a rank-2 flat of PG(3,2)
    line = Geometry(field=F2, ambient=4, points=(0, 1, 2))
    assert geometry_rank(line) == 2
    assert critical_exponent(line) == 2
    # two of its three points leave the third as a disjoint rank-1 flat
    partial = Geometry(field=F2, ambient=4, points=(0, 1))
    assert critical_exponent(partial) == 1


def test_critical_exponent_rejects_empty():
    with pytest.raises(EmptyGeometry):
        critical_exponent(Geometry(field=F2, ambient=3, points=()))


def test_complement():
    ag = make_g(3, F2, 1)
    comp = complement_geometry(ag)
    assert len(comp) == 3
    assert geometry_rank(comp) == 2  # the removed Fano line returns
    assert complement_geometry(comp) == ag
    assert len(complement_geometry(make_pg(3, F2))) == 0


def test_density_ratio_identity():
    # |G(n-1,q,c-1)| / |PG(n-1,q)| == q^n (1 - q^(1-c)) / (q^n - 1), exactly
    for q in (2, 3):
        f = field_make(q)
        for n in range(2, 6):
            for c in range(2, n + 1):
                lhs = Fraction(g_size(n, f, c - 1), pg_size(n, f))
                rhs = (Fraction(q ** n, q ** n - 1)
                       * (1 - Fraction(1, q ** (c - 1))))
                assert lhs == rhs


def test_json_round_trip():
    H = make_g(3, F3, 2)
    obj = geometry_to_json(H)
    assert obj["q"] == 3 and obj["ambient"] == 3
    assert geometry_from_json(obj) == H


def test_json_recanonicalizes_and_rejects_duplicates():
    f = F3
    obj = geometry_to_json(make_pg(2, f))
    # scale a point: still the same projective point after parsing
    obj["points"][0] = [f.mul(2, x) for x in obj["points"][0]]
    assert geometry_from_json(obj) == make_pg(2, f)
    obj["points"].append(obj["points"][1])
    with pytest.raises(ValueError):
        geometry_from_json(obj)


def test_json_rejects_foreign_modulus():
    obj = geometry_to_json(make_pg(2, field_make(4)))
    obj["modulus"] = [1, 0, 1]
    with pytest.raises(ValueError):
        geometry_from_json(obj)
