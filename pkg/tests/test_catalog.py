"""Catalog of irreducible Hermitian symmetric spaces."""

import pytest

from hermorbit.catalog import (
    DEFAULT_BOUNDS,
    HSS,
    Bounds,
    CatalogError,
    IsotropyDescriptor,
    NoStoredOrbitError,
    ProductDescriptor,
    canonical,
    complex_orbit,
    cominuscule,
    cp,
    enumerate_spaces,
    isotropy,
    levi_isotropy,
    parse_space,
    presentation,
    table1_row,
)
from hermorbit.rootsys import DynkinType, build_root_system, fundamental_weight, lie_algebra_dim, weyl_dim

T = DynkinType.parse
NOTHING = dict(aiii=0, ci=0, diii=0, quadric=0)


def test_exceptional_only():
    assert [str(d) for d in enumerate_spaces(Bounds(**NOTHING))] == ["EIII", "EVII"]
    assert enumerate_spaces(Bounds(**NOTHING, exceptional=False)) == []


def test_small_aiii():
    got = enumerate_spaces(Bounds(**{**NOTHING, "aiii": 4}, aiii_b=2, exceptional=False))
    assert [str(d) for d in got] == ["AIII(1,1)", "AIII(1,2)", "AIII(2,2)"]


def test_default_contains_ci3():
    ci3 = next(d for d in enumerate_spaces() if d == HSS("CI", (3,)))
    assert (ci3.dim_c, ci3.rank) == (6, 3)


def test_default_catalog_is_canonical_and_duplicate_free():
    spaces = enumerate_spaces()
    assert len(spaces) == len(set(spaces)) == 61
    assert all(canonical(d) == d for d in spaces)
    assert enumerate_spaces() == spaces  # stable order


def test_monotone_in_bounds():
    small = set(enumerate_spaces(Bounds(aiii=6, ci=4, diii=7, quadric=7)))
    assert small <= set(enumerate_spaces())


@pytest.mark.parametrize(
    "name,factors,center",
    [("EIII", ["D5"], 1), ("AIII(1,6)", ["A5"], 1), ("Quadric(3)", ["A1"], 1), ("EVII", ["E6"], 1),
     ("AIII(2,4)", ["A1", "A3"], 1), ("Quadric(4)", ["A1", "A1"], 1), ("Quadric(10)", ["D5"], 1),
     ("AIII(1,1)", [], 1), ("DIII(6)", ["A5"], 1)],
)
def test_isotropy(name, factors, center):
    iso = isotropy(parse_space(name))
    assert sorted(map(str, iso.simple_factors)) == factors
    assert iso.center_rank == center


@pytest.mark.parametrize("d", enumerate_spaces() + [HSS("Quadric", (3,)), HSS("Quadric", (4,)), HSS("DIII", (4,))], ids=str)
def test_isotropy_is_levi_and_dimension_count(d):
    # K from the diagram with the cominuscule node removed; dim G - dim K = 2 dim_C
    assert levi_isotropy(d) == isotropy(d)
    t, _ = cominuscule(d)
    assert lie_algebra_dim(t) - isotropy(d).dim == 2 * d.dim_c


@pytest.mark.parametrize(
    "name,ambient,node",
    [("AIII(2,2)", "A3", 2), ("EVII", "E7", 7), ("EIII", "E6", 1), ("CI(4)", "C4", 4), ("DIII(6)", "D6", 6),
     ("Quadric(7)", "B4", 1), ("Quadric(8)", "D5", 1)],
)
def test_cominuscule(name, ambient, node):
    assert cominuscule(parse_space(name)) == (T(ambient), node)


def test_evii_node_is_unique_56():
    rs = build_root_system(T("E7"))
    hits = [j for j in range(1, 8) if weyl_dim(rs, fundamental_weight(7, j)) == 56]
    assert hits == [cominuscule(HSS("EVII"))[1]]


def test_quadric4_alias():
    assert canonical(HSS("Quadric", (4,))) == HSS("AIII", (2, 2))
    t, j = cominuscule(HSS("Quadric", (4,)))
    assert (t, j) == (T("D3"), 1)


@pytest.mark.parametrize(
    "a,b",
    [("CI(1)", "AIII(1,1)"), ("DIII(2)", "AIII(1,1)"), ("Quadric(1)", "AIII(1,1)"), ("DIII(3)", "AIII(1,3)"),
     ("Quadric(3)", "CI(2)"), ("Quadric(6)", "DIII(4)"), ("AIII(3,1)", "AIII(1,3)"), ("CP(4)", "AIII(1,4)")],
)
def test_aliases(a, b):
    assert canonical(parse_space(a)) == canonical(parse_space(b))
    assert parse_space(a).dim_c == parse_space(b).dim_c


@pytest.mark.parametrize(
    "src,dst",
    [("EVII", "EIII"), ("EIII", "DIII(5)"), ("CI(4)", "AIII(1,3)"), ("DIII(6)", "AIII(2,4)"),
     ("Quadric(9)", "Quadric(7)"), ("Quadric(6)", "AIII(2,2)"), ("Quadric(4)", "Product(AIII(1,1),AIII(1,1))"),
     ("AIII(3,4)", "Product(AIII(1,2),AIII(1,3))")],
)
def test_complex_orbit(src, dst):
    assert str(complex_orbit(parse_space(src))) == dst


def test_cp_has_no_orbit():
    with pytest.raises(NoStoredOrbitError):
        table1_row(cp(4))


@pytest.mark.parametrize("text", ["AIII(2,4)", "CI(3)", "Quadric(5)", "EIII", "EVII", "Product(AIII(1,1),AIII(1,2))"])
def test_parse_roundtrip(text):
    assert str(parse_space(text)) == text


@pytest.mark.parametrize("text", ["Foo(3)", "AIII(0,2)", "CI(0)", "DIII(1)", "Quadric(2)", "EIII(3)", "AIII(2)", ""])
def test_parse_errors(text):
    with pytest.raises(CatalogError):
        parse_space(text)


def test_bounds_parse():
    assert Bounds.parse(str(DEFAULT_BOUNDS)) == DEFAULT_BOUNDS
    assert Bounds.parse("CI=3") == Bounds(ci=3)
    b = Bounds(aiii=5, aiii_b=3, exceptional=False)
    assert Bounds.parse(str(b)) == b
    for bad in ["junk", "CI=x", "Z=3", "CI=-1"]:
        with pytest.raises(CatalogError):
            Bounds.parse(bad)


def test_product_descriptor():
    p = ProductDescriptor((cp(1), cp(2)))
    assert (p.dim_c, p.rank) == (3, 2)
    assert isotropy(p) == IsotropyDescriptor((T("A1"),), 2)


def test_presentations():
    assert presentation(HSS("Quadric", (10,))) == "SO(12)/T1.SO(10)"
    assert presentation(cp(5)) == "CP5 = U(6)/U(1).U(5)"
