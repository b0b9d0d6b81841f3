"""Normal holonomy matching and the exclusion scan."""

import pytest

from hermorbit.catalog import (
    DEFAULT_BOUNDS,
    HSS,
    Bounds,
    IsotropyDescriptor,
    ProductDescriptor,
    cp,
    enumerate_spaces,
    isotropy,
    parse_space,
)
from hermorbit.classify import (
    ClassificationError,
    exclusion_scan,
    holonomy_match,
    normal_holonomy,
    orbit_consistency,
    parallel_codim,
    quotient_compatible,
    slice_isotropy,
    slice_match,
    stored_holonomy,
    table1_sweep,
)
from hermorbit.rootsys import DynkinType

T = DynkinType.parse


def iso(*names, center=1):
    return IsotropyDescriptor(tuple(T(n) for n in names), center)


@pytest.mark.parametrize(
    "S,K,ok",
    [(iso("D5"), iso("D5"), True), (iso("A4"), iso("A4"), True), (iso("E6"), iso("A5"), False),
     (iso(), iso("A4"), True), (iso("A1", "A1"), iso("A1"), False), (iso("A1", center=2), iso("A1"), False)],
)
def test_quotient_compatible(S, K, ok):
    assert quotient_compatible(S, K) is ok


def test_no_28_dim_space():
    assert slice_match(iso("E6"), 28).candidates == ()
    # dimension 28 does occur, but never with an E6 factor in the isotropy
    assert {str(d) for d in enumerate_spaces() if d.dim_c == 28} == {"CI(7)", "DIII(8)", "AIII(4,7)"}


def test_spinor_slice():
    assert slice_match(iso("D5"), 10).candidates == (HSS("Quadric", (10,)),)


def test_a4_slice():
    assert slice_match(iso("A4"), 5).candidates == (cp(5),)


@pytest.mark.parametrize(
    "name,hol",
    [("EIII", "Quadric(10)"), ("DIII(5)", "AIII(1,5)"), ("AIII(1,3)", "CI(3)"), ("AIII(1,1)", "AIII(1,1)"),
     ("AIII(2,4)", "Quadric(6)"), ("Quadric(7)", "AIII(1,1)"), ("CI(2)", "AIII(1,1)"),
     ("Product(AIII(1,2),AIII(1,3))", "AIII(2,3)")],
)
def test_normal_holonomy_examples(name, hol):
    d = parse_space(name)
    assert str(normal_holonomy(d)) == hol == str(stored_holonomy(d))


@pytest.mark.parametrize("n", range(1, 9))
def test_veronese_holonomy(n):
    assert normal_holonomy(cp(n)) == (HSS("CI", (n,)) if n > 1 else cp(1))


def test_rank3_rejected():
    with pytest.raises(ValueError):
        normal_holonomy(HSS("CI", (3,)))


def test_coarse_matching_is_ambiguous_somewhere():
    # K = T1.A1.A2 surjects on both U(4)/U(1)U(3) and Sp(2)/U(2); only one is the image on N
    coarse, exact = holonomy_match(HSS("AIII", (2, 3)))
    assert set(coarse.candidates) == {cp(3), HSS("CI", (2,))}
    assert exact.candidates == (cp(3),)
    assert slice_isotropy(HSS("AIII", (2, 3))) == iso("A2")


def test_slice_isotropy_drops_trivial_factors():
    # Sp(2)/U(2) = Quadric(3): N is the 1-dim determinant line, SU(2) acts trivially
    assert slice_isotropy(HSS("CI", (2,))) == iso()
    # U(n) acts on Sym^2 effectively
    assert slice_isotropy(cp(4)) == iso("A3")


def test_too_small_bounds_fail_loudly():
    with pytest.raises(ClassificationError) as exc:
        normal_holonomy(HSS("EIII"), Bounds(quadric=8))
    assert exc.value.result.candidates == ()
    assert exc.value.result.required_dim == 10


def test_ci3_brute_force():
    # K = U(3), required 7; spaces with a quotient of U(3) as isotropy: CP^1, CP^3 (dim 3), CI(3) (dim 6)
    required = parallel_codim(HSS("CI", (3,)))
    assert required == 7
    K = isotropy(HSS("CI", (3,)))
    dims = sorted({d.dim_c for d in enumerate_spaces() if quotient_compatible(isotropy(d), K)})
    assert dims == [1, 3, 6]
    assert required not in dims


def test_diii6_brute_force():
    K = isotropy(HSS("DIII", (6,)))
    assert parallel_codim(HSS("DIII", (6,))) == 16
    dims = sorted(d.dim_c for d in enumerate_spaces() if isotropy(d).simple_factors == K.simple_factors)
    assert dims == [6, 15, 21]


def test_exclusion_scan_empty():
    scanned = exclusion_scan()
    assert scanned
    assert all(d.rank >= 3 for d, _ in scanned)
    assert all(res.candidates == () for _, res in scanned)
    evii = dict((str(d), r) for d, r in scanned)["EVII"]
    assert evii.required_dim == 28


def test_larger_bounds_do_not_lose_candidates():
    small, big = Bounds(aiii=8, ci=5, diii=8, quadric=8), DEFAULT_BOUNDS
    for K, c in [(iso("A3"), 6), (iso("A1"), 3), (iso("D5"), 10)]:
        assert set(slice_match(K, c, small).candidates) <= set(slice_match(K, c, big).candidates)


@pytest.mark.parametrize("row,d", table1_sweep(), ids=lambda x: str(x))
def test_orbit_consistency_sweep(row, d):
    r = orbit_consistency(d)
    assert r.holds and r.lhs == r.rhs


def test_orbit_consistency_examples():
    assert orbit_consistency(HSS("EVII")).lhs == 10
    for n in range(1, 8):
        assert orbit_consistency(HSS("CI", (n + 1,))).rhs == n * (n + 1) // 2
    for n in range(5, 13):
        assert orbit_consistency(HSS("DIII", (n,))).rhs == (n - 2) * (n - 3) // 2


def test_product_holonomy_needs_two_projective_factors():
    with pytest.raises(LookupError):
        parallel_codim(ProductDescriptor((HSS("CI", (2,)), cp(1))))
