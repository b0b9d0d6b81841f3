"""Root systems, Weyl dimensions and weight supports."""

from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hermorbit.rootsys import (
    DynkinType,
    InadmissibleTypeError,
    NonDominantWeightError,
    all_orderings,
    build_root_system,
    canonicalize,
    cartan_matrix,
    fundamental_weight,
    identify_type,
    lie_algebra_dim,
    permuted_root_system,
    positive_root_count,
    subdiagram_types,
    weight_support,
    weyl_dim,
)


def T(s):
    return DynkinType.parse(s)


def _admissible(max_rank=10):
    out = [T(f"A{n}") for n in range(1, max_rank + 1)]
    out += [T(f"B{n}") for n in range(2, max_rank + 1)]
    out += [T(f"C{n}") for n in range(2, max_rank + 1)]
    out += [T(f"D{n}") for n in range(3, max_rank + 1)]
    return out + [T("E6"), T("E7")]


# independent oracle: classical positive root counts
def _root_count_oracle(t):
    n = t.rank
    return {"A": n * (n + 1) // 2, "B": n * n, "C": n * n, "D": n * (n - 1)}.get(t.family) or {6: 36, 7: 63}[n]


@pytest.mark.parametrize("name,count", [("A1", 1), ("E7", 63), ("D5", 20), ("E6", 36)])
def test_positive_root_examples(name, count):
    assert positive_root_count(T(name)) == count


def test_e7_root_count_matches_dimension():
    assert positive_root_count(T("E7")) == (133 - 7) // 2
    assert lie_algebra_dim(T("E7")) == 133


@pytest.mark.parametrize("t", _admissible(), ids=str)
def test_root_counts_and_cartan_data(t):
    rs = build_root_system(t)
    rs.check()
    assert len(rs.positive_roots) == _root_count_oracle(t)
    # symmetrized Cartan is symmetric
    b = rs.symmetrized()
    assert all(b[i][j] == b[j][i] for i in range(t.rank) for j in range(t.rank))


@pytest.mark.parametrize(
    "src,dst", [("D3", "A3"), ("C2", "B2"), ("A4", "A4"), ("B1", "A1"), ("C1", "A1"), ("B2", "B2")]
)
def test_canonicalize(src, dst):
    assert canonicalize(T(src)) == T(dst)


@pytest.mark.parametrize("bad", ["D2", "D1", "E5", "E8", "A0", "F4", "G2"])
def test_inadmissible(bad):
    with pytest.raises((InadmissibleTypeError, ValueError)):
        canonicalize(T(bad))


def test_bn_cn_short_and_long_last_node():
    # a_ij = <alpha_i^vee, alpha_j>; the -2 sits in the row of the short root
    b, c = cartan_matrix(T("B3")), cartan_matrix(T("C3"))
    assert b[2][1] == -2 and b[1][2] == -1
    assert c[1][2] == -2 and c[2][1] == -1


@pytest.mark.parametrize(
    "name,j,dim",
    [("A1", 1, 2), ("E7", 7, 56), ("C3", 3, 14), ("D5", 5, 16), ("E6", 1, 27), ("E6", 2, 78), ("E7", 1, 133)],
)
def test_weyl_examples(name, j, dim):
    t = T(name)
    assert weyl_dim(build_root_system(t), fundamental_weight(t.rank, j)) == dim


def test_e7_fundamental_dims():
    rs = build_root_system(T("E7"))
    dims = [weyl_dim(rs, fundamental_weight(7, j)) for j in range(1, 8)]
    assert dims == [133, 912, 8645, 365750, 27664, 1539, 56]


@pytest.mark.parametrize("n", range(1, 11))
def test_type_a_binomial_and_duality(n):
    rs = build_root_system(T(f"A{n}"))
    for k in range(1, n + 1):
        d = weyl_dim(rs, fundamental_weight(n, k))
        assert d == comb(n + 1, k)
        assert d == weyl_dim(rs, fundamental_weight(n, n + 1 - k))


@pytest.mark.parametrize("t", _admissible(), ids=str)
def test_trivial_weight_and_scaling(t):
    rs = build_root_system(t)
    assert weyl_dim(rs, (0,) * t.rank) == 1
    tripled = tuple(3 * x for x in rs.symmetrizer)
    for j in range(1, t.rank + 1):
        lam = fundamental_weight(t.rank, j)
        assert weyl_dim(rs, lam, tripled) == weyl_dim(rs, lam)


def test_adjoint_dimension():
    # highest root of E6 is Lambda_2, of E7 Lambda_1; the adjoint has dim g
    assert weyl_dim(build_root_system(T("E6")), fundamental_weight(6, 2)) == lie_algebra_dim(T("E6"))
    assert weyl_dim(build_root_system(T("E7")), fundamental_weight(7, 1)) == lie_algebra_dim(T("E7"))


def test_non_dominant_rejected():
    with pytest.raises(NonDominantWeightError):
        weyl_dim(build_root_system(T("A2")), (1, -1))


@pytest.mark.parametrize("name", ["A4", "B3", "C4", "D5", "E6"])
def test_ordering_independence(name):
    t = T(name)
    base = build_root_system(t)
    dims = sorted(weyl_dim(base, fundamental_weight(t.rank, j)) for j in range(1, t.rank + 1))
    for perm in all_orderings(t.rank, limit=4):
        rs = permuted_root_system(t, perm)
        assert len(rs.positive_roots) == len(base.positive_roots)
        assert identify_type(rs.cartan) == canonicalize(t)
        got = sorted(weyl_dim(rs, fundamental_weight(t.rank, j)) for j in range(1, t.rank + 1))
        assert got == dims


@settings(max_examples=40, deadline=None)
@given(n=st.integers(1, 5), lam=st.lists(st.integers(0, 3), min_size=5, max_size=5))
def test_weyl_positive_and_monotone(n, lam):
    rs = build_root_system(T(f"A{n}"))
    lam = tuple(lam[:n])
    d = weyl_dim(rs, lam)
    assert d >= 1
    bigger = (lam[0] + 1,) + lam[1:]
    assert weyl_dim(rs, bigger) > d


@settings(max_examples=30, deadline=None)
@given(a=st.integers(0, 4), b=st.integers(0, 4))
def test_sl3_closed_form(a, b):
    # oracle: (a+1)(b+1)(a+b+2)/2
    assert weyl_dim(build_root_system(T("A2")), (a, b)) == (a + 1) * (b + 1) * (a + b + 2) // 2


def test_weight_support_sizes():
    # minuscule modules: every weight is extremal with multiplicity one
    assert len(weight_support(build_root_system(T("E6")), fundamental_weight(6, 1))) == 27
    assert len(weight_support(build_root_system(T("E7")), fundamental_weight(7, 7))) == 56
    assert len(weight_support(build_root_system(T("D5")), fundamental_weight(5, 5))) == 16
    # Sym^2 C^3 has 6 weights
    assert len(weight_support(build_root_system(T("A2")), (2, 0))) == 6


def test_weight_support_depths():
    rs = build_root_system(T("A3"))
    sup = weight_support(rs, fundamental_weight(3, 2))
    assert sup[(0, 1, 0)] == (0, 0, 0)
    assert max(sum(d) for d in sup.values()) == 4  # Lambda_2 - (-w0 Lambda_2) = a1 + 2a2 + a3


@pytest.mark.parametrize(
    "name,node,expect",
    [("E6", 1, ["D5"]), ("E7", 7, ["E6"]), ("A5", 2, ["A1", "A3"]), ("D5", 5, ["A4"]), ("C4", 4, ["A3"]), ("B4", 1, ["B3"])],
)
def test_subdiagrams(name, node, expect):
    assert sorted(map(str, subdiagram_types(T(name), [node]))) == expect


def test_symmetrizer_is_normalized():
    rs = build_root_system(T("C3"))
    assert min(rs.symmetrizer) == Fraction(1)
    assert rs.symmetrizer == (Fraction(1), Fraction(1), Fraction(2))
