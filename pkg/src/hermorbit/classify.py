"""
Dimension-and-isotropy matching for normal holonomy.

For a full parallel submanifold M = G/K of CP^N the normal holonomy group is
the image of K acting on the normal space, and that action is the isotropy
representation of an irreducible Hermitian symmetric space H/S of complex
dimension dim N.  Matching therefore searches the catalog for spaces of the
right dimension whose isotropy is a quotient of K.

Two filters are provided:

* :func:`quotient_compatible` -- type level: S's simple factors form a
  sub-multiset of K's and the center does not grow.
* :func:`slice_isotropy` -- the image of K in U(N) itself, computed from the
  weights of the normal space.  A simple factor of K that acts trivially on
  N is dropped; :func:`normal_holonomy` requires S to equal this image.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .catalog import (
    DEFAULT_BOUNDS,
    HSS,
    Bounds,
    IsotropyDescriptor,
    NoStoredOrbitError,
    ProductDescriptor,
    Space,
    canonical,
    complex_orbit,
    cominuscule,
    cp,
    enumerate_spaces,
    isotropy,
    parse_space,
    table1_row,
)
from .embed import codim, first_codim, segre_codim
from .rootsys import build_root_system, fundamental_weight, subdiagram_nodes, weight_support

__all__ = [
    "MatchResult",
    "ClassificationError",
    "quotient_compatible",
    "slice_match",
    "slice_isotropy",
    "parallel_codim",
    "normal_holonomy",
    "stored_holonomy",
    "exclusion_scan",
    "orbit_consistency",
    "OrbitConsistency",
    "table1_sweep",
    "holonomy_match",
]


class ClassificationError(RuntimeError):
    """Zero or several candidates where exactly one was expected."""

    def __init__(self, message: str, result: "MatchResult"):
        super().__init__(message)
        self.result = result


@dataclass(frozen=True)
class MatchResult:
    target_K: IsotropyDescriptor
    required_dim: int
    candidates: tuple[HSS, ...]
    search_bounds: Bounds
    exact: bool = False

    def to_dict(self) -> dict:
        return {
            "target_K": str(self.target_K),
            "required_dim": self.required_dim,
            "candidates": [str(c) for c in self.candidates],
            "search_bounds": str(self.search_bounds),
            "exact": self.exact,
        }


def quotient_compatible(S: IsotropyDescriptor, K: IsotropyDescriptor) -> bool:
    """True iff S can be K modulo an ideal: factors a sub-multiset, center not larger."""
    return not (S.counter() - K.counter()) and S.center_rank <= K.center_rank


def slice_match(
    K: IsotropyDescriptor, c: int, bounds: Bounds = DEFAULT_BOUNDS, exact: bool = False
) -> MatchResult:
    """Catalog spaces of dimension ``c`` whose isotropy is a quotient of ``K``.

    With ``exact=True`` the isotropy must equal ``K`` (use with the slice image).
    """
    if c < 1:
        raise ValueError(f"required dimension must be >= 1, got {c}")
    found = []
    for d in enumerate_spaces(bounds):
        if d.dim_c != c:
            continue
        iso = isotropy(d)
        ok = iso == K if exact else quotient_compatible(iso, K)
        if ok:
            found.append(d)
    return MatchResult(K, c, tuple(found), bounds, exact)


# --- the slice representation ----------------------------------------------


def _components(d: Space) -> list[tuple[HSS, int]]:
    """(irreducible factor, degree) pairs whose outer tensor product is the ambient module."""
    if isinstance(d, ProductDescriptor):
        return [(canonical(f), 1) for f in d.factors]  # type: ignore[misc]
    d = canonical(d)  # type: ignore[assignment]
    return [(d, 2 if d.rank == 1 else 1)]


def parallel_codim(d: Space) -> int:
    """Codimension of the parallel embedding of ``d``.

    CP^n uses the quadratic Veronese map, a product of two projective spaces
    the Segre map, everything else the first canonical embedding.
    """
    if isinstance(d, ProductDescriptor):
        if len(d.factors) != 2 or any(f.rank != 1 for f in map(canonical, d.factors)):
            raise NoStoredOrbitError(f"{d}: only CP^p x CP^q (Segre) products are handled")
        p, q = (canonical(f).dim_c for f in d.factors)
        return segre_codim(p + 1, q + 1)
    d = canonical(d)  # type: ignore[assignment]
    if d.rank == 1:
        return codim(d, 2)
    return first_codim(d)


def slice_isotropy(d: Space) -> IsotropyDescriptor:
    """Lie-algebra type of the image of K in U(N) for the parallel embedding of ``d``.

    The ambient module is graded by the depth below the highest weight along
    the removed node(s); depth 0 is the point, total depth 1 the tangent
    space, total depth >= 2 the normal space.  A simple factor of K acts
    trivially on N iff every weight of N has zero Dynkin label on that
    factor's nodes.  The center acts on N (x) (C v)^* through the depth
    vectors, so its image has the rank of the span of those vectors.
    """
    comps = _components(d)
    per_comp = []  # (list of (type, nodes)), {weight: depth along removed node}
    for space, deg in comps:
        t, j = cominuscule(space)
        rs = build_root_system(t)
        lam = fundamental_weight(t.rank, j, deg)
        support = weight_support(rs, lam)
        levels: dict[tuple[int, ...], int] = {mu: depth[j - 1] for mu, depth in support.items()}
        factors = subdiagram_nodes(t, [j]) if t.rank > 1 else []
        per_comp.append((factors, levels))

    # weights of the tensor product: pick one weight per component
    normal: list[tuple[tuple[tuple[int, ...], ...], tuple[int, ...]]] = [((), ())]
    for _, levels in per_comp:
        normal = [(w + (mu,), lv + (lev,)) for w, lv in normal for mu, lev in levels.items()]
    normal = [(w, lv) for w, lv in normal if sum(lv) >= 2]

    kept = []
    for ci, (factors, _) in enumerate(per_comp):
        for t, nodes in factors:
            if any(w[ci][k - 1] != 0 for w, _ in normal for k in nodes):
                kept.append(t)
    center = _rank([[Fraction(x) for x in lv] for _, lv in normal])
    return IsotropyDescriptor(tuple(kept), center)


def _rank(rows: Sequence[Sequence[Fraction]]) -> int:
    rows = [list(r) for r in {tuple(r) for r in rows}]
    if not rows:
        return 0
    rank = 0
    ncols = len(rows[0])
    for col in range(ncols):
        piv = next((i for i in range(rank, len(rows)) if rows[i][col] != 0), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        for i in range(len(rows)):
            if i != rank and rows[i][col] != 0:
                f = rows[i][col] / rows[rank][col]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[rank])]
        rank += 1
    return rank


def stored_holonomy(d: Space) -> HSS:
    """Tabulated normal holonomy (as the space whose isotropy realises it) of a parallel orbit."""
    d = canonical(d)
    if isinstance(d, ProductDescriptor):
        fs = d.factors
        if len(fs) == 2 and all(f.rank == 1 for f in fs):
            a, b = fs[0].dim_c + 1, fs[1].dim_c + 1
            return canonical(HSS("AIII", (a - 1, b - 1)))  # type: ignore[return-value]
        raise NoStoredOrbitError(f"{d} is not a Segre orbit")
    fam, p = d.family, d.params
    if fam == "EIII":
        return HSS("Quadric", (10,))
    if d == HSS("DIII", (5,)):
        return cp(5)
    if fam == "AIII" and p[0] == 1:
        return canonical(HSS("CI", (p[1],)))  # type: ignore[return-value]
    if fam == "Quadric" or d == HSS("CI", (2,)):
        return cp(1)
    if fam == "AIII" and p[0] == 2:
        return canonical(HSS("DIII", (p[1],)))  # type: ignore[return-value]
    raise NoStoredOrbitError(f"{d} is not a parallel orbit in the table (rank {d.rank})")


def normal_holonomy(d: Space, bounds: Bounds = DEFAULT_BOUNDS) -> HSS:
    """The unique catalog space whose isotropy representation is the normal holonomy of ``d``.

    ``d`` is CP^n (quadratic Veronese embedding), an irreducible rank-2 space
    (first canonical embedding) or a Segre product.  Raises
    :class:`ClassificationError` unless exactly one candidate survives.
    """
    d = canonical(d)
    if isinstance(d, HSS) and d.rank > 2:
        raise ValueError(f"{d} has rank {d.rank}; its first embedding is not parallel")
    c = parallel_codim(d)
    if c < 1:
        raise ValueError(f"{d}: embedding has codimension {c}")
    S = slice_isotropy(d)
    res = slice_match(S, c, bounds, exact=True)
    if len(res.candidates) != 1:
        raise ClassificationError(
            f"{d}: {len(res.candidates)} candidates for normal holonomy "
            f"(dim {c}, image of K = {S}) within bounds {bounds}",
            res,
        )
    return res.candidates[0]


def holonomy_match(d: Space, bounds: Bounds = DEFAULT_BOUNDS) -> tuple[MatchResult, MatchResult]:
    """(coarse, exact) match results for ``d``: K versus the slice image."""
    d = canonical(d)
    c = parallel_codim(d)
    return (
        slice_match(isotropy(d), c, bounds),
        slice_match(slice_isotropy(d), c, bounds, exact=True),
    )


def exclusion_scan(bounds: Bounds = DEFAULT_BOUNDS) -> list[tuple[HSS, MatchResult]]:
    """Type-level matches for the first embedding of every rank >= 3 space in ``bounds``.

    Every candidate list is expected to be empty.
    """
    out = []
    for d in enumerate_spaces(bounds):
        if d.rank >= 3:
            out.append((d, slice_match(isotropy(d), first_codim(d), bounds)))
    return out


@dataclass(frozen=True)
class OrbitConsistency:
    space: str
    row: str
    orbit: str
    lhs: int  # dim G/K - 1 - dim M
    rhs: int  # codimension of the parallel embedding of M
    holds: bool

    def to_dict(self) -> dict:
        return dict(self.__dict__)


def orbit_consistency(d: Space) -> OrbitConsistency:
    """Does the K-orbit in P(T_o G/K) have the codimension of its parallel embedding?"""
    if isinstance(d, str):
        d = parse_space(d)
    row, _ = table1_row(d)  # type: ignore[arg-type]
    m = complex_orbit(d)  # type: ignore[arg-type]
    lhs = d.dim_c - 1 - m.dim_c
    rhs = parallel_codim(m)
    return OrbitConsistency(str(canonical(d)), row, str(m), lhs, rhs, lhs == rhs)


def table1_sweep(
    quadric: Sequence[int] = range(3, 13),
    plucker: Sequence[int] = range(5, 13),
    segre_sum: int = 12,
    veronese: Sequence[int] = range(1, 9),
) -> list[tuple[str, HSS]]:
    """Column-1 spaces for the six rows over the standard parameter sweeps.

    Quadric rows are parameterised by the orbit dimension n (ambient
    Quadric(n+2)); Plucker rows by n (ambient DIII(n), orbit Gr_2(C^n));
    Veronese by n (ambient CI(n+1), orbit CP^n); Segre by 2 <= a <= b.
    """
    out: list[tuple[str, HSS]] = [("EVII", HSS("EVII")), ("EIII", HSS("EIII"))]
    out += [("Veronese", HSS("CI", (n + 1,))) for n in veronese]
    out += [("Quadric", HSS("Quadric", (n + 2,))) for n in quadric]
    out += [("Plucker", HSS("DIII", (n,))) for n in plucker]
    out += [
        ("Segre", HSS("AIII", (a, s - a)))
        for s in range(4, segre_sum + 1)
        for a in range(2, s // 2 + 1)
    ]
    return out
