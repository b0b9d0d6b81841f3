"""
Canonical embeddings f_d : G/K -> CP^{N_d} and their codimensions.

N_d + 1 is the dimension of the irreducible G-module with highest weight
d * Lambda_j, Lambda_j the cominuscule fundamental weight.  All arithmetic
is exact (Python integers).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .catalog import HSS, CatalogError, Space, canonical, cominuscule
from .rootsys import build_root_system, fundamental_weight, weyl_dim

__all__ = [
    "EmbeddingReport",
    "InequalityReport",
    "embedding_dim",
    "first_codim",
    "codim",
    "closed_form_codim",
    "check_inequalities",
    "embedding_report",
    "segre_codim",
]


def _irreducible(d: Space) -> HSS:
    if not isinstance(d, HSS):
        raise CatalogError(f"{d} is a product; only irreducible spaces have canonical embeddings here")
    return canonical(d)  # type: ignore[return-value]


def embedding_dim(d: Space, deg: int = 1) -> int:
    """N_deg, the projective dimension of the deg-th canonical embedding."""
    if deg < 1:
        raise ValueError(f"degree must be >= 1, got {deg}")
    d = _irreducible(d)
    t, j = cominuscule(d)
    rs = build_root_system(t)
    return weyl_dim(rs, fundamental_weight(t.rank, j, deg)) - 1


def codim(d: Space, deg: int = 1) -> int:
    return embedding_dim(d, deg) - _irreducible(d).dim_c


def first_codim(d: Space) -> int:
    return codim(d, 1)


def closed_form_codim(d: Space) -> int:
    """Codimension of f_1 from the tabulated closed forms (no Weyl formula)."""
    d = _irreducible(d)
    p = d.params
    if d.family == "AIII":
        a, b = p
        return comb(a + b, b) - a * b - 1
    if d.family == "CI":
        n = p[0]
        return comb(2 * n, n) - comb(2 * n, n - 2) - 1 - n * (n + 1) // 2
    if d.family == "DIII":
        n = p[0]
        return 2 ** (n - 1) - n * (n - 1) // 2 - 1
    if d.family == "Quadric":
        return 1
    return {"EIII": 10, "EVII": 28}[d.family]


def segre_codim(a: int, b: int) -> int:
    """Codimension of CP^{a-1} x CP^{b-1} in P(C^a (x) C^b), via the factor embeddings."""
    from .catalog import cp

    n_a = embedding_dim(cp(a - 1)) + 1 if a > 1 else 1
    n_b = embedding_dim(cp(b - 1)) + 1 if b > 1 else 1
    return n_a * n_b - 1 - (a - 1) - (b - 1)


@dataclass(frozen=True)
class InequalityReport:
    space: str
    deg: int
    m: int
    N_1: int
    N_d: int
    codim: int
    star_bound: int
    para0_bound: int
    star: bool
    para0_weak: bool
    para0_strict: bool

    def to_dict(self) -> dict:
        return dict(self.__dict__)

    @classmethod
    def from_dict(cls, data: dict) -> "InequalityReport":
        return cls(**data)


def check_inequalities(d: Space, deg: int) -> InequalityReport:
    """Compare codim(f_deg) with m(m+1)/2 and with N_1(N_1+1)/2.

    ``star``: codim > m(m+1)/2.  ``para0_weak``: codim >= N_1(N_1+1)/2;
    ``para0_strict`` the strict version.  Raw integers are kept as witnesses.
    """
    if deg < 2:
        raise ValueError(f"inequalities concern deg >= 2, got {deg}")
    d = _irreducible(d)
    m = d.dim_c
    n1 = embedding_dim(d, 1)
    nd = embedding_dim(d, deg)
    c = nd - m
    star_bound = m * (m + 1) // 2
    para0_bound = n1 * (n1 + 1) // 2
    return InequalityReport(
        space=str(d), deg=deg, m=m, N_1=n1, N_d=nd, codim=c,
        star_bound=star_bound, para0_bound=para0_bound,
        star=c > star_bound, para0_weak=c >= para0_bound, para0_strict=c > para0_bound,
    )


@dataclass(frozen=True)
class EmbeddingReport:
    space: str
    d: int
    N_d: int
    dim_c: int
    codim: int
    star: bool | None = None
    para0_weak: bool | None = None

    def to_dict(self) -> dict:
        return dict(self.__dict__)

    @classmethod
    def from_dict(cls, data: dict) -> "EmbeddingReport":
        return cls(**data)


def embedding_report(d: Space, deg: int = 1) -> EmbeddingReport:
    d = _irreducible(d)
    nd = embedding_dim(d, deg)
    star = para0 = None
    if deg >= 2:
        ineq = check_inequalities(d, deg)
        star, para0 = ineq.star, ineq.para0_weak
    rep = EmbeddingReport(str(d), deg, nd, d.dim_c, nd - d.dim_c, star, para0)
    assert rep.codim >= 0
    return rep
