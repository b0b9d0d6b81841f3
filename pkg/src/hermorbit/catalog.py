"""
Irreducible compact Hermitian symmetric spaces G/K and the isotropy-orbit table.

Families and their text form::

    AIII(a,b)   SU(a+b)/S(U(a) x U(b)),  Grassmannian Gr_a(C^{a+b})
    CI(n)       Sp(n)/U(n)
    DIII(n)     SO(2n)/U(n)
    Quadric(n)  SO(n+2)/SO(2) x SO(n),   the n-dimensional complex quadric
    EIII        E6/T^1 Spin(10)
    EVII        E7/T^1 E6

Low-dimensional coincidences are resolved by :func:`canonical`:
CI(1) = DIII(2) = Quadric(1) = AIII(1,1), DIII(3) = AIII(1,3),
Quadric(3) = CI(2), Quadric(4) = AIII(2,2), DIII(4) = Quadric(6).
Quadric(2) = CP^1 x CP^1 is reducible and not a catalog entry.
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass
from typing import Union

from .rootsys import DynkinType, canonicalize, lie_algebra_dim, subdiagram_types

__all__ = [
    "HSS",
    "ProductDescriptor",
    "IsotropyDescriptor",
    "Bounds",
    "DEFAULT_BOUNDS",
    "Space",
    "CatalogError",
    "NoStoredOrbitError",
    "canonical",
    "parse_space",
    "enumerate_spaces",
    "isotropy",
    "levi_isotropy",
    "cominuscule",
    "complex_orbit",
    "presentation",
    "table1_row",
    "cp",
]

FAMILIES = ("AIII", "CI", "DIII", "Quadric", "EIII", "EVII")
_ARITY = {"AIII": 2, "CI": 1, "DIII": 1, "Quadric": 1, "EIII": 0, "EVII": 0}


class CatalogError(ValueError):
    pass


class NoStoredOrbitError(LookupError):
    pass


@dataclass(frozen=True)
class IsotropyDescriptor:
    """Lie-algebra type of an isotropy group: simple factors (multiset) and center rank."""

    simple_factors: tuple[DynkinType, ...]
    center_rank: int

    def __post_init__(self) -> None:
        factors = tuple(sorted(canonicalize(t) for t in self.simple_factors))
        object.__setattr__(self, "simple_factors", factors)

    def __str__(self) -> str:
        parts = [f"T{self.center_rank}"] if self.center_rank else []
        parts += [str(t) for t in self.simple_factors]
        return ".".join(parts) or "trivial"

    def counter(self) -> Counter:
        return Counter(self.simple_factors)

    @property
    def dim(self) -> int:
        """Real dimension of the Lie algebra."""
        return self.center_rank + sum(lie_algebra_dim(t) for t in self.simple_factors)


@dataclass(frozen=True, order=True)
class HSS:
    """One irreducible Hermitian symmetric space, possibly a non-canonical presentation."""

    family: str
    params: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if self.family not in FAMILIES:
            raise CatalogError(f"unknown family {self.family!r}")
        if len(self.params) != _ARITY[self.family]:
            raise CatalogError(f"{self.family} takes {_ARITY[self.family]} parameters, got {self.params}")
        _check_floor(self.family, self.params)

    def __str__(self) -> str:
        if not self.params:
            return self.family
        return f"{self.family}({','.join(map(str, self.params))})"

    @property
    def dim_c(self) -> int:
        p = self.params
        return {
            "AIII": lambda: p[0] * p[1],
            "CI": lambda: p[0] * (p[0] + 1) // 2,
            "DIII": lambda: p[0] * (p[0] - 1) // 2,
            "Quadric": lambda: p[0],
            "EIII": lambda: 16,
            "EVII": lambda: 27,
        }[self.family]()

    @property
    def rank(self) -> int:
        p = self.params
        if self.family == "AIII":
            return min(p)
        if self.family == "CI":
            return p[0]
        if self.family == "DIII":
            return p[0] // 2
        if self.family == "Quadric":
            return 1 if p[0] == 1 else 2
        return {"EIII": 2, "EVII": 3}[self.family]

    @property
    def irreducible(self) -> bool:
        return True


def cp(n: int) -> HSS:
    """Complex projective space CP^n as AIII(1,n)."""
    return HSS("AIII", (1, n))


@dataclass(frozen=True)
class ProductDescriptor:
    """Product of projective spaces; only used for the Segre orbit CP^{a-1} x CP^{b-1}."""

    factors: tuple[HSS, ...]

    def __str__(self) -> str:
        return "Product(" + ",".join(map(str, self.factors)) + ")"

    @property
    def dim_c(self) -> int:
        return sum(f.dim_c for f in self.factors)

    @property
    def rank(self) -> int:
        return sum(f.rank for f in self.factors)

    @property
    def irreducible(self) -> bool:
        return False


Space = Union[HSS, ProductDescriptor]


def _check_floor(family: str, p: tuple[int, ...]) -> None:
    # presentations below the canonical floors are accepted as long as they
    # name a genuine irreducible space; canonical() folds them
    if family == "AIII" and min(p) < 1:
        raise CatalogError(f"AIII needs a, b >= 1, got {p}")
    if family in ("CI",) and p[0] < 1:
        raise CatalogError(f"CI needs n >= 1, got {p}")
    if family == "DIII" and p[0] < 2:
        raise CatalogError(f"DIII needs n >= 2, got {p}")
    if family == "Quadric":
        if p[0] < 1:
            raise CatalogError(f"Quadric needs n >= 1, got {p}")
        if p[0] == 2:
            raise CatalogError("Quadric(2) = CP1 x CP1 is reducible")


def canonical(d: Space) -> Space:
    """Fold low-dimensional aliases onto the catalog representative."""
    if isinstance(d, ProductDescriptor):
        return ProductDescriptor(tuple(canonical(f) for f in d.factors))
    fam, p = d.family, d.params
    if fam == "AIII" and p[0] > p[1]:
        return HSS("AIII", (p[1], p[0]))
    if fam == "CI" and p[0] == 1:
        return cp(1)
    if fam == "DIII":
        n = p[0]
        if n == 2:
            return cp(1)
        if n == 3:
            return cp(3)
        if n == 4:
            return HSS("Quadric", (6,))
    if fam == "Quadric":
        n = p[0]
        if n == 1:
            return cp(1)
        if n == 3:
            return HSS("CI", (2,))
        if n == 4:
            return HSS("AIII", (2, 2))
    return d


_NAME_RE = re.compile(r"^\s*([A-Za-z]+)\s*(?:\(\s*([0-9,\s]*)\s*\))?\s*$")


def parse_space(text: str) -> Space:
    """Parse the text form, e.g. ``AIII(2,4)``, ``CI(3)``, ``EVII``, ``CP(3)``,
    ``Product(AIII(1,2),AIII(1,3))``."""
    text = text.strip()
    if text.startswith("Product(") and text.endswith(")"):
        inner = text[len("Product("):-1]
        parts = re.findall(r"[A-Za-z]+(?:\([0-9,\s]*\))?", inner)
        if len(parts) < 2:
            raise CatalogError(f"product needs at least two factors: {text!r}")
        return ProductDescriptor(tuple(parse_space(x) for x in parts))  # type: ignore[misc]
    m = _NAME_RE.match(text)
    if not m:
        raise CatalogError(f"cannot parse space {text!r}")
    fam, args = m.group(1), m.group(2)
    params = tuple(int(x) for x in args.split(",") if x.strip()) if args else ()
    aliases = {"aiii": "AIII", "ci": "CI", "diii": "DIII", "quadric": "Quadric", "eiii": "EIII", "evii": "EVII"}
    if fam.lower() == "cp":
        if len(params) != 1:
            raise CatalogError("CP takes one parameter")
        return cp(params[0])
    if fam.lower() not in aliases:
        raise CatalogError(f"unknown family {fam!r}; expected one of {', '.join(FAMILIES)}")
    return HSS(aliases[fam.lower()], params)


@dataclass(frozen=True)
class Bounds:
    """Enumeration caps: AIII by a+b (and optionally b), the others by n."""

    aiii: int = 12
    ci: int = 8
    diii: int = 12
    quadric: int = 12
    aiii_b: int | None = None
    exceptional: bool = True

    def __str__(self) -> str:
        s = f"AIII={self.aiii},CI={self.ci},DIII={self.diii},Quadric={self.quadric}"
        if self.aiii_b is not None:
            s += f",AIII_b={self.aiii_b}"
        if not self.exceptional:
            s += ",E=0"
        return s

    @classmethod
    def parse(cls, text: str) -> "Bounds":
        """Parse ``AIII=12,CI=8,DIII=12,Quadric=12`` (any subset; rest default)."""
        keys = {"aiii": "aiii", "ci": "ci", "diii": "diii", "quadric": "quadric", "aiii_b": "aiii_b", "e": "exceptional"}
        kwargs: dict = {}
        for item in filter(None, (x.strip() for x in text.split(","))):
            if "=" not in item:
                raise CatalogError(f"malformed bound {item!r}, expected KEY=INT")
            k, v = (x.strip() for x in item.split("=", 1))
            if k.lower() not in keys:
                raise CatalogError(f"unknown bound key {k!r}")
            try:
                val = int(v)
            except ValueError:
                raise CatalogError(f"bound {k} must be an integer, got {v!r}") from None
            if val < 0:
                raise CatalogError(f"bound {k} must be nonnegative")
            kwargs[keys[k.lower()]] = bool(val) if k.lower() == "e" else val
        return cls(**kwargs)

    def contains(self, other: "Bounds") -> bool:
        b_ok = self.aiii_b is None or (other.aiii_b is not None and other.aiii_b <= self.aiii_b)
        return (
            other.aiii <= self.aiii and other.ci <= self.ci and other.diii <= self.diii
            and other.quadric <= self.quadric and b_ok and (self.exceptional or not other.exceptional)
        )


DEFAULT_BOUNDS = Bounds()


def enumerate_spaces(bounds: Bounds = DEFAULT_BOUNDS) -> list[HSS]:
    """Canonical irreducible spaces within ``bounds``, in a fixed order.

    Floors: AIII 1 <= a <= b; CI n >= 2; DIII n >= 5; Quadric n >= 5 after
    folding Quadric(3) = CI(2) and Quadric(4) = AIII(2,2).
    """
    out: list[HSS] = []
    for s in range(2, bounds.aiii + 1):
        for a in range(1, s // 2 + 1):
            b = s - a
            if bounds.aiii_b is not None and b > bounds.aiii_b:
                continue
            out.append(HSS("AIII", (a, b)))
    out += [HSS("CI", (n,)) for n in range(2, bounds.ci + 1)]
    out += [HSS("DIII", (n,)) for n in range(5, bounds.diii + 1)]
    out += [HSS("Quadric", (n,)) for n in range(5, bounds.quadric + 1)]
    if bounds.exceptional:
        out += [HSS("EIII"), HSS("EVII")]
    assert all(canonical(d) == d for d in out)
    return out


def _so_factors(n: int) -> tuple[DynkinType, ...]:
    """Simple factors of so(n)."""
    if n <= 2:
        return ()
    if n == 4:
        return (DynkinType("A", 1), DynkinType("A", 1))
    if n % 2:
        return (canonicalize(DynkinType("B", (n - 1) // 2)),)
    return (canonicalize(DynkinType("D", n // 2)),)


def isotropy(d: Space) -> IsotropyDescriptor:
    """Lie-algebra type of K for G/K (for a product, the product of isotropies)."""
    if isinstance(d, ProductDescriptor):
        parts = [isotropy(f) for f in d.factors]
        return IsotropyDescriptor(
            tuple(t for p in parts for t in p.simple_factors), sum(p.center_rank for p in parts)
        )
    p = d.params
    a = lambda r: (DynkinType("A", r),) if r >= 1 else ()  # noqa: E731
    factors = {
        "AIII": lambda: a(p[0] - 1) + a(p[1] - 1),
        "CI": lambda: a(p[0] - 1),
        "DIII": lambda: a(p[0] - 1),
        "Quadric": lambda: _so_factors(p[0]),
        "EIII": lambda: (DynkinType("D", 5),),
        "EVII": lambda: (DynkinType("E", 6),),
    }[d.family]()
    return IsotropyDescriptor(factors, 1)


def cominuscule(d: HSS) -> tuple[DynkinType, int]:
    """Simple type of G and the 1-based node j whose fundamental weight gives f_1."""
    if not isinstance(d, HSS):
        raise CatalogError(f"{d} is not irreducible; no cominuscule weight")
    p = d.params
    if d.family == "AIII":
        return DynkinType("A", p[0] + p[1] - 1), p[0]
    if d.family == "CI":
        if p[0] == 1:
            return DynkinType("A", 1), 1
        return DynkinType("C", p[0]), p[0]
    if d.family == "DIII":
        n = p[0]
        if n == 2:
            return DynkinType("A", 1), 1
        return DynkinType("D", n), n
    if d.family == "Quadric":
        n = p[0]
        if n == 1:
            return DynkinType("A", 1), 1
        m = n + 2
        if m % 2:
            return DynkinType("B", (m - 1) // 2), 1
        return DynkinType("D", m // 2), 1
    if d.family == "EIII":
        return DynkinType("E", 6), 1
    return DynkinType("E", 7), 7


def levi_isotropy(d: HSS) -> IsotropyDescriptor:
    """Isotropy type read off the Dynkin diagram: delete the cominuscule node."""
    t, j = cominuscule(d)
    if t.rank == 1:
        return IsotropyDescriptor((), 1)
    return IsotropyDescriptor(tuple(subdiagram_types(t, [j])), 1)


# --- ambient space -> orbit correspondence ----------------------------------

TABLE1_ROWS = ("EVII", "EIII", "Veronese", "Quadric", "Plucker", "Segre")


def table1_row(d: HSS) -> tuple[str, tuple[int, ...]]:
    """Row of the isotropy-orbit table a column-1 space belongs to, with its row parameters.

    Row parameters: Veronese (n,) for Sp(n+1)/U(n+1); Quadric (n,) for
    SO(n+2)/T1.SO(n); Plucker (n,) for SO(2n)/U(n); Segre (a, b).
    """
    d = canonical(d)  # type: ignore[assignment]
    if not isinstance(d, HSS):
        raise NoStoredOrbitError(f"{d} is not an irreducible Hermitian symmetric space")
    fam, p = d.family, d.params
    if fam == "EVII":
        return "EVII", ()
    if fam == "EIII":
        return "EIII", ()
    if fam == "CI":
        return "Veronese", (p[0] - 1,)
    if fam == "Quadric":
        return "Quadric", (p[0],)
    if fam == "DIII":
        return "Plucker", (p[0],)
    if fam == "AIII":
        if p[0] == 1:
            raise NoStoredOrbitError(
                f"{d} = CP^{p[1]}: the isotropy U({p[1]}) is transitive on P(C^{p[1]}), "
                "so there is no proper complex orbit"
            )
        return "Segre", p
    raise NoStoredOrbitError(f"no stored orbit for {d}")


def complex_orbit(d: HSS) -> Space:
    """The unique complex K-orbit in P(T_o G/K), as a space (stored table data)."""
    row, p = table1_row(d)
    if row == "EVII":
        return HSS("EIII")
    if row == "EIII":
        return HSS("DIII", (5,))
    if row == "Veronese":
        return cp(p[0])
    if row == "Quadric":
        # SO(n+2)/T1.SO(n) acts on C^n; the orbit is the quadric of dimension n-2
        n = p[0]
        if n - 2 == 2:
            return ProductDescriptor((cp(1), cp(1)))
        return canonical(HSS("Quadric", (n - 2,)))
    if row == "Plucker":
        return HSS("AIII", (2, p[0] - 2))
    a, b = p
    return ProductDescriptor((cp(a - 1), cp(b - 1)))


# --- presentations ----------------------------------------------------------


def presentation(d: Space) -> str:
    """Group-quotient form, e.g. ``SO(12)/T1.SO(10)`` for Quadric(10)."""
    if isinstance(d, ProductDescriptor):
        return " x ".join(presentation(f) for f in d.factors)
    p = d.params
    if d.family == "AIII":
        if p[0] == 1:
            return f"CP{p[1]} = U({p[1] + 1})/U(1).U({p[1]})"
        return f"SU({p[0] + p[1]})/S(U({p[0]})xU({p[1]}))"
    if d.family == "CI":
        return f"Sp({p[0]})/U({p[0]})"
    if d.family == "DIII":
        return f"SO({2 * p[0]})/U({p[0]})"
    if d.family == "Quadric":
        return f"SO({p[0] + 2})/T1.SO({p[0]})"
    return {"EIII": "E6/T1.Spin(10)", "EVII": "E7/T1.E6"}[d.family]
