"""
Exact root-system combinatorics for the simple types A, B, C, D, E6, E7.

Conventions
-----------
* Nodes are numbered 1..rank in Bourbaki order.  For E6 the chain is
  1-3-4-5-6 with node 2 attached to node 4; E7 extends the chain with 7.
  For B_n the last node is the short root, for C_n it is the long root.
* ``cartan[i][j] = <alpha_i^vee, alpha_j> = 2(alpha_i, alpha_j)/(alpha_i, alpha_i)``
  (0-based indices in code).
* ``symmetrizer[i] = (alpha_i, alpha_i)/2`` so that
  ``symmetrizer[i] * cartan[i][j] = (alpha_i, alpha_j)`` is symmetric.
* Weights are integer vectors of Dynkin labels (fundamental-weight basis);
  roots are integer vectors in the simple-root basis.

Everything here is exact: integers and :class:`fractions.Fraction` only.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import permutations
from math import gcd
from typing import Iterable, Sequence

__all__ = [
    "DynkinType",
    "RootSystem",
    "Weight",
    "InadmissibleTypeError",
    "NonDominantWeightError",
    "build_root_system",
    "canonicalize",
    "cartan_matrix",
    "identify_type",
    "positive_root_count",
    "lie_algebra_dim",
    "weyl_dim",
    "fundamental_weight",
    "is_weight",
    "weight_support",
    "dominant_conjugate",
    "subdiagram_types",
    "subdiagram_nodes",
    "permuted_root_system",
]

FAMILIES = ("A", "B", "C", "D", "E")


class InadmissibleTypeError(ValueError):
    """Raised for (family, rank) pairs that do not name a simple Lie algebra here."""


class NonDominantWeightError(ValueError):
    pass


@dataclass(frozen=True, order=True)
class DynkinType:
    family: str
    rank: int

    def __str__(self) -> str:
        return f"{self.family}{self.rank}"

    @classmethod
    def parse(cls, text: str) -> "DynkinType":
        text = text.strip().replace("_", "")
        if len(text) < 2 or text[0].upper() not in FAMILIES or not text[1:].isdigit():
            raise InadmissibleTypeError(f"cannot parse Dynkin type {text!r}")
        return cls(text[0].upper(), int(text[1:]))


def _check_admissible(t: DynkinType) -> None:
    fam, n = t.family, t.rank
    ok = (
        (fam == "A" and n >= 1)
        or (fam in ("B", "C") and n >= 2)
        or (fam == "D" and n >= 3)
        or (fam == "E" and n in (6, 7))
    )
    if not ok:
        floors = "A n>=1, B n>=2, C n>=2, D n>=3, E n in {6,7}"
        raise InadmissibleTypeError(f"{t} is not admissible (allowed: {floors})")


def canonicalize(t: DynkinType) -> DynkinType:
    """Map low-rank aliases to a single representative.

    B1, C1 -> A1; D3 -> A3; C2 -> B2.  D2 = A1 x A1 is not simple and is
    rejected.
    """
    fam, n = t.family, t.rank
    if fam in ("B", "C") and n == 1:
        return DynkinType("A", 1)
    if fam == "C" and n == 2:
        return DynkinType("B", 2)
    if fam == "D" and n == 3:
        return DynkinType("A", 3)
    if fam == "D" and n <= 2:
        raise InadmissibleTypeError(f"{t} is not simple (so(4) = A1 + A1, so(2) abelian)")
    _check_admissible(t)
    return t


def cartan_matrix(t: DynkinType) -> tuple[tuple[int, ...], ...]:
    _check_admissible(t)
    n = t.rank
    a = [[2 if i == j else 0 for j in range(n)] for i in range(n)]

    def bond(i: int, j: int) -> None:
        a[i][j] = a[j][i] = -1

    if t.family in "ABC":
        for i in range(n - 1):
            bond(i, i + 1)
        if t.family == "B":
            # last node short
            a[n - 1][n - 2] = -2
        elif t.family == "C":
            # last node long
            a[n - 2][n - 1] = -2
    elif t.family == "D":
        for i in range(n - 2):
            bond(i, i + 1)
        bond(n - 3, n - 1)
    else:
        # Bourbaki: 1-3, 3-4, 4-5, 5-6, (6-7), 2-4 (1-based)
        edges = [(1, 3), (3, 4), (4, 5), (5, 6), (2, 4)]
        if n == 7:
            edges.append((6, 7))
        for i, j in edges:
            bond(i - 1, j - 1)
    return tuple(tuple(row) for row in a)


def _symmetrizer(cartan: Sequence[Sequence[int]]) -> tuple[Fraction, ...]:
    """Solve d_i a_ij = d_j a_ji along the connected diagram, with d_0 = 1."""
    n = len(cartan)
    d: list[Fraction | None] = [None] * n
    d[0] = Fraction(1)
    stack = [0]
    while stack:
        i = stack.pop()
        for j in range(n):
            if j != i and cartan[i][j] != 0 and d[j] is None:
                d[j] = d[i] * cartan[i][j] / cartan[j][i]
                stack.append(j)
    if any(x is None for x in d):
        raise InadmissibleTypeError("Cartan matrix is not connected")
    # normalise so the shortest root has (a, a) = 2
    m = min(d)
    return tuple(x / m for x in d)


def _leading_minors(mat: Sequence[Sequence[Fraction]]) -> list[Fraction]:
    """Leading principal minors by fraction-exact Gaussian elimination."""
    n = len(mat)
    m = [list(map(Fraction, row)) for row in mat]
    minors = []
    det = Fraction(1)
    for k in range(n):
        if m[k][k] == 0:
            # leading minor vanishes; stop (no pivoting keeps minors meaningful)
            minors.extend([Fraction(0)] * (n - k))
            return minors
        det *= m[k][k]
        minors.append(det)
        for r in range(k + 1, n):
            f = m[r][k] / m[k][k]
            for c in range(k, n):
                m[r][c] -= f * m[k][c]
    return minors


def _positive_roots(cartan: Sequence[Sequence[int]]) -> tuple[tuple[int, ...], ...]:
    """Closure from the simple roots using alpha-strings.

    Roots are processed by height.  For a root beta and simple alpha_i the
    string beta - p alpha_i, ..., beta + q alpha_i satisfies
    p - q = <beta, alpha_i^vee>; p is read off the roots already found, so
    beta + alpha_i is a root iff q = p - <beta, alpha_i^vee> > 0.
    """
    n = len(cartan)
    simple = [tuple(1 if k == i else 0 for k in range(n)) for i in range(n)]
    found = set(simple)
    ordered = list(simple)
    layer = list(simple)
    while layer:
        nxt = []
        for beta in layer:
            for i in range(n):
                pairing = sum(beta[j] * cartan[i][j] for j in range(n))
                p = 0
                probe = list(beta)
                while True:
                    probe[i] -= 1
                    if tuple(probe) in found:
                        p += 1
                    else:
                        break
                if p - pairing > 0:
                    gamma = tuple(beta[k] + (1 if k == i else 0) for k in range(n))
                    if gamma not in found:
                        found.add(gamma)
                        nxt.append(gamma)
        nxt.sort(key=lambda r: tuple(-x for x in r))
        ordered.extend(nxt)
        layer = nxt
    ordered.sort(key=lambda r: (sum(r), tuple(-x for x in r)))
    return tuple(ordered)


def positive_root_count(t: DynkinType) -> int:
    """Known count |Phi^+| (not computed from roots)."""
    _check_admissible(t)
    n = t.rank
    return {
        "A": n * (n + 1) // 2,
        "B": n * n,
        "C": n * n,
        "D": n * (n - 1),
        "E": {6: 36, 7: 63}.get(n, 0),
    }[t.family]


def lie_algebra_dim(t: DynkinType) -> int:
    """Real dimension of the compact simple Lie algebra: rank + 2|Phi^+|."""
    return t.rank + 2 * positive_root_count(t)


@dataclass(frozen=True)
class RootSystem:
    type: DynkinType
    cartan: tuple[tuple[int, ...], ...]
    symmetrizer: tuple[Fraction, ...]
    positive_roots: tuple[tuple[int, ...], ...]

    @property
    def rank(self) -> int:
        return self.type.rank

    def symmetrized(self) -> list[list[Fraction]]:
        """Gram matrix (alpha_i, alpha_j)."""
        return [
            [self.symmetrizer[i] * self.cartan[i][j] for j in range(self.rank)]
            for i in range(self.rank)
        ]

    def check(self) -> None:
        """Assert the structural invariants; raises AssertionError on violation."""
        n = self.rank
        b = self.symmetrized()
        assert all(b[i][j] == b[j][i] for i in range(n) for j in range(n))
        assert all(m > 0 for m in _leading_minors(b)), "not positive definite"
        assert len(self.positive_roots) == positive_root_count(self.type)
        assert all(c >= 0 for r in self.positive_roots for c in r)
        for i in range(n):
            assert tuple(1 if k == i else 0 for k in range(n)) in self.positive_roots

    @property
    def inverse_cartan(self) -> tuple[tuple[Fraction, ...], ...]:
        return _inverse(self.cartan)

    def to_root_coords(self, labels: Sequence[int]) -> tuple[Fraction, ...]:
        """Simple-root coordinates c with sum_j c_j alpha_j having the given Dynkin labels.

        Dynkin labels of alpha_j form column j of the Cartan matrix, so
        labels = A c and c = A^{-1} labels.
        """
        inv = self.inverse_cartan
        n = self.rank
        return tuple(sum(inv[i][k] * labels[k] for k in range(n)) for i in range(n))

    def simple_root_labels(self, j: int) -> tuple[int, ...]:
        return tuple(self.cartan[k][j] for k in range(self.rank))


@lru_cache(maxsize=None)
def _inverse(cartan: tuple[tuple[int, ...], ...]) -> tuple[tuple[Fraction, ...], ...]:
    n = len(cartan)
    m = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(cartan)]
    for col in range(n):
        piv = next(r for r in range(col, n) if m[r][col] != 0)
        m[col], m[piv] = m[piv], m[col]
        p = m[col][col]
        m[col] = [x / p for x in m[col]]
        for r in range(n):
            if r != col and m[r][col] != 0:
                f = m[r][col]
                m[r] = [x - f * y for x, y in zip(m[r], m[col])]
    return tuple(tuple(row[n:]) for row in m)


def _from_cartan(t: DynkinType, cartan: tuple[tuple[int, ...], ...]) -> RootSystem:
    return RootSystem(
        type=t,
        cartan=cartan,
        symmetrizer=_symmetrizer(cartan),
        positive_roots=_positive_roots(cartan),
    )


@lru_cache(maxsize=None)
def build_root_system(t: DynkinType) -> RootSystem:
    _check_admissible(t)
    return _from_cartan(t, cartan_matrix(t))


def permuted_root_system(t: DynkinType, perm: Sequence[int]) -> RootSystem:
    """Root system with simple roots relabelled: new node k is old node perm[k]."""
    a = cartan_matrix(t)
    n = t.rank
    cartan = tuple(tuple(a[perm[i]][perm[j]] for j in range(n)) for i in range(n))
    return _from_cartan(t, cartan)


class Weight(tuple):
    """Dynkin labels of an integral weight."""

    def __new__(cls, coords: Iterable[int]) -> "Weight":
        return super().__new__(cls, (int(c) for c in coords))

    @property
    def dominant(self) -> bool:
        return all(c >= 0 for c in self)


def fundamental_weight(rank: int, j: int, multiple: int = 1) -> Weight:
    """``multiple * Lambda_j`` (1-based node j)."""
    if not 1 <= j <= rank:
        raise ValueError(f"node {j} out of range 1..{rank}")
    return Weight(multiple if k == j - 1 else 0 for k in range(rank))


def weyl_dim(rs: RootSystem, lam: Sequence[int], symmetrizer: Sequence[Fraction] | None = None) -> int:
    """Dimension of the irreducible module of highest weight ``lam``.

    prod over alpha > 0 of (lam + rho, alpha) / (rho, alpha), where rho has
    all Dynkin labels 1.  With alpha = sum c_i alpha_i and
    (Lambda_k, alpha_i) = d_i delta_ki the ratio for one root is
    sum c_i d_i (lam_i + 1) / sum c_i d_i.

    ``symmetrizer`` overrides the stored d_i (the result must not depend on
    its overall scale).
    """
    lam = tuple(lam)
    if len(lam) != rs.rank:
        raise ValueError(f"weight has {len(lam)} labels, rank is {rs.rank}")
    if any(c < 0 for c in lam):
        raise NonDominantWeightError(f"weight {lam} is not dominant")
    d = rs.symmetrizer if symmetrizer is None else tuple(Fraction(x) for x in symmetrizer)
    num = 1
    den = 1
    for root in rs.positive_roots:
        num *= sum(c * di * (li + 1) for c, di, li in zip(root, d, lam))
        den *= sum(c * di for c, di in zip(root, d))
    q = Fraction(num) / Fraction(den)
    assert q.denominator == 1, q
    return int(q)


# --- weight support (no multiplicities) -------------------------------------


def dominant_conjugate(rs: RootSystem, mu: Sequence[int]) -> tuple[int, ...]:
    """W-conjugate of ``mu`` that is dominant, by repeated simple reflections."""
    mu = list(mu)
    n = rs.rank
    while True:
        i = next((k for k in range(n) if mu[k] < 0), None)
        if i is None:
            return tuple(mu)
        m = mu[i]
        for k in range(n):
            mu[k] -= m * rs.cartan[k][i]


@lru_cache(maxsize=None)
def _integer_inverse(cartan: tuple[tuple[int, ...], ...]) -> tuple[int, tuple[tuple[int, ...], ...]]:
    """(D, M) with M = D * A^{-1} integral, D > 0."""
    inv = _inverse(cartan)
    den = 1
    for row in inv:
        for x in row:
            den = den * x.denominator // gcd(den, x.denominator)
    return den, tuple(tuple(int(x * den) for x in row) for row in inv)


def is_weight(rs: RootSystem, lam: Sequence[int], mu: Sequence[int]) -> bool:
    """True iff ``mu`` occurs as a weight of the irreducible module V(lam).

    Uses the standard criterion: the dominant conjugate of mu lies below lam
    in the dominance order (lam - dom(mu) a nonnegative integer combination
    of simple roots).
    """
    dom = dominant_conjugate(rs, mu)
    diff = [a - b for a, b in zip(lam, dom)]
    den, adj = _integer_inverse(rs.cartan)
    for row in adj:
        x = sum(r * v for r, v in zip(row, diff))
        if x < 0 or x % den:
            return False
    return True


def weight_support(rs: RootSystem, lam: Sequence[int]) -> dict[tuple[int, ...], tuple[int, ...]]:
    """All weights of V(lam) mapped to their depth lam - mu in simple-root coordinates.

    Breadth-first from lam by subtracting simple roots; every weight other
    than the highest is reachable this way.
    """
    lam = tuple(lam)
    n = rs.rank
    out = {lam: (0,) * n}
    frontier = [lam]
    cols = [rs.simple_root_labels(j) for j in range(n)]
    while frontier:
        nxt = []
        for mu in frontier:
            depth = out[mu]
            for j in range(n):
                nu = tuple(a - b for a, b in zip(mu, cols[j]))
                if nu in out:
                    continue
                if is_weight(rs, lam, nu):
                    out[nu] = tuple(x + (1 if k == j else 0) for k, x in enumerate(depth))
                    nxt.append(nu)
        frontier = nxt
    return out


# --- diagram identification -------------------------------------------------


def _components(cartan: Sequence[Sequence[int]], nodes: Sequence[int]) -> list[list[int]]:
    nodes = list(nodes)
    seen: set[int] = set()
    comps = []
    for s in nodes:
        if s in seen:
            continue
        comp = []
        stack = [s]
        seen.add(s)
        while stack:
            i = stack.pop()
            comp.append(i)
            for j in nodes:
                if j not in seen and cartan[i][j] != 0:
                    seen.add(j)
                    stack.append(j)
        comps.append(sorted(comp))
    return comps


def identify_type(cartan: Sequence[Sequence[int]]) -> DynkinType:
    """Dynkin type of a connected Cartan matrix of type A-E (canonical form)."""
    n = len(cartan)
    if n == 1:
        return DynkinType("A", 1)
    neighbours = {i: [j for j in range(n) if j != i and cartan[i][j] != 0] for i in range(n)}
    if any(abs(cartan[i][j]) > 2 for i in range(n) for j in range(n) if i != j):
        raise InadmissibleTypeError("triple bond (G2) is not supported")
    doubles = [(i, j) for i in range(n) for j in range(n) if cartan[i][j] == -2]
    degrees = sorted(len(v) for v in neighbours.values())
    if doubles:
        if len(doubles) != 1 or degrees[-1] > 2:
            raise InadmissibleTypeError("unsupported non-simply-laced diagram (F4?)")
        i, j = doubles[0]  # cartan[i][j] = -2: alpha_i is the short root
        if len(neighbours[i]) == 1:
            fam = "B"
        elif len(neighbours[j]) == 1:
            fam = "C"
        else:
            raise InadmissibleTypeError("double bond in the interior (F4)")
        return canonicalize(DynkinType(fam, n))
    if degrees[-1] <= 2:
        return canonicalize(DynkinType("A", n))
    branch = next(i for i in range(n) if len(neighbours[i]) == 3)
    legs = []
    for start in neighbours[branch]:
        length, prev, cur = 1, branch, start
        while True:
            nxt = [k for k in neighbours[cur] if k != prev]
            if not nxt:
                break
            prev, cur = cur, nxt[0]
            length += 1
        legs.append(length)
    legs.sort()
    if legs[0] == 1 and legs[1] == 1:
        return canonicalize(DynkinType("D", n))
    if legs[:2] == [1, 2] and legs[2] in (2, 3):
        return DynkinType("E", n)
    raise InadmissibleTypeError(f"unsupported diagram with legs {legs}")


def subdiagram_types(t: DynkinType, removed: Iterable[int]) -> list[DynkinType]:
    """Types of the connected components left after deleting 1-based nodes."""
    a = cartan_matrix(t)
    drop = {r - 1 for r in removed}
    keep = [i for i in range(t.rank) if i not in drop]
    out = []
    for comp in _components(a, keep):
        sub = [[a[i][j] for j in comp] for i in comp]
        out.append(identify_type(sub))
    return sorted(out)


def subdiagram_nodes(t: DynkinType, removed: Iterable[int]) -> list[tuple[DynkinType, list[int]]]:
    """Like :func:`subdiagram_types` but also returns the 1-based nodes of each component."""
    a = cartan_matrix(t)
    drop = {r - 1 for r in removed}
    keep = [i for i in range(t.rank) if i not in drop]
    out = []
    for comp in _components(a, keep):
        sub = [[a[i][j] for j in comp] for i in comp]
        out.append((identify_type(sub), [i + 1 for i in comp]))
    out.sort(key=lambda x: (x[0], x[1]))
    return out


def all_orderings(rank: int, limit: int = 6) -> Iterable[tuple[int, ...]]:
    """A few permutations of range(rank) for ordering-independence checks."""
    for k, p in enumerate(permutations(range(rank))):
        if k >= limit:
            break
        yield p
    yield tuple(reversed(range(rank)))
