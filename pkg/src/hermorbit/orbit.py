"""
Matrix models of the classical parallel orbits and numerical certificates.

Each model is a unitary representation V of a compact Lie algebra k, given
by anti-Hermitian matrices on V, together with a highest weight vector v.
The projective orbit of [v] is the parallel submanifold:

=========  ====================  =========================  =====================
case       V                     k                          v
=========  ====================  =========================  =====================
veronese   Sym^2 C^{n+1}         u(n+1)                     e1.e1
segre      C^a (x) C^b           su(a) + su(b) + R i        e1 (x) e1
plucker    Lambda^2 C^n          u(n)                       e1 ^ e2
quadric    C^n                   so(n) + R i                (e1 + i e2)/sqrt 2
=========  ====================  =========================  =====================

Subspaces are compared through orthogonal projectors, never bases.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from itertools import combinations, combinations_with_replacement

import numpy as np
from scipy.linalg import null_space

from .catalog import HSS, ProductDescriptor, Space, canonical, cp, isotropy
from .classify import normal_holonomy, parallel_codim

__all__ = [
    "MatrixModel",
    "OrbitReport",
    "Decomposition",
    "NumericalRankError",
    "build_model",
    "decompose",
    "fullness_check",
    "bracket_check",
    "slice_commutant",
    "certify",
    "orbit_space",
    "TOL_CONSTRUCT",
    "TOL_CLOSURE",
    "TOL_GEOMETRY",
]

TOL_CONSTRUCT = 1e-12
TOL_CLOSURE = 1e-10
TOL_GEOMETRY = 1e-9
# singular values below ZERO are zero; anything in [ZERO, GAP) is ambiguous
_ZERO = 1e-10
_GAP = 1e-8

CASES = ("veronese", "segre", "plucker", "quadric")


class NumericalRankError(RuntimeError):
    pass


# --- compact Lie algebras as anti-Hermitian matrices ------------------------


def _unit(n: int, i: int, j: int) -> np.ndarray:
    e = np.zeros((n, n), dtype=complex)
    e[i, j] = 1.0
    return e


def _offdiag(n: int) -> list[np.ndarray]:
    out = []
    for i, j in combinations(range(n), 2):
        out.append(_unit(n, i, j) - _unit(n, j, i))
        out.append(1j * (_unit(n, i, j) + _unit(n, j, i)))
    return out


def u_basis(n: int) -> list[np.ndarray]:
    return [1j * _unit(n, i, i) for i in range(n)] + _offdiag(n)


def su_basis(n: int) -> list[np.ndarray]:
    diag = [1j * (_unit(n, i, i) - _unit(n, i + 1, i + 1)) for i in range(n - 1)]
    return diag + _offdiag(n)


def so_basis(n: int) -> list[np.ndarray]:
    return [_unit(n, i, j) - _unit(n, j, i) for i, j in combinations(range(n), 2)]


def _sym2_isometry(n: int) -> np.ndarray:
    cols = []
    for i, j in combinations_with_replacement(range(n), 2):
        c = np.zeros(n * n, dtype=complex)
        if i == j:
            c[i * n + i] = 1.0
        else:
            c[i * n + j] = c[j * n + i] = 1 / math.sqrt(2)
        cols.append(c)
    return np.array(cols).T


def _alt2_isometry(n: int) -> np.ndarray:
    cols = []
    for i, j in combinations(range(n), 2):
        c = np.zeros(n * n, dtype=complex)
        c[i * n + j] = 1 / math.sqrt(2)
        c[j * n + i] = -1 / math.sqrt(2)
        cols.append(c)
    return np.array(cols).T


def _on_square(x: np.ndarray, iso: np.ndarray) -> np.ndarray:
    n = x.shape[0]
    eye = np.eye(n)
    return iso.conj().T @ (np.kron(x, eye) + np.kron(eye, x)) @ iso


@dataclass
class MatrixModel:
    case: str
    params: tuple[int, ...]
    k_basis: list[np.ndarray]  # anti-Hermitian, acting on V
    v: np.ndarray

    @property
    def ambient_dim(self) -> int:
        return self.v.shape[0]

    @property
    def dim_k(self) -> int:
        return len(self.k_basis)

    def __str__(self) -> str:
        return f"{self.case}({','.join(map(str, self.params))})"

    def anti_hermitian_residual(self) -> float:
        return max(float(np.abs(x + x.conj().T).max()) for x in self.k_basis)

    def closure_residual(self) -> float:
        """Largest distance of a bracket [X_i, X_j] from the real span of the basis."""
        basis = np.array([_realify(x) for x in self.k_basis]).T
        q, _ = np.linalg.qr(basis)
        worst = 0.0
        for a, b in combinations(self.k_basis, 2):
            r = _realify(a @ b - b @ a)
            worst = max(worst, float(np.linalg.norm(r - q @ (q.T @ r))))
        return worst


def _realify(x: np.ndarray) -> np.ndarray:
    x = np.ravel(x)
    return np.concatenate([x.real, x.imag])


def build_model(case: str, *params: int) -> MatrixModel:
    """Construct the matrix model for ``case`` with the given parameters.

    veronese(n), n >= 1; segre(a, b), a, b >= 2; plucker(n), n >= 4;
    quadric(n), n >= 3.
    """
    case = case.lower()
    if case == "veronese":
        (n,) = params
        if n < 1:
            raise ValueError("veronese needs n >= 1")
        iso = _sym2_isometry(n + 1)
        basis = [_on_square(x, iso) for x in u_basis(n + 1)]
        v = np.zeros(iso.shape[1], dtype=complex)
        v[0] = 1.0
    elif case == "segre":
        a, b = params
        if min(a, b) < 2:
            raise ValueError("segre needs a, b >= 2")
        ia, ib = np.eye(a), np.eye(b)
        basis = [np.kron(x, ib) for x in su_basis(a)] + [np.kron(ia, y) for y in su_basis(b)]
        basis.append(1j * np.eye(a * b))
        v = np.zeros(a * b, dtype=complex)
        v[0] = 1.0
    elif case == "plucker":
        (n,) = params
        if n < 4:
            raise ValueError("plucker needs n >= 4")
        iso = _alt2_isometry(n)
        basis = [_on_square(x, iso) for x in u_basis(n)]
        v = np.zeros(iso.shape[1], dtype=complex)
        v[0] = 1.0
    elif case == "quadric":
        (n,) = params
        if n < 3:
            raise ValueError("quadric needs n >= 3")
        basis = [x.astype(complex) for x in so_basis(n)] + [1j * np.eye(n)]
        v = np.zeros(n, dtype=complex)
        v[0], v[1] = 1 / math.sqrt(2), 1j / math.sqrt(2)
    else:
        raise ValueError(f"unknown case {case!r}; expected one of {CASES}")
    model = MatrixModel(case, tuple(params), basis, v)
    if model.anti_hermitian_residual() > TOL_CONSTRUCT:
        raise AssertionError(f"{model}: generators not anti-Hermitian")
    return model


def orbit_space(model: MatrixModel) -> Space:
    """Catalog description of the orbit realised by ``model``."""
    p = model.params
    if model.case == "veronese":
        return cp(p[0])
    if model.case == "segre":
        return ProductDescriptor((cp(p[0] - 1), cp(p[1] - 1)))
    if model.case == "plucker":
        return canonical(HSS("AIII", (2, p[0] - 2)))
    m = p[0] - 2
    if m == 1:
        return cp(1)
    if m == 2:
        return ProductDescriptor((cp(1), cp(1)))
    return canonical(HSS("Quadric", (m,)))


# --- linear algebra helpers -------------------------------------------------


def _split(s: np.ndarray, what: str) -> tuple[int, float]:
    """Numerical rank of singular values ``s`` and the largest discarded value."""
    scale = max(1.0, float(s[0])) if s.size else 1.0
    rank = int(np.sum(s > _GAP * scale))
    ambiguous = s[(s > _ZERO * scale) & (s <= _GAP * scale)]
    if ambiguous.size:
        raise NumericalRankError(
            f"{what}: singular values {ambiguous} fall between {_ZERO} and {_GAP}; rank undetermined"
        )
    residual = float(s[rank]) if rank < s.size else 0.0
    return rank, residual


def _column_space(a: np.ndarray, what: str) -> tuple[np.ndarray, float]:
    """Orthonormal basis of the complex column span."""
    if a.size == 0:
        return np.zeros((a.shape[0], 0), dtype=complex), 0.0
    u, s, _ = np.linalg.svd(a, full_matrices=False)
    r, res = _split(s, what)
    return u[:, :r], res


def _projector(u: np.ndarray) -> np.ndarray:
    return u @ u.conj().T


@dataclass
class Decomposition:
    model: MatrixModel
    T: np.ndarray  # orthonormal columns
    N: np.ndarray
    N1: np.ndarray
    k0: np.ndarray  # coefficient vectors (columns) in k_basis
    m: np.ndarray  # coefficient vectors, orthonormal for the trace form
    real_tangent_rank: int
    residuals: dict = field(default_factory=dict)

    def combine(self, coeffs: np.ndarray) -> np.ndarray:
        return sum(c * x for c, x in zip(coeffs, self.model.k_basis))


def decompose(model: MatrixModel) -> Decomposition:
    """Split V = Cv + T + N, find N^1, the stabiliser k_0 and its complement m."""
    v = model.v / np.linalg.norm(model.v)
    dim = model.ambient_dim
    q_v = np.eye(dim) - np.outer(v, v.conj())
    acts = [x @ v for x in model.k_basis]

    tang = np.array([q_v @ w for w in acts]).T
    T, res_t = _column_space(tang, "tangent space")
    real = np.array([_realify(w) for w in tang.T]).T
    _, s_real, vh = np.linalg.svd(real, full_matrices=True)
    real_rank, res_k0 = _split(s_real, "stabiliser")
    k0 = vh[real_rank:].T  # real null space: X with rho(X)v in Cv

    cv_t = np.column_stack([v, T])
    q_n = np.eye(dim) - _projector(cv_t)
    N, res_n = _column_space(q_n, "normal space")

    second = []
    for i, j in combinations_with_replacement(range(model.dim_k), 2):
        second.append(q_n @ (model.k_basis[i] @ acts[j]))
    N1, res_n1 = _column_space(np.array(second).T, "first normal space")

    # m = trace-form orthogonal complement of k_0
    gram = np.array([[np.real(np.trace(a.conj().T @ b)) for b in model.k_basis] for a in model.k_basis])
    if k0.shape[1]:
        m_raw = null_space(k0.T @ gram)
    else:
        m_raw = np.eye(model.dim_k)
    # orthonormalise m for the trace form
    g_m = m_raw.T @ gram @ m_raw
    w, u = np.linalg.eigh(g_m)
    m = m_raw @ u @ np.diag(1 / np.sqrt(w))

    return Decomposition(
        model, T, N, N1, k0, m, real_rank,
        {"tangent": res_t, "stabiliser": res_k0, "normal": res_n, "first_normal": res_n1},
    )


def fullness_check(dec: Decomposition) -> tuple[bool, float]:
    """N^1 = N, measured as the operator-norm gap of the projectors."""
    gap = float(np.linalg.norm(_projector(dec.N1) - _projector(dec.N), 2)) if dec.N.shape[1] else 0.0
    return gap < TOL_GEOMETRY, gap


def bracket_check(dec: Decomposition) -> tuple[bool, float]:
    """rho(m) N lies in Cv + T: largest normal component of rho(X) w."""
    if dec.N.shape[1] == 0:
        return True, 0.0
    p_n = _projector(dec.N)
    worst = 0.0
    for col in dec.m.T:
        x = dec.combine(col)
        worst = max(worst, float(np.linalg.norm(p_n @ x @ dec.N, 2)))
    return worst < TOL_GEOMETRY, worst


@dataclass
class SliceData:
    commutant_dim: int
    image_dim: int
    invariance_residual: float
    commutant_residual: float


def slice_commutant(dec: Decomposition) -> SliceData:
    """Restrict rho(k_0) to N; return commutant dimension and the image's real dimension."""
    N = dec.N
    r = N.shape[1]
    if r == 0:
        return SliceData(0, 0, 0.0, 0.0)
    q_perp = np.eye(dec.model.ambient_dim) - _projector(N)
    blocks = []
    invariance = 0.0
    for col in dec.k0.T:
        x = dec.combine(col)
        invariance = max(invariance, float(np.linalg.norm(q_perp @ x @ N, 2)))
        blocks.append(N.conj().T @ x @ N)
    eye = np.eye(r)
    # vec(AB - BA) = (B^T (x) I - I (x) B) vec(A), column-major vec
    rows = [np.kron(b.T, eye) - np.kron(eye, b) for b in blocks]
    system = np.vstack(rows) if rows else np.zeros((0, r * r))
    s = np.linalg.svd(system, compute_uv=False) if system.size else np.zeros(0)
    s = np.concatenate([s, np.zeros(r * r - s.size)])
    rank, res = _split(s, "commutant")
    image = np.array([_realify(b) for b in blocks]).T if blocks else np.zeros((2 * r * r, 0))
    img_rank = 0
    if image.size:
        s_img = np.linalg.svd(image, compute_uv=False)
        img_rank, _ = _split(s_img, "slice image")
    return SliceData(r * r - rank, img_rank, invariance, res)


@dataclass
class OrbitReport:
    model: str
    orbit: str
    ambient_dim: int
    dim_k: int
    dim_k0: int
    dim_T: int
    dim_N1: int
    dim_N: int
    fullness: bool
    bracket_ok: bool
    slice_irreducible: bool
    commutant_dim: int
    slice_image_dim: int
    holonomy: str
    holonomy_dim: int
    holonomy_isotropy_dim: int
    consistent: bool
    residuals: dict

    @property
    def ok(self) -> bool:
        return self.fullness and self.bracket_ok and self.slice_irreducible and self.consistent

    def to_dict(self) -> dict:
        return dict(self.__dict__)

    @classmethod
    def from_dict(cls, data: dict) -> "OrbitReport":
        return cls(**data)


def certify(case: str, *params: int) -> OrbitReport:
    """Build, decompose and run every check; compare dimensions with the catalog."""
    model = build_model(case, *params)
    closure = model.closure_residual()
    if closure > TOL_CLOSURE:
        raise AssertionError(f"{model}: basis not closed under brackets ({closure:.2e})")
    dec = decompose(model)
    full, full_res = fullness_check(dec)
    br, br_res = bracket_check(dec)
    sl = slice_commutant(dec)

    space = orbit_space(model)
    hol = normal_holonomy(space)
    dim_t = dec.T.shape[1]
    dim_n = dec.N.shape[1]
    dim_k0 = dec.k0.shape[1]
    consistent = (
        dim_t == space.dim_c
        and dim_n == parallel_codim(space)
        and dim_n == hol.dim_c
        and model.dim_k - dim_k0 == 2 * dim_t
        and dec.real_tangent_rank == 2 * dim_t
        and sl.image_dim == isotropy(hol).dim
    )
    residuals = dict(dec.residuals)
    residuals.update(
        anti_hermitian=model.anti_hermitian_residual(),
        closure=closure,
        fullness=full_res,
        bracket=br_res,
        slice_invariance=sl.invariance_residual,
        commutant=sl.commutant_residual,
    )
    return OrbitReport(
        model=str(model), orbit=str(space), ambient_dim=model.ambient_dim,
        dim_k=model.dim_k, dim_k0=dim_k0, dim_T=dim_t, dim_N1=dec.N1.shape[1], dim_N=dim_n,
        fullness=full, bracket_ok=br, slice_irreducible=sl.commutant_dim == 1,
        commutant_dim=sl.commutant_dim, slice_image_dim=sl.image_dim,
        holonomy=str(hol), holonomy_dim=hol.dim_c, holonomy_isotropy_dim=isotropy(hol).dim,
        consistent=consistent, residuals={k: float(v) for k, v in residuals.items()},
    )
