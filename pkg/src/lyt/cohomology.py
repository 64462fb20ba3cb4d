"""Yamaguti, operator and total cochain complexes in degrees 1-3.

Cochains are stored on canonical indices (wedge pairs ``i < j`` in
lexicographic order) and expanded to full antisymmetric tensors for
evaluation.  Every coboundary works on full tensors with arbitrary leading
batch axes, so assembling a matrix is a single call on a stack of basis
cochains.

Conventions:

* a 1-cochain ``h`` is an ``m x n`` matrix, column ``j`` being ``h(e_j)``;
* full 2-cochains are ``f[x, y, u]`` and ``g[x, y, z, u]``;
* full 3-cochains are ``f[x1, y1, x2, y2, u]`` and ``g[x1, y1, x2, y2, z, u]``;

where ``u`` indexes the basis of the coefficient space.
"""

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .algebra import as_operator, descendant
from .linalg import (
    identity, is_zero, kernel_and_rank, matmul, qarray, qeinsum, rank_fraction_free, rank_rational, zeros,
)
from .representations import adjoint_mrb_representation, induced_representation

__all__ = [
    "BASIS_ORDER", "Cochain2", "Cochain3", "TotalCochain2", "ComplexReport",
    "delta1", "delta2", "partial1", "partial2", "phi1", "phi2", "d1", "d2",
    "matrix_of", "cohomology_dims", "cochain_dims", "ly_extra_conditions",
]

BASIS_ORDER = "wedge-lex-1"


@lru_cache(maxsize=None)
def _pairs(n):
    I, J = np.triu_indices(n, k=1)
    return I, J


def _npairs(n):
    return n * (n - 1) // 2


def _expand_pairs(X, n, axis):
    """Canonical pair axis at ``axis`` -> two antisymmetric full axes."""
    I, J = _pairs(n)
    X = np.moveaxis(X, axis, -1)
    full = zeros(X.shape[:-1] + (n, n))
    full[..., I, J] = X
    full[..., J, I] = -X
    return np.moveaxis(full, (-2, -1), (axis, axis + 1) if axis >= 0 else (axis - 1, axis))


def _take_pair(X, axis):
    """Two full axes starting at ``axis`` (negative) -> canonical pair axis."""
    n = X.shape[axis]
    I, J = _pairs(n)
    X = np.moveaxis(X, (axis, axis + 1), (-2, -1))
    return np.moveaxis(X[..., I, J], -1, axis + 1)


@dataclass(frozen=True, eq=False)
class Cochain2:
    """``f`` has shape (P, m) and ``g`` shape (P, n, m) over the P wedge pairs."""

    n: int
    m: int
    f: np.ndarray
    g: np.ndarray

    @classmethod
    def zero(cls, n, m):
        P = _npairs(n)
        return cls(n, m, zeros((P, m)), zeros((P, n, m)))

    @classmethod
    def from_full(cls, F, G):
        n, m = F.shape[0], F.shape[-1]
        return cls(n, m, _take_pair(F, -3), _take_pair(G, -4))

    @classmethod
    def from_vector(cls, vec, n, m):
        vec = qarray(vec).reshape(-1)
        P = _npairs(n)
        if vec.size != P * m * (n + 1):
            raise ValueError(f"expected {P * m * (n + 1)} coordinates, got {vec.size}")
        return cls(n, m, vec[:P * m].reshape(P, m), vec[P * m:].reshape(P, n, m))

    @staticmethod
    def dim(n, m):
        return _npairs(n) * m * (n + 1)

    def full(self):
        return _expand_pairs(self.f, self.n, -2), _expand_pairs(self.g, self.n, -3)

    def to_vector(self):
        return np.concatenate([self.f.reshape(-1), self.g.reshape(-1)])

    def __add__(self, other):
        return Cochain2(self.n, self.m, self.f + other.f, self.g + other.g)

    def __sub__(self, other):
        return Cochain2(self.n, self.m, self.f - other.f, self.g - other.g)

    def __neg__(self):
        return Cochain2(self.n, self.m, -self.f, -self.g)

    def __eq__(self, other):
        return (isinstance(other, Cochain2) and (self.n, self.m) == (other.n, other.m)
                and is_zero(self.to_vector() - other.to_vector()))

    __hash__ = None

    def is_zero(self):
        return is_zero(self.to_vector())


@dataclass(frozen=True, eq=False)
class Cochain3:
    """``f`` has shape (P, P, m) and ``g`` shape (P, P, n, m)."""

    n: int
    m: int
    f: np.ndarray
    g: np.ndarray

    @classmethod
    def from_full(cls, F, G):
        n, m = F.shape[0], F.shape[-1]
        return cls(n, m, _take_pair(_take_pair(F, -5), -3), _take_pair(_take_pair(G, -6), -4))

    @staticmethod
    def dim(n, m):
        P = _npairs(n)
        return P * P * m * (n + 1)

    def full(self):
        F = _expand_pairs(_expand_pairs(self.f, self.n, -2), self.n, -4)
        G = _expand_pairs(_expand_pairs(self.g, self.n, -3), self.n, -5)
        return F, G

    def to_vector(self):
        return np.concatenate([self.f.reshape(-1), self.g.reshape(-1)])

    def is_zero(self):
        return is_zero(self.to_vector())


@dataclass(frozen=True, eq=False)
class TotalCochain2:
    ly: Cochain2
    op: np.ndarray

    @classmethod
    def zero(cls, n, m):
        return cls(Cochain2.zero(n, m), zeros((m, n)))

    @classmethod
    def from_vector(cls, vec, n, m):
        vec = qarray(vec).reshape(-1)
        k = Cochain2.dim(n, m)
        return cls(Cochain2.from_vector(vec[:k], n, m), vec[k:].reshape(m, n))

    def to_vector(self):
        return np.concatenate([self.ly.to_vector(), self.op.reshape(-1)])

    def __add__(self, other):
        return TotalCochain2(self.ly + other.ly, self.op + other.op)

    def __sub__(self, other):
        return TotalCochain2(self.ly - other.ly, self.op - other.op)

    def __neg__(self):
        return TotalCochain2(-self.ly, -self.op)

    def is_zero(self):
        return is_zero(self.to_vector())


# --- coboundaries on full tensors ---------------------------------------------

def _delta1_full(A, rep, H):
    c, t = A.binary, A.ternary
    rho, th, D = rep.rho, rep.theta, rep.D
    rh = qeinsum("xab,...by->...xya", rho, H)
    F = rh - np.swapaxes(rh, -3, -2) - qeinsum("xyk,...ak->...xya", c, H)
    G = (qeinsum("xyab,...bz->...xyza", D, H)
         + qeinsum("yzab,...bx->...xyza", th, H)
         - qeinsum("xzab,...by->...xyza", th, H)
         - qeinsum("xyzk,...ak->...xyza", t, H))
    return F, G


def _delta2_full(A, rep, F, G):
    # (x1, y1, x2, y2, z) -> (p, q, r, s, z); u, v index V
    c, t = A.binary, A.ternary
    rho, th, D = rep.rho, rep.theta, rep.D
    F3 = (-qeinsum("ruv,...pqsv->...pqrsu", rho, G)
          + qeinsum("suv,...pqrv->...pqrsu", rho, G)
          + qeinsum("rsk,...pqku->...pqrsu", c, G)
          + qeinsum("pquv,...rsv->...pqrsu", D, F)
          - qeinsum("pqrk,...ksu->...pqrsu", t, F)
          - qeinsum("pqsk,...rku->...pqrsu", t, F))
    G3 = (-qeinsum("szuv,...pqrv->...pqrszu", th, G)
          + qeinsum("rzuv,...pqsv->...pqrszu", th, G)
          + qeinsum("pquv,...rszv->...pqrszu", D, G)
          - qeinsum("rsuv,...pqzv->...pqrszu", D, G)
          - qeinsum("pqrk,...kszu->...pqrszu", t, G)
          - qeinsum("pqsk,...rkzu->...pqrszu", t, G)
          - qeinsum("pqzk,...rsku->...pqrszu", t, G)
          + qeinsum("rszk,...pqku->...pqrszu", t, G))
    return F3, G3


def _pre(T, R, axis):
    """Precompose the algebra argument at ``axis`` (negative) with R."""
    return np.moveaxis(qeinsum("...p,px->...x", np.moveaxis(T, axis, -1), R), -1, axis)


def _post(RV, T):
    return qeinsum("ab,...b->...a", RV, T)


def _phi1_full(R, RV, H):
    return qeinsum("...aj,jk->...ak", H, R) - qeinsum("ab,...bj->...aj", RV, H)


def _phi2_full(R, RV, F, G):
    Fx, Fy = _pre(F, R, -3), _pre(F, R, -2)
    Fxy = _pre(Fx, R, -2)
    F2 = Fxy - _post(RV, Fx + Fy) + F
    Gx, Gy, Gz = _pre(G, R, -4), _pre(G, R, -3), _pre(G, R, -2)
    Gxy, Gxz, Gyz = _pre(Gx, R, -3), _pre(Gx, R, -2), _pre(Gy, R, -2)
    Gxyz = _pre(Gxy, R, -2)
    G2 = Gxyz - _post(RV, Gxy + Gxz + Gyz + G) + Gx + Gy + Gz
    return F2, G2


def _mrbo_data(A, R, rep):
    R = as_operator(R, A.dim)
    return descendant(A, R), induced_representation(rep, R)


def _require_rv(rep):
    if rep.rv is None:
        raise ValueError("representation carries no operator on V (rv)")
    return rep.rv


# --- public coboundaries -------------------------------------------------------

def delta1(A, rep, h):
    h = qarray(h).reshape(rep.dim_v, A.dim)
    return Cochain2.from_full(*_delta1_full(A, rep, h))


def delta2(A, rep, c):
    return Cochain3.from_full(*_delta2_full(A, rep, *c.full()))


def partial1(A, R, rep, h):
    """The MRBO coboundary: delta1 over the descendant algebra and induced representation."""
    return delta1(*_mrbo_data(A, R, rep), h)


def partial2(A, R, rep, c):
    return delta2(*_mrbo_data(A, R, rep), c)


def phi1(A, R, rep, h):
    R = as_operator(R, A.dim)
    h = qarray(h).reshape(rep.dim_v, A.dim)
    return _phi1_full(R, _require_rv(rep), h)


def phi2(A, R, rep, c):
    R = as_operator(R, A.dim)
    return Cochain2.from_full(*_phi2_full(R, _require_rv(rep), *c.full()))


def d1(A, R, rep, h):
    return TotalCochain2(delta1(A, rep, h), -phi1(A, R, rep, h))


def d2(A, R, rep, c):
    """Returns ``(delta2(f, g), -partial1(h) - phi2(f, g))`` for ``c = ((f, g), h)``."""
    second = -partial1(A, R, rep, c.op) - phi2(A, R, rep, c.ly)
    return delta2(A, rep, c.ly), second


# --- matrices -------------------------------------------------------------------

def cochain_dims(n, m):
    """Dimensions of C1, C2, C3 (Yamaguti complex) for algebra dim n and module dim m."""
    return n * m, Cochain2.dim(n, m), Cochain3.dim(n, m)


def _basis1(n, m):
    return identity(n * m).reshape(n * m, m, n)


def _basis2_full(n, m):
    k = Cochain2.dim(n, m)
    P = _npairs(n)
    E = identity(k)
    f = E[:, :P * m].reshape(k, P, m)
    g = E[:, P * m:].reshape(k, P, n, m)
    return _expand_pairs(f, n, -2), _expand_pairs(g, n, -3)


def _flat2(F, G):
    return _stack(_take_pair(F, -3), _take_pair(G, -4))


def _flat3(F, G):
    return _stack(_take_pair(_take_pair(F, -5), -3), _take_pair(_take_pair(G, -6), -4))


def _stack(f, g):
    B = f.shape[0]
    return np.concatenate([f.reshape(B, int(np.prod(f.shape[1:]))),
                           g.reshape(B, int(np.prod(g.shape[1:])))], axis=1)


def _columns(rows, ncod):
    """Stacked codomain vectors (one per domain basis element) -> matrix."""
    if rows.shape[0] == 0:
        return zeros((ncod, 0))
    return np.ascontiguousarray(rows.T)


_TAGS = ("delta1", "delta2", "partial1", "partial2", "phi1", "phi2", "d1", "d2")


def matrix_of(tag, A, R=None, rep=None):
    """Matrix of a differential in the canonical cochain bases.

    Columns index the domain basis and rows the codomain basis.  Orderings:
    C1 is ``(target, source)`` row-major; C2 lists the f-part over wedge pairs
    and then the g-part over ``(pair, k)``, each crossed with the V basis; C3
    does the same with two pair slots; total cochains put the Yamaguti part
    first and the operator part second.
    """
    if tag not in _TAGS:
        raise ValueError(f"unknown differential {tag!r}; expected one of {', '.join(_TAGS)}")
    n, m = A.dim, rep.dim_v
    c1, c2, c3 = cochain_dims(n, m)
    if tag in ("partial1", "partial2"):
        A_R, rep_R = _mrbo_data(A, R, rep)
        return matrix_of(tag.replace("partial", "delta"), A_R, None, rep_R)
    if tag == "delta1":
        return _columns(_flat2(*_delta1_full(A, rep, _basis1(n, m))), c2)
    if tag == "delta2":
        return _columns(_flat3(*_delta2_full(A, rep, *_basis2_full(n, m))), c3)
    R = as_operator(R, n)
    RV = _require_rv(rep)
    if tag == "phi1":
        return _columns(_phi1_full(R, RV, _basis1(n, m)).reshape(c1, c1), c1)
    if tag == "phi2":
        return _columns(_flat2(*_phi2_full(R, RV, *_basis2_full(n, m))), c2)
    if tag == "d1":
        return np.concatenate([matrix_of("delta1", A, R, rep), -matrix_of("phi1", A, R, rep)])
    # d2: domain C2 + C1, codomain C3 + C2
    top = np.concatenate([matrix_of("delta2", A, R, rep), zeros((c3, c1))], axis=1)
    bottom = np.concatenate([-matrix_of("phi2", A, R, rep), -matrix_of("partial1", A, R, rep)], axis=1)
    return np.concatenate([top, bottom])


# --- cohomology ------------------------------------------------------------------

@dataclass(frozen=True)
class ComplexReport:
    complex: str
    degree: int
    dim_cochain: int
    dim_cocycles: int
    dim_coboundaries: int
    dim_cohomology: int
    rank_out: int
    rank_in: int
    basis_order: str = BASIS_ORDER

    def as_dict(self):
        return dict(self.__dict__)


class ComplexError(RuntimeError):
    """A differential does not square to zero on the given data."""


_DIFFERENTIALS = {
    ("ly", 1): (None, "delta1"),
    ("ly", 2): ("delta1", "delta2"),
    ("mrbo", 1): (None, "partial1"),
    ("mrbo", 2): ("partial1", "partial2"),
    ("mrbly", 1): (None, "d1"),
    ("mrbly", 2): ("d1", "d2"),
}


def _rank(M):
    """Rank by fraction-free elimination, confirmed by rational row reduction."""
    r1 = rank_fraction_free(M)
    r2 = rank_rational(M)
    if r1 != r2:
        raise ComplexError(f"elimination routes disagree on rank: {r1} vs {r2}")
    return r1


def cohomology_dims(complex, degree, A, R=None, rep=None):
    """Dimensions of cochains, cocycles, coboundaries and cohomology.

    The complexes start in degree 1, so H1 is the kernel of the outgoing
    differential with nothing to quotient by.
    """
    key = (complex, degree)
    if key not in _DIFFERENTIALS:
        raise ValueError(f"unsupported complex/degree {key}; complexes ly, mrbo, mrbly in degrees 1, 2")
    if rep is None:
        rep = adjoint_mrb_representation(A, R)
    incoming, outgoing = _DIFFERENTIALS[key]
    M_out = matrix_of(outgoing, A, R, rep)
    rank_out = _rank(M_out)
    dim = M_out.shape[1]
    rank_in = 0
    if incoming is not None:
        M_in = matrix_of(incoming, A, R, rep)
        if not is_zero(matmul(M_out, M_in)):
            raise ComplexError(f"{outgoing} after {incoming} is not zero; coboundaries are not cocycles")
        rank_in = _rank(M_in)
    cocycles = dim - rank_out
    return ComplexReport(complex, degree, dim, cocycles, rank_in, cocycles - rank_in, rank_out, rank_in)


def cocycle_basis(tag, A, R=None, rep=None):
    """Basis of the kernel of a differential, one coordinate vector per row."""
    return kernel_and_rank(matrix_of(tag, A, R, rep))[0]


def ly_extra_conditions(A, rep, c):
    """Residuals of the two cyclic identities that a 2-cochain must also meet for
    ``L + V`` with brackets twisted by ``c`` to satisfy the cyclic axioms.

    Returns ``(first, second)`` as full tensors indexed by ``(x, y, z, u)`` and
    ``(x, y, z, a, u)``; both vanish exactly when the twisted brackets satisfy
    the cyclic sum axioms on mixed tuples.
    """
    F, G = c.full()
    c2 = A.binary
    rho, th = rep.rho, rep.theta

    def cyc(T):
        return (T + qeinsum("yzx...->xyz...", T) + qeinsum("zxy...->xyz...", T))

    # f([x,y],z) - rho(z) f(x,y) + g(x,y,z)
    first = cyc(qeinsum("xyk,kzu->xyzu", c2, F) - qeinsum("zuv,xyv->xyzu", rho, F) + G)
    # theta(z,a) f(x,y) + g([x,y],z,a)
    inner = qeinsum("zauv,xyv->xyzau", th, F) + qeinsum("xyk,kzau->xyzau", c2, G)
    second = cyc(inner)
    return first, second
