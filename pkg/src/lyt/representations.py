"""Representations (rho, theta, D) of Lie-Yamaguti algebras and their operator-compatible variants.

Action maps are stored as stacks of ``m x m`` matrices: ``rho[i]`` is the
action of ``e_i`` and ``theta[i, j]``, ``D[i, j]`` the actions of the pair
``(e_i, e_j)``.
"""

from dataclasses import dataclass

import numpy as np

from .algebra import LYAlgebra, as_operator, check_ly_axioms, check_modified_rb, descendant
from .linalg import qarray, qeinsum, zeros
from .report import AxiomReport, CheckFailed

__all__ = [
    "Representation", "MRBLYAlgebra", "make_representation", "check_representation",
    "check_mrb_representation", "check_rb_m1_representation", "adjoint_representation",
    "adjoint_mrb_representation", "induced_representation", "semidirect_product",
    "transport", "zero_representation", "check_mrbly",
]


@dataclass(frozen=True, eq=False)
class Representation:
    algebra: LYAlgebra
    dim_v: int
    rho: np.ndarray
    theta: np.ndarray
    D: np.ndarray
    rv: np.ndarray = None

    def with_rv(self, rv):
        rv = None if rv is None else as_operator(rv, self.dim_v)
        return Representation(self.algebra, self.dim_v, self.rho, self.theta, self.D, rv)

    def __eq__(self, other):
        if not isinstance(other, Representation):
            return NotImplemented
        same_rv = (self.rv is None and other.rv is None) or (
            self.rv is not None and other.rv is not None and bool(np.all(self.rv == other.rv)))
        return (self.algebra == other.algebra and self.dim_v == other.dim_v and same_rv
                and all(bool(np.all(a == b)) for a, b in
                        ((self.rho, other.rho), (self.theta, other.theta), (self.D, other.D))))

    __hash__ = None


@dataclass(frozen=True, eq=False)
class MRBLYAlgebra:
    """An algebra paired with a modified Rota-Baxter operator."""

    algebra: LYAlgebra
    operator: np.ndarray

    @property
    def dim(self):
        return self.algebra.dim


def _r1_D(A, rho, theta):
    # D(x,y) = theta(y,x) - theta(x,y) - rho([x,y]) + rho(x)rho(y) - rho(y)rho(x)
    rr = qeinsum("xab,ybc->xyac", rho, rho)
    return (qeinsum("yxab->xyab", theta) - theta
            - qeinsum("xyk,kab->xyab", A.binary, rho)
            + rr - qeinsum("yxab->xyab", rr))


def make_representation(A, dim_v, rho, theta, D=None, rv=None):
    """Bundle action data; ``D`` defaults to the value forced by R1. Nothing is validated."""
    n, m = A.dim, int(dim_v)
    rho = qarray(rho) if np.size(rho) else zeros((n, m, m))
    theta = qarray(theta) if np.size(theta) else zeros((n, n, m, m))
    rho = rho.reshape((n, m, m))
    theta = theta.reshape((n, n, m, m))
    if D is None:
        D = _r1_D(A, rho, theta)
    else:
        D = qarray(D).reshape((n, n, m, m)) if np.size(D) else zeros((n, n, m, m))
    if rv is not None:
        rv = as_operator(rv, m) if m else zeros((0, 0))
    return Representation(A, m, rho, theta, D, rv)


def zero_representation(A, dim_v, rv=None):
    n, m = A.dim, dim_v
    return make_representation(A, m, zeros((n, m, m)), zeros((n, n, m, m)), rv=rv)


def _mm(P, Q_):
    return qeinsum("...ab,...bc->...ac", P, Q_)


def check_representation(rep):
    """Check R1-R7 and the derived identity R6' on basis tuples."""
    A = rep.algebra
    c, t = A.binary, A.ternary
    rho, th, D = rep.rho, rep.theta, rep.D
    report = AxiomReport()
    n, m = A.dim, rep.dim_v
    zero = lambda k: zeros((n,) * k + (m, m))

    rr = qeinsum("xab,ybc->xyac", rho, rho)
    r1 = (D - qeinsum("yxab->xyab", th) + th + qeinsum("xyk,kab->xyab", c, rho)
          - rr + qeinsum("yxab->xyab", rr))
    report.compare("R1", r1, zero(2), 2)

    dxy = qeinsum("xyk,kzab->xyzab", c, D)  # D([x,y], z)
    r2 = dxy + qeinsum("yzk,kxab->xyzab", c, D) + qeinsum("zxk,kyab->xyzab", c, D)
    report.compare("R2", r2, zero(3), 2)

    # theta([x,y],a) = theta(x,a)rho(y) - theta(y,a)rho(x)   index order (x,y,a)
    lhs = qeinsum("xyk,kaij->xyaij", c, th)
    rhs = qeinsum("xaij,yjl->xyail", th, rho) - qeinsum("yaij,xjl->xyail", th, rho)
    report.compare("R3", lhs, rhs, 2)

    # D(a,b)rho(x) = rho(x)D(a,b) + rho({a,b,x})   index order (a,b,x)
    lhs = qeinsum("abij,xjl->abxil", D, rho)
    rhs = qeinsum("xij,abjl->abxil", rho, D) + qeinsum("abxk,kij->abxij", t, rho)
    report.compare("R4", lhs, rhs, 2)

    # theta(x,[a,b]) = rho(a)theta(x,b) - rho(b)theta(x,a)   index order (x,a,b)
    lhs = qeinsum("abk,xkij->xabij", c, th)
    rhs = qeinsum("aij,xbjl->xabil", rho, th) - qeinsum("bij,xajl->xabil", rho, th)
    report.compare("R5", lhs, rhs, 2)

    # D(a,b)theta(x,y) = theta(x,y)D(a,b) + theta({a,b,x},y) + theta(x,{a,b,y})
    for tag, X in (("R6", th), ("R6'", D)):
        lhs = qeinsum("abij,xyjl->abxyil", D, X)
        rhs = (qeinsum("xyij,abjl->abxyil", X, D)
               + qeinsum("abxk,kyij->abxyij", t, X)
               + qeinsum("abyk,xkij->abxyij", t, X))
        report.compare(tag, lhs, rhs, 2)

    # theta(a,{x,y,z}) = theta(y,z)theta(a,x) - theta(x,z)theta(a,y) + D(x,y)theta(a,z)
    lhs = qeinsum("xyzk,akij->axyzij", t, th)
    rhs = (qeinsum("yzij,axjl->axyzil", th, th)
           - qeinsum("xzij,ayjl->axyzil", th, th)
           + qeinsum("xyij,azjl->axyzil", D, th))
    report.compare("R7", lhs, rhs, 2)
    return report


def _at(X, R, slots):
    """Precompose the first ``slots`` algebra arguments of an action stack with R."""
    if slots == 1:
        return qeinsum("px,pab->xab", R, X)
    return qeinsum("px,qy,pqab->xyab", R, R, X)


def _left(R, X):
    return qeinsum("pq,...qb->...pb", R, X)


def _right(X, R):
    return qeinsum("...ap,pb->...ab", X, R)


def _R_slot(X, R, slot):
    if slot == 0:
        return qeinsum("px,pyab->xyab", R, X)
    return qeinsum("py,xpab->xyab", R, X)


def _require_rv(rep):
    if rep.rv is None:
        raise ValueError("representation carries no operator on V (rv)")
    return rep.rv


def check_mrb_representation(rep, R):
    """Check the compatibility of ``rep.rv`` with a modified Rota-Baxter operator R."""
    A = rep.algebra
    R = as_operator(R, A.dim)
    RV = _require_rv(rep)
    report = AxiomReport()
    rho = rep.rho
    rRx = _at(rho, R, 1)
    # rho(Rx)R_V = R_V(rho(Rx) + rho(x)R_V) - rho(x)
    report.compare("MRB-rho", _right(rRx, RV), _left(RV, rRx + _right(rho, RV)) - rho, 2)
    for tag, X in (("MRB-theta", rep.theta), ("MRB-D", rep.D)):
        XRR = _at(X, R, 2)
        XRy, XxR = _R_slot(X, R, 0), _R_slot(X, R, 1)
        lhs = _right(XRR, RV)
        rhs = (_left(RV, XRR + _right(XRy, RV) + _right(XxR, RV) + X)
               - XRy - _right(X, RV) - XxR)
        report.compare(tag, lhs, rhs, 2)
    return report


def check_rb_m1_representation(rep, T):
    """Check the weight -1 Rota-Baxter compatibility of ``rep.rv`` (playing T_V) with T."""
    A = rep.algebra
    T = as_operator(T, A.dim)
    TV = _require_rv(rep)
    report = AxiomReport()
    rho = rep.rho
    rTx = _at(rho, T, 1)
    report.compare("RB-rho", _right(rTx, TV), _left(TV, rTx + _right(rho, TV) - rho), 2)
    th = rep.theta
    XTT = _at(th, T, 2)
    XTy, XxT = _R_slot(th, T, 0), _R_slot(th, T, 1)
    inner = (XTT + _right(XTy, TV) + _right(XxT, TV) - XTy - XxT - _right(th, TV) + th)
    report.compare("RB-theta", _right(XTT, TV), _left(TV, inner), 2)
    return report


def adjoint_representation(A):
    """rho = ad, theta(x,y) = {-,x,y}, D(x,y) = {x,y,-}."""
    rho = qeinsum("izk->ikz", A.binary)
    theta = qeinsum("zijk->ijkz", A.ternary)
    D = qeinsum("ijzk->ijkz", A.ternary)
    return Representation(A, A.dim, rho, theta, D)


def adjoint_mrb_representation(A, R):
    R = as_operator(R, A.dim)
    report = check_modified_rb(A, R)
    if not report.passed:
        raise CheckFailed("operator is not a modified Rota-Baxter operator", report)
    return adjoint_representation(A).with_rv(R)


def transport(rep):
    """Replace the module operator T_V by ``2 T_V - id``."""
    RV = _require_rv(rep)
    return rep.with_rv(2 * RV - np.eye(rep.dim_v, dtype=int).astype(object))


def induced_representation(rep, R, form="transported"):
    """Representation of the descendant algebra carrying the same rv.

    ``rho_R(x) = rho(Rx) - R_V rho(x)`` in both forms.  For the pair maps the
    default ``"transported"`` form is

        theta_R(x,y) = theta(Rx,Ry) + theta(x,y) - R_V (theta(Rx,y) + theta(x,Ry))

    (likewise D_R), the image of the weight -1 Rota-Baxter induced
    representation under ``T -> 2T - id``; it satisfies R1-R7 over the
    descendant algebra.  ``form="printed"`` gives the variant
    ``theta(Rx,Ry) + theta(Rx,y) + theta(x,Ry) - R_V theta(x,y)``, which in
    general does not (e.g. R = R_V = id on a non-abelian algebra breaks R3).
    """
    if form not in ("transported", "printed"):
        raise ValueError(f"unknown form {form!r}")
    R = as_operator(R, rep.algebra.dim)
    report = check_mrb_representation(rep, R)
    if not report.passed:
        raise CheckFailed("representation is not compatible with the operator", report)
    RV = rep.rv
    A_R = descendant(rep.algebra, R)
    rho_R = _at(rep.rho, R, 1) - _left(RV, rep.rho)

    def pair(X):
        one_R = _R_slot(X, R, 0) + _R_slot(X, R, 1)
        if form == "printed":
            return _at(X, R, 2) + one_R - _left(RV, X)
        return _at(X, R, 2) + X - _left(RV, one_R)

    return Representation(A_R, rep.dim_v, rho_R, pair(rep.theta), pair(rep.D), RV)


def _semidirect_tensors(A, rep):
    n, m = A.dim, rep.dim_v
    N = n + m
    L, V = slice(0, n), slice(n, N)
    c = zeros((N, N, N))
    t = zeros((N, N, N, N))
    c[L, L, L] = A.binary
    # [x, v] = rho(x)v
    c[L, V, V] = qeinsum("xab->xba", rep.rho)
    c[V, L, V] = -qeinsum("xab->bxa", rep.rho)
    t[L, L, L, L] = A.ternary
    # {x, y, w} = D(x,y)w ; {x, v, z} = -theta(x,z)v ; {u, y, z} = theta(y,z)u
    t[L, L, V, V] = qeinsum("xyab->xyba", rep.D)
    t[L, V, L, V] = -qeinsum("xzab->xbza", rep.theta)
    t[V, L, L, V] = qeinsum("yzab->byza", rep.theta)
    return c, t


def semidirect_product(A, R, rep):
    """The algebra on L + V (L basis first) with operator R + rv."""
    R = as_operator(R, A.dim)
    gate = check_representation(rep)
    if gate.passed:
        gate = check_mrb_representation(rep, R)
    if not gate.passed:
        raise CheckFailed("representation is not a valid modified Rota-Baxter representation", gate)
    c, t = _semidirect_tensors(A, rep)
    n, m = A.dim, rep.dim_v
    op = zeros((n + m, n + m))
    op[:n, :n] = R
    op[n:, n:] = rep.rv
    return MRBLYAlgebra(LYAlgebra(c, t), op)


def check_mrbly(alg):
    """Both checks of an MRBLYAlgebra merged into one report."""
    return check_ly_axioms(alg.algebra).merge(check_modified_rb(alg.algebra, alg.operator))
