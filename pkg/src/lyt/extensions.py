"""Abelian extensions of a Lie-Yamaguti algebra with a modified Rota-Baxter operator.

Extensions live on ``L + V`` with the ``L`` basis first.  A cocycle
``(nu, psi, chi)`` twists the semidirect product brackets by ``nu`` and
``psi`` and the operator by ``chi``:

    [x+u, y+v]      = [x,y] + rho(x)v - rho(y)u + nu(x,y)
    {x+u, y+v, z+w} = {x,y,z} + theta(y,z)u - theta(x,z)v + D(x,y)w + psi(x,y,z)
    R(x+u)          = Rx + chi(x) + R_V u
"""

from dataclasses import dataclass

import numpy as np

from .algebra import LYAlgebra, as_operator, check_ly_axioms, check_modified_rb
from .cohomology import Cochain2, TotalCochain2, d1, d2, matrix_of
from .linalg import identity, is_zero, matmul, qarray, qeinsum, solve, zeros
from .report import AxiomReport, CheckFailed
from .representations import (
    MRBLYAlgebra, Representation, _semidirect_tensors, check_mrb_representation,
    check_representation,
)

__all__ = [
    "AbelianExtension", "ExtensionCocycle", "extension_from_cocycle", "cocycle_from_section",
    "sections_cohomologous", "extensions_equivalent", "canonical_section",
]


@dataclass(frozen=True, eq=False)
class ExtensionCocycle:
    """``nu[x, y, u]``, ``psi[x, y, z, u]`` as full tensors and ``chi`` as an m x n matrix."""

    nu: np.ndarray
    psi: np.ndarray
    chi: np.ndarray

    @classmethod
    def zero(cls, n, m):
        return cls(zeros((n, n, m)), zeros((n, n, n, m)), zeros((m, n)))

    @classmethod
    def from_total(cls, c):
        nu, psi = c.ly.full()
        return cls(nu, psi, qarray(c.op))

    def to_total(self):
        return TotalCochain2(Cochain2.from_full(self.nu, self.psi), self.chi)

    def __eq__(self, other):
        return (isinstance(other, ExtensionCocycle)
                and self.nu.shape == other.nu.shape and self.chi.shape == other.chi.shape
                and is_zero(self.nu - other.nu) and is_zero(self.psi - other.psi)
                and is_zero(self.chi - other.chi))

    __hash__ = None


@dataclass(frozen=True, eq=False)
class AbelianExtension:
    """``total`` on ``L + V``; ``projection`` is n x (n+m) and ``inclusion`` (n+m) x m."""

    total: MRBLYAlgebra
    base: MRBLYAlgebra
    ideal_basis: tuple
    projection: np.ndarray
    inclusion: np.ndarray

    @property
    def n(self):
        return self.base.dim

    @property
    def m(self):
        return len(self.ideal_basis)

    def ideal_coordinates(self):
        """Left inverse q of the inclusion (q i = id)."""
        i = self.inclusion
        gram = matmul(i.T, i)
        inv = np.stack([solve(gram, col) for col in identity(self.m)], axis=1) if self.m else zeros((0, 0))
        return matmul(inv, i.T)


def canonical_section(n, m):
    return np.concatenate([identity(n), zeros((m, n))])


def _twisted(A, R, rep, c):
    n, m = A.dim, rep.dim_v
    cb, tb = _semidirect_tensors(A, rep)
    cb[:n, :n, n:] += c.nu
    tb[:n, :n, :n, n:] += c.psi
    op = zeros((n + m, n + m))
    op[:n, :n] = R
    op[n:, :n] = c.chi
    op[n:, n:] = rep.rv
    return MRBLYAlgebra(LYAlgebra(cb, tb), op)


def _embedding(n, m):
    p = np.concatenate([identity(n), zeros((n, m))], axis=1)
    i = np.concatenate([zeros((n, m)), identity(m)])
    return p, i


def _validate_rep(A, R, rep):
    gate = check_ly_axioms(A).merge(check_modified_rb(A, R))
    gate.merge(check_representation(rep)).merge(check_mrb_representation(rep, R))
    if not gate.passed:
        raise CheckFailed("base data is not a modified Rota-Baxter representation", gate)


def _cocycle_report(A, R, rep, c):
    first, second = d2(A, R, rep, c.to_total())
    report = AxiomReport()
    report.compare("cocycle-ly", first.to_vector(), zeros(first.to_vector().shape), 0)
    report.compare("cocycle-operator", second.to_vector(), zeros(second.to_vector().shape), 0)
    return report


def extension_from_cocycle(A, R, rep, c):
    """Build the extension twisted by ``c``.

    Refuses non-cocycles.  A cocycle whose twisted brackets still break the
    cyclic-sum axioms (possible: d2 does not see them) is refused as well,
    with the failing axiom report.
    """
    R = as_operator(R, A.dim)
    _validate_rep(A, R, rep)
    cocycle = _cocycle_report(A, R, rep, c)
    if not cocycle.passed:
        raise CheckFailed("not a 2-cocycle", cocycle)
    total = _twisted(A, R, rep, c)
    report = check_ly_axioms(total.algebra).merge(check_modified_rb(total.algebra, total.operator))
    if not report.passed:
        raise CheckFailed("2-cocycle, but the twisted algebra violates the axioms", report)
    p, i = _embedding(A.dim, rep.dim_v)
    ideal = tuple(range(A.dim, A.dim + rep.dim_v))
    return AbelianExtension(total, MRBLYAlgebra(A, R), ideal, p, i)


def cocycle_from_section(ext, s):
    """Representation and cocycle read off an extension through a section ``s``."""
    s = qarray(s)
    n, m = ext.n, ext.m
    if s.shape != (n + m, n) or not is_zero(matmul(ext.projection, s) - identity(n)):
        raise ValueError("s is not a section: projection after s must be the identity")
    c, t = ext.total.algebra.binary, ext.total.algebra.ternary
    Rh = ext.total.operator
    i = ext.inclusion
    q = ext.ideal_coordinates()
    if not is_zero(matmul(ext.projection, matmul(Rh, i))):
        raise ValueError("the ideal is not invariant under the total operator")
    A, R = ext.base.algebra, ext.base.operator

    def bil(T, X, Y):
        return qeinsum("ax,by,abk->xyk", X, Y, T)

    def tril(T, X, Y, Z):
        return qeinsum("ax,by,cz,abck->xyzk", X, Y, Z, T)

    def to_v(T):
        return qeinsum("...k,uk->...u", T, q)

    # action matrices act on ideal coordinates: M[x][u, v] = coefficient u of action on e_v
    rho = np.einsum("xvu->xuv", to_v(bil(c, s, i)))
    theta = np.einsum("vxyu->xyuv", to_v(tril(t, i, s, s)))
    D = np.einsum("xyvu->xyuv", to_v(tril(t, s, s, i)))
    RV = matmul(q, matmul(Rh, i))
    rep = Representation(A, m, rho, theta, D, RV)
    r1 = check_representation(rep)
    if any(v.axiom == "R1" for v in r1.violations):
        raise RuntimeError("D read from the total algebra disagrees with the value forced by rho and theta")

    nu = to_v(bil(c, s, s) - qeinsum("xyk,ak->xya", A.binary, s))
    psi = to_v(tril(t, s, s, s) - qeinsum("xyzk,ak->xyza", A.ternary, s))
    chi = matmul(q, matmul(Rh, s) - matmul(s, R))
    return rep, ExtensionCocycle(nu, psi, chi)


def sections_cohomologous(ext, s1, s2):
    """The map ``lambda = q(s1 - s2)`` with ``cocycle(s1) - cocycle(s2) = d1(lambda)``."""
    rep1, c1 = cocycle_from_section(ext, s1)
    rep2, c2 = cocycle_from_section(ext, s2)
    if rep1 != rep2:
        raise RuntimeError("sections induce different representations")
    lam = matmul(ext.ideal_coordinates(), qarray(s1) - qarray(s2))
    expected = d1(ext.base.algebra, ext.base.operator, rep1, lam)
    if not is_zero((c1.to_total() - c2.to_total() - expected).to_vector()):
        raise AssertionError("cocycles of two sections do not differ by d1(lambda)")
    return lam


def _is_hom(phi, src, dst):
    """phi maps the brackets and operator of ``src`` onto those of ``dst``."""
    cs, ts = src.algebra.binary, src.algebra.ternary
    cd, td = dst.algebra.binary, dst.algebra.ternary
    report = AxiomReport()
    report.compare("hom-binary", qeinsum("xyk,ak->xya", cs, phi),
                   qeinsum("px,qy,pqa->xya", phi, phi, cd))
    report.compare("hom-ternary", qeinsum("xyzk,ak->xyza", ts, phi),
                   qeinsum("px,qy,rz,pqra->xyza", phi, phi, phi, td))
    report.compare("hom-operator", matmul(phi, src.operator), matmul(dst.operator, phi), 2)
    return report


def extensions_equivalent(A, R, rep, c1, c2):
    """The isomorphism ``x + u -> x + lambda(x) + u`` between the two twisted
    extensions, or None when the cocycles are not cohomologous.

    Both cocycles must satisfy d2 = 0; the twisted algebras are compared as
    structures without re-running the axiom checks.
    """
    R = as_operator(R, A.dim)
    _validate_rep(A, R, rep)
    for k, c in enumerate((c1, c2), 1):
        cocycle = _cocycle_report(A, R, rep, c)
        if not cocycle.passed:
            raise CheckFailed(f"cocycle {k} is not a 2-cocycle", cocycle)
    n, m = A.dim, rep.dim_v
    diff = (c1.to_total() - c2.to_total()).to_vector()
    lam = solve(matrix_of("d1", A, R, rep), diff)
    if lam is None:
        return None
    lam = lam.reshape(m, n)
    phi = identity(n + m)
    phi[n:, :n] = lam
    E1, E2 = _twisted(A, R, rep, c1), _twisted(A, R, rep, c2)
    report = _is_hom(phi, E1, E2)
    p, i = _embedding(n, m)
    report.compare("diagram-projection", matmul(p, phi), p, 2)
    report.compare("diagram-inclusion", matmul(phi, i), i, 2)
    if not report.passed:
        raise AssertionError(f"equivalence map fails: {report.summary()}")
    return phi
