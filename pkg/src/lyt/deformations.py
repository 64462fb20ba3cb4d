"""Order-one deformations of a Lie-Yamaguti algebra with a modified Rota-Baxter operator.

An infinitesimal ``(F1, G1, R1)`` perturbs the binary bracket, the ternary
bracket and the operator to first order in ``t``.  Brackets are full tensors
(``F1[x, y, u]`` is the ``e_u`` coefficient of ``F1(e_x, e_y)``) and ``R1``
is a matrix acting on columns.

Linearising the axioms gives seven families of identities.  The total
differential ``d2`` encodes five of them (antisymmetry, the two derivation
rules and the two operator rules); the two cyclic-sum rules are extra
conditions that some ``d2``-cocycles violate.  :func:`check_infinitesimal`
checks all seven and cross-checks the five against ``d2``.
"""

from dataclasses import dataclass
from functools import lru_cache
from fractions import Fraction
import os
import random

import numpy as np

from .algebra import _b, _cyc3, _post, _t, as_operator, check_ly_axioms, check_modified_rb
from .cohomology import Cochain2, ComplexReport, TotalCochain2, cohomology_dims, d1, matrix_of
from .linalg import is_zero, matmul, qarray, qeinsum, solve, zeros
from .report import AxiomReport, CheckFailed
from .representations import adjoint_mrb_representation

__all__ = [
    "Infinitesimal", "DeformationReport", "Rigidity", "check_infinitesimal",
    "are_cohomologous", "is_rigid", "random_infinitesimal", "coboundary_infinitesimal",
    "ENTRY_SET", "D2_ENCODED",
]

ENTRY_SET = (-2, -1, 0, 1, 2, Fraction(1, 2))

# identities whose conjunction is equivalent to d2 = 0
D2_ENCODED = ("antisymmetry", "derivation-binary", "derivation-ternary",
              "operator-binary", "operator-ternary")


@dataclass(frozen=True, eq=False)
class Infinitesimal:
    F1: np.ndarray
    G1: np.ndarray
    R1: np.ndarray

    @classmethod
    def create(cls, F1, G1, R1):
        F1, G1, R1 = qarray(F1), qarray(G1), qarray(R1)
        n = R1.shape[0]
        if F1.shape != (n, n, n) or G1.shape != (n, n, n, n) or R1.shape != (n, n):
            raise ValueError(
                f"inconsistent shapes F1 {F1.shape}, G1 {G1.shape}, R1 {R1.shape}")
        return cls(F1, G1, R1)

    @classmethod
    def zero(cls, n):
        return cls(zeros((n, n, n)), zeros((n, n, n, n)), zeros((n, n)))

    @classmethod
    def from_total(cls, c):
        """From a total 2-cochain with coefficients in the adjoint representation."""
        F, G = c.ly.full()
        return cls(F, G, qarray(c.op))

    @property
    def dim(self):
        return self.R1.shape[0]

    def is_antisymmetric(self):
        return (is_zero(self.F1 + np.swapaxes(self.F1, 0, 1))
                and is_zero(self.G1 + np.swapaxes(self.G1, 0, 1)))

    def to_total(self):
        if not self.is_antisymmetric():
            raise ValueError("F1 and G1 must be antisymmetric in their first two arguments")
        return TotalCochain2(Cochain2.from_full(self.F1, self.G1), self.R1)

    def __sub__(self, other):
        return Infinitesimal(self.F1 - other.F1, self.G1 - other.G1, self.R1 - other.R1)

    def __add__(self, other):
        return Infinitesimal(self.F1 + other.F1, self.G1 + other.G1, self.R1 + other.R1)


@dataclass
class DeformationReport(AxiomReport):
    """Direct verdict plus the d2 cross-check.

    ``cocycle`` is the d2 verdict; ``passed`` additionally requires the two
    cyclic-sum identities, which d2 does not see.
    """

    cocycle: bool = False


def _sides(A, R, inf):
    c, t = A.binary, A.ternary
    F, G, R1 = inf.F1, inf.G1, inf.R1
    n = A.dim
    yield "antisymmetry", F, -np.swapaxes(F, 0, 1)
    yield "antisymmetry", G, -np.swapaxes(G, 0, 1)

    cyc_b = _cyc3(qeinsum("xyk,kzu->xyzu", F, c) + qeinsum("xyk,kzu->xyzu", c, F)) + _cyc3(G)
    yield "cyclic-binary", cyc_b, zeros((n,) * 4)
    cyc_t = _cyc3(qeinsum("xyk,kzau->xyzau", c, G) + qeinsum("xyk,kzau->xyzau", F, t))
    yield "cyclic-ternary", cyc_t, zeros((n,) * 5)

    # index order (a, b, x, y): G(a,b,[x,y]) + {a,b,F(x,y)} = ...
    lhs = qeinsum("xyk,abku->abxyu", c, G) + qeinsum("xyk,abku->abxyu", F, t)
    rhs = (qeinsum("abxk,kyu->abxyu", t, F) + qeinsum("abxk,kyu->abxyu", G, c)
           + qeinsum("abyk,xku->abxyu", t, F) + qeinsum("abyk,xku->abxyu", G, c))
    yield "derivation-binary", lhs, rhs

    def lin(P, Q_):
        left = qeinsum("xyzk,abku->abxyzu", Q_, P)
        right = (qeinsum("abxk,kyzu->abxyzu", Q_, P)
                 + qeinsum("abyk,xkzu->abxyzu", Q_, P)
                 + qeinsum("abzk,xyku->abxyzu", Q_, P))
        return left, right

    l1, r1 = lin(G, t)
    l2, r2 = lin(t, G)
    yield "derivation-ternary", l1 + l2, r1 + r2

    lhs = _b(F, R, R) + _b(c, R1, R) + _b(c, R, R1)
    rhs = (_post(R1, _b(c, R) + _b(c, None, R), 2)
           + _post(R, _b(F, R) + _b(F, None, R), 2)
           + _post(R, _b(c, R1) + _b(c, None, R1), 2) - F)
    yield "operator-binary", lhs, rhs

    lhs = _t(G, R, R, R) + _t(t, R1, R, R) + _t(t, R, R1, R) + _t(t, R, R, R1)
    mixed = (_t(t, None, R1, R) + _t(t, R1, None, R) + _t(t, R1, R)
             + _t(t, None, R, R1) + _t(t, R, None, R1) + _t(t, R, R1))
    rhs = (_post(R1, _t(t, None, R, R) + _t(t, R, None, R) + _t(t, R, R) + t, 3)
           + _post(R, _t(G, None, R, R) + _t(G, R, None, R) + _t(G, R, R) + G + mixed, 3)
           - _t(G, R) - _t(G, None, R) - _t(G, None, None, R)
           - _t(t, R1) - _t(t, None, R1) - _t(t, None, None, R1))
    yield "operator-ternary", lhs, rhs


def _gate(A, R):
    R = as_operator(R, A.dim)
    _context(A, tuple(R.flat))
    return R


@lru_cache(maxsize=64)
def _context(A, R_flat):
    """Validated adjoint data and the d1, d2 matrices for one (A, R)."""
    R = qarray(R_flat, (A.dim, A.dim))
    gate = check_ly_axioms(A).merge(check_modified_rb(A, R))
    if not gate.passed:
        raise CheckFailed("not a modified Rota-Baxter Lie-Yamaguti algebra", gate)
    rep = adjoint_mrb_representation(A, R)
    return rep, matrix_of("d1", A, R, rep), matrix_of("d2", A, R, rep)


def check_infinitesimal(A, R, inf):
    """Check every linearised identity on basis tuples and cross-check with d2.

    Raises ``RuntimeError`` if the identities encoded by d2 disagree with the
    d2 verdict, which can only mean an implementation error.
    """
    R = _gate(A, R)
    if inf.dim != A.dim:
        raise ValueError(f"infinitesimal has dim {inf.dim}, algebra has dim {A.dim}")
    report = DeformationReport()
    encoded_violations = 0
    for tag, lhs, rhs in _sides(A, R, inf):
        part = AxiomReport(cap=report.cap).compare(tag, lhs, rhs)
        if tag in D2_ENCODED:
            encoded_violations += part.total
        report.merge(part)

    report.cocycle = False
    if inf.is_antisymmetric():
        M2 = _context(A, tuple(R.flat))[2]
        vec = inf.to_total().to_vector()
        report.cocycle = is_zero(matmul(M2, vec.reshape(-1, 1)))
    encoded_ok = encoded_violations == 0
    if encoded_ok != report.cocycle:
        raise RuntimeError(
            f"direct check ({encoded_ok}) and d2 ({report.cocycle}) disagree; implementation error")
    return report


def are_cohomologous(A, R, inf1, inf2):
    """A map ``Psi`` with ``d1(Psi) = inf1 - inf2``, or None if there is none."""
    R = _gate(A, R)
    for k, inf in enumerate((inf1, inf2), 1):
        rep = check_infinitesimal(A, R, inf)
        if not rep.cocycle:
            raise CheckFailed(f"infinitesimal {k} is not a 2-cocycle", rep)
    diff = (inf1 - inf2).to_total().to_vector()
    x = solve(_context(A, tuple(R.flat))[1], diff)
    return None if x is None else x.reshape(A.dim, A.dim)


@dataclass(frozen=True)
class Rigidity:
    rigid: bool
    report: ComplexReport

    def __bool__(self):
        return self.rigid


def is_rigid(A, R):
    """Sufficient criterion only: True when the second total cohomology vanishes."""
    R = _gate(A, R)
    report = cohomology_dims("mrbly", 2, A, R, adjoint_mrb_representation(A, R))
    return Rigidity(report.dim_cohomology == 0, report)


def _seed(seed):
    if seed is None:
        seed = int(os.environ.get("LYT_SEED", "0"))
    return seed


def random_infinitesimal(n, seed=None, rng=None, entries=ENTRY_SET):
    """Antisymmetric random infinitesimal with coefficients from ``entries``."""
    rng = rng or random.Random(_seed(seed))
    pick = lambda: rng.choice(entries)
    F = zeros((n, n, n))
    G = zeros((n, n, n, n))
    for i in range(n):
        for j in range(i + 1, n):
            for u in range(n):
                F[i, j, u] = v = pick()
                F[j, i, u] = -v
            for k in range(n):
                for u in range(n):
                    G[i, j, k, u] = v = pick()
                    G[j, i, k, u] = -v
    R1 = qarray([[pick() for _ in range(n)] for _ in range(n)])
    return Infinitesimal(qarray(F), qarray(G), R1)


def coboundary_infinitesimal(A, R, h):
    """The infinitesimal ``d1(h)`` for a linear map h on the algebra."""
    rep = adjoint_mrb_representation(A, R)
    return Infinitesimal.from_total(d1(A, R, rep, qarray(h)))
