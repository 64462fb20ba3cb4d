"""Lie-Yamaguti algebras given by structure constants, and operator checks.

Basis vectors are ``e_0 .. e_{n-1}``.  The binary bracket is stored as
``binary[i, j, k]`` (coefficient of ``e_k`` in ``[e_i, e_j]``) and the
ternary bracket as ``ternary[i, j, k, l]`` (coefficient of ``e_l`` in
``{e_i, e_j, e_k}``).  A linear operator is a square matrix acting on
column vectors, so column ``j`` holds the image of ``e_j``.

Every identity below is multilinear in its arguments, so it holds for all
vectors as soon as it holds on basis tuples; the checkers evaluate both
sides as full tensors over basis tuples and compare them entrywise.
"""

from concurrent.futures import ThreadPoolExecutor
import os

import numpy as np

from .linalg import Q, identity, is_zero, qarray, qeinsum, zeros
from .report import AxiomReport, CheckFailed

__all__ = [
    "LYAlgebra", "make_algebra", "from_lie", "from_leibniz", "abelian",
    "check_ly_axioms", "check_modified_rb", "check_rb_weight_m1",
    "check_nijenhuis", "modified_from_rb", "descendant", "search_operators",
    "as_operator", "SEARCH_BUDGET",
]

SEARCH_BUDGET = 2_000_000


class LYAlgebra:
    """Binary and ternary structure constants on an ``n``-dimensional space.

    Construction does not check the Lie-Yamaguti identities; use
    :func:`check_ly_axioms` for that.
    """

    def __init__(self, binary, ternary):
        binary = qarray(binary)
        ternary = qarray(ternary)
        n = binary.shape[0] if binary.ndim else 0
        if binary.shape != (n, n, n) or ternary.shape != (n, n, n, n):
            raise ValueError(
                f"inconsistent structure constants: binary {binary.shape}, ternary {ternary.shape}"
            )
        binary.flags.writeable = False
        ternary.flags.writeable = False
        self.binary = binary
        self.ternary = ternary

    @property
    def dim(self):
        return self.binary.shape[0]

    def _vec(self, x):
        x = qarray(x)
        if x.shape != (self.dim,):
            raise ValueError(f"expected a vector of length {self.dim}, got shape {x.shape}")
        return x

    def bracket2(self, x, y):
        x, y = self._vec(x), self._vec(y)
        return qeinsum("i,j,ijk->k", x, y, self.binary)

    def bracket3(self, x, y, z):
        x, y, z = self._vec(x), self._vec(y), self._vec(z)
        return qeinsum("i,j,k,ijkl->l", x, y, z, self.ternary)

    def __eq__(self, other):
        if not isinstance(other, LYAlgebra) or other.dim != self.dim:
            return NotImplemented
        return bool(np.all(self.binary == other.binary) and np.all(self.ternary == other.ternary))

    def __hash__(self):
        return hash((self.dim, tuple(self.binary.flat), tuple(self.ternary.flat)))

    def __repr__(self):
        nb = sum(1 for v in self.binary.flat if v != 0) // 2
        nt = sum(1 for v in self.ternary.flat if v != 0) // 2
        return f"LYAlgebra(dim={self.dim}, binary_nonzero={nb}, ternary_nonzero={nt})"


def abelian(n):
    return LYAlgebra(zeros((n, n, n)), zeros((n, n, n, n)))


def _check_vec(vec, n, where):
    vec = qarray(vec)
    if vec.shape != (n,):
        raise ValueError(f"{where}: value must have length {n}")
    return vec


def make_algebra(dim, binary_entries=(), ternary_entries=()):
    """Build an algebra from its nonzero brackets on basis vectors.

    ``binary_entries`` holds ``(i, j, value)`` with ``i < j`` and
    ``ternary_entries`` holds ``(i, j, k, value)`` with ``i < j``; the
    antisymmetric partners are filled in by sign.
    """
    n = int(dim)
    if n < 0:
        raise ValueError("dimension must be non-negative")
    c = zeros((n, n, n))
    t = zeros((n, n, n, n))
    seen = set()
    for i, j, value in binary_entries:
        vec = _check_vec(value, n, f"binary ({i},{j})")
        if not (0 <= i < n and 0 <= j < n):
            raise IndexError(f"binary index ({i},{j}) out of range for dim {n}")
        if i == j:
            if is_zero(vec):
                continue
            raise ValueError(f"[e{i}, e{i}] must vanish (antisymmetry)")
        if i > j:
            raise ValueError(f"binary entry ({i},{j}) must have i < j")
        if ("b", i, j) in seen:
            raise ValueError(f"duplicate binary entry ({i},{j})")
        seen.add(("b", i, j))
        c[i, j] = vec
        c[j, i] = -vec
    for i, j, k, value in ternary_entries:
        vec = _check_vec(value, n, f"ternary ({i},{j},{k})")
        if not all(0 <= a < n for a in (i, j, k)):
            raise IndexError(f"ternary index ({i},{j},{k}) out of range for dim {n}")
        if i == j:
            if is_zero(vec):
                continue
            raise ValueError(f"{{e{i}, e{i}, e{k}}} must vanish (antisymmetry)")
        if i > j:
            raise ValueError(f"ternary entry ({i},{j},{k}) must have i < j")
        if ("t", i, j, k) in seen:
            raise ValueError(f"duplicate ternary entry ({i},{j},{k})")
        seen.add(("t", i, j, k))
        t[i, j, k] = vec
        t[j, i, k] = -vec
    return LYAlgebra(c, t)


def as_operator(M, n=None):
    """Coerce to a square exact matrix, optionally of size ``n``."""
    M = qarray(M)
    if M.ndim != 2 or M.shape[0] != M.shape[1]:
        raise ValueError(f"operator must be a square matrix, got shape {M.shape}")
    if n is not None and M.shape[0] != n:
        raise ValueError(f"operator is {M.shape[0]}x{M.shape[0]} but the algebra has dim {n}")
    return M


# --- tensor plumbing ----------------------------------------------------------
# Operators may carry leading batch axes ("..."); search_operators relies on it.

_SLOTS = "abcdefgh"


def _pre(T, M, slot, arity):
    """Precompose input ``slot`` of a multilinear tensor with operator M."""
    if M is None:
        return T
    ins = _SLOTS[:arity]
    src = ins[:slot] + "y" + ins[slot + 1:]
    return qeinsum(f"...y{ins[slot]},...{src}z->...{ins}z", M, T)


def _post(M, T, arity):
    """Apply operator M to the output of a multilinear tensor."""
    ins = _SLOTS[:arity]
    return qeinsum(f"...zy,...{ins}y->...{ins}z", M, T)


def _b(c, A=None, B=None):
    """Tensor of (x, y) -> [A x, B y]."""
    return _pre(_pre(c, A, 0, 2), B, 1, 2)


def _t(t, A=None, B=None, C=None):
    """Tensor of (x, y, z) -> {A x, B y, C z}."""
    return _pre(_pre(_pre(t, A, 0, 3), B, 1, 3), C, 2, 3)


def _mm(A, B):
    return qeinsum("...ij,...jk->...ik", A, B)


def _cyc3(T):
    """Cyclic sum over the first three slots of T[x, y, z, ...]."""
    return T + qeinsum("yzx...->xyz...", T) + qeinsum("zxy...->xyz...", T)


# --- identities -----------------------------------------------------------------

def _ly_sides(c, t):
    n = c.shape[0]
    yield "LY1", c, -qeinsum("yxk->xyk", c)
    yield "LY2", t, -qeinsum("yxzk->xyzk", t)
    nested = qeinsum("xya,azk->xyzk", c, c)
    yield "LY3", _cyc3(nested) + _cyc3(t), zeros((n, n, n, n))
    # {[x,y], z, a}
    ly4 = qeinsum("xyb,bzak->xyzak", c, t)
    yield "LY4", _cyc3(ly4), zeros((n,) * 5)
    # {a,b,[x,y]} = [{a,b,x},y] + [x,{a,b,y}]  with tensor index order (a,b,x,y)
    lhs5 = qeinsum("xyc,abck->abxyk", c, t)
    rhs5 = qeinsum("abxc,cyk->abxyk", t, c) + qeinsum("abyc,xck->abxyk", t, c)
    yield "LY5", lhs5, rhs5
    lhs6 = qeinsum("xyzc,abck->abxyzk", t, t)
    rhs6 = (qeinsum("abxc,cyzk->abxyzk", t, t)
            + qeinsum("abyc,xczk->abxyzk", t, t)
            + qeinsum("abzc,xyck->abxyzk", t, t))
    yield "LY6", lhs6, rhs6


def check_ly_axioms(A):
    """Check LY1-LY6 on all basis tuples."""
    report = AxiomReport()
    for tag, lhs, rhs in _ly_sides(A.binary, A.ternary):
        report.compare(tag, lhs, rhs)
    return report


def _mrb_sides(c, t, R):
    # [Rx,Ry] = R([Rx,y]+[x,Ry]) - [x,y]
    yield "MRB-binary", _b(c, R, R), _post(R, _b(c, R) + _b(c, None, R), 2) - c
    lhs = _t(t, R, R, R)
    inner = _t(t, None, R, R) + _t(t, R, None, R) + _t(t, R, R) + t
    rhs = _post(R, inner, 3) - _t(t, R) - _t(t, None, R) - _t(t, None, None, R)
    yield "MRB-ternary", lhs, rhs


def _rb_sides(c, t, T):
    yield "RB-binary", _b(c, T, T), _post(T, _b(c, T) + _b(c, None, T) - c, 2)
    inner = (_t(t, None, T, T) + _t(t, T, None, T) + _t(t, T, T)
             - _t(t, None, None, T) - _t(t, T) - _t(t, None, T) + t)
    yield "RB-ternary", _t(t, T, T, T), _post(T, inner, 3)


def _nijenhuis_sides(c, t, N):
    N2 = _mm(N, N)
    N3 = _mm(N2, N)
    yield ("Nijenhuis-binary", _b(c, N, N),
           _post(N, _b(c, N) + _b(c, None, N) - _post(N, c, 2), 2))
    rhs = (_post(N, _t(t, N, N) + _t(t, N, None, N) + _t(t, None, N, N), 3)
           - _post(N2, _t(t, N) + _t(t, None, N) + _t(t, None, None, N), 3)
           + _post(N3, t, 3))
    yield "Nijenhuis-ternary", _t(t, N, N, N), rhs


_KINDS = {"mrb": _mrb_sides, "rb_m1": _rb_sides, "nijenhuis": _nijenhuis_sides}


def _check(kind, A, M):
    M = as_operator(M, A.dim)
    report = AxiomReport()
    for tag, lhs, rhs in _KINDS[kind](A.binary, A.ternary, M):
        report.compare(tag, lhs, rhs)
    return report


def check_modified_rb(A, R):
    """Check that R is a modified Rota-Baxter operator on A."""
    return _check("mrb", A, R)


def check_rb_weight_m1(A, T):
    """Check that T is a Rota-Baxter operator of weight -1 on A."""
    return _check("rb_m1", A, T)


def check_nijenhuis(A, N):
    return _check("nijenhuis", A, N)


def modified_from_rb(T):
    """``2T - id``, a modified Rota-Baxter operator whenever T is Rota-Baxter of weight -1."""
    T = as_operator(T)
    return 2 * T - identity(T.shape[0])


def descendant(A, R):
    """The descendant algebra with brackets [x,y]_R and {x,y,z}_R.

    Raises :class:`CheckFailed` unless R is a modified Rota-Baxter operator.
    """
    R = as_operator(R, A.dim)
    report = check_modified_rb(A, R)
    if not report.passed:
        raise CheckFailed("operator is not a modified Rota-Baxter operator", report)
    c, t = A.binary, A.ternary
    c_R = _b(c, R) + _b(c, None, R)
    t_R = _t(t, None, R, R) + _t(t, R, None, R) + _t(t, R, R) + t
    return LYAlgebra(c_R, t_R)


def _dense_entries(dim, entries, arity):
    n = int(dim)
    T = zeros((n,) * (arity + 1))
    for entry in entries:
        idx, value = tuple(entry[:arity]), entry[arity]
        if not all(0 <= i < n for i in idx):
            raise IndexError(f"index {idx} out of range for dim {n}")
        T[idx] = _check_vec(value, n, f"entry {idx}")
    return T


def from_lie(dim, lie_binary_entries):
    """Lie-Yamaguti algebra of a Lie algebra, with {x,y,z} = [[x,y],z].

    Entries are ``(i, j, value)`` with ``i < j`` as in :func:`make_algebra`.
    """
    c = make_algebra(dim, lie_binary_entries).binary
    jac = _cyc3(qeinsum("xya,azk->xyzk", c, c))
    bad = AxiomReport().compare("Jacobi", jac, zeros(jac.shape))
    if not bad.passed:
        raise CheckFailed(f"Jacobi identity fails at {bad.violations[0].index}", bad)
    t = qeinsum("xya,azk->xyzk", c, c)
    return LYAlgebra(c, t)


def from_leibniz(dim, star_entries):
    """Lie-Yamaguti algebra of a left Leibniz algebra.

    ``star_entries`` gives ``(i, j, value)`` for ``e_i * e_j`` (any order).
    The product must satisfy ``x*(y*z) = (x*y)*z + y*(x*z)``; the result has
    ``[x,y] = x*y - y*x`` and ``{x,y,z} = -(x*y)*z``.
    """
    s = _dense_entries(dim, star_entries, 2)
    lhs = qeinsum("yza,xak->xyzk", s, s)
    rhs = qeinsum("xya,azk->xyzk", s, s) + qeinsum("xza,yak->xyzk", s, s)
    bad = AxiomReport().compare("Leibniz", lhs, rhs)
    if not bad.passed:
        raise CheckFailed(f"left Leibniz identity fails at {bad.violations[0].index}", bad)
    c = s - qeinsum("yxk->xyk", s)
    t = -qeinsum("xya,azk->xyzk", s, s)
    return LYAlgebra(c, t)


# --- exhaustive operator search -------------------------------------------------

def _int_bound_ok(A, cands):
    n = max(A.dim, 1)
    mc = max([abs(v) for v in A.binary.flat] + [abs(v) for v in A.ternary.flat] + [1])
    mr = max([abs(v) for v in cands] + [1])
    # worst term: N^3 applied after three operator slots, n-fold sums each
    return (mr * n) ** 6 * mc * n < 2**62


def _batch_pass(kind, c, t, Rs):
    ok = np.ones(Rs.shape[0], dtype=bool)
    for _, lhs, rhs in _KINDS[kind](c, t, Rs):
        diff = np.broadcast_to(lhs - rhs, np.broadcast_shapes(lhs.shape, rhs.shape))
        ok &= ~diff.reshape(Rs.shape[0], -1).any(axis=1)
    return ok


def search_operators(A, candidates, kind="mrb", budget=None, threads=None, chunk=4096):
    """All matrices with entries from ``candidates`` passing the ``kind`` check.

    Enumeration is row-major with entries taken in candidate-list order; the
    result preserves that order regardless of ``threads``.
    """
    if kind not in _KINDS:
        raise ValueError(f"unknown operator kind {kind!r}; expected one of {sorted(_KINDS)}")
    cands = [Q(v) for v in candidates]
    if not cands:
        raise ValueError("candidate list is empty")
    n = A.dim
    if n == 0:
        return [zeros((0, 0))]
    total = len(cands) ** (n * n)
    budget = SEARCH_BUDGET if budget is None else budget
    if total > budget:
        raise ValueError(
            f"search would enumerate {total} matrices, over the budget of {budget}"
        )
    if threads is None:
        threads = int(os.environ.get("LYT_THREADS", "1"))

    integral = all(isinstance(v, int) for v in cands) and all(
        isinstance(v, int) for v in list(A.binary.flat) + list(A.ternary.flat)
    )
    fast = integral and _int_bound_ok(A, cands)
    if fast:
        c = A.binary.astype(np.int64)
        t = A.ternary.astype(np.int64)
        vals = np.array(cands, dtype=np.int64)

    def run(lo, hi):
        idx = np.array(list(_index_range(len(cands), n * n, lo, hi)), dtype=np.int64)
        if idx.size == 0:
            return []
        if fast:
            Rs = vals[idx].reshape(-1, n, n)
            ok = _batch_pass(kind, c, t, Rs)
            hits = [lo + int(k) for k in np.flatnonzero(ok)]
        else:
            hits = [lo + k for k, row in enumerate(idx)
                    if _check(kind, A, qarray([cands[i] for i in row], (n, n))).passed]
        return hits

    ranges = [(lo, min(lo + chunk, total)) for lo in range(0, total, chunk)]
    if threads and threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            parts = list(pool.map(lambda r: run(*r), ranges))
    else:
        parts = [run(*r) for r in ranges]
    found = []
    for k in sorted(h for part in parts for h in part):
        row = next(iter(_index_range(len(cands), n * n, k, k + 1)))
        M = qarray([cands[i] for i in row], (n, n))
        # confirm each hit on the exact path
        if fast and not _check(kind, A, M).passed:
            raise AssertionError("integer fast path disagrees with the exact check")
        found.append(M)
    return found


def _index_range(base, length, lo, hi):
    """Digits (most significant first) of the integers lo..hi-1 in ``base``."""
    for k in range(lo, hi):
        digits = []
        for _ in range(length):
            k, r = divmod(k, base)
            digits.append(r)
        yield digits[::-1]
