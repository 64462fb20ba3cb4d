"""Exact rational linear algebra on numpy object arrays.

Entries are Python ``int`` when integral and :class:`fractions.Fraction`
otherwise, so integer data stays on the fast int path.  Two independent
rank routines are provided (a fraction-free integer elimination and a
rational row echelon); callers that care cross-check one against the other.
"""

from fractions import Fraction
from functools import reduce
from math import gcd, lcm
import numbers
import re

import numpy as np

__all__ = [
    "Q", "qarray", "zeros", "identity", "is_zero", "fmt",
    "matmul", "rank_fraction_free", "rank_rational", "rref",
    "nullspace", "solve", "kernel_and_rank", "qeinsum",
]


def Q(x):
    """Coerce ``x`` to an exact scalar (int if integral, else Fraction).

    Accepts ints, Fractions and strings such as ``"-3/4"``.  Floats are
    refused so that no rounding sneaks in.
    """
    if isinstance(x, bool):
        return int(x)
    if isinstance(x, numbers.Integral):
        return int(x)
    if isinstance(x, Fraction):
        return x.numerator if x.denominator == 1 else x
    if isinstance(x, str):
        if not _RATIONAL.match(x.strip()):
            raise ValueError(f"not an exact rational literal: {x!r} (use p/q)")
        v = Fraction(x.strip())
        return v.numerator if v.denominator == 1 else v
    if isinstance(x, numbers.Rational):
        return Q(Fraction(x.numerator, x.denominator))
    raise TypeError(f"cannot use {type(x).__name__} {x!r} as an exact scalar")


_RATIONAL = re.compile(r"^[+-]?\d+(/[1-9]\d*)?$")
_Qv = np.frompyfunc(Q, 1, 1)


def qarray(data, shape=None):
    """Object array of exact scalars built from nested lists or an array."""
    arr = np.asarray(data, dtype=object)
    if arr.size:
        arr = np.asarray(_Qv(arr), dtype=object)
    if shape is not None:
        arr = arr.reshape(shape)
    return arr


def zeros(shape):
    return np.zeros(shape, dtype=int).astype(object)


def identity(n):
    return np.eye(n, dtype=int).astype(object)


def is_zero(arr):
    arr = np.asarray(arr, dtype=object)
    return not any(v != 0 for v in arr.flat)


def fmt(x):
    """Serialise a scalar as an int or a ``"p/q"`` string."""
    x = Q(x)
    return x if isinstance(x, int) else f"{x.numerator}/{x.denominator}"


def _denominator(x):
    return x.denominator if isinstance(x, Fraction) else 1


def _to_int_matrix(M):
    """Return (integer matrix, common denominator) with M == Mi / d."""
    d = reduce(lcm, (_denominator(v) for v in M.flat), 1)
    if d == 1:
        return M, 1
    return _Qv(M * d).astype(object), d


def matmul(A, B):
    """Exact matrix product, taking an int64 fast path when it cannot overflow."""
    A = np.asarray(A, dtype=object)
    B = np.asarray(B, dtype=object)
    if A.shape[1] != B.shape[0]:
        raise ValueError(f"shape mismatch {A.shape} @ {B.shape}")
    if A.size == 0 or B.size == 0:
        return zeros((A.shape[0], B.shape[1]))
    Ai, da = _to_int_matrix(A)
    Bi, db = _to_int_matrix(B)
    ma = max(abs(int(v)) for v in Ai.flat)
    mb = max(abs(int(v)) for v in Bi.flat)
    if ma * mb * A.shape[1] < 2**62:
        P = (Ai.astype(np.int64) @ Bi.astype(np.int64)).astype(object)
    else:
        P = Ai.dot(Bi)
    d = da * db
    if d != 1:
        P = qarray([Fraction(int(v), d) for v in P.flat], P.shape)
    return P


def _int_form(X):
    """(int64 array, common denominator, max |entry|) or None if it would not fit."""
    dens = {v.denominator for v in X.flat if type(v) is Fraction}
    d = lcm(*dens) if dens else 1
    if d != 1:
        X = X * d
    mx = max((abs(v) for v in X.flat), default=0)
    if mx >= 2**62:
        return None
    return X.astype(np.int64), d, int(mx)


def _from_scaled(out, denom):
    """Exact values of the int64 array ``out / denom``."""
    g = np.gcd(out, denom)
    num, den = out // g, denom // g
    res = num.astype(object)
    for k in np.flatnonzero(den != 1):
        res.flat[k] = Fraction(int(num.flat[k]), int(den.flat[k]))
    return res


def qeinsum(spec, *operands):
    """Exact ``np.einsum`` on object arrays of ints and Fractions.

    Denominators are cleared and the contraction runs in int64 whenever a
    bound on the largest possible partial sum fits; otherwise it falls back to
    object arithmetic.
    """
    if all(isinstance(X, np.ndarray) and X.dtype.kind == "i" for X in operands):
        # native integer input: the caller owns the overflow bound
        return np.einsum(spec, *operands)
    ops = [np.asarray(X, dtype=object) for X in operands]
    if any(X.size == 0 for X in ops):
        return np.einsum(spec, *ops)
    inputs, output = spec.split("->")
    sizes = {}
    for raw, X in zip(inputs.split(","), ops):
        labels = raw.replace("...", "")
        dims = X.shape[:len(labels)] if raw.endswith("...") else X.shape[X.ndim - len(labels):]
        sizes.update(zip(labels, dims))
    terms = 1
    for lab in set(sizes) - set(output):
        terms *= sizes[lab]
    forms = []
    bound = terms
    for X in ops:
        form = _int_form(X)
        if form is None:
            return np.einsum(spec, *ops)
        forms.append(form)
        bound *= max(form[2], 1)
        if bound >= 2**62:
            return np.einsum(spec, *ops)
    out = np.einsum(spec, *[f[0] for f in forms])
    denom = 1
    for f in forms:
        denom *= f[1]
    out = np.asarray(out)
    if denom != 1:
        return _from_scaled(out, denom)
    return out.astype(object)


# --- sparse row helpers -------------------------------------------------------

def _sparse_rows(M):
    rows = []
    for r in np.asarray(M, dtype=object):
        row = {j: v for j, v in enumerate(r) if v != 0}
        if row:
            rows.append(row)
    return rows


def _primitive(row):
    """Scale a rational sparse row to coprime integers (same span)."""
    d = reduce(lcm, (_denominator(v) for v in row.values()), 1)
    ints = {j: int(v * d) for j, v in row.items()}
    g = reduce(gcd, ints.values(), 0)
    return {j: v // g for j, v in ints.items()}


def rank_fraction_free(M):
    """Rank via integer-preserving elimination.

    Rows are cleared to primitive integer vectors and combined with
    cross-multiplication ``p*row - a*pivot_row``; the gcd content is removed
    after each step so no fractions ever appear and entries stay small.
    """
    rows = [_primitive(r) for r in _sparse_rows(M)]
    rank = 0
    while rows:
        # choose the pivot column as the smallest leading index, sparsest row
        lead = min(min(r) for r in rows)
        cands = [r for r in rows if lead in r]
        piv = min(cands, key=lambda r: (len(r), abs(r[lead])))
        rank += 1
        p = piv[lead]
        nxt = []
        for r in rows:
            if r is piv:
                continue
            a = r.get(lead)
            if a is None:
                nxt.append(r)
                continue
            new = {j: p * v for j, v in r.items()}
            for j, v in piv.items():
                w = new.get(j, 0) - a * v
                if w:
                    new[j] = w
                else:
                    new.pop(j, None)
            assert lead not in new
            if new:
                g = reduce(gcd, new.values(), 0)
                nxt.append({j: v // g for j, v in new.items()})
        rows = nxt
    return rank


def rref(M):
    """Reduced row echelon form over Q.

    Returns ``(rows, pivots)`` where ``rows`` is a list of sparse dict rows
    (pivot entry 1) and ``pivots`` the matching pivot columns.
    """
    rows = [{j: Fraction(v) for j, v in r.items()} for r in _sparse_rows(M)]
    done = []  # (pivot col, row)
    for r in rows:
        # reduce r by the existing pivots
        for c, pr in done:
            a = r.get(c)
            if a:
                for j, v in pr.items():
                    w = r.get(j, 0) - a * v
                    if w:
                        r[j] = w
                    else:
                        r.pop(j, None)
        if not r:
            continue
        c = min(r)
        inv = 1 / r[c]
        r = {j: v * inv for j, v in r.items()}
        # back-substitute into earlier rows
        for _, pr in done:
            a = pr.get(c)
            if a:
                for j, v in r.items():
                    w = pr.get(j, 0) - a * v
                    if w:
                        pr[j] = w
                    else:
                        pr.pop(j, None)
        done.append((c, r))
    done.sort(key=lambda t: t[0])
    return [r for _, r in done], [c for c, _ in done]


def rank_rational(M):
    return len(rref(M)[1])


def kernel_and_rank(M):
    """Basis of the right kernel of M (as an object array, one vector per row) and rank."""
    M = np.asarray(M, dtype=object)
    ncols = M.shape[1]
    rows, pivots = rref(M)
    free = [j for j in range(ncols) if j not in set(pivots)]
    basis = zeros((len(free), ncols))
    for k, fcol in enumerate(free):
        basis[k, fcol] = 1
        for r, pc in zip(rows, pivots):
            v = r.get(fcol)
            if v:
                basis[k, pc] = Q(-v)
    return basis, len(pivots)


def nullspace(M):
    return kernel_and_rank(M)[0]


def solve(M, b):
    """One exact solution x of M x = b, or None when the system is inconsistent."""
    M = np.asarray(M, dtype=object)
    b = np.asarray(b, dtype=object).reshape(-1)
    nrows, ncols = M.shape
    aug = np.concatenate([M, b.reshape(nrows, 1)], axis=1) if nrows else zeros((0, ncols + 1))
    rows, pivots = rref(aug)
    if pivots and pivots[-1] == ncols:
        return None
    x = zeros(ncols)
    for r, pc in zip(rows, pivots):
        x[pc] = Q(r.get(ncols, 0))
    return x
