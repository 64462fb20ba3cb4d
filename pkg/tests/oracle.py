"""Pointwise reference implementations used as test oracles.

Everything here works on plain tuples of Fractions with explicit loops and
evaluates each identity literally, argument by argument.  It shares no code
with the package beyond reading structure constants and matrices as data.
"""

from fractions import Fraction
from itertools import product


def vec(values):
    return tuple(Fraction(v) for v in values)


def e(i, n):
    return tuple(Fraction(int(k == i)) for k in range(n))


def add(*vs):
    return tuple(sum(c, Fraction(0)) for c in zip(*vs))


def neg(v):
    return tuple(-x for x in v)


def sub(a, b):
    return add(a, neg(b))


def scale(a, v):
    return tuple(a * x for x in v)


def zero(n):
    return (Fraction(0),) * n


def apply(M, v):
    """Matrix (nested lists, columns are images) applied to a vector."""
    rows = len(M)
    return tuple(sum((Fraction(M[r][c]) * v[c] for c in range(len(v))), Fraction(0))
                 for r in range(rows))


def as_lists(M):
    return [[Fraction(x) for x in row] for row in M]


class Alg:
    """Brackets of an algebra as bilinear and trilinear functions."""

    def __init__(self, A):
        self.n = A.dim
        self.c = [[[Fraction(A.binary[i, j, k]) for k in range(self.n)]
                   for j in range(self.n)] for i in range(self.n)]
        self.t = [[[[Fraction(A.ternary[i, j, k, l]) for l in range(self.n)]
                    for k in range(self.n)] for j in range(self.n)] for i in range(self.n)]

    def br(self, x, y):
        n = self.n
        out = [Fraction(0)] * n
        for i in range(n):
            if x[i] == 0:
                continue
            for j in range(n):
                if y[j] == 0:
                    continue
                w = x[i] * y[j]
                for k in range(n):
                    out[k] += w * self.c[i][j][k]
        return tuple(out)

    def tr(self, x, y, z):
        n = self.n
        out = [Fraction(0)] * n
        for i in range(n):
            if x[i] == 0:
                continue
            for j in range(n):
                if y[j] == 0:
                    continue
                for k in range(n):
                    if z[k] == 0:
                        continue
                    w = x[i] * y[j] * z[k]
                    for l in range(n):
                        out[l] += w * self.t[i][j][k][l]
        return tuple(out)


class Descendant:
    """Brackets [x,y]_R = [Rx,y] + [x,Ry] and the four-term ternary bracket."""

    def __init__(self, alg, R):
        self.a, self.R, self.n = alg, as_lists(R), alg.n

    def br(self, x, y):
        Rx, Ry = apply(self.R, x), apply(self.R, y)
        return add(self.a.br(Rx, y), self.a.br(x, Ry))

    def tr(self, x, y, z):
        R, a = self.R, self.a
        Rx, Ry, Rz = apply(R, x), apply(R, y), apply(R, z)
        return add(a.tr(x, Ry, Rz), a.tr(Rx, y, Rz), a.tr(Rx, Ry, z), a.tr(x, y, z))


# --- axioms --------------------------------------------------------------------

def ly_failures(A):
    """Names of the axioms LY1..LY6 that fail on some basis tuple."""
    alg = Alg(A)
    n = alg.n
    B = [e(i, n) for i in range(n)]
    br, tr = alg.br, alg.tr
    bad = set()
    for x, y in product(B, repeat=2):
        if add(br(x, y), br(y, x)) != zero(n):
            bad.add("LY1")
    for x, y, z in product(B, repeat=3):
        if add(tr(x, y, z), tr(y, x, z)) != zero(n):
            bad.add("LY2")
        cyc = add(br(br(x, y), z), br(br(y, z), x), br(br(z, x), y),
                  tr(x, y, z), tr(y, z, x), tr(z, x, y))
        if cyc != zero(n):
            bad.add("LY3")
    for x, y, z, a in product(B, repeat=4):
        if add(tr(br(x, y), z, a), tr(br(z, x), y, a), tr(br(y, z), x, a)) != zero(n):
            bad.add("LY4")
    for a, b, x, y in product(B, repeat=4):
        if tr(a, b, br(x, y)) != add(br(tr(a, b, x), y), br(x, tr(a, b, y))):
            bad.add("LY5")
    for a, b, x, y, z in product(B, repeat=5):
        lhs = tr(a, b, tr(x, y, z))
        rhs = add(tr(tr(a, b, x), y, z), tr(x, tr(a, b, y), z), tr(x, y, tr(a, b, z)))
        if lhs != rhs:
            bad.add("LY6")
    return bad


def operator_ok(A, M, kind):
    """Literal check of the modified (mrb), weight -1 (rb_m1) or Nijenhuis identities."""
    alg = Alg(A)
    n = alg.n
    M = as_lists(M)
    T = lambda v: apply(M, v)
    br, tr = alg.br, alg.tr
    B = [e(i, n) for i in range(n)]
    for x, y in product(B, repeat=2):
        Tx, Ty = T(x), T(y)
        lhs = br(Tx, Ty)
        if kind == "mrb":
            rhs = sub(T(add(br(Tx, y), br(x, Ty))), br(x, y))
        elif kind == "rb_m1":
            rhs = T(sub(add(br(Tx, y), br(x, Ty)), br(x, y)))
        else:
            rhs = T(sub(add(br(Tx, y), br(x, Ty)), T(br(x, y))))
        if lhs != rhs:
            return False
    for x, y, z in product(B, repeat=3):
        Tx, Ty, Tz = T(x), T(y), T(z)
        lhs = tr(Tx, Ty, Tz)
        if kind == "mrb":
            rhs = sub(T(add(tr(x, Ty, Tz), tr(Tx, y, Tz), tr(Tx, Ty, z), tr(x, y, z))),
                      add(tr(Tx, y, z), tr(x, Ty, z), tr(x, y, Tz)))
        elif kind == "rb_m1":
            rhs = T(add(tr(x, Ty, Tz), tr(Tx, y, Tz), tr(Tx, Ty, z),
                        neg(tr(x, y, Tz)), neg(tr(Tx, y, z)), neg(tr(x, Ty, z)), tr(x, y, z)))
        else:
            one = add(tr(Tx, Ty, z), tr(Tx, y, Tz), tr(x, Ty, Tz))
            two = add(tr(Tx, y, z), tr(x, Ty, z), tr(x, y, Tz))
            rhs = add(T(one), neg(T(T(two))), T(T(T(tr(x, y, z)))))
        if lhs != rhs:
            return False
    return True


# --- representations -------------------------------------------------------------

class Rep:
    """rho(x, u), theta(x, y, u), D(x, y, u) and R_V as plain functions."""

    def __init__(self, alg, m, rho, theta, D, RV=None):
        self.alg, self.m = alg, m
        self.rho, self.theta, self.D = rho, theta, D
        self.RV = RV

    @classmethod
    def adjoint(cls, alg, R=None):
        RV = None if R is None else (lambda u, M=as_lists(R): apply(M, u))
        return cls(alg, alg.n,
                   lambda x, u: alg.br(x, u),
                   lambda x, y, u: alg.tr(u, x, y),
                   lambda x, y, u: alg.tr(x, y, u), RV)

    @classmethod
    def from_data(cls, alg, rep):
        """Wrap a package Representation by reading its matrices."""
        n, m = alg.n, rep.dim_v
        rho = [as_lists(rep.rho[i]) for i in range(n)]
        th = [[as_lists(rep.theta[i, j]) for j in range(n)] for i in range(n)]
        D = [[as_lists(rep.D[i, j]) for j in range(n)] for i in range(n)]

        def one(mats, x, u):
            out = zero(m)
            for i in range(n):
                if x[i]:
                    out = add(out, scale(x[i], apply(mats[i], u)))
            return out

        def two(mats, x, y, u):
            out = zero(m)
            for i in range(n):
                for j in range(n):
                    if x[i] and y[j]:
                        out = add(out, scale(x[i] * y[j], apply(mats[i][j], u)))
            return out

        RV = None if rep.rv is None else (lambda u, M=as_lists(rep.rv): apply(M, u))
        return cls(alg, m, lambda x, u: one(rho, x, u),
                   lambda x, y, u: two(th, x, y, u), lambda x, y, u: two(D, x, y, u), RV)

    def induced(self, R):
        """Representation of the descendant algebra:
        rho_R(x) = rho(Rx) - R_V rho(x) and
        theta_R(x,y) = theta(Rx,Ry) + theta(x,y) - R_V(theta(Rx,y) + theta(x,Ry)), same for D."""
        Rl = as_lists(R)
        Rf = lambda v: apply(Rl, v)
        rho, th, D, RV = self.rho, self.theta, self.D, self.RV

        def pair(P):
            return lambda x, y, u: sub(add(P(Rf(x), Rf(y), u), P(x, y, u)),
                                       RV(add(P(Rf(x), y, u), P(x, Rf(y), u))))

        return Rep(Descendant(self.alg, R), self.m,
                   lambda x, u: sub(rho(Rf(x), u), RV(rho(x, u))), pair(th), pair(D), RV)


def rep_failures(rep):
    """Which of R1..R7 and R6' fail, evaluated on basis vectors."""
    alg, m = rep.alg, rep.m
    n = alg.n
    B = [e(i, n) for i in range(n)]
    U = [e(i, m) for i in range(m)]
    br, tr = alg.br, alg.tr
    rho, th, D = rep.rho, rep.theta, rep.D
    bad = set()
    for x, y, u in product(B, B, U):
        r1 = add(D(x, y, u), neg(th(y, x, u)), th(x, y, u), rho(br(x, y), u),
                 neg(rho(x, rho(y, u))), rho(y, rho(x, u)))
        if r1 != zero(m):
            bad.add("R1")
    for x, y, z, u in product(B, B, B, U):
        if add(D(br(x, y), z, u), D(br(y, z), x, u), D(br(z, x), y, u)) != zero(m):
            bad.add("R2")
    for x, y, a, u in product(B, B, B, U):
        if th(br(x, y), a, u) != sub(th(x, a, rho(y, u)), th(y, a, rho(x, u))):
            bad.add("R3")
    for a, b, x, u in product(B, B, B, U):
        if D(a, b, rho(x, u)) != add(rho(x, D(a, b, u)), rho(tr(a, b, x), u)):
            bad.add("R4")
    for x, a, b, u in product(B, B, B, U):
        if th(x, br(a, b), u) != sub(rho(a, th(x, b, u)), rho(b, th(x, a, u))):
            bad.add("R5")
    for a, b, x, y, u in product(B, B, B, B, U):
        if D(a, b, th(x, y, u)) != add(th(x, y, D(a, b, u)), th(tr(a, b, x), y, u),
                                       th(x, tr(a, b, y), u)):
            bad.add("R6")
        if D(a, b, D(x, y, u)) != add(D(x, y, D(a, b, u)), D(tr(a, b, x), y, u),
                                      D(x, tr(a, b, y), u)):
            bad.add("R6'")
    for a, x, y, z, u in product(B, B, B, B, U):
        rhs = add(th(y, z, th(a, x, u)), neg(th(x, z, th(a, y, u))), D(x, y, th(a, z, u)))
        if th(a, tr(x, y, z), u) != rhs:
            bad.add("R7")
    return bad


def mrb_rep_failures(rep, R):
    """Which of the three operator compatibility identities fail."""
    n, m = rep.alg.n, rep.m
    Rl = as_lists(R)
    Rf = lambda v: apply(Rl, v)
    RV = rep.RV
    B = [e(i, n) for i in range(n)]
    U = [e(i, m) for i in range(m)]
    bad = set()
    for x, u in product(B, U):
        lhs = rep.rho(Rf(x), RV(u))
        rhs = sub(RV(add(rep.rho(Rf(x), u), rep.rho(x, RV(u)))), rep.rho(x, u))
        if lhs != rhs:
            bad.add("rho")
    for name, P in (("theta", rep.theta), ("D", rep.D)):
        for x, y, u in product(B, B, U):
            Rx, Ry = Rf(x), Rf(y)
            lhs = P(Rx, Ry, RV(u))
            rhs = sub(RV(add(P(Rx, Ry, u), P(Rx, y, RV(u)), P(x, Ry, RV(u)), P(x, y, u))),
                      add(P(Rx, y, u), P(x, y, RV(u)), P(x, Ry, u)))
            if lhs != rhs:
                bad.add(name)
    return bad


# --- cochains and coboundaries ------------------------------------------------------

def pairs(n):
    return [(i, j) for i in range(n) for j in range(i + 1, n)]


def bilinear(table, n, m):
    """Antisymmetric bilinear map from its values on pairs i < j."""
    def f(x, y):
        out = zero(m)
        for (i, j), val in table.items():
            w = x[i] * y[j] - x[j] * y[i]
            if w:
                out = add(out, scale(w, val))
        return out
    return f


def trilinear(table, n, m):
    """Map antisymmetric in its first two slots from values on (i < j, k)."""
    def g(x, y, z):
        out = zero(m)
        for (i, j, k), val in table.items():
            w = (x[i] * y[j] - x[j] * y[i]) * z[k]
            if w:
                out = add(out, scale(w, val))
        return out
    return g


def linear(H):
    return lambda v: apply(H, v)


def basis1(n, m):
    """C1 basis in (target, source) lexicographic order: matrices E_{u,x}."""
    out = []
    for u in range(m):
        for x in range(n):
            H = [[Fraction(int(r == u and c == x)) for c in range(n)] for r in range(m)]
            out.append(H)
    return out


def basis2(n, m):
    """C2 basis: f-part (pair, u) then g-part (pair, k, u), as (f, g) functions."""
    P = pairs(n)
    out = []
    for p in P:
        for u in range(m):
            out.append((bilinear({p: e(u, m)}, n, m), trilinear({}, n, m)))
    for p in P:
        for k in range(n):
            for u in range(m):
                out.append((bilinear({}, n, m), trilinear({p + (k,): e(u, m)}, n, m)))
    return out


def coords2(f, g, n):
    """Coordinates of a 2-cochain in the canonical order."""
    P = pairs(n)
    B = [e(i, n) for i in range(n)]
    out = []
    for i, j in P:
        out.extend(f(B[i], B[j]))
    for i, j in P:
        for k in range(n):
            out.extend(g(B[i], B[j], B[k]))
    return out


def coords3(F, G, n):
    P = pairs(n)
    B = [e(i, n) for i in range(n)]
    out = []
    for (a, b), (c, d) in product(P, P):
        out.extend(F(B[a], B[b], B[c], B[d]))
    for (a, b), (c, d) in product(P, P):
        for k in range(n):
            out.extend(G(B[a], B[b], B[c], B[d], B[k]))
    return out


def coords1(h, n):
    """Coordinates of a linear map (given as a function) in (target, source) order."""
    B = [e(i, n) for i in range(n)]
    cols = [h(b) for b in B]
    m = len(cols[0]) if cols else 0
    return [cols[x][u] for u in range(m) for x in range(n)]


def delta1(rep, h):
    """The degree-1 coboundary, literally."""
    br, tr = rep.alg.br, rep.alg.tr
    rho, th, D = rep.rho, rep.theta, rep.D
    f = lambda x, y: sub(sub(rho(x, h(y)), rho(y, h(x))), h(br(x, y)))
    g = lambda x, y, z: add(D(x, y, h(z)), th(y, z, h(x)), neg(th(x, z, h(y))), neg(h(tr(x, y, z))))
    return f, g


def delta2(rep, f, g):
    """The general coboundary at n = 1 (K1 = x1^y1, K2 = x2^y2)."""
    br, tr = rep.alg.br, rep.alg.tr
    rho, th, D = rep.rho, rep.theta, rep.D

    def F(x1, y1, x2, y2):
        return add(neg(rho(x2, g(x1, y1, y2))), rho(y2, g(x1, y1, x2)), g(x1, y1, br(x2, y2)),
                   D(x1, y1, f(x2, y2)),
                   neg(f(tr(x1, y1, x2), y2)), neg(f(x2, tr(x1, y1, y2))))

    def G(x1, y1, x2, y2, z):
        return add(neg(th(y2, z, g(x1, y1, x2))), th(x2, z, g(x1, y1, y2)),
                   D(x1, y1, g(x2, y2, z)), neg(D(x2, y2, g(x1, y1, z))),
                   neg(g(tr(x1, y1, x2), y2, z)), neg(g(x2, tr(x1, y1, y2), z)),
                   neg(g(x2, y2, tr(x1, y1, z))), g(x1, y1, tr(x2, y2, z)))

    return F, G


def phi1(R, RV, h):
    Rl = as_lists(R)
    return lambda v: sub(h(apply(Rl, v)), RV(h(v)))


def phi2(R, RV, f, g):
    Rl = as_lists(R)
    Rf = lambda v: apply(Rl, v)

    def F(x, y):
        return add(f(Rf(x), Rf(y)), neg(RV(add(f(Rf(x), y), f(x, Rf(y))))), f(x, y))

    def G(x, y, z):
        Rx, Ry, Rz = Rf(x), Rf(y), Rf(z)
        return add(g(Rx, Ry, Rz),
                   neg(RV(add(g(Rx, Ry, z), g(Rx, y, Rz), g(x, Ry, Rz), g(x, y, z)))),
                   g(Rx, y, z), g(x, Ry, z), g(x, y, Rz))

    return F, G


def _matrix(columns):
    if not columns:
        return []
    rows = len(columns[0])
    return [[col[r] for col in columns] for r in range(rows)]


def matrix(tag, A, R, rep_data):
    """Matrix of a differential assembled by evaluating it on every basis cochain."""
    alg = Alg(A)
    rep = Rep.from_data(alg, rep_data)
    n, m = alg.n, rep.m
    RV = rep.RV
    ind = rep.induced(R) if R is not None and RV is not None else None
    cols = []
    if tag in ("delta1", "partial1", "phi1", "d1"):
        for H in basis1(n, m):
            h = linear(H)
            if tag == "phi1":
                cols.append(coords1(phi1(R, RV, h), n))
                continue
            if tag == "d1":
                f, g = delta1(rep, h)
                p = phi1(R, RV, h)
                cols.append(coords2(f, g, n) + [-v for v in coords1(p, n)])
                continue
            f, g = delta1(rep if tag == "delta1" else ind, h)
            cols.append(coords2(f, g, n))
    elif tag in ("delta2", "partial2", "phi2"):
        for f, g in basis2(n, m):
            if tag == "phi2":
                F, G = phi2(R, RV, f, g)
                cols.append(coords2(F, G, n))
            else:
                F, G = delta2(rep if tag == "delta2" else ind, f, g)
                cols.append(coords3(F, G, n))
    elif tag == "d2":
        for f, g in basis2(n, m):
            F, G = delta2(rep, f, g)
            pf, pg = phi2(R, RV, f, g)
            cols.append(coords3(F, G, n) + [-v for v in coords2(pf, pg, n)])
        for H in basis1(n, m):
            f, g = delta1(ind, linear(H))
            P = len(pairs(n))
            cols.append([Fraction(0)] * (P * P * m * (n + 1)) + [-v for v in coords2(f, g, n)])
    else:
        raise ValueError(tag)
    return _matrix(cols)


# --- deformations --------------------------------------------------------------------

def infinitesimal_failures(A, R, F1, G1, R1):
    """Which of the order-one identities (antisymmetry, cyclic-binary, cyclic-ternary,
    derivation-binary, derivation-ternary, operator-binary, operator-ternary) fail.

    F1[x][y] and G1[x][y][z] are coefficient lists on basis vectors."""
    alg = Alg(A)
    n = alg.n
    br, tr = alg.br, alg.tr

    def F(x, y):
        out = zero(n)
        for i, j in product(range(n), repeat=2):
            w = x[i] * y[j]
            if w:
                out = add(out, scale(w, vec(F1[i][j])))
        return out

    def G(x, y, z):
        out = zero(n)
        for i, j, k in product(range(n), repeat=3):
            w = x[i] * y[j] * z[k]
            if w:
                out = add(out, scale(w, vec(G1[i][j][k])))
        return out

    Rl, R1l = as_lists(R), as_lists(R1)
    Rf, S = (lambda v: apply(Rl, v)), (lambda v: apply(R1l, v))
    B = [e(i, n) for i in range(n)]
    bad = set()
    for x, y in product(B, repeat=2):
        if add(F(x, y), F(y, x)) != zero(n):
            bad.add("antisymmetry")
        Rx, Ry = Rf(x), Rf(y)
        lhs = add(F(Rx, Ry), br(S(x), Ry), br(Rx, S(y)))
        rhs = add(S(add(br(Rx, y), br(x, Ry))), Rf(add(F(Rx, y), F(x, Ry))),
                  Rf(add(br(S(x), y), br(x, S(y)))), neg(F(x, y)))
        if lhs != rhs:
            bad.add("operator-binary")
    for x, y, z in product(B, repeat=3):
        if add(G(x, y, z), G(y, x, z)) != zero(n):
            bad.add("antisymmetry")
        cyc = zero(n)
        for a, b, c in ((x, y, z), (z, x, y), (y, z, x)):
            cyc = add(cyc, br(F(a, b), c), F(br(a, b), c))
        cyc = add(cyc, G(x, y, z), G(z, x, y), G(y, z, x))
        if cyc != zero(n):
            bad.add("cyclic-binary")
        Rx, Ry, Rz = Rf(x), Rf(y), Rf(z)
        lhs = add(G(Rx, Ry, Rz), tr(S(x), Ry, Rz), tr(Rx, S(y), Rz), tr(Rx, Ry, S(z)))
        rhs = add(S(add(tr(x, Ry, Rz), tr(Rx, y, Rz), tr(Rx, Ry, z))),
                  Rf(add(G(x, Ry, Rz), G(Rx, y, Rz), G(Rx, Ry, z))),
                  Rf(add(tr(x, S(y), Rz), tr(S(x), y, Rz), tr(S(x), Ry, z),
                         tr(x, Ry, S(z)), tr(Rx, y, S(z)), tr(Rx, S(y), z))),
                  S(tr(x, y, z)), Rf(G(x, y, z)),
                  neg(G(Rx, y, z)), neg(G(x, Ry, z)), neg(G(x, y, Rz)),
                  neg(tr(S(x), y, z)), neg(tr(x, S(y), z)), neg(tr(x, y, S(z))))
        if lhs != rhs:
            bad.add("operator-ternary")
    for x, y, z, a in product(B, repeat=4):
        s = zero(n)
        for p, q, r in ((x, y, z), (z, x, y), (y, z, x)):
            s = add(s, G(br(p, q), r, a), tr(F(p, q), r, a))
        if s != zero(n):
            bad.add("cyclic-ternary")
    for a, b, x, y in product(B, repeat=4):
        lhs = add(G(a, b, br(x, y)), tr(a, b, F(x, y)))
        rhs = add(F(tr(a, b, x), y), br(G(a, b, x), y), F(x, tr(a, b, y)), br(x, G(a, b, y)))
        if lhs != rhs:
            bad.add("derivation-binary")
    for a, b, x, y, z in product(B, repeat=5):
        lhs = add(G(a, b, tr(x, y, z)), tr(a, b, G(x, y, z)))
        rhs = add(G(tr(a, b, x), y, z), tr(G(a, b, x), y, z),
                  G(x, tr(a, b, y), z), tr(x, G(a, b, y), z),
                  G(x, y, tr(a, b, z)), tr(x, y, G(a, b, z)))
        if lhs != rhs:
            bad.add("derivation-ternary")
    return bad
