"""JSON file formats.

Scalars are written as ints or ``"p/q"`` strings in lowest terms and read back
exactly; floats are rejected.  ``dumps(load_x(dumps(obj)))`` reproduces the
same bytes for every format, which is what the round-trip tests check.

Formats
-------
algebra         {"dim", "binary": [{"i", "j", "value"}], "ternary": [{"i", "j", "k", "value"}]}
operator        {"rows", "cols", "entries"}
representation  {"dimV", "rho", "theta", "D"?, "rv"?}   (matrices in operator format)
cochain         {"degree": 1, "dim", "dimV", "h"}
                {"degree": 2, "dim", "dimV", "f", "g", "op"?}
infinitesimal   {"F1", "G1", "R1"}
extension       algebra keys + {"operator", "ideal", "projection", "inclusion", "section"?}
"""

import json

import numpy as np

from .algebra import LYAlgebra, as_operator, make_algebra
from .cohomology import Cochain2, TotalCochain2, _npairs
from .deformations import Infinitesimal
from .extensions import AbelianExtension, ExtensionCocycle
from .linalg import fmt, identity, is_zero, matmul, qarray, qeinsum, rank_rational, solve, zeros
from .representations import MRBLYAlgebra, make_representation

__all__ = [
    "dumps", "read_json", "write_json",
    "algebra_to_json", "algebra_from_json", "operator_to_json", "operator_from_json",
    "representation_to_json", "representation_from_json",
    "cochain_to_json", "cochain_from_json", "infinitesimal_to_json", "infinitesimal_from_json",
    "extension_cocycle_to_json", "extension_cocycle_from_json",
    "extension_to_json", "extension_from_json", "some_section", "FormatError",
]


class FormatError(ValueError):
    """Malformed input file."""


def _flat(x):
    return not isinstance(x, (list, dict))


def _encode(obj, level):
    pad, inner = "  " * level, "  " * (level + 1)
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = [f"{inner}{json.dumps(k)}: {_encode(v, level + 1)}" for k, v in obj.items()]
        return "{\n" + ",\n".join(items) + "\n" + pad + "}"
    if isinstance(obj, list):
        if all(_flat(x) for x in obj):
            return "[" + ", ".join(json.dumps(x, ensure_ascii=False) for x in obj) + "]"
        return "[\n" + ",\n".join(inner + _encode(x, level + 1) for x in obj) + "\n" + pad + "]"
    return json.dumps(obj, ensure_ascii=False)


def dumps(obj):
    """Canonical text: two-space indent, innermost scalar arrays on one line."""
    return _encode(obj, 0) + "\n"


def read_json(path):
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh, parse_float=_no_float)
    except json.JSONDecodeError as exc:
        raise FormatError(f"{path}: invalid JSON ({exc})") from exc


def write_json(obj, path=None, stream=None):
    text = dumps(obj)
    if path is None:
        stream.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _no_float(s):
    raise FormatError(f"floating point literal {s} is not allowed; write p/q")


def _require(d, *keys):
    if not isinstance(d, dict):
        raise FormatError(f"expected a JSON object, got {type(d).__name__}")
    missing = [k for k in keys if k not in d]
    if missing:
        raise FormatError(f"missing key(s): {', '.join(missing)}")


def _nested(arr):
    arr = np.asarray(arr, dtype=object)
    if arr.ndim == 0:
        return fmt(arr.item())
    return [_nested(a) for a in arr] if arr.shape[0] else []


def _exact(data, shape, what):
    try:
        arr = qarray(data) if np.size(np.asarray(data, dtype=object)) else zeros(shape)
        return arr.reshape(shape)
    except (TypeError, ValueError) as exc:
        raise FormatError(f"{what}: {exc}") from exc


# --- algebra and operator --------------------------------------------------------

def algebra_to_json(A):
    n = A.dim
    binary = [{"i": i, "j": j, "value": _nested(A.binary[i, j])}
              for i in range(n) for j in range(i + 1, n) if not is_zero(A.binary[i, j])]
    ternary = [{"i": i, "j": j, "k": k, "value": _nested(A.ternary[i, j, k])}
               for i in range(n) for j in range(i + 1, n) for k in range(n)
               if not is_zero(A.ternary[i, j, k])]
    return {"dim": n, "binary": binary, "ternary": ternary}


def algebra_from_json(d):
    _require(d, "dim")
    n = d["dim"]
    if not isinstance(n, int) or n < 0:
        raise FormatError("dim must be a non-negative integer")
    try:
        binary = [(e["i"], e["j"], e["value"]) for e in d.get("binary", [])]
        ternary = [(e["i"], e["j"], e["k"], e["value"]) for e in d.get("ternary", [])]
        return make_algebra(n, binary, ternary)
    except (KeyError, TypeError, IndexError, ValueError) as exc:
        raise FormatError(f"algebra: {exc}") from exc


def operator_to_json(M):
    M = np.asarray(M, dtype=object)
    return {"rows": M.shape[0], "cols": M.shape[1], "entries": _nested(M)}


def operator_from_json(d, shape=None):
    _require(d, "rows", "cols", "entries")
    r, c = d["rows"], d["cols"]
    entries = d["entries"]
    if len(entries) != r or any(len(row) != c for row in entries):
        raise FormatError(f"entries do not form a {r}x{c} matrix")
    M = _exact(entries, (r, c), "operator")
    if shape is not None and M.shape != tuple(shape):
        raise FormatError(f"expected a {shape[0]}x{shape[1]} matrix, got {r}x{c}")
    return M


def _matrices_from(items, count, m, what):
    if not isinstance(items, list) or len(items) != count:
        raise FormatError(f"{what}: expected {count} matrices")
    if count == 0:
        return zeros((0, m, m))
    return np.stack([operator_from_json(x, (m, m)) for x in items])


# --- representation ----------------------------------------------------------

def representation_to_json(rep):
    n, m = rep.algebra.dim, rep.dim_v
    out = {
        "dimV": m,
        "rho": [operator_to_json(rep.rho[x]) for x in range(n)],
        "theta": [operator_to_json(rep.theta[x, y]) for x in range(n) for y in range(n)],
        "D": [operator_to_json(rep.D[x, y]) for x in range(n) for y in range(n)],
    }
    if rep.rv is not None:
        out["rv"] = operator_to_json(rep.rv)
    return out


def representation_from_json(d, A):
    _require(d, "dimV", "rho", "theta")
    n, m = A.dim, d["dimV"]
    if not isinstance(m, int) or m < 0:
        raise FormatError("dimV must be a non-negative integer")
    rho = _matrices_from(d["rho"], n, m, "rho")
    theta = _matrices_from(d["theta"], n * n, m, "theta").reshape(n, n, m, m)
    D = None
    if d.get("D") is not None:
        D = _matrices_from(d["D"], n * n, m, "D").reshape(n, n, m, m)
    rv = operator_from_json(d["rv"], (m, m)) if d.get("rv") is not None else None
    return make_representation(A, m, rho, theta, D, rv)


# --- cochains ----------------------------------------------------------------

def cochain_to_json(c):
    """Degree 1 (an m x n matrix), a Cochain2 or a TotalCochain2."""
    if isinstance(c, TotalCochain2):
        out = cochain_to_json(c.ly)
        out["op"] = operator_to_json(c.op)
        return out
    if isinstance(c, Cochain2):
        return {"degree": 2, "dim": c.n, "dimV": c.m, "f": _nested(c.f), "g": _nested(c.g)}
    h = np.asarray(c, dtype=object)
    return {"degree": 1, "dim": h.shape[1], "dimV": h.shape[0], "h": operator_to_json(h)}


def cochain_from_json(d):
    _require(d, "degree", "dim", "dimV")
    n, m, deg = d["dim"], d["dimV"], d["degree"]
    if deg == 1:
        _require(d, "h")
        return operator_from_json(d["h"], (m, n))
    if deg != 2:
        raise FormatError(f"unsupported cochain degree {deg!r} (1 or 2)")
    _require(d, "f", "g")
    P = _npairs(n)
    ly = Cochain2(n, m, _exact(d["f"], (P, m), "f"), _exact(d["g"], (P, n, m), "g"))
    if d.get("op") is None:
        return ly
    return TotalCochain2(ly, operator_from_json(d["op"], (m, n)))


# --- infinitesimal -----------------------------------------------------------

def infinitesimal_to_json(inf):
    c = inf.to_total()
    return {"F1": _nested(c.ly.f), "G1": _nested(c.ly.g), "R1": operator_to_json(inf.R1)}


def infinitesimal_from_json(d):
    _require(d, "F1", "G1", "R1")
    R1 = operator_from_json(d["R1"])
    n = as_operator(R1).shape[0]
    P = _npairs(n)
    ly = Cochain2(n, n, _exact(d["F1"], (P, n), "F1"), _exact(d["G1"], (P, n, n), "G1"))
    F, G = ly.full()
    return Infinitesimal(F, G, R1)


def extension_cocycle_to_json(c):
    return cochain_to_json(c.to_total())


def extension_cocycle_from_json(d):
    c = cochain_from_json(d)
    if not isinstance(c, TotalCochain2):
        raise FormatError("an extension cocycle needs a degree 2 cochain with an 'op' part")
    return ExtensionCocycle.from_total(c)


# --- extension ---------------------------------------------------------------

def extension_to_json(ext, section=None):
    out = algebra_to_json(ext.total.algebra)
    out["operator"] = operator_to_json(ext.total.operator)
    out["ideal"] = list(ext.ideal_basis)
    out["projection"] = operator_to_json(ext.projection)
    out["inclusion"] = operator_to_json(ext.inclusion)
    if section is not None:
        out["section"] = operator_to_json(section)
    return out


def some_section(p):
    """A right inverse of the projection p."""
    n, N = p.shape
    cols = [solve(p, col) for col in identity(n)]
    if any(c is None for c in cols):
        raise FormatError("projection is not surjective")
    return np.stack(cols, axis=1) if cols else zeros((N, 0))


def extension_from_json(d):
    """Returns ``(extension, section or None)``.

    The base algebra and operator are read off through the given section (or
    any section when none is stored); the extension invariants are checked.
    """
    _require(d, "operator", "ideal", "projection", "inclusion")
    total = algebra_from_json(d)
    N = total.dim
    Rh = operator_from_json(d["operator"], (N, N))
    ideal = tuple(d["ideal"])
    m = len(ideal)
    n = N - m
    p = operator_from_json(d["projection"], (n, N))
    i = operator_from_json(d["inclusion"], (N, m))
    section = operator_from_json(d["section"], (N, n)) if d.get("section") is not None else None
    if not is_zero(matmul(p, i)):
        raise FormatError("projection after inclusion must vanish")
    s = section if section is not None else some_section(p)
    if not is_zero(matmul(p, s) - identity(n)):
        raise FormatError("section is not a right inverse of the projection")
    if m and rank_rational(i) != m:
        raise FormatError("inclusion is not injective")
    if m and not is_zero(matmul(p, matmul(Rh, i))):
        raise FormatError("ideal is not invariant under the operator")
    c, t = total.binary, total.ternary
    two_v = [qeinsum("au,bv,abk->uvk", i, i, c),
             qeinsum("au,bv,cx,abck->uvxk", i, i, identity(N), t),
             qeinsum("au,bx,cv,abck->uxvk", i, identity(N), i, t),
             qeinsum("ax,bu,cv,abck->xuvk", identity(N), i, i, t)]
    if not all(is_zero(X) for X in two_v):
        raise FormatError("ideal is not abelian: a bracket with two ideal arguments is nonzero")
    base_c = qeinsum("ax,by,abk,pk->xyp", s, s, c, p)
    base_t = qeinsum("ax,by,cz,abck,pk->xyzp", s, s, s, t, p)
    base_R = matmul(p, matmul(Rh, s))
    base = MRBLYAlgebra(LYAlgebra(base_c, base_t), base_R)
    return AbelianExtension(MRBLYAlgebra(total, Rh), base, ideal, p, i), section
