"""Command-line front end.

Exit codes: 0 when every check passes or the computation succeeds, 1 when a
mathematical check fails, 2 on usage or input errors.
"""

import argparse
import json
import re
import sys

import numpy as np

from . import corpus, io
from .algebra import (
    _KINDS, as_operator, check_ly_axioms, check_modified_rb, check_nijenhuis,
    check_rb_weight_m1, descendant, search_operators,
)
from .cohomology import TotalCochain2, cohomology_dims, d2, ly_extra_conditions
from .deformations import are_cohomologous, check_infinitesimal
from .extensions import (
    canonical_section, cocycle_from_section, extension_from_cocycle, extensions_equivalent,
)
from .linalg import Q, fmt, identity, zeros
from .report import AxiomReport, CheckFailed
from .representations import (
    adjoint_mrb_representation, adjoint_representation, check_mrb_representation,
    check_representation, semidirect_product,
)

SCHEMA_VERSION = "1"
_CHECKERS = {"mrb": check_modified_rb, "rb_m1": check_rb_weight_m1, "nijenhuis": check_nijenhuis}


class UsageError(Exception):
    pass


# --- output ------------------------------------------------------------------------

def _ranges(tags):
    """``["LY1", ..., "LY6"]`` -> ``"LY1–LY6"``; other lists are joined with commas."""
    out, run = [], []
    for tag in tags:
        m = re.fullmatch(r"(\D+)(\d+)", tag)
        if run and m and m.group(1) == run[-1][0] and int(m.group(2)) == run[-1][1] + 1:
            run.append((m.group(1), int(m.group(2))))
            continue
        _flush(out, run)
        run = [(m.group(1), int(m.group(2)))] if m else []
        if not m:
            out.append(tag)
    _flush(out, run)
    return ", ".join(out)


def _flush(out, run):
    if len(run) > 2:
        out.append(f"{run[0][0]}{run[0][1]}–{run[-1][0]}{run[-1][1]}")
    else:
        out.extend(f"{p}{k}" for p, k in run)


def _report_text(report):
    tags = list(dict.fromkeys(report.checked))
    if report.passed:
        return f"{_ranges(tags)}: pass"
    lines = [f"FAIL: {report.total} violation(s) in {', '.join(report.failed_axioms())}"]
    for v in report.violations:
        idx = ",".join(f"e{i}" for i in v.index)
        lhs = " ".join(str(fmt(x)) for x in v.left)
        rhs = " ".join(str(fmt(x)) for x in v.right)
        lines.append(f"  {v.axiom} at ({idx}): lhs [{lhs}] rhs [{rhs}]")
    if report.total > len(report.violations):
        lines.append(f"  ... {report.total - len(report.violations)} more")
    return "\n".join(lines)


class Output:
    def __init__(self, fmt_, stream):
        self.format = fmt_
        self.stream = stream

    def emit(self, command, payload, text):
        if self.format == "json":
            doc = {"schema_version": SCHEMA_VERSION, "command": command}
            doc.update(payload)
            self.stream.write(io.dumps(doc))
        else:
            self.stream.write(text.rstrip("\n") + "\n")

    def report(self, command, report, extra=None, text_prefix=""):
        payload = report.as_dict()
        payload.update(extra or {})
        self.emit(command, payload, text_prefix + _report_text(report))
        return 0 if report.passed else 1


# --- input helpers -----------------------------------------------------------------

def _load(path, reader, *args):
    return reader(io.read_json(path), *args)


def _algebra(args):
    return _load(args.algebra, io.algebra_from_json)


def _operator(args, A, required=True):
    if args.operator is None:
        if required:
            raise UsageError("--operator is required")
        return None
    return as_operator(_load(args.operator, io.operator_from_json), A.dim)


def _rep(args, A, R):
    """The representation file, or the adjoint one (with rv = R) when none is given."""
    if getattr(args, "rep", None) is None:
        return adjoint_representation(A) if R is None else adjoint_mrb_representation(A, R)
    rep = _load(args.rep, io.representation_from_json, A)
    if R is not None and rep.rv is None:
        raise UsageError("the representation file needs an 'rv' matrix when an operator is used")
    return rep


def _gate_mrbly(A, R):
    gate = check_ly_axioms(A).merge(check_modified_rb(A, R))
    if not gate.passed:
        raise CheckFailed("algebra and operator do not pass the modified Rota-Baxter checks", gate)


def _write(obj, path, out):
    if path:
        io.write_json(obj, path)
        if out.format == "text":
            out.stream.write(f"wrote {path}\n")
        else:
            out.emit("write", {"path": path}, "")
    else:
        out.stream.write(io.dumps(obj))


def _scalar(text):
    try:
        return Q(text)
    except (TypeError, ValueError) as exc:
        raise argparse.ArgumentTypeError(str(exc))


# --- verbs -------------------------------------------------------------------------

def cmd_check_algebra(args, out):
    A = _load(args.file, io.algebra_from_json)
    return out.report("check-algebra", check_ly_axioms(A))


def cmd_check_operator(args, out):
    A = _algebra(args)
    R = _operator(args, A)
    return out.report("check-operator", _CHECKERS[args.kind](A, R), {"kind": args.kind})


def cmd_check_rep(args, out):
    A = _algebra(args)
    R = _operator(args, A, required=False)
    rep = _rep(args, A, R)
    report = check_representation(rep)
    if R is not None:
        report.merge(check_mrb_representation(rep, R))
    return out.report("check-rep", report)


def cmd_descend(args, out):
    A = _algebra(args)
    R = _operator(args, A)
    _write(io.algebra_to_json(descendant(A, R)), args.output, out)
    return 0


def cmd_semidirect(args, out):
    A = _algebra(args)
    R = _operator(args, A)
    rep = _rep(args, A, R)
    total = semidirect_product(A, R, rep)
    n, m = A.dim, rep.dim_v
    p = np.concatenate([identity(n), zeros((n, m))], axis=1)
    i = np.concatenate([zeros((n, m)), identity(m)])
    doc = io.algebra_to_json(total.algebra)
    doc.update(operator=io.operator_to_json(total.operator), ideal=list(range(n, n + m)),
               projection=io.operator_to_json(p), inclusion=io.operator_to_json(i),
               section=io.operator_to_json(canonical_section(n, m)))
    _write(doc, args.output, out)
    return 0


def cmd_cohomology(args, out):
    A = _algebra(args)
    R = _operator(args, A, required=args.complex != "ly")
    if R is not None:
        _gate_mrbly(A, R)
    else:
        gate = check_ly_axioms(A)
        if not gate.passed:
            raise CheckFailed("algebra fails the Lie-Yamaguti axioms", gate)
    rep = _rep(args, A, R)
    rep_check = check_representation(rep)
    if R is not None:
        rep_check.merge(check_mrb_representation(rep, R))
    if not rep_check.passed:
        raise CheckFailed("representation check failed", rep_check)
    report = cohomology_dims(args.complex, args.degree, A, R, rep)
    d = report.as_dict()
    text = "\n".join(f"{k:17s} {v}" for k, v in d.items())
    out.emit("cohomology", d, text)
    return 0


def _is_infinitesimal(doc):
    return isinstance(doc, dict) and "F1" in doc


def cmd_check_cocycle(args, out):
    A = _algebra(args)
    R = _operator(args, A)
    _gate_mrbly(A, R)
    doc = io.read_json(args.cochain)
    if _is_infinitesimal(doc):
        if args.rep is not None:
            raise UsageError("infinitesimals use the adjoint representation; drop --rep")
        report = check_infinitesimal(A, R, io.infinitesimal_from_json(doc))
        ok = report.cocycle if args.d2_only else report.passed
        payload = report.as_dict()
        payload.update(cocycle=report.cocycle, passed=ok)
        text = f"d2: {'zero' if report.cocycle else 'nonzero'}\n{_report_text(report)}"
        out.emit("check-cocycle", payload, text)
        return 0 if ok else 1
    c = io.cochain_from_json(doc)
    if not isinstance(c, TotalCochain2):
        raise UsageError("expected a degree 2 total cochain (with 'op') or an infinitesimal")
    rep = _rep(args, A, R)
    first, second = d2(A, R, rep, c)
    cocycle = first.is_zero() and second.is_zero()
    extra = AxiomReport()
    r1, r2 = ly_extra_conditions(A, rep, c.ly)
    extra.compare("cyclic-binary", r1, zeros(r1.shape))
    extra.compare("cyclic-ternary", r2, zeros(r2.shape))
    ok = cocycle and (args.d2_only or extra.passed)
    payload = {"passed": ok, "cocycle": cocycle, "d2_ly_zero": first.is_zero(),
               "d2_operator_zero": second.is_zero(), "cyclic": extra.as_dict()}
    text = (f"d2: {'zero' if cocycle else 'nonzero'} "
            f"(ly part {'zero' if first.is_zero() else 'nonzero'}, "
            f"operator part {'zero' if second.is_zero() else 'nonzero'})\n"
            f"cyclic conditions: {_report_text(extra)}")
    out.emit("check-cocycle", payload, text)
    return 0 if ok else 1


def cmd_cohomologous(args, out):
    A = _algebra(args)
    R = _operator(args, A)
    _gate_mrbly(A, R)
    docs = [io.read_json(p) for p in (args.first, args.second)]
    if all(_is_infinitesimal(d) for d in docs):
        a, b = (io.infinitesimal_from_json(d) for d in docs)
        witness = are_cohomologous(A, R, a, b)
    elif not any(_is_infinitesimal(d) for d in docs):
        rep = _rep(args, A, R)
        a, b = (io.extension_cocycle_from_json(d) for d in docs)
        phi = extensions_equivalent(A, R, rep, a, b)
        witness = None if phi is None else phi[A.dim:, :A.dim]
    else:
        raise UsageError("both files must be infinitesimals or both total cochains")
    found = witness is not None
    payload = {"cohomologous": found,
               "witness": io.operator_to_json(witness) if found else None}
    text = "cohomologous" if found else "not cohomologous"
    if found:
        text += ": difference = d1(h) with h =\n" + "\n".join(
            "  " + " ".join(str(fmt(v)) for v in row) for row in witness)
    out.emit("cohomologous", payload, text)
    return 0 if found else 1


def cmd_extend(args, out):
    A = _algebra(args)
    R = _operator(args, A)
    _gate_mrbly(A, R)
    rep = _rep(args, A, R)
    c = _load(args.cochain, io.extension_cocycle_from_json)
    ext = extension_from_cocycle(A, R, rep, c)
    _write(io.extension_to_json(ext, canonical_section(A.dim, rep.dim_v)), args.output, out)
    return 0


def cmd_extract_cocycle(args, out):
    ext, stored = _load(args.extension, io.extension_from_json)
    if args.section is not None:
        s = _load(args.section, io.operator_from_json, (ext.n + ext.m, ext.n))
    elif stored is not None:
        s = stored
    else:
        s = io.some_section(ext.projection)
    rep, c = cocycle_from_section(ext, s)
    doc = {"algebra": io.algebra_to_json(ext.base.algebra),
           "operator": io.operator_to_json(ext.base.operator),
           "representation": io.representation_to_json(rep),
           "cocycle": io.extension_cocycle_to_json(c)}
    _write(doc, args.output, out)
    return 0


def cmd_search_operators(args, out):
    A = _algebra(args)
    cands = [_scalar(x) for x in args.candidates.split(",") if x.strip()]
    if not cands:
        raise UsageError("--candidates must list at least one value")
    found = search_operators(A, cands, args.kind, budget=args.budget, threads=args.threads)
    payload = {"kind": args.kind, "candidates": [fmt(c) for c in cands], "count": len(found),
               "operators": [io.operator_to_json(M) for M in found]}
    text = f"{len(found)} operator(s) of kind {args.kind}\n" + "\n".join(
        "  " + json.dumps(io.operator_to_json(M)["entries"]) for M in found)
    out.emit("search-operators", payload, text)
    return 0


def cmd_examples(args, out):
    name = args.name
    A_of = {"ly2": corpus.ly2, "ly3": corpus.ly3, "so3": corpus.so3,
            "lie2": corpus.lie2, "leibniz2": corpus.leibniz2}
    if name in A_of:
        doc = io.algebra_to_json(A_of[name]())
    elif name == "abelian":
        doc = io.algebra_to_json(corpus.abelian(args.dim))
    elif name == "ly2-op":
        doc = io.operator_to_json(corpus.ly2_operator(args.k, args.k1))
    elif name == "ly3-op":
        try:
            M = corpus.ly3_operator(args.k, args.k1, args.k2, args.k3)
        except ValueError as exc:
            raise UsageError(str(exc))
        doc = io.operator_to_json(M)
    elif name == "identity":
        doc = io.operator_to_json(identity(args.dim))
    elif name in ("ly2-adjoint", "ly3-adjoint"):
        A = corpus.ly2() if name == "ly2-adjoint" else corpus.ly3()
        doc = io.representation_to_json(corpus.adjoint(A, identity(A.dim)))
    else:
        raise UsageError(f"unknown example {name!r}; known: {', '.join(corpus.NAMES)}")
    _write(doc, args.output, out)
    return 0


# --- parser ------------------------------------------------------------------------

def _parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default=argparse.SUPPRESS)
    common.add_argument("--threads", type=int, default=argparse.SUPPRESS,
                        help="worker threads for operator search (output is unchanged)")

    p = argparse.ArgumentParser(prog="lyt", parents=[common],
                                description="Lie-Yamaguti algebras with modified Rota-Baxter operators")
    sub = p.add_subparsers(dest="verb", metavar="VERB")
    sub.required = True

    def verb(name, func, help_, algebra=True, operator=False, rep=False, output=False):
        sp = sub.add_parser(name, parents=[common], help=help_)
        sp.set_defaults(func=func)
        if algebra:
            sp.add_argument("--algebra", required=True, help="algebra file")
        if operator:
            sp.add_argument("--operator", required=operator == "required", help="operator file")
        if rep:
            sp.add_argument("--rep", help="representation file (default: adjoint)")
        if output:
            sp.add_argument("-o", "--output", help="write here instead of stdout")
        return sp

    sp = verb("check-algebra", cmd_check_algebra, "check the axioms LY1-LY6", algebra=False)
    sp.add_argument("file")
    sp = verb("check-operator", cmd_check_operator, "check an operator identity", operator="required")
    sp.add_argument("--kind", choices=sorted(_KINDS), default="mrb")
    verb("check-rep", cmd_check_rep, "check a representation", operator=True, rep=True)
    verb("descend", cmd_descend, "descendant algebra of an operator", operator="required", output=True)
    verb("semidirect", cmd_semidirect, "semidirect product with a representation",
         operator="required", rep=True, output=True)
    sp = verb("cohomology", cmd_cohomology, "cohomology dimensions", operator=True, rep=True)
    sp.add_argument("--complex", choices=("ly", "mrbo", "mrbly"), required=True)
    sp.add_argument("--degree", type=int, choices=(1, 2), required=True)
    sp = verb("check-cocycle", cmd_check_cocycle, "test a 2-cochain or infinitesimal",
              operator="required", rep=True)
    sp.add_argument("--cochain", required=True, help="total 2-cochain or infinitesimal file")
    sp.add_argument("--d2-only", action="store_true",
                    help="verdict from d2 alone, ignoring the cyclic conditions")
    sp = verb("cohomologous", cmd_cohomologous, "are two cocycles cohomologous",
              operator="required", rep=True)
    sp.add_argument("first")
    sp.add_argument("second")
    sp = verb("extend", cmd_extend, "abelian extension from a 2-cocycle",
              operator="required", rep=True, output=True)
    sp.add_argument("--cochain", required=True)
    sp = verb("extract-cocycle", cmd_extract_cocycle, "representation and cocycle of an extension",
              algebra=False, output=True)
    sp.add_argument("--extension", required=True)
    sp.add_argument("--section", help="section matrix file (default: the stored one, else any right inverse of the projection)")
    sp = verb("search-operators", cmd_search_operators, "enumerate operators over a finite set")
    sp.add_argument("--candidates", required=True, help="comma separated, e.g. -1,0,1/2")
    sp.add_argument("--kind", choices=sorted(_KINDS), default="mrb")
    sp.add_argument("--budget", type=int, default=None)
    sp = verb("examples", cmd_examples, "write a built-in example", algebra=False, output=True)
    sp.add_argument("name", help=", ".join(corpus.NAMES))
    sp.add_argument("--k", type=_scalar, default=1)
    sp.add_argument("--k1", type=_scalar, default=None)
    sp.add_argument("--k2", type=_scalar, default=0)
    sp.add_argument("--k3", type=_scalar, default=0)
    sp.add_argument("--dim", type=int, default=2)
    return p


_NEGATIVE_VALUE = re.compile(r"-[0-9][0-9/,\s-]*")


def _attach_negative_values(argv):
    """Glue values such as ``-1,0,1`` or ``-1/2`` to their flag so argparse keeps them."""
    out = []
    for tok in argv:
        if out and out[-1].startswith("--") and "=" not in out[-1] and _NEGATIVE_VALUE.fullmatch(tok):
            out[-1] = f"{out[-1]}={tok}"
        else:
            out.append(tok)
    return out


def run(argv=None, stdout=None, stderr=None):
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = _parser()
    argv = _attach_negative_values(sys.argv[1:] if argv is None else list(argv))
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    args.format = getattr(args, "format", "text")
    args.threads = getattr(args, "threads", None)
    if args.verb == "examples" and args.k1 is None:
        args.k1 = 0 if args.name == "ly2-op" else 1
    out = Output(args.format, stdout)
    try:
        return args.func(args, out)
    except CheckFailed as exc:
        if exc.report is not None:
            out.report(args.verb, exc.report, {"error": str(exc)}, text_prefix=f"{exc}\n")
        else:
            out.emit(args.verb, {"passed": False, "error": str(exc)}, f"FAIL: {exc}")
        return 1
    except UsageError as exc:
        parser.print_usage(stderr)
        stderr.write(f"error: {exc}\n")
        return 2
    except (OSError, ValueError, KeyError, TypeError, IndexError) as exc:
        stderr.write(f"error: {exc}\n")
        return 2


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
