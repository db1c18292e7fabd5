"""Command-line front end: ``tqa <verb> [options]``.

Exit codes: 0 success, 1 validation error, 2 failed verification, 3 resource limit.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import re
import sys
from fractions import Fraction

from .algebra import TruncatedAlgebra
from .catalog import BUILTIN_NAMES, DEFAULT_N, builtin
from .cohomology import DualCochain, cohomology, degree_of_length, medal_classes
from .errors import QuiverError, ResourceLimitError, TQAError
from .linalg import format_rational, parse_rational
from .quiver import DEFAULT_CAP, ParallelPair, parallel_pairs, parse_quiver, paths

VERBS = ("paths", "cohomology", "medals", "cup", "verify", "table", "oracle")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser():
    p = _Parser(prog="tqa", description="Hochschild cohomology of truncated quiver algebras.")
    p.add_argument("verb", choices=VERBS)
    src = p.add_mutually_exclusive_group()
    src.add_argument("--builtin", metavar="NAME", help="one of: " + ", ".join(BUILTIN_NAMES))
    src.add_argument("--file", metavar="PATH", help="quiver description (DSL or JSON)")
    p.add_argument("--N", type=int, help="truncation length (overrides the file)")
    p.add_argument("--max-degree", type=int, default=4)
    p.add_argument("--i", type=int, help="length of the first path (row)")
    p.add_argument("--m", type=int, help="length of the second path")
    p.add_argument("--left", help="class expression, e.g. '1:(x,x) + 1:(a,a)'")
    p.add_argument("--right", help="class expression")
    p.add_argument("--method", choices=("vee", "full", "bar"), default="vee")
    p.add_argument("--format", choices=("text", "json", "csv"), default="text")
    p.add_argument("--max-paths", type=int, default=DEFAULT_CAP)
    p.add_argument("--max-words", type=int, default=200_000)
    return p


def load_algebra(args):
    if args.builtin:
        q = builtin(args.builtin)
        N = args.N if args.N is not None else DEFAULT_N.get(args.builtin, 2)
    elif args.file:
        with open(args.file, encoding="utf-8") as fh:
            q, N = parse_quiver(fh.read())
        if args.N is not None:
            N = args.N
    else:
        raise UsageError("one of --builtin or --file is required")
    if N is None or N < 2:
        raise QuiverError("truncation N must be at least 2")
    return TruncatedAlgebra(q, N)


_TERM = re.compile(r"^(?:([+-]?\s*\d+(?:/\d+)?)\s*:)?\s*\(\s*([^(),]+?)\s*,\s*([^(),]+?)\s*\)$")


def parse_class(A, text):
    """Parse ``coeff:(alpha,pi) + ...``; the degree is read off |pi|."""
    q = A.quiver
    terms = []
    for raw in text.split("+"):
        raw = raw.strip()
        m = _TERM.match(raw)
        if not m:
            raise QuiverError(f"malformed term {raw!r}; expected coeff:(alpha,pi)")
        coeff = parse_rational(m.group(1).replace(" ", "")) if m.group(1) else Fraction(1)
        alpha, pi = q.parse_path(m.group(2)), q.parse_path(m.group(3))
        if (alpha.src, alpha.tgt) != (pi.src, pi.tgt):
            raise QuiverError(f"({m.group(2)},{m.group(3)}) is not a pair of parallel paths")
        if len(alpha) >= A.N:
            raise QuiverError(f"{m.group(2)} has length >= N, so it is zero in A")
        terms.append((ParallelPair(alpha, pi), coeff))
    degrees = {degree_of_length(len(p.second), A.N) for p, _ in terms}
    if None in degrees or len(degrees) != 1:
        raise QuiverError("second paths must all have one length kN or kN+1")
    out = DualCochain(degrees.pop())
    for p, c in terms:
        out.add(p, c)
    return out


def _emit_csv(rows):
    buf = io.StringIO()
    csv.writer(buf, lineterminator="\n").writerows(rows)
    return buf.getvalue().rstrip("\n")


def _pair_str(q, p):
    return f"({q.format_path(p.first)},{q.format_path(p.second)})"


# --- verbs -------------------------------------------------------------------------


def cmd_paths(A, args):
    q = A.quiver
    if args.m is None:
        raise UsageError("paths needs --m (and optionally --i for parallel pairs)")
    if args.i is None:
        items = [q.format_path(p) for p in paths(q, args.m, args.max_paths)]
        header = ["path"]
        rows = [[x] for x in items]
    else:
        pairs = parallel_pairs(q, args.i, args.m, args.max_paths)
        header = ["alpha", "pi"]
        rows = [[q.format_path(p.first), q.format_path(p.second)] for p in pairs]
    if args.format == "json":
        return json.dumps([dict(zip(header, r)) for r in rows], indent=2), 0
    if args.format == "csv":
        return _emit_csv([header] + rows), 0
    return "\n".join(r[0] if len(r) == 1 else f"({r[0]},{r[1]})" for r in rows), 0


def cmd_cohomology(A, args):
    q = A.quiver
    spaces = [cohomology(A, n, args.max_paths) for n in range(args.max_degree + 1)]
    if args.format == "json":
        return json.dumps([s.to_dict() for s in spaces], indent=2), 0
    if args.format == "csv":
        header = ["degree", "total"] + [f"row_{i}" for i in range(A.N)]
        return _emit_csv([header] + [[s.degree, s.dim, *s.row_dimensions] for s in spaces]), 0
    lines = []
    for s in spaces:
        rows = " ".join(str(d) for d in s.row_dimensions)
        lines.append(f"H^{s.degree}: dim {s.dim}  (rows {rows})")
        for i, rep in s.representatives:
            lines.append(f"  row {i}: {rep.format(q)}")
    return "\n".join(lines), 0


def cmd_medals(A, args):
    q = A.quiver
    if args.i is None or args.m is None:
        raise UsageError("medals needs --i and --m")
    classes = medal_classes(A, args.i, args.m, args.max_paths)
    data = [{
        "members": [_pair_str(q, p) for p in c.members],
        "plus_extremes": [_pair_str(q, p) for p in c.plus_extremes],
        "minus_extremes": [_pair_str(q, p) for p in c.minus_extremes],
        "is_medal": c.is_medal,
    } for c in classes]
    if args.format == "json":
        return json.dumps(data, indent=2), 0
    if args.format == "csv":
        rows = [["class", "pair", "plus_extreme", "minus_extreme", "is_medal"]]
        for k, (c, d) in enumerate(zip(classes, data)):
            for p, s in zip(c.members, d["members"]):
                rows.append([k, s, p in c.plus_extremes, p in c.minus_extremes, c.is_medal])
        return _emit_csv(rows), 0
    lines = []
    for k, d in enumerate(data):
        flag = "medal" if d["is_medal"] else "not a medal"
        lines.append(f"class {k} ({flag}): " + ", ".join(d["members"]))
        lines.append("  +extremes: " + (", ".join(d["plus_extremes"]) or "none"))
        lines.append("  -extremes: " + (", ".join(d["minus_extremes"]) or "none"))
    return "\n".join(lines), 0


def cmd_cup(A, args):
    from .products import cup, cup_bar_route, cup_cochain_full, vee

    if not args.left or not args.right:
        raise UsageError("cup needs --left and --right")
    q = A.quiver
    f = parse_class(A, args.left)
    g = parse_class(A, args.right)
    cls = cup(A, f, g, method=args.method, cap=args.max_paths)
    product = {"vee": vee, "full": cup_cochain_full, "bar": cup_bar_route}[args.method](A, f, g)
    name = None
    if q == builtin("example83"):
        from .example83 import name_class
        name = name_class(A, cls)
    rep = cls.representative()
    if args.format == "json":
        data = {
            "degree": cls.degree,
            "product": [{"alpha": q.format_path(p.first, powers=False), "pi": q.format_path(p.second, powers=False),
                         "coeff": format_rational(c)} for p, c in product],
            "coordinates": [format_rational(c) for c in cls.coords],
            "zero": cls.is_zero(),
        }
        if name is not None:
            data["name"] = name
        return json.dumps(data, indent=2), 0
    if args.format == "csv":
        return _emit_csv([["degree", "coordinates", "name"],
                          [cls.degree, " ".join(format_rational(c) for c in cls.coords), name or ""]]), 0
    lines = [f"degree {cls.degree}",
             f"product cochain: {product.format(q)}",
             f"class: {'0' if cls.is_zero() else rep.format(q)}"]
    if name is not None:
        lines.append(f"= {name}")
    return "\n".join(lines), 0


def cmd_verify(A, args):
    from .checks import verify_all

    report = verify_all(A, args.max_degree, args.max_paths)
    if args.format == "json":
        out = report.to_json()
    elif args.format == "csv":
        out = _emit_csv([["check", "degree", "passed", "checked", "witness"]] + [
            [r.name, r.degree, r.passed, r.checked, r.witness or ""] for r in report.results])
    else:
        out = report.to_text()
    return out, 0 if report.passed else 2


def cmd_table(A, args):
    from . import example83

    if A.quiver == builtin("example83"):
        if args.format == "text":
            return example83.format_table(A.N), 0
        data = []
        for n in range(4):
            data.append({
                "degree": n if n < 2 else ("2k" if n == 2 else "2k+1"),
                "dim": example83.expected_dims(A.N, n),
                "basis": [{"row": j, "label": lab, "element": example83.format_alpha(A, c)}
                          for j, lab, c in example83.table_basis(A, n)],
                "coboundaries": [{"row": j, "element": example83.format_alpha(A, c)}
                                 for j, _, c in example83.table_coboundaries(A, n)],
            })
        if args.format == "json":
            return json.dumps(data, indent=2), 0
        rows = [["degree", "kind", "row", "element"]]
        for d in data:
            rows += [[d["degree"], "basis", b["row"], b["element"]] for b in d["basis"]]
            rows += [[d["degree"], "coboundary", b["row"], b["element"]] for b in d["coboundaries"]]
        return _emit_csv(rows), 0
    # any other quiver: dimension table by degree and row
    spaces = [cohomology(A, n, args.max_paths) for n in range(args.max_degree + 1)]
    header = ["degree", "total"] + [f"row_{i}" for i in range(A.N)]
    rows = [[s.degree, s.dim, *s.row_dimensions] for s in spaces]
    if args.format == "json":
        return json.dumps([dict(zip(header, r)) for r in rows], indent=2), 0
    if args.format == "csv":
        return _emit_csv([header] + rows), 0
    width = max(7, *(len(h) + 2 for h in header))
    lines = ["".join(h.ljust(width) for h in header).rstrip()]
    lines += ["".join(str(x).ljust(width) for x in r).rstrip() for r in rows]
    return "\n".join(lines), 0


def cmd_oracle(A, args):
    from .oracle import bar_cohomology_oracle

    rows = []
    for n in range(args.max_degree + 1):
        rows.append((n, bar_cohomology_oracle(A, n, args.max_words), cohomology(A, n, args.max_paths).dim))
    ok = all(a == b for _, a, b in rows)
    if args.format == "json":
        out = json.dumps({"agree": ok, "degrees": [{"degree": n, "oracle": a, "minimal": b}
                                                    for n, a, b in rows]}, indent=2)
    elif args.format == "csv":
        out = _emit_csv([["degree", "oracle", "minimal"]] + [list(r) for r in rows])
    else:
        out = "\n".join(f"H^{n}: oracle {a}, minimal {b}{'' if a == b else '  MISMATCH'}" for n, a, b in rows)
        out += "\n" + ("oracle agrees" if ok else "oracle DISAGREES")
    return out, 0 if ok else 2


COMMANDS = {
    "paths": cmd_paths, "cohomology": cmd_cohomology, "medals": cmd_medals, "cup": cmd_cup,
    "verify": cmd_verify, "table": cmd_table, "oracle": cmd_oracle,
}


def execute(argv, stdout=None, stderr=None):
    """Run one command; returns the exit code."""
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        if args.max_degree < 0:
            raise UsageError("--max-degree must be non-negative")
        A = load_algebra(args)
        out, code = COMMANDS[args.verb](A, args)
    except UsageError as exc:
        print(f"tqa: error: {exc}", file=stderr)
        return 1
    except ResourceLimitError as exc:
        print(f"tqa: resource limit: {exc}", file=stderr)
        return 3
    except (TQAError, ValueError, OSError) as exc:
        print(f"tqa: error: {exc}", file=stderr)
        return 1
    print(out, file=stdout)
    return code


def main(argv=None):
    sys.exit(execute(sys.argv[1:] if argv is None else argv))
