"""Command line front end.

Every subcommand reads exact JSON (multivectors as {"n", "complex", "terms"},
matrices as arrays of arrays of rational strings), prints deterministic
output, and exits 0.  Errors map to fixed exit codes with a one-line
diagnostic on stderr: 1 malformed input, 2 dimension or rank mismatch,
3 domain error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .errors import DimensionMismatch, DomainError, InputError, WittmatError
from .exact import ExactMatrix, GaussianRational, min_poly
from .witt import Multivector
from .spectral import det2, from_matrix, spectral_table, to_matrix
from .signatures import SignatureSpec, generators, verify_signature
from .symgroup import (
    Permutation,
    all_ones_mv,
    casimir_idempotents,
    casimir_mv,
    geom_perm,
    perm_matrix,
    standard_irrep,
    std_rep_matrix,
    surgery_gc,
    surgery_gc_inverse,
)
from .repdecomp import commutant, family_minpoly_check, regrep_decompose, regrep_element, surgery_cut
from .goldens import run_all

_EXIT_CODES = ((InputError, 1), (DimensionMismatch, 2), (DomainError, 3))


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on usage errors; the contract wants 1 for bad input
    def error(self, message):
        raise InputError(message)


def _load_json(path: str):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror or exc}") from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"invalid JSON in {path}: {exc}") from exc


def _load_mv(path: str, cap: int) -> Multivector:
    g = Multivector.from_json(_load_json(path))
    _check_cap(g.n, cap)
    return g


def _check_cap(n: int, cap: int):
    if n > cap:
        raise DimensionMismatch(f"rank {n} exceeds the cap {cap} (raise it with --rank-cap)")
    if n < 1:
        raise InputError("rank must be at least 1")


def _matrix_to_json(M: ExactMatrix):
    return [[str(M[(r, c)]) for c in range(M.cols)] for r in range(M.rows)]


def _matrix_from_json(data) -> ExactMatrix:
    if not isinstance(data, list) or not data or not all(isinstance(r, list) for r in data):
        raise InputError("matrix JSON must be a non-empty array of arrays")
    try:
        rows = [[GaussianRational.parse(x) if isinstance(x, str) else GaussianRational(Fraction(x)) for x in row] for row in data]
    except (ValueError, TypeError) as exc:
        raise InputError(f"bad matrix entry: {exc}") from exc
    return ExactMatrix(rows)


def _emit_pretty(payload, indent: str):
    # pretty payloads are prepared as (kind, value) pairs by each command
    kind, value = payload
    if kind == "text":
        print(value)
    elif kind == "lines":
        for item in value:
            print(item)
    elif kind == "sections":
        for title, sub in value:
            print(f"{title}:")
            for line in _pretty_block(sub):
                print("  " + line)
    else:
        raise AssertionError(f"unknown pretty payload {kind}")


def _pretty_block(value) -> list:
    if isinstance(value, Multivector):
        return [value.pretty()]
    if isinstance(value, ExactMatrix):
        return value.pretty().splitlines()
    if isinstance(value, str):
        return [value]
    if isinstance(value, (list, tuple)):
        out = []
        for item in value:
            out.extend(_pretty_block(item))
        return out
    return [str(value)]


class _Result:
    """Holds both serializations so commands build output exactly once."""

    def __init__(self, as_json, pretty):
        self.as_json = as_json
        self.pretty = pretty

    def emit(self, args):
        if args.format == "json":
            print(json.dumps(self.as_json))
        else:
            _emit_pretty(self.pretty, "")


# ---------------------------------------------------------------------------
# subcommand implementations


def _cmd_spectral_table(args) -> _Result:
    _check_cap(args.n, args.rank_cap)
    table = spectral_table(args.n)
    size = 1 << args.n
    body = [[table[r][c].to_json() for c in range(size)] for r in range(size)]
    cells = [[table[r][c].pretty() for c in range(size)] for r in range(size)]
    width = max(len(s) for row in cells for s in row)
    lines = ["  ".join(s.ljust(width) for s in row).rstrip() for row in cells]
    return _Result(body, ("lines", lines))


def _cmd_mul(args) -> _Result:
    g = _load_mv(args.lhs, args.rank_cap)
    h = _load_mv(args.rhs, args.rank_cap)
    if g.n != h.n:
        raise DimensionMismatch(f"rank mismatch: {g.n} vs {h.n}")
    if g.complexified != h.complexified:
        g = g.complexify()
        h = h.complexify()
    prod = g * h
    return _Result(prod.to_json(), ("text", prod.pretty()))


def _cmd_to_matrix(args) -> _Result:
    g = _load_mv(args.operand, args.rank_cap)
    M = to_matrix(g)
    return _Result(_matrix_to_json(M), ("text", M.pretty()))


def _cmd_from_matrix(args) -> _Result:
    M = _matrix_from_json(_load_json(args.operand))
    if args.n is not None:
        _check_cap(args.n, args.rank_cap)
    g = from_matrix(M, n=args.n)
    _check_cap(g.n, args.rank_cap)
    return _Result(g.to_json(), ("text", g.pretty()))


def _cmd_involutions(args) -> _Result:
    g = _load_mv(args.operand, args.rank_cap)
    images = {
        "reverse": g.reverse(),
        "grade_involution": g.grade_involution(),
        "clifford_conj": g.clifford_conj(),
    }
    body = {name: mv.to_json() for name, mv in images.items()}
    pretty = ("sections", [(name, mv) for name, mv in images.items()])
    return _Result(body, pretty)


def _cmd_det2(args) -> _Result:
    g = _load_mv(args.operand, args.rank_cap)
    value = det2(g)
    return _Result({"det": str(value)}, ("text", str(value)))


def _cmd_embed(args) -> _Result:
    if args.n is None:
        n = 1
        while 2 * n + 1 < args.p + args.q:
            n += 1
    else:
        n = args.n
    _check_cap(n, args.rank_cap)
    gs = generators(SignatureSpec(args.p, args.q, n))
    report = verify_signature(gs)
    body = {
        "n": n,
        "plus_labels": list(gs.plus_labels),
        "minus_labels": list(gs.minus_labels),
        "plus": [g.to_json() for g in gs.plus],
        "minus": [g.to_json() for g in gs.minus],
        "ok": report.ok,
        "failures": list(report.failures),
    }
    lines = [f"ambient rank {n}"]
    for label, mv in zip(gs.plus_labels, gs.plus):
        lines.append(f"+1  {label} = {mv.pretty()}")
    for label, mv in zip(gs.minus_labels, gs.minus):
        lines.append(f"-1  {label} = {mv.pretty()}")
    lines.append("verification: " + ("ok" if report.ok else "; ".join(report.failures)))
    return _Result(body, ("lines", lines))


def _cmd_perm(args) -> _Result:
    _check_cap(args.n, args.rank_cap)
    p = Permutation.from_cycles(args.cycles)
    if args.standard_irrep:
        g = standard_irrep(p, args.n)
        M = to_matrix(g)
    elif args.rep in ("std", "standard"):
        M = std_rep_matrix(p, 1 << args.n)
        g = geom_perm(p, args.n, rep="standard")
    else:
        M = perm_matrix(p, 1 << args.n)
        g = geom_perm(p, args.n, rep="permutation")
    body = {"cycles": p.cycle_str(), "matrix": _matrix_to_json(M), "multivector": g.to_json()}
    pretty = ("sections", [("permutation", p.cycle_str()), ("matrix", M), ("multivector", g)])
    return _Result(body, pretty)


def _cmd_casimir(args) -> _Result:
    _check_cap(args.n, args.rank_cap)
    A = all_ones_mv(args.n)
    C = casimir_mv(args.n)
    s1, s2 = casimir_idempotents(args.n)
    mpa = min_poly(to_matrix(A))
    mpc = min_poly(to_matrix(C))
    body = {
        "allones": A.to_json(),
        "casimir": C.to_json(),
        "s1": s1.to_json(),
        "s2": s2.to_json(),
        "minpoly_allones": str(mpa),
        "minpoly_casimir": str(mpc),
    }
    pretty = ("sections", [
        ("allones", A),
        ("casimir", C),
        ("s1", s1),
        ("s2", s2),
        ("minpoly allones", f"{mpa} = {mpa.factored_str()}"),
        ("minpoly casimir", f"{mpc} = {mpc.factored_str()}"),
    ])
    return _Result(body, pretty)


def _cmd_surgery(args) -> _Result:
    _check_cap(args.n, args.rank_cap)
    if args.g is not None or args.idempotent is not None:
        if args.g is None or args.idempotent is None:
            raise InputError("band cut needs both --g and --idempotent")
        g = _load_mv(args.g, args.rank_cap)
        w = _load_mv(args.idempotent, args.rank_cap)
        cut = surgery_cut(g, w)
        M = to_matrix(cut)
        body = {"cut": cut.to_json(), "matrix": _matrix_to_json(M)}
        return _Result(body, ("sections", [("cut", cut), ("matrix", M)]))
    gc = surgery_gc(args.n)
    gci = surgery_gc_inverse(args.n)
    D = to_matrix(gci * casimir_mv(args.n) * gc)
    body = {"g_c": gc.to_json(), "diagonalized_casimir": _matrix_to_json(D)}
    return _Result(body, ("sections", [("g_c", gc), ("diagonalized casimir", D)]))


_BUILTIN_GROUPS = {
    "s4": ("(12)", "(13)", "(14)"),
    "klein": ("(12)(34)", "(13)(24)"),
}


def _cmd_commutant(args) -> _Result:
    key = args.group.lower()
    if key in _BUILTIN_GROUPS:
        gens = [perm_matrix(Permutation.from_cycles(c), 4) for c in _BUILTIN_GROUPS[key]]
    else:
        data = _load_json(args.group)
        if not isinstance(data, list):
            raise InputError("group file must hold a JSON array of matrices")
        gens = [_matrix_from_json(m) for m in data]
    result = commutant(gens)
    body = {
        "dimension": result.dimension,
        "basis": [_matrix_to_json(B) for B in result.basis],
    }
    pretty = ("sections", [("dimension", str(result.dimension))] + [
        (f"basis[{i}]", B) for i, B in enumerate(result.basis)
    ])
    return _Result(body, pretty)


def _cmd_minpoly(args) -> _Result:
    if args.family is not None:
        if args.params is None:
            raise InputError("--family needs --params")
        params = _parse_scalar_list(args.params)
        report = family_minpoly_check(args.family, params)
        body = {
            "family": report.kind,
            "params": [str(v) for v in report.params],
            "minpoly": str(report.minpoly),
            "roots": [str(r) for r, _ in _root_multiplicities(report)],
            "collapsed": [[str(r), k] for r, k in report.collapsed],
            "ok": report.ok,
        }
        lines = [
            f"family {report.kind} at ({', '.join(str(v) for v in report.params)})",
            f"minpoly {report.minpoly}",
            "collapsed roots: " + (", ".join(f"{r} (x{k})" for r, k in report.collapsed) or "none"),
            "factored form matches" if report.ok else "factored form MISMATCH",
        ]
        return _Result(body, ("lines", lines))
    if args.operand is None:
        raise InputError("give a matrix file or --family")
    M = _matrix_from_json(_load_json(args.operand))
    mp = min_poly(M)
    body = {"minpoly": str(mp), "factored": mp.factored_str()}
    return _Result(body, ("text", f"{mp} = {mp.factored_str()}"))


def _root_multiplicities(report):
    seen = []
    for r in report.expected_roots:
        for i, (root, k) in enumerate(seen):
            if root == r:
                seen[i] = (root, k + 1)
                break
        else:
            seen.append((r, 1))
    return seen


def _parse_scalar_list(text: str):
    out = []
    for part in text.split(","):
        part = part.strip()
        if not part:
            raise InputError("empty entry in list")
        try:
            out.append(GaussianRational.parse(part))
        except ValueError as exc:
            raise InputError(f"bad rational {part!r}: {exc}") from exc
    return out


def _cmd_regrep(args) -> _Result:
    xs = _parse_scalar_list(args.x)
    element = regrep_element(xs)
    X = to_matrix(element.element)
    P, D = regrep_decompose(element)
    body = {
        "X": _matrix_to_json(X),
        "P": _matrix_to_json(P),
        "D": _matrix_to_json(D),
    }
    pretty = ("sections", [("X", X), ("P", P), ("D", D)])
    return _Result(body, pretty)


def _cmd_verify_paper(args) -> _Result:
    results = run_all()
    body = [
        {"name": r.name, "ok": r.ok, "detail": r.detail}
        for r in results
    ]
    lines = []
    for r in results:
        mark = "PASS" if r.ok else "FAIL"
        suffix = f"  ({r.detail})" if r.detail else ""
        lines.append(f"{mark}  {r.name}{suffix}")
    failed = sum(1 for r in results if not r.ok)
    lines.append(f"{len(results) - failed}/{len(results)} checks passed")
    result = _Result(body, ("lines", lines))
    result.exit_code = 0 if failed == 0 else 1
    return result


# ---------------------------------------------------------------------------


def _build_parser() -> _Parser:
    parser = _Parser(prog="wittmat", description=__doc__.splitlines()[0])
    parser.add_argument("--format", choices=("json", "pretty"), default="json")
    parser.add_argument("--rank-cap", type=int, default=6, metavar="N",
                        help="largest admitted rank (default 6)")
    # the same flags are accepted after the subcommand; SUPPRESS keeps the
    # top-level value unless they actually appear there
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "pretty"), default=argparse.SUPPRESS)
    common.add_argument("--rank-cap", type=int, metavar="N", default=argparse.SUPPRESS)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add_parser(name, **kwargs):
        return sub.add_parser(name, parents=[common], **kwargs)

    p = add_parser("spectral-table", help="print the rank-n table of matrix units")
    p.add_argument("n", type=int)
    p.set_defaults(fn=_cmd_spectral_table)

    p = add_parser("mul", help="multiply two multivector files")
    p.add_argument("lhs")
    p.add_argument("rhs")
    p.set_defaults(fn=_cmd_mul)

    p = add_parser("to-matrix", help="spectral matrix of a multivector file")
    p.add_argument("operand")
    p.set_defaults(fn=_cmd_to_matrix)

    p = add_parser("from-matrix", help="multivector with the given spectral matrix")
    p.add_argument("operand")
    p.add_argument("--n", type=int, default=None)
    p.set_defaults(fn=_cmd_from_matrix)

    p = add_parser("involutions", help="reverse, grade involution and conjugation images")
    p.add_argument("operand")
    p.set_defaults(fn=_cmd_involutions)

    p = add_parser("det2", help="determinant of a rank-1 element")
    p.add_argument("operand")
    p.set_defaults(fn=_cmd_det2)

    p = add_parser("embed", help="generator set for signature (p, q)")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--n", type=int, default=None)
    p.set_defaults(fn=_cmd_embed)

    p = add_parser("perm", help="matrix and geometric images of a permutation")
    p.add_argument("--cycles", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--rep", choices=("perm", "std"), default="perm")
    p.add_argument("--standard-irrep", action="store_true",
                   help="conjugate by the Casimir diagonalizer instead")
    p.set_defaults(fn=_cmd_perm)

    p = add_parser("casimir", help="all-ones and Casimir elements with minimal polynomials")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(fn=_cmd_casimir)

    p = add_parser("surgery", help="Casimir diagonalizer, or a band cut with --g/--idempotent")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--g", default=None)
    p.add_argument("--idempotent", default=None)
    p.set_defaults(fn=_cmd_surgery)

    p = add_parser("commutant", help="basis of matrices commuting with a generator set")
    p.add_argument("--group", required=True, help="s4, klein, or a JSON file of matrices")
    p.set_defaults(fn=_cmd_commutant)

    p = add_parser("minpoly", help="minimal polynomial of a matrix file or parameter family")
    p.add_argument("operand", nargs="?", default=None)
    p.add_argument("--family", choices=("all", "alt"), default=None)
    p.add_argument("--params", default=None, help="comma-separated parameters")
    p.set_defaults(fn=_cmd_minpoly)

    p = add_parser("regrep", help="decompose the 6-term regular-representation element")
    p.add_argument("--x", required=True, help="six comma-separated coefficients")
    p.set_defaults(fn=_cmd_regrep)

    p = add_parser("verify-paper", help="run every frozen reference check")
    p.set_defaults(fn=_cmd_verify_paper)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        if args.rank_cap < 1:
            raise InputError("--rank-cap must be at least 1")
        result = args.fn(args)
        result.emit(args)
        return getattr(result, "exit_code", 0)
    except WittmatError as exc:
        for klass, code in _EXIT_CODES:
            if isinstance(exc, klass):
                print(f"error: {exc}", file=sys.stderr)
                return code
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
