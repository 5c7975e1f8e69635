"""Command-line interface: ``klcells <subcommand> ...`` (or ``python -m klcells``)."""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import cells, families, lifting, verify
from .diagram import (Diagram, canonical_diagram, column_composition,
                      column_fill, diagram_to_json, is_special, parse_diagram,
                      row_composition, row_fill, w_of)
from .perm import (Permutation, format_cycles, format_row, parabolic_longest,
                   parse_permutation)
from .rs import is_admissible, recording_tableau, rs_pair, subsequence_type
from .shapes import format_composition, parse_composition

EXIT_OK, EXIT_DOMAIN, EXIT_VERIFY = 0, 1, 2


class DomainError(ValueError):
    pass


class _Parser(argparse.ArgumentParser):
    """Usage errors are input errors: exit 1, not argparse's 2 (reserved for failed verification)."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_DOMAIN, f"{self.prog}: error: {message}\n")


def dumps(data, indent: int = 0) -> str:
    """Stable JSON: sorted keys, two-space indent, lists of scalars kept on one line."""
    pad, inner = " " * indent, " " * (indent + 2)
    if isinstance(data, dict):
        if not data:
            return "{}"
        items = [f"{inner}{json.dumps(str(k))}: {dumps(v, indent + 2)}" for k, v in sorted(data.items())]
        return "{\n" + ",\n".join(items) + "\n" + pad + "}"
    if isinstance(data, (list, tuple)):
        if all(not isinstance(v, (dict, list, tuple)) for v in data):
            return "[" + ", ".join(json.dumps(v) for v in data) + "]"
        return "[\n" + ",\n".join(inner + dumps(v, indent + 2) for v in data) + "\n" + pad + "]"
    return json.dumps(data)


def _emit(args, data: dict, text: str):
    if args.format == "json":
        print(dumps(data))
    else:
        print(text)


def _guard(args, n: int):
    if args.max_n is not None and n > args.max_n:
        raise DomainError(f"input of size {n} exceeds --max-n {args.max_n}")


def _comp(args, text: str) -> tuple[int, ...]:
    lam = parse_composition(text)
    _guard(args, sum(lam))
    return lam


def _perm_line(w: Permutation, word=None) -> str:
    line = f"{format_row(w):<28} {format_cycles(w)}"
    if word is not None:
        line += "   " + (" ".join(f"s{j}" for j in word) or "1")
    return line


# ---------------------------------------------------------------- subcommands

def cmd_rim(args):
    lam = _comp(args, args.lam)
    rep = cells.cell_report(lam)
    special = set(rep.Ys)
    lines = [f"rim of {format_composition(lam)}: {len(rep.Y)} elements, {len(rep.Ys)} special"]
    for y, D in zip(rep.Y, rep.E):
        mark = "s" if y in special else " "
        lines += [f"{mark} {_perm_line(y, rep.reduced_words[y])}", _indent(str(D)), ""]
    _emit(args, rep.to_dict(keys=("Y", "Ys", "E")), "\n".join(lines).rstrip())


def cmd_cell(args):
    lam = _comp(args, args.lam)
    rep = cells.cell_report(lam)
    lines = [f"cell of w_J{format_composition(lam)}: {len(rep.cell)} elements"]
    lines += [_perm_line(w, rep.reduced_words[w]) for w in rep.cell]
    _emit(args, rep.to_dict(keys=("cell",)), "\n".join(lines))


def cmd_zset(args):
    lam = _comp(args, args.lam)
    rep = cells.cell_report(lam)
    rim = set(rep.Y)
    lines = [f"Z{format_composition(lam)}: {len(rep.Z)} elements (* = rim)"]
    lines += [("* " if z in rim else "  ") + _perm_line(z, rep.reduced_words[z]) for z in rep.Z]
    _emit(args, rep.to_dict(keys=("Z",)), "\n".join(lines))


def cmd_rs(args):
    w = parse_permutation(args.perm)
    _guard(args, w.n)
    P, Q = rs_pair(w)
    data = {"perm": list(w.row), "P": P.to_json(), "Q": Q.to_json(), "shape": list(P.shape)}
    _emit(args, data, f"P =\n{_indent(str(P))}\nQ =\n{_indent(str(Q))}")


def _diagram_arg(args) -> Diagram:
    D = parse_diagram(args.diagram)
    _guard(args, D.n)
    return D


def cmd_diagram_info(args):
    D = _diagram_arg(args)
    data = {
        "diagram": diagram_to_json(D),
        "rows": list(row_composition(D)),
        "columns": list(column_composition(D)),
        "special": is_special(D),
        "admissible": is_admissible(D),
        "subsequence_type": list(subsequence_type(D)),
        "w": list(w_of(D).row),
    }
    text = "\n".join([
        str(D),
        f"rows              {format_composition(data['rows'])}",
        f"columns           {format_composition(data['columns'])}",
        f"special           {_yes(data['special'])}",
        f"admissible        {_yes(data['admissible'])}",
        f"subsequence type  {format_composition(data['subsequence_type'])}",
        f"w_D               {format_row(w_of(D))}",
    ])
    _emit(args, data, text)


def cmd_diagram_wd(args):
    D = _diagram_arg(args)
    w = w_of(D)
    data = {"diagram": diagram_to_json(D), "w": list(w.row)}
    text = "\n".join([f"row filling\n{_indent(str(row_fill(D)))}",
                      f"column filling\n{_indent(str(column_fill(D)))}",
                      f"w_D = {format_row(w)} = {format_cycles(w)}"])
    _emit(args, data, text)


def cmd_dlambda(args):
    lam = _comp(args, args.lam)
    d = parse_permutation(args.perm, n=sum(lam))
    D = canonical_diagram(d, lam)
    data = {"lambda": list(lam), "perm": list(d.row), "diagram": diagram_to_json(D),
            "admissible": is_admissible(D)}
    _emit(args, data, f"{D}\nadmissible: {_yes(data['admissible'])}")


def cmd_lift_star(args):
    rep = lifting.lift_star_report(_comp(args, args.lam))
    _emit(args, rep.to_dict(), rep.table())


def cmd_lift_k(args):
    rep = lifting.lift_k_report(_comp(args, args.lam), args.k)
    _emit(args, rep.to_dict(), rep.table())


def cmd_induce(args):
    lam = _comp(args, args.lam)
    A = recording_tableau(parabolic_longest(lam))
    pieces = cells.induce_cell(A)
    left, right = cells.induction_union(A)
    data = {
        "lambda": list(lam), "tableau": A.to_json(),
        "pieces": [{"corner": list(k), "tableau": Ak.to_json(), "shape": list(Ak.shape),
                    "size": len(cells.cell_of(Ak))} for k, Ak in sorted(pieces.items())],
        "identity": left == right,
    }
    lines = [f"cell of w_J{format_composition(lam)}, recording tableau", _indent(str(A)), ""]
    for k, Ak in sorted(pieces.items()):
        lines += [f"corner {k}: shape {format_composition(Ak.shape)}, "
                  f"{len(cells.cell_of(Ak))} elements", _indent(str(Ak))]
    lines.append(f"union identity: {_yes(data['identity'])}")
    _emit(args, data, "\n".join(lines))


def cmd_restrict(args):
    lam = _comp(args, args.lam)
    A = recording_tableau(parabolic_longest(lam))
    if A.n < 2:
        raise DomainError("restriction needs n >= 2")
    parts = cells.restrict_cell(A)
    cell, pieces = cells.restriction_union(A)
    disjoint = sum(map(len, pieces)) == len(cell) and frozenset().union(*pieces) == cell
    data = {
        "lambda": list(lam), "tableau": A.to_json(),
        "pieces": [{"corner": list(k), "d": list(d.row), "tableau": Ak.to_json(),
                    "shape": list(Ak.shape), "size": len(p)}
                   for (k, d, Ak), p in zip(parts, pieces)],
        "identity": disjoint,
    }
    lines = [f"cell of w_J{format_composition(lam)}, recording tableau", _indent(str(A)), ""]
    for (k, d, Ak), p in zip(parts, pieces):
        lines += [f"corner {k}: d = {format_row(d)} = {format_cycles(d)}, "
                  f"shape {format_composition(Ak.shape)}, {len(p)} elements", _indent(str(Ak))]
    lines.append(f"disjoint union identity: {_yes(disjoint)}")
    _emit(args, data, "\n".join(lines))


def cmd_families(args):
    lam = _comp(args, args.lam)
    fam = families.family_rim(lam)
    if fam is None:
        data = {"lambda": list(lam), "family": None}
        _emit(args, data, f"{format_composition(lam)} is in no closed-form family; use `rim`")
        return
    lines = [f"{format_composition(lam)}: {fam.family.value}, predicted size {fam.predicted_size}"]
    lines += [_perm_line(y) for y in cells.sorted_perms(fam.rim)]
    _emit(args, fam.to_dict(), "\n".join(lines))


def cmd_verify(args):
    n = args.n if args.n is not None else (args.max_n if args.max_n is not None else 5)
    res = verify.run_checks(n, parallel=args.parallel)
    data = {
        "n": n, "ok": res.ok,
        "passed": dict(sorted(res.passed.items())),
        "failures": {name: {"lambda": list(unit[1]), "kind": unit[0], "witness": w}
                     for name, (unit, w) in sorted(res.failures.items())},
        "observations": dict(sorted(res.observations.items())),
    }
    _emit(args, data, res.summary())
    return EXIT_OK if res.ok else EXIT_VERIFY


# ---------------------------------------------------------------- plumbing

def _yes(flag: bool) -> str:
    return "yes" if flag else "no"


def _indent(text: str, pad: str = "    ") -> str:
    return "\n".join(pad + line for line in text.splitlines())


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("ascii", "json"), default=argparse.SUPPRESS,
                        help="output format (default ascii)")
    common.add_argument("--max-n", type=int, default=argparse.SUPPRESS,
                        help="refuse inputs larger than this; bound for verify")
    common.add_argument("--parallel", action="store_true", default=argparse.SUPPRESS,
                        help="shard verification across processes")

    parser = _Parser(prog="klcells", parents=[common],
                     description="Right cells of w_J(lambda) in the symmetric group.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_, *positional, parent=sub):
        p = parent.add_parser(name, parents=[common], help=help_)
        for arg, kw in positional:
            p.add_argument(arg, **kw)
        p.set_defaults(func=func)
        return p

    lam = ("lam", {"metavar": "LAMBDA", "help": 'composition, e.g. "(1,2,1,2)" or "2,1^3,2"'})
    add("rim", cmd_rim, "rim Y, special rim Y_s, rim diagrams and reduced words", lam)
    add("cell", cmd_cell, "every element of the cell with a reduced word", lam)
    add("zset", cmd_zset, "the distinguished representatives Z", lam)
    add("rs", cmd_rs, "insertion and recording tableaux",
        ("perm", {"help": 'row form "[3,1,2]", cycles "(1,3)" or word "s1 s2"'}))
    dia = sub.add_parser("diagram", help="diagram utilities").add_subparsers(dest="diagram_command", required=True)
    dgm = ("diagram", {"help": 'ASCII rows like "x x ./. x x" or JSON {"nodes": [[1,1],...]}'})
    add("info", cmd_diagram_info, "compositions, specialness, admissibility, subsequence type", dgm, parent=dia)
    add("wd", cmd_diagram_wd, "row and column fillings and w_D", dgm, parent=dia)
    add("dlambda", cmd_dlambda, "the canonical diagram D(d, lambda)",
        ("perm", {"help": "distinguished representative d"}), lam)
    lift = sub.add_parser("lift", help="lifting maps").add_subparsers(dest="lift_command", required=True)
    add("star", cmd_lift_star, "lift lambda -> lambda + (1,)", lam, parent=lift)
    add("k", cmd_lift_k, "lift lambda -> lambda with maximal part k increased", lam,
        ("k", {"type": int, "help": "index of a maximal part (1-based)"}), parent=lift)
    add("induce", cmd_induce, "induce the cell of w_J(lambda) to n+1", lam)
    add("restrict", cmd_restrict, "restrict the cell of w_J(lambda) to n-1", lam)
    add("families", cmd_families, "closed-form rim when lambda is in a known family", lam)
    add("verify", cmd_verify, "run the exhaustive harness over all compositions of size <= n",
        ("n", {"type": int, "nargs": "?", "help": "size bound (default 5)"}))
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    for name, default in (("format", "ascii"), ("max_n", None), ("parallel", False)):
        if not hasattr(args, name):
            setattr(args, name, default)
    try:
        code = args.func(args)
    except (ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    return EXIT_OK if code is None else code


if __name__ == "__main__":
    sys.exit(main())
