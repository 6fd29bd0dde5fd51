"""Command-line interface for rims, cells, diagrams and verification.

Subcommands: rim (rim of a composition), cell (right cell of a
permutation), diagram (build and annotate diagrams), verify (batch
verification suites), oracle (two-route ideal membership probe).

Exit codes: 0 success, 1 invalid usage or input, 2 enumeration guard
exceeded, 3 failed mathematical assertion.
"""

from __future__ import annotations

import argparse
import itertools
import json
import random
import sys
from collections.abc import Sequence

from .diagrams import (
    Diagram,
    is_special,
    min_column_diagram,
    psi_append,
    rotate_180,
    w_of_diagram,
    young_diagram,
)
from .families import (
    FamilyParams,
    StuShape,
    determining_tuple,
    family_diagram,
    rim_diagrams,
    verify_rim_family,
    z_ideal,
)
from .paths import FormClass, family_with_lengths, find_form_path, is_admissible
from .permutations import (
    GuardExceeded,
    Permutation,
    VerificationError,
    prefix_maximal,
    reduced_word,
)
from .tableaux import compositions_of, conjugate, right_cell_of

DEFAULT_SEED = 20260816


class _Parser(argparse.ArgumentParser):
    """argparse parser whose usage errors exit with code 1, not 2."""

    def error(self, message: str) -> None:
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _parse_ints(text: str, what: str) -> tuple[int, ...]:
    try:
        parts = tuple(int(p) for p in text.split(","))
    except ValueError:
        raise ValueError(f"{what} must be comma-separated integers, got {text!r}")
    if not parts:
        raise ValueError(f"{what} must not be empty")
    return parts


def _parse_composition(text: str) -> tuple[int, ...]:
    parts = _parse_ints(text, "composition")
    if min(parts) < 1:
        raise ValueError(f"composition parts must be positive, got {parts}")
    return parts


def _parse_nodes(text: str) -> Diagram:
    nodes = set()
    for item in text.split(";"):
        pair = _parse_ints(item, "node")
        if len(pair) != 2 or min(pair) < 1:
            raise ValueError(f"each node needs two positive coordinates, got {item!r}")
        nodes.add(pair)
    return Diagram(frozenset(nodes))


def _parse_order(text: str, s: int, t: int, u: int) -> tuple[int, int, int]:
    letters = {"s": s, "t": t, "u": u}
    items = text.split(",")
    if len(items) != 3:
        raise ValueError(f"order needs three entries, got {text!r}")
    if all(item.strip() in letters for item in items):
        return tuple(letters[item.strip()] for item in items)
    return _parse_ints(text, "order")


def _glyphs(args: argparse.Namespace) -> tuple[str, str]:
    if getattr(args, "plain_x", False):
        return "x", "."
    return "×", "·"


def _diagram_json(D: Diagram) -> dict:
    return {"nodes": [[a, b] for a, b in D.sorted_nodes]}


def _word_text(word: tuple[int, ...]) -> str:
    if not word:
        return "(identity)"
    return " ".join(f"s{i}" for i in word)


def _emit(args: argparse.Namespace, payload: dict, ascii_lines: list[str]) -> None:
    if args.format == "json":
        print(json.dumps(payload, sort_keys=True))
    else:
        print("\n".join(ascii_lines))


def _sorted_diagrams(diagrams) -> list[Diagram]:
    return sorted(diagrams, key=lambda D: D.sorted_nodes)


def cmd_rim(args: argparse.Namespace) -> int:
    lam = _parse_composition(args.composition)
    E, E_s = rim_diagrams(lam, limit=args.max_n)
    ordered = _sorted_diagrams(E)
    words = [reduced_word(w_of_diagram(D)) for D in ordered]
    payload = {
        "lambda": list(lam),
        "rim_size": len(E),
        "special": len(E_s),
        "diagrams": [_diagram_json(D) for D in ordered],
        "reduced_words": [list(word) for word in words],
    }
    node, empty = _glyphs(args)
    lines = [f"lambda: {lam}  rim size: {len(E)}  special: {len(E_s)}"]
    for k, (D, word) in enumerate(zip(ordered, words), start=1):
        tag = "special" if D in E_s else "non-special"
        lines.append("")
        lines.append(f"[{k}] {tag}  word: {_word_text(word)}")
        lines.append(D.render(node_char=node, empty_char=empty))
    _emit(args, payload, lines)
    return 0


def cmd_cell(args: argparse.Namespace) -> int:
    images = _parse_ints(args.permutation, "permutation")
    w = Permutation(images)
    members = sorted(x.images for x in right_cell_of(w, limit=args.max_n))
    payload = {
        "permutation": list(images),
        "degree": w.degree,
        "cell_size": len(members),
        "members": [list(m) for m in members],
    }
    lines = [f"permutation: {images}  cell size: {len(members)}"]
    lines.extend(str(m) for m in members)
    _emit(args, payload, lines)
    return 0


def _build_family(args: argparse.Namespace) -> Diagram:
    if args.stu is None or args.order is None:
        raise ValueError("family diagrams need --stu and --order")
    s, t, u = sorted(_parse_ints(args.stu, "stu"), reverse=True)
    order = _parse_order(args.order, s, t, u)
    shape = StuShape(s, t, u, order)
    columns = frozenset(_parse_ints(args.C, "C")) if args.C else frozenset()
    counts = _parse_ints(args.params, "params") if args.params else ()
    params = FamilyParams(args.kind, columns=columns, v=args.v, counts=counts)
    return family_diagram(params, shape)


def _annotations(D: Diagram) -> dict:
    admissible = is_admissible(D)
    profile = conjugate(tuple(sorted(D.row_composition(), reverse=True)))
    out = {
        "row_composition": list(D.row_composition()),
        "admissible": admissible,
        "special": is_special(D),
        "conjugate_type": list(profile),
        "conjugate_type_path": family_with_lengths(D, profile) is not None,
        "determining_tuple": None,
        "form": None,
        "path": None,
    }
    rows = D.row_composition()
    if len(rows) == 4 and rows[3] == 1:
        s, t, u = sorted(rows[:3], reverse=True)
        try:
            shape = StuShape(s, t, u, rows[:3])
            out["determining_tuple"] = list(determining_tuple(D, shape).entries)
        except ValueError:
            pass
        if admissible:
            try:
                pi, form = find_form_path(D)
                out["form"] = form.value
                out["path"] = [
                    [[a, b] for a, b in chain] for chain in pi.constituents
                ]
            except (ValueError, VerificationError):
                pass
    return out


def cmd_diagram(args: argparse.Namespace) -> int:
    if args.kind == "young":
        if not args.partition:
            raise ValueError("young diagrams need --partition")
        D = young_diagram(_parse_composition(args.partition))
    elif args.kind == "check":
        if not args.nodes:
            raise ValueError("check needs --nodes")
        D = _parse_nodes(args.nodes)
    else:
        D = _build_family(args)
    notes = _annotations(D)
    payload = dict(_diagram_json(D), **notes)
    node, empty = _glyphs(args)
    lines = [D.render(node_char=node, empty_char=empty), ""]
    lines.append(f"row composition: {tuple(notes['row_composition'])}")
    lines.append(f"admissible: {'yes' if notes['admissible'] else 'no'}")
    lines.append(f"special: {'yes' if notes['special'] else 'no'}")
    profile = tuple(notes["conjugate_type"])
    has = "yes" if notes["conjugate_type_path"] else "no"
    lines.append(f"family of type {profile}: {has}")
    if notes["determining_tuple"] is not None:
        lines.append(
            "determining tuple: " + " ".join(notes["determining_tuple"])
        )
    if notes["form"] is not None:
        lines.append(f"form: {notes['form']}")
    _emit(args, payload, lines)
    return 0


def cmd_oracle(args: argparse.Namespace) -> int:
    lam = _parse_composition(args.composition)
    ideal = z_ideal(lam, limit=args.max_n)
    boundary = prefix_maximal(ideal)
    payload = {
        "lambda": list(lam),
        "ideal_size": len(ideal),
        "rim_size": len(boundary),
        "routes_agree": True,
    }
    lines = [
        f"lambda: {lam}",
        f"ideal size: {len(ideal)} (cell route and diagram route agree)",
        f"rim size: {len(boundary)}",
    ]
    if args.list:
        members = sorted(x.images for x in ideal)
        payload["members"] = [list(m) for m in members]
        lines.extend(str(m) for m in members)
    _emit(args, payload, lines)
    return 0


def _verify_tables(args: argparse.Namespace) -> tuple[dict, list[str]]:
    s, t, u = sorted((args.s, args.t, args.u), reverse=True)
    ones = args.trailing_ones
    results = []
    lines = []
    orderings = sorted(set(itertools.permutations((s, t, u))))
    for order in orderings:
        lam = order + (1,) * ones
        report = verify_rim_family(lam, limit=args.max_n)
        results.append(
            {
                "lambda": list(lam),
                "rim_size": report.rim_size,
                "special": report.special_size,
                "ideal_size": report.ideal_size,
                "pass": True,
            }
        )
        lines.append(
            f"ordering {order}: rim {report.rim_size} "
            f"special {report.special_size} ideal {report.ideal_size} PASS"
        )
    payload = {"suite": "tables", "results": results, "ok": True}
    lines.append(f"tables suite: {len(results)} orderings PASS")
    return payload, lines


def _verify_oracle(args: argparse.Namespace) -> tuple[dict, list[str]]:
    bound = args.max_n if args.max_n is not None else 5
    checked = 0
    lines = []
    for n in range(1, bound + 1):
        sizes = []
        for lam in compositions_of(n):
            sizes.append(len(z_ideal(lam, limit=bound)))
            checked += 1
        lines.append(f"n={n}: {len(sizes)} compositions, two routes agree")
    spot_shapes = []
    rng = random.Random(args.seed)
    for offset in range(1, args.spots + 1):
        degree = bound + offset
        lam = rng.choice(list(compositions_of(degree)))
        z_ideal(lam, limit=degree)
        spot_shapes.append(list(lam))
        lines.append(f"spot {lam}: two routes agree")
    payload = {
        "suite": "oracle",
        "compositions_checked": checked,
        "spot_shapes": spot_shapes,
        "ok": True,
    }
    lines.append(f"oracle suite: {checked} compositions + {len(spot_shapes)} spots PASS")
    return payload, lines


def _verify_bijections(args: argparse.Namespace) -> tuple[dict, list[str]]:
    bound = args.max_n if args.max_n is not None else 6
    rotations = 0
    for n in range(1, bound + 1):
        for lam in compositions_of(n):
            E, E_s = rim_diagrams(lam, limit=bound)
            RE, RE_s = rim_diagrams(tuple(reversed(lam)), limit=bound)
            if RE != frozenset(rotate_180(D) for D in E):
                raise VerificationError(f"rotation transport fails for {lam}")
            if RE_s != frozenset(rotate_180(D) for D in E_s):
                raise VerificationError(
                    f"rotation transport fails on specials for {lam}"
                )
            rotations += 1
    appends = 0
    for n in range(1, bound):
        for lam in compositions_of(n):
            if lam[-1] != 1:
                continue
            E, _ = rim_diagrams(lam, limit=bound)
            grown, _ = rim_diagrams(lam + (1,), limit=bound + 1)
            if grown != frozenset(psi_append(D) for D in E):
                raise VerificationError(f"row-append transport fails for {lam}")
            appends += 1
    lines = [
        f"rotation transport: {rotations} compositions PASS",
        f"row-append transport: {appends} compositions PASS",
    ]
    payload = {
        "suite": "bijections",
        "rotation_checked": rotations,
        "append_checked": appends,
        "ok": True,
    }
    return payload, lines


def cmd_verify(args: argparse.Namespace) -> int:
    suites = {
        "tables": _verify_tables,
        "oracle": _verify_oracle,
        "bijections": _verify_bijections,
    }
    payload, lines = suites[args.suite](args)
    _emit(args, payload, lines)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="cellrim", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser) -> None:
        p.add_argument(
            "--format", choices=("json", "ascii"), default="ascii",
            help="output format",
        )
        p.add_argument(
            "--plain-x", action="store_true",
            help="render diagrams with x/. instead of the default glyphs",
        )
        p.add_argument(
            "--max-n", type=int, default=None,
            help="override the enumeration guard",
        )

    p_rim = sub.add_parser("rim", help="rim of a composition")
    p_rim.add_argument("--composition", required=True)
    common(p_rim)
    p_rim.set_defaults(func=cmd_rim)

    p_cell = sub.add_parser("cell", help="right cell of a permutation")
    p_cell.add_argument("--permutation", required=True, help="one-line images")
    common(p_cell)
    p_cell.set_defaults(func=cmd_cell)

    p_diag = sub.add_parser("diagram", help="build and annotate a diagram")
    p_diag.add_argument(
        "kind", choices=("young", "F", "G", "H", "M", "N", "check")
    )
    p_diag.add_argument("--partition", help="parts for young")
    p_diag.add_argument("--nodes", help="semicolon-separated a,b pairs for check")
    p_diag.add_argument("--stu", help="s,t,u for family kinds")
    p_diag.add_argument("--order", help="arrangement, e.g. u,s,t or 3,8,5")
    p_diag.add_argument("--C", help="column set, e.g. 7,8")
    p_diag.add_argument("--v", type=int, help="fourth-row column for H")
    p_diag.add_argument("--params", help="block sizes for M or N")
    common(p_diag)
    p_diag.set_defaults(func=cmd_diagram)

    p_verify = sub.add_parser("verify", help="run a verification suite")
    p_verify.add_argument("suite", choices=("tables", "oracle", "bijections"))
    p_verify.add_argument("--s", type=int, default=3)
    p_verify.add_argument("--t", type=int, default=2)
    p_verify.add_argument("--u", type=int, default=1)
    p_verify.add_argument("--trailing-ones", type=int, default=1)
    p_verify.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p_verify.add_argument("--spots", type=int, default=0)
    common(p_verify)
    p_verify.set_defaults(func=cmd_verify)

    p_oracle = sub.add_parser("oracle", help="two-route ideal membership probe")
    p_oracle.add_argument("--composition", required=True)
    p_oracle.add_argument("--list", action="store_true", help="list members")
    common(p_oracle)
    p_oracle.set_defaults(func=cmd_oracle)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except GuardExceeded as exc:
        print(f"guard exceeded: {exc}", file=sys.stderr)
        return 2
    except VerificationError as exc:
        print(f"verification failed: {exc}", file=sys.stderr)
        return 3
    except ValueError as exc:
        print(f"invalid input: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
