"""Command-line front end.

Exit status: 0 on success, 1 on a domain error (reported as JSON carrying the
error class name), 2 on a usage error. JSON is the default output; ``--pretty``
prints tableaux as text grids instead.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Optional, Sequence

from .errors import BudgetExceeded, TableauError
from .extraction import (
    largest_extractable_pair,
    prepend_pair,
    pull,
    push,
    quasistandard,
)
from .hookshapes import HookShape, Signature, shapes_below
from .io import (
    combination_to_json,
    shape_from_json,
    skew_from_json,
    skew_to_json,
    tableau_from_json,
    tableau_to_json,
)
from .superspace import DEFAULT_BUDGET, eij_on_tableau, star_product, straighten
from .tableaux import (
    FormalCombination,
    HookTableau,
    enumerate_semistandard,
    is_semistandard,
    render_tableau,
)
from .taquin import SkewTableau, outer_corners, render_frame, sjdt_slide, sjdt_trace, skew_from_pair
from .verify import SUITES, run_all, run_suite

VERBS = ("enumerate", "count", "push", "pull", "quasistandard", "sjdt", "straighten", "star", "verify", "cone")


class UsageError(Exception):
    pass


def _load(flag: str, text: Optional[str]):
    """Parse a flag value given inline or as a path to a JSON file."""
    if text is None:
        raise UsageError(f"{flag} is required")
    if os.path.isfile(text):
        with open(text) as fh:
            text = fh.read()
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"{flag}: invalid JSON ({exc.msg})") from None


def _signature(args, data: Optional[dict] = None) -> Optional[Signature]:
    if data and "m" in data and "n" in data:
        return None
    if args.m is None or args.n is None:
        raise UsageError("--m and --n are required unless the JSON carries m and n")
    return Signature(args.m, args.n)


def _shape(args) -> HookShape:
    data = _load("--shape", args.shape)
    if not isinstance(data, dict):
        raise UsageError("--shape must be a JSON object")
    return shape_from_json(data, _signature(args, data))


def _tableau_data(args, text: Optional[str]) -> dict:
    data = _load("--tableau", text)
    if not isinstance(data, dict):
        raise UsageError("--tableau must be a JSON object")
    if "shape" not in data and "inner" not in data:
        data = dict(data, shape=_load("--shape", args.shape))
    return data


def _tableau(args, text: Optional[str] = None) -> HookTableau:
    data = _tableau_data(args, args.tableau[0] if text is None and args.tableau else text)
    if "shape" not in data:
        raise UsageError("--tableau needs a shape")
    return tableau_from_json(data, _signature(args, data["shape"]))


def _emit(obj) -> None:
    print(json.dumps(obj))


def _emit_tableaux(args, tableaux: Sequence[HookTableau]) -> None:
    if args.pretty:
        print("\n\n".join("\n".join(render_tableau(T)) or "0" for T in tableaux))
    else:
        _emit([tableau_to_json(T) for T in tableaux])


def _emit_tableau(args, T: HookTableau) -> None:
    if args.pretty:
        print("\n".join(render_tableau(T)) or "0")
    else:
        _emit(tableau_to_json(T))


def _emit_combination(args, comb: FormalCombination) -> None:
    if args.pretty:
        if comb.is_zero():
            print("0")
        for T, c in comb.items():
            print(f"{c} *")
            print("\n".join("  " + line for line in render_tableau(T)) or "  0")
    else:
        _emit(combination_to_json(comb))


def _budget(args) -> int:
    return DEFAULT_BUDGET if args.max_boxes is None else args.max_boxes


# verbs ----------------------------------------------------------------------


def cmd_enumerate(args) -> int:
    _emit_tableaux(args, enumerate_semistandard(_shape(args)))
    return 0


def cmd_count(args) -> int:
    n = len(enumerate_semistandard(_shape(args)))
    print(f"|SS| = {n}") if args.pretty else _emit({"ss": n})
    return 0


def cmd_push(args) -> int:
    T = _tableau(args)
    if not is_semistandard(T):
        raise ValueError("push needs a semistandard tableau")
    _emit_tableau(args, push(T))
    return 0


def cmd_pull(args) -> int:
    _emit_tableau(args, pull(_tableau(args), _shape(args)))
    return 0


def cmd_quasistandard(args) -> int:
    _emit_tableaux(args, quasistandard(_shape(args)))
    return 0


def _skew(args) -> SkewTableau:
    data = _tableau_data(args, args.tableau[0] if args.tableau else None)
    if "inner" in data:
        return skew_from_json(data, _signature(args, data))
    T = tableau_from_json(data, _signature(args, data["shape"]))
    return skew_from_pair(T, largest_extractable_pair(T))


def _frame_json(S: SkewTableau, inner, entries, star) -> dict:
    out = skew_to_json(SkewTableau(S.sig, frozenset(inner), entries))
    out["star"] = list(star) if star is not None else None
    return out


def cmd_sjdt(args) -> int:
    S = _skew(args)
    if args.corner is not None:
        corner = tuple(_load("--corner", args.corner))
        slides = [corner]
    else:
        slides = None
    frames = []
    while S.inner and (slides is None or slides):
        c = slides.pop(0) if slides else outer_corners(S)[-1]
        if args.trace:
            inner = S.inner - {c}
            frames += [(inner, entries, star) for entries, star in sjdt_trace(S, c)[:-1]]
        S = sjdt_slide(S, c)
    result = S.to_tableau() if S.is_straight() else S
    if args.pretty:
        for inner, entries, star in frames:
            print("\n".join(render_frame(inner, entries, star)))
            print()
        if isinstance(result, HookTableau):
            print("\n".join(render_tableau(result)) or "0")
        else:
            print("\n".join(render_frame(result.inner, result.entries)))
        return 0
    for inner, entries, star in frames:
        _emit(_frame_json(S, inner, entries, star))
    body = tableau_to_json(result) if isinstance(result, HookTableau) else skew_to_json(result)
    _emit({"result": body} if args.trace else body)
    return 0


def cmd_straighten(args) -> int:
    _emit_combination(args, straighten(_tableau(args), _budget(args)))
    return 0


def cmd_star(args) -> int:
    if not args.tableau or len(args.tableau) != 2:
        raise UsageError("--tableau must be given exactly twice")
    S, T = (_tableau(args, text) for text in args.tableau)
    _emit_combination(args, star_product(S, T, _budget(args)))
    return 0


def cmd_verify(args) -> int:
    name = args.suite or "all"
    if name != "all" and name not in SUITES:
        raise UsageError(f"unknown suite {name!r}; choose from all, {', '.join(SUITES)}")
    results = run_all(args.max_boxes) if name == "all" else [run_suite(name, args.max_boxes)]
    if args.pretty:
        for r in results:
            print(f"{'PASS' if r.passed else 'FAIL'}  {r.criterion:2d}  {r.name:24s} {r.checked:7d} checks  {r.seconds:.2f}s")
            for f in r.failures:
                print(f"      {f}")
    else:
        _emit([r.to_json() for r in results])
    return 0 if all(r.passed for r in results) else 1


def cone_graph(lam: HookShape, budget: int = DEFAULT_BUDGET) -> dict:
    """Quasistandard nodes below ``lam`` and raising-operator edges between them.

    An edge ``U -> V`` labelled ``i`` means ``push(T')`` is ``V`` for some
    tableau ``T'`` with nonzero coefficient in ``E_{i,i+1} . pull(U)``.
    """
    nodes = [U for mu in shapes_below(lam) for U in quasistandard(mu)]
    index = {U: k for k, U in enumerate(nodes)}
    pulled = [prepend_pair(U, lam) for U in nodes]
    edges, warning = [], None
    try:
        for k, T in enumerate(pulled):
            for i in range(1, lam.sig.size):
                for T2, _ in eij_on_tableau(i, i + 1, T, budget).items():
                    edges.append((k, index[push(T2)], i))
    except BudgetExceeded as exc:
        edges, warning = [], str(exc)
    return {
        "nodes": nodes,
        "reached": [is_semistandard(T) for T in pulled],
        "edges": sorted(set(edges)),
        "warning": warning,
    }


def cone_dot(graph: dict) -> str:
    lines = ["digraph cone {"]
    for k, (U, ok) in enumerate(zip(graph["nodes"], graph["reached"])):
        label = str(U).replace('"', '\\"')
        style = "" if ok else ", style=dashed"
        lines.append(f'  n{k} [label="{label}"{style}];')
    for a, b, i in graph["edges"]:
        lines.append(f'  n{a} -> n{b} [label="{i}"];')
    lines.append("}")
    return "\n".join(lines)


def cmd_cone(args) -> int:
    graph = cone_graph(_shape(args), _budget(args))
    if graph["warning"]:
        print(f"warning: edges omitted: {graph['warning']}", file=sys.stderr)
    if args.dot:
        print(cone_dot(graph))
    else:
        _emit(
            {
                "nodes": [tableau_to_json(U) for U in graph["nodes"]],
                "reached": graph["reached"],
                "edges": [{"from": a, "to": b, "i": i} for a, b, i in graph["edges"]],
            }
        )
    return 0


COMMANDS = {
    "enumerate": cmd_enumerate,
    "count": cmd_count,
    "push": cmd_push,
    "pull": cmd_pull,
    "quasistandard": cmd_quasistandard,
    "sjdt": cmd_sjdt,
    "straighten": cmd_straighten,
    "star": cmd_star,
    "verify": cmd_verify,
    "cone": cmd_cone,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="supertableaux", description="Hook tableaux for sl(m,n).")
    parser.add_argument("verb", choices=VERBS)
    parser.add_argument("suite", nargs="?", help="suite name for verify (default: all)")
    parser.add_argument("--m", type=int)
    parser.add_argument("--n", type=int)
    parser.add_argument("--shape", help="shape JSON or path")
    parser.add_argument("--tableau", action="append", help="tableau JSON or path (twice for star)")
    parser.add_argument("--corner", help="outer corner [i,j] for a single sjdt slide")
    parser.add_argument("--max-boxes", type=int, help="scope for verify, tensor budget otherwise")
    parser.add_argument("--trace", action="store_true", help="emit every sjdt frame")
    parser.add_argument("--pretty", action="store_true", help="text grids instead of JSON")
    parser.add_argument("--dot", action="store_true", help="DOT output for cone")
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.suite is not None and args.verb != "verify":
        parser.error(f"unexpected argument {args.suite!r}")
    try:
        return COMMANDS[args.verb](args)
    except UsageError as exc:
        print(f"{parser.prog}: error: {exc}", file=sys.stderr)
        return 2
    except TableauError as exc:
        _emit({"error": exc.tag, "message": str(exc)})
        return 1
    except ValueError as exc:
        _emit({"error": "ValueError", "message": str(exc)})
        return 1


if __name__ == "__main__":
    sys.exit(main())
