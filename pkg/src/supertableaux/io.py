"""JSON encodings of shapes, tableaux, skew tableaux and combinations."""

from __future__ import annotations

from fractions import Fraction
from typing import Optional

from .hookshapes import HookShape, Signature, validate_shape
from .tableaux import FormalCombination, HookTableau
from .taquin import SkewTableau


def shape_to_json(shape: HookShape) -> dict:
    return {"m": shape.m, "n": shape.n, "a": list(shape.a), "a_prime": list(shape.a_prime)}


def _sig(data: dict, sig: Optional[Signature]) -> Signature:
    if "m" in data and "n" in data:
        found = Signature(int(data["m"]), int(data["n"]))
        if sig is not None and found != sig:
            raise ValueError(f"shape is for sl({found.m},{found.n}), expected sl({sig.m},{sig.n})")
        return found
    if sig is None:
        raise ValueError("signature missing: give m and n")
    return sig


def shape_from_json(data: dict, sig: Optional[Signature] = None, check: bool = True) -> HookShape:
    sig = _sig(data, sig)
    a, a_prime = data.get("a", []), data.get("a_prime", [])
    if check:
        return validate_shape(sig, a, a_prime)
    return HookShape(sig, tuple(a), tuple(a_prime))


def tableau_to_json(T: HookTableau) -> dict:
    return {
        "shape": shape_to_json(T.shape),
        "plus": [list(r) for r in T.plus],
        "minus": [list(c) for c in T.minus],
    }


def tableau_from_json(data: dict, sig: Optional[Signature] = None) -> HookTableau:
    shape = shape_from_json(data["shape"], sig, check=False)
    return HookTableau(shape, tuple(map(tuple, data.get("plus", []))), tuple(map(tuple, data.get("minus", []))))


def coeff_to_str(c: Fraction) -> str:
    return f"{c.numerator}/{c.denominator}"


def combination_to_json(comb: FormalCombination) -> list:
    return [{"coeff": coeff_to_str(c), "tableau": tableau_to_json(T)} for T, c in comb.items()]


def combination_from_json(data: list, sig: Optional[Signature] = None) -> FormalCombination:
    return FormalCombination({tableau_from_json(d["tableau"], sig): Fraction(d["coeff"]) for d in data})


def skew_to_json(S: SkewTableau) -> dict:
    return {
        "m": S.sig.m,
        "n": S.sig.n,
        "inner": [list(c) for c in sorted(S.inner)],
        "entries": [[i, j, x] for (i, j), x in sorted(S.entries.items())],
    }


def skew_from_json(data: dict, sig: Optional[Signature] = None) -> SkewTableau:
    sig = _sig(data, sig)
    inner = frozenset(tuple(c) for c in data.get("inner", []))
    entries = {(i, j): x for i, j, x in data.get("entries", [])}
    return SkewTableau(sig, inner, entries)


def bijection_report_to_json(report: dict) -> dict:
    return {
        "shape": shape_to_json(report["shape"]),
        "ss_count": report["ss_count"],
        "qs_counts": [{"shape": shape_to_json(mu), "count": k} for mu, k in report["qs_counts"]],
        "pass": report["pass"],
    }
