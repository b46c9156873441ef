"""JSON in and out.

Rationals are written as ``"num/den"`` strings and read back with
:class:`fractions.Fraction`, so no value ever passes through a float.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any

from .analysis import ConvexPolytope, EquivalenceReport
from .chart import ChartReport
from .classify import VertexClassification
from .errors import InputError
from .polytope import DelzantPolytope, HalfSpace, ValidationReport
from .subspace import AffineSubspace, new_subspace


def rat(x) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def parse_rat(s) -> Fraction:
    if isinstance(s, bool) or isinstance(s, float):
        raise InputError(f"rational {s!r} must be a string or an integer")
    try:
        return Fraction(s)
    except (TypeError, ValueError, ZeroDivisionError):
        raise InputError(f"cannot parse rational {s!r}") from None


def dumps(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


# --- input ----------------------------------------------------------------


def load_halfspaces(data: dict) -> tuple[int, tuple[HalfSpace, ...]]:
    try:
        dim = data["dim"]
        raw = data["halfspaces"]
        hs = tuple(HalfSpace(tuple(h["normal"]), parse_rat(h["offset"])) for h in raw)
    except (KeyError, TypeError) as exc:
        raise InputError(f"malformed polytope JSON: {exc}") from None
    if not isinstance(dim, int) or dim < 1:
        raise InputError(f"bad dimension {dim!r}")
    return dim, hs


def load_subspace(data: dict) -> AffineSubspace:
    try:
        basis = data["basis"]
        offset = data.get("offset")
    except (AttributeError, TypeError) as exc:
        raise InputError(f"malformed subspace JSON: {exc}") from None
    if offset is not None:
        offset = [parse_rat(x) for x in offset]
    return new_subspace(basis, offset)


# --- output -----------------------------------------------------------------


def _vec(v):
    return [rat(x) for x in v]


def halfspaces_dict(dim: int, halfspaces) -> dict:
    return {
        "dim": dim,
        "halfspaces": [{"normal": list(h.normal), "offset": rat(h.offset)} for h in halfspaces],
    }


def polytope_dict(poly: DelzantPolytope) -> dict:
    out = halfspaces_dict(poly.dim, poly.halfspaces)
    out["vertices"] = [
        {"point": _vec(f.vertex), "active": list(f.active), "edges": [list(v) for v in f.edges]}
        for f in poly.frames
    ]
    return out


def subspace_dict(sub: AffineSubspace) -> dict:
    out = {"basis": [list(p) for p in sub.basis], "offset": _vec(sub.offset), "q": list(sub.q)}
    if sub.substituted:
        out["saturated_from"] = [list(p) for p in sub.original_basis]
    return out


def validation_dict(rep: ValidationReport) -> dict:
    return {
        "passed": rep.passed,
        "error": rep.error,
        "vertices": [
            {
                "point": _vec(v.vertex),
                "active": list(v.active),
                "simple": v.simple,
                "rational": v.rational,
                "smooth": v.smooth,
                "determinant": v.determinant,
            }
            for v in rep.vertices
        ],
    }


def classification_dict(vc: VertexClassification) -> dict:
    out = {
        "vertex": vc.vertex,
        "pairings": list(vc.pairings),
        "iplus": sorted(vc.index_sets.iplus),
        "iminus": sorted(vc.index_sets.iminus),
        "izero": sorted(vc.index_sets.izero),
        "images": [list(w) for w in vc.images],
        "jset": sorted(vc.jset),
        "image_is_vertex": vc.image_is_vertex,
        "all_images_nonzero": vc.all_images_nonzero,
        "good": vc.is_good,
        "zbasis_ok": vc.zbasis_ok,
        "cone_choice": None,
    }
    if vc.cone_choice is not None:
        ch = vc.cone_choice
        out["cone_choice"] = {
            "dropped": ch.dropped,
            "coefficients": _vec(ch.coefficients),
            "determinant": ch.determinant,
        }
    return out


def chart_dict(cr: ChartReport) -> dict:
    v = cr.verdict
    return {
        "vertex": cr.vertex,
        "binomial": {
            "aexp": list(cr.binomial.aexp),
            "bexp": list(cr.binomial.bexp),
            "const_exponent": rat(cr.binomial.const_exponent),
        },
        "smooth": v.smooth,
        "reason": v.reason.value,
        "singular_stratum": None if v.singular_stratum is None else sorted(v.singular_stratum),
    }


def image_dict(img: ConvexPolytope | None, delzant: bool | None, label: str) -> dict | None:
    if img is None:
        return {"degenerate": True, "label": label}
    out = halfspaces_dict(img.dim, img.halfspaces)
    out["vertices"] = [_vec(x) for x in img.vertices]
    out["delzant"] = delzant
    out["label"] = label
    return out


def vertex_failures(rep: EquivalenceReport) -> list[str]:
    out = []
    for vc, cr in zip(rep.classifications, rep.charts):
        if not cr.verdict.smooth:
            out.append(f"v{vc.vertex}: singular ({cr.verdict.reason.value})")
        if not vc.meets_good_polytope:
            why = "no spanning drop" if vc.cone_choice is None else "no spanning drop with a Z-basis"
            out.append(f"v{vc.vertex}: good vertex, {why}")
    return out


def equivalence_dict(rep: EquivalenceReport, sub: AffineSubspace) -> dict:
    return {
        "good": rep.good_polytope,
        "smooth": rep.all_charts_smooth,
        "holds": rep.equivalence_holds,
        "readings_agree": rep.readings_agree,
        "const_exponent": rat(rep.const_exponent),
        "subspace": subspace_dict(sub),
        "image": image_dict(rep.image, rep.image_is_delzant, rep.image_label),
        "vertices": [
            {"classification": classification_dict(vc), "chart": chart_dict(cr)}
            for vc, cr in zip(rep.classifications, rep.charts)
        ],
        "failures": vertex_failures(rep),
    }
