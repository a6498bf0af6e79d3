"""Text renderings of exact values: decimals, JSON-ready dicts, CSV rows, SVG plots."""

from __future__ import annotations

import csv
import io
from decimal import ROUND_HALF_EVEN, Decimal, localcontext
from fractions import Fraction

from . import poly as P
from .density import StepFunction
from .exactnum import FieldElement, NumberField, to_interval


def fraction_decimal(x: Fraction, digits: int) -> str:
    with localcontext() as ctx:
        ctx.prec = digits + 40
        d = Decimal(x.numerator) / Decimal(x.denominator)
        q = d.quantize(Decimal(1).scaleb(-digits), rounding=ROUND_HALF_EVEN)
        if q == 0:
            q = abs(q)
        return f"{q:f}"


def decimal_str(a: FieldElement, digits: int = 15) -> str:
    """Value of ``a`` rounded to ``digits`` places after the point."""
    lo, hi = to_interval(a, Fraction(1, 10 ** (digits + 6)))
    return fraction_decimal((lo + hi) / 2, digits)


def coeff_strs(a: FieldElement) -> list[str]:
    return [str(c) for c in a.coeffs]


def element_json(a: FieldElement, digits: int = 15) -> dict:
    return {"decimal": decimal_str(a, digits), "coeffs": coeff_strs(a)}


def field_json(field: NumberField, digits: int = 15) -> dict:
    return {
        "modulus": [str(c) for c in field.modulus],
        "poly": P.to_str(field.modulus),
        "root": decimal_str(field.gen, digits),
    }


def step_json(f: StepFunction, digits: int = 15) -> dict:
    return {
        "field": field_json(f.field, digits),
        "segments": [
            {"lo": element_json(lo, digits), "hi": element_json(hi, digits), "value": element_json(v, digits)}
            for lo, hi, v in f.segments()
        ],
    }


def step_csv(f: StepFunction, digits: int = 15) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["segment_lo_decimal", "segment_hi_decimal", "value_decimal", "value_exact"])
    for lo, hi, v in f.segments():
        w.writerow([decimal_str(lo, digits), decimal_str(hi, digits), decimal_str(v, digits),
                    " ".join(coeff_strs(v))])
    return buf.getvalue()


def svg_plot(series: list[tuple[str, list[tuple[float, float, float, float]]]],
             y_max: float, title: str = "", y_labels: list[float] | None = None) -> str:
    """Axis-aligned plot of line segments (x0, y0, x1, y1) over [0, 1] x [0, y_max]."""
    width, height, pad = 360, 300, 40
    sx = (width - 2 * pad)
    sy = (height - 2 * pad) / y_max

    def px(x, y):
        return pad + x * sx, height - pad - y * sy

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        f'<title>{title}</title>',
    ]
    x0, y0 = px(0, 0)
    x1, _ = px(1, 0)
    _, y1 = px(0, y_max)
    parts.append(f'<line x1="{x0:.3f}" y1="{y0:.3f}" x2="{x1:.3f}" y2="{y0:.3f}" stroke="black"/>')
    parts.append(f'<line x1="{x0:.3f}" y1="{y0:.3f}" x2="{x0:.3f}" y2="{y1:.3f}" stroke="black"/>')
    for y in y_labels or []:
        _, yy = px(0, y)
        parts.append(f'<text x="2" y="{yy:.3f}" font-size="9">{y:.6f}</text>')
    colors = ["#1a7f37", "#0550ae", "#953800"]
    for i, (name, segs) in enumerate(series):
        color = colors[i % len(colors)]
        parts.append(f'<g id="{name}" stroke="{color}" stroke-width="2">')
        for a, b, c, d in segs:
            ax, ay = px(a, b)
            bx, by = px(c, d)
            parts.append(f'<line x1="{ax:.3f}" y1="{ay:.3f}" x2="{bx:.3f}" y2="{by:.3f}"/>')
        parts.append("</g>")
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def step_svg(f: StepFunction, title: str = "") -> str:
    segs = [(float(lo), float(v), float(hi), float(v)) for lo, hi, v in f.segments()]
    top = max(s[1] for s in segs)
    return svg_plot([("density", segs)], y_max=top * 1.15, title=title, y_labels=sorted({s[1] for s in segs}))


def orbit_json(d, digits: int = 15) -> dict:
    return {
        "beta": element_json(d.beta, digits),
        "beta_poly": field_json(d.beta.field, digits),
        "preperiod": [element_json(x, digits) for x in d.preperiod],
        "period": [element_json(x, digits) for x in d.period],
        "digits": list(d.digits),
        "hits_zero": d.hits_zero,
        "classification": d.classification.value,
    }


def report_json(r, digits: int = 15) -> dict:
    """JSON form of a CoincidenceReport."""

    def el(x):
        return None if x is None else element_json(x, digits)

    out = {
        "beta1": element_json(r.beta1, digits),
        "beta1_field": field_json(r.beta1.field, digits),
        "beta2": element_json(r.beta2, digits),
        "beta2_field": field_json(r.beta2.field, digits),
        "status": r.status,
        "coincide": r.coincide,
        "budget": r.budget,
        "classifications": list(r.classifications),
        "K_values": None if r.K_values is None else [el(k) for k in r.K_values],
        "K_equal": r.K_equal,
        "orbit_sets_equal_mod_zero": r.orbit_sets_equal_mod_zero,
        "zero_membership": None if r.zero_membership is None else list(r.zero_membership),
        "family_params": None if r.family_params is None else {"p": r.family_params[0], "q": r.family_params[1]},
        "beta2_is_beta1_plus_1": r.beta2_is_beta1_plus_1,
        "theorem_verdict": r.theorem_verdict,
        "zero_value_condition_holds": r.zero_value_condition_holds,
        "coefficient_sets": None,
        "notes": list(r.notes),
    }
    cs = r.coefficient_sets
    if cs is not None:
        out["coefficient_sets"] = {
            "zero_side": cs.zero_side,
            "m": cs.m,
            "ell": cs.ell,
            "C": [el(x) for x in cs.C],
            "C1": [el(x) for x in cs.C1],
            "C2": [el(x) for x in cs.C2],
            "union_equal": cs.union_equal,
            "max_C_is_inverse_base": cs.max_C_is_inverse_base,
        }
    return out
