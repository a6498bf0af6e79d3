"""Perron-Frobenius operator of x -> beta*x mod 1 acting on step functions."""

from __future__ import annotations

from .density import StepFunction, _sorted_elements, evaluate
from .exactnum import FieldElement, floor, sign


def transfer_operator(beta: FieldElement, f: StepFunction) -> StepFunction:
    """(Lf)(x) = (1/beta) * sum over k = 0..floor(beta) with x < beta - k of f((x + k)/beta)."""
    field = f.field
    beta = field.lift(beta)
    top = floor(beta)
    inv = 1 / beta
    # breakpoints of Lf: images beta*b - k of the cuts of f, plus the cutoff beta - floor(beta)
    candidates = {beta - top}
    for b in f.cuts:
        for k in range(top + 1):
            y = beta * b - k
            if sign(y) > 0 and sign(y - 1) < 0:
                candidates.add(y)
    cuts = _sorted_elements(c for c in candidates if not c.is_zero())
    values = []
    for left in [field.zero] + cuts:
        total = field.zero
        for k in range(top + 1):
            if sign(beta - k - left) > 0:
                total = total + evaluate(f, (left + k) * inv)
        values.append(total * inv)
    return StepFunction.build(field, cuts, values)


def check_invariance(beta: FieldElement, f: StepFunction) -> bool:
    """True iff L_beta f == f exactly."""
    return transfer_operator(beta, f) == f
