"""
Text and JSON rendering of results for the command line.

JSON documents render every probability as an exact 'p/q' string and every proposition as a list of state
names in index order.
"""

import json

from . import core

from .structs import Format
from .structs import OrthogonalityDetail
from .structs import StabilityDetail
from .structs import ThresholdDetail


def rational(q):
    """
    Formats a rational as an exact 'p/q' string (also for integers, e.g. '1/1').
    """
    return f"{q.numerator}/{q.denominator}"


def proposition(m, p):
    """
    Formats a proposition as '{a b c}'.
    """
    return "{" + " ".join(core.names(m, p)) + "}"


def structure(m, fmt=Format.TEXT):
    """
    Renders a structure summary.
    """
    if fmt is Format.JSON:
        return _json(
            {
                "states": list(m.states),
                "prior": {name: rational(p) for name, p in zip(m.states, m.prior)},
                "question": [core.names(m, c) for c in m.question.cells],
                "evidence": [core.names(m, e) for e in m.evidence],
                "threshold": rational(m.threshold),
            }
        )

    lines = [
        f"states:    {len(m.states)}",
        f"answers:   {len(m.question.cells)}",
        f"evidence:  {len(m.evidence)}",
        f"threshold: {m.threshold}",
    ]

    return "\n".join(lines)


def belief(m, b, fmt=Format.TEXT):
    """
    Renders a belief set.
    """
    if fmt is Format.JSON:
        return _json(
            {
                "operator": b.operator.value,
                "evidence": core.names(m, b.evidence),
                "believed": core.names(m, b.states),
                "mass": rational(b.mass),
            }
        )

    lines = [
        f"E          {proposition(m, b.evidence)}",
        f"B(E)       {proposition(m, b.states)}",
        f"Pr(B(E)|E) {b.mass}",
        f"operator   {b.operator.value}",
    ]

    return "\n".join(lines)


def verdicts(m, items, fmt=Format.TEXT):
    """
    Renders principle verdicts with their witnesses.
    """
    if fmt is Format.JSON:
        return _json([_verdict(m, v) for v in items])

    lines = []
    for v in items:
        bounded = " (bounded)" if v.bounded else ""
        lines.append(f"{v.principle.symbol:<4} {v.operator.value:<4} {v.outcome.value:<6} {v.instances} instances{bounded}")
        for w in v.witnesses:
            lines.append(f"     E  = {proposition(m, w.evidence)}")
            if w.partition is not None:
                lines.append(f"     Pi = [{', '.join(proposition(m, p) for p in w.partition)}]")
            else:
                lines.append(f"     E' = {proposition(m, w.discovery)}")
            lines.append(f"     {w.detail}")

    return "\n".join(lines)


def constraints(m, reports, skipped=None, fmt=Format.TEXT):
    """
    Renders constraint reports. Constraints that could not be checked are listed in 'skipped' as
    (Constraint, reason) pairs.
    """
    skipped = skipped or []

    if fmt is Format.JSON:
        items = [_constraint(m, r) for r in reports]
        items += [{"constraint": c.value, "outcome": "skipped", "reason": reason} for c, reason in skipped]
        return _json(items)

    lines = []
    for r in reports:
        lines.append(f"{r.constraint.value:<13} {r.outcome.value:<6} {r.checked} checked")
        for v in r.violations:
            lines.append(f"     E = {proposition(m, v.evidence)}: {_detail(m, v.detail)}")

    for c, reason in skipped:
        lines.append(f"{c.value:<13} skipped ({reason})")

    return "\n".join(lines)


def example(m, name, path=None, text=None, fmt=Format.TEXT):
    """
    Renders the result of generating a named structure: the file written or the structure text.
    """
    if fmt is Format.JSON:
        document = {"example": name, "states": len(m.states), "evidence": len(m.evidence)}
        if path is not None:
            document["file"] = f"{path}"
        else:
            document["structure"] = text
        return _json(document)

    if path is not None:
        return f"wrote {name} to {path}"

    return text.rstrip("\n")


def search(result, principle, op, path=None, text=None, fmt=Format.TEXT):
    """
    Renders a countermodel search result. The elapsed time is not rendered so output is reproducible.
    """
    found = result.found

    if fmt is Format.JSON:
        document = {
            "principle": principle.value,
            "operator": op.value,
            "tried": result.tried,
            "accepted": result.accepted,
            "found": found is not None,
        }
        if found is not None:
            document["witness"] = _witness(found.structure, found.witness)
            if path is not None:
                document["file"] = f"{path}"
            else:
                document["structure"] = text
        return _json(document)

    lines = [f"{principle.symbol} {op.value}: {result.tried} tried, {result.accepted} accepted"]
    if found is None:
        lines.append("no countermodel found")
    else:
        m = found.structure
        w = found.witness
        lines.append(f"countermodel: {len(m.states)} states, {len(m.evidence)} evidence sets, t={m.threshold}")
        lines.append(f"     E  = {proposition(m, w.evidence)}")
        lines.append(f"     E' = {proposition(m, w.discovery)}")
        lines.append(f"     {w.detail}")
        lines.append(f"wrote {path}" if path is not None else text.rstrip("\n"))

    return "\n".join(lines)


def shrunk(m, verdict, path=None, text=None, fmt=Format.TEXT):
    """
    Renders a shrunk countermodel with its first witness.
    """
    w = verdict.witnesses[0]

    if fmt is Format.JSON:
        document = {
            "principle": verdict.principle.value,
            "operator": verdict.operator.value,
            "states": len(m.states),
            "witness": _witness(m, w),
        }
        if path is not None:
            document["file"] = f"{path}"
        else:
            document["structure"] = text
        return _json(document)

    lines = [
        f"{verdict.principle.symbol} {verdict.operator.value}: {len(m.states)} states",
        f"     E  = {proposition(m, w.evidence)}",
        f"     E' = {proposition(m, w.discovery)}",
        f"     {w.detail}",
        f"wrote {path}" if path is not None else text.rstrip("\n"),
    ]

    return "\n".join(lines)


def _json(document):
    return json.dumps(document, indent=2)


def _verdict(m, v):
    return {
        "principle": v.principle.value,
        "operator": v.operator.value,
        "outcome": v.outcome.value,
        "instances": v.instances,
        "bounded": v.bounded,
        "witnesses": [_witness(m, w) for w in v.witnesses],
    }


def _witness(m, w):
    document = {
        "evidence": core.names(m, w.evidence),
        "discovery": core.names(m, w.discovery),
        "before": core.names(m, w.before.states),
        "after": [core.names(m, b.states) for b in w.after],
        "detail": w.detail,
    }

    if w.partition is not None:
        document["partition"] = [core.names(m, p) for p in w.partition]

    return document


def _constraint(m, r):
    return {
        "constraint": r.constraint.value,
        "outcome": r.outcome.value,
        "checked": r.checked,
        "violations": [{"evidence": core.names(m, v.evidence)} | _detail_json(m, v.detail) for v in r.violations],
    }


def _detail(m, detail):
    match detail:
        case OrthogonalityDetail():
            s, t = (m.states[x] for x in detail.states)
            return f"Pr([{s}])/Pr([{t}]) = {detail.prior_ratio} but Pr([{s}]|E)/Pr([{t}]|E) = {detail.conditional_ratio}"

        case StabilityDetail():
            union = proposition(m, frozenset().union(*(m.question.cells[i] for i in detail.cells)))
            return f"Pr({union}) = {detail.prior} but Pr({union}|E) = {detail.conditional}"

        case ThresholdDetail():
            return f"Pr(B(E)|E) = {detail.mass} for B(E) = {proposition(m, detail.believed)}"

    return f"{detail}"


def _detail_json(m, detail):
    match detail:
        case OrthogonalityDetail():
            return {
                "cells": [core.names(m, m.question.cells[i]) for i in detail.cells],
                "states": [m.states[x] for x in detail.states],
                "prior_ratio": rational(detail.prior_ratio),
                "conditional_ratio": rational(detail.conditional_ratio),
            }

        case StabilityDetail():
            return {
                "cells": [core.names(m, m.question.cells[i]) for i in detail.cells],
                "prior": rational(detail.prior),
                "conditional": rational(detail.conditional),
            }

        case ThresholdDetail():
            return {
                "operator": detail.operator.value,
                "believed": core.names(m, detail.believed),
                "mass": rational(detail.mass),
            }

    return {"detail": f"{detail}"}

