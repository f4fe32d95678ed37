"""Bit-exact packing documents, transcript/witness serialization and SVG.

Rationals travel as ``"numerator/denominator"`` strings so parse/emit is a
lossless round trip for arbitrary precision.  Packing documents are JSON:

    {"squares": [{"x": "0/1", "y": "0/1", "side": "1/2"}, ...], "k": 2}

with the ``k`` hint optional.  Emission is canonical (lowest terms, fixed
key order, fixed whitespace), so equal packings produce identical bytes.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction
from typing import Any, Optional, Sequence

from .geometry import OverlapWitness, Packing, Square, ValidationReport
from .sweep import SweepTranscript

_RATIONAL_RE = re.compile(r"^(-?\d+)(?:/(\d+))?$")


class FormatSyntaxError(ValueError):
    """Malformed document structure (bad JSON, missing or mistyped fields)."""


class FormatSemanticError(ValueError):
    """Structurally fine but meaningless content (bad rational, side <= 0)."""


def format_rational(value: Fraction) -> str:
    """Canonical ``p/q`` text in lowest terms with positive denominator."""
    return f"{value.numerator}/{value.denominator}"


def parse_rational(text: str, where: str = "value") -> Fraction:
    """Parse ``p/q`` (or a bare integer) into an exact fraction."""
    if not isinstance(text, str):
        raise FormatSyntaxError(f"{where}: expected a rational string, got {text!r}")
    match = _RATIONAL_RE.match(text)
    if not match:
        raise FormatSemanticError(f"{where}: malformed rational {text!r}")
    num = int(match.group(1))
    den = int(match.group(2)) if match.group(2) is not None else 1
    if den == 0:
        raise FormatSemanticError(f"{where}: zero denominator in {text!r}")
    return Fraction(num, den)


def parse_document(text: str) -> tuple[Packing, Optional[int]]:
    """Parse a packing document; returns the packing and the optional k hint."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatSyntaxError(
            f"line {exc.lineno}, column {exc.colno}: {exc.msg}"
        ) from exc
    if not isinstance(doc, dict):
        raise FormatSyntaxError("top level must be an object")
    if "squares" not in doc:
        raise FormatSyntaxError("missing required field 'squares'")
    entries = doc["squares"]
    if not isinstance(entries, list):
        raise FormatSyntaxError("'squares' must be a list")
    squares = []
    for idx, entry in enumerate(entries):
        if not isinstance(entry, dict):
            raise FormatSyntaxError(f"squares[{idx}]: expected an object")
        fields = {}
        for name in ("x", "y", "side"):
            if name not in entry:
                raise FormatSyntaxError(f"squares[{idx}]: missing field '{name}'")
            fields[name] = parse_rational(entry[name], f"squares[{idx}].{name}")
        if fields["side"] <= 0:
            raise FormatSemanticError(
                f"squares[{idx}].side: must be positive, got {entry['side']!r}"
            )
        squares.append(Square(fields["x"], fields["y"], fields["side"]))
    k = doc.get("k")
    if k is not None and not isinstance(k, int):
        raise FormatSyntaxError("'k' must be an integer")
    return Packing(tuple(squares)), k


def parse_packing(text: str) -> Packing:
    """Parse a packing document, discarding the optional k hint."""
    return parse_document(text)[0]


def _dumps(obj: Any) -> str:
    return json.dumps(obj, indent=2) + "\n"


def emit_packing(p: Packing, k: Optional[int] = None) -> str:
    """Canonical packing document; ``parse_packing`` inverts it exactly."""
    doc: dict[str, Any] = {
        "squares": [
            {
                "x": format_rational(s.x),
                "y": format_rational(s.y),
                "side": format_rational(s.side),
            }
            for s in p.squares
        ]
    }
    if k is not None:
        doc["k"] = k
    return _dumps(doc)


def emit_report(report: ValidationReport) -> str:
    return _dumps(
        {
            "is_valid": report.is_valid,
            "violations": [
                {"kind": v.kind, "indices": list(v.indices)}
                for v in report.violations
            ],
        }
    )


def emit_transcript(t: SweepTranscript) -> str:
    return _dumps(
        {
            "k": t.k,
            "a": format_rational(t.a),
            "m": list(t.m),
            "class_a": list(t.class_a),
            "class_b": list(t.class_b),
            "class_c": list(t.class_c),
            "mu": [[format_rational(v) for v in row] for row in t.mu],
            "line_loads": [format_rational(v) for v in t.line_loads],
            "chain_lhs": format_rational(t.chain_lhs),
            "chain_bound": format_rational(t.chain_bound),
            "checks": {
                "zero_hit_sides": t.checks.zero_hit_sides,
                "single_hit_lengths": t.checks.single_hit_lengths,
                "multi_hit_bounds": t.checks.multi_hit_bounds,
                "hit_surplus": t.checks.hit_surplus,
                "chain": t.checks.chain,
            },
        }
    )


def emit_witness(w: OverlapWitness) -> str:
    return _dumps(
        {
            "point": [format_rational(w.point[0]), format_rational(w.point[1])],
            "first": w.first,
            "second": w.second,
            "engine": w.engine,
        }
    )


_VIEW = 1000.0


def _svg_coord(value: Fraction) -> str:
    return f"{float(value) * _VIEW:.3f}"


def emit_svg(
    p: Packing,
    *,
    k: Optional[int] = None,
    a: Fraction = Fraction(0),
    highlight: Sequence[int] = (),
) -> str:
    """Render a packing to SVG 1.1 text on a 1000 x 1000 viewport.

    The unit square's origin is drawn at the bottom-left (y is flipped).
    With ``k`` given, the vertical lines x = a + j/k are overlaid.
    Squares listed in ``highlight`` are shaded.
    """
    shaded = set(highlight)
    lines = [
        '<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        'width="1000" height="1000" viewBox="-10 -10 1020 1020">',
        '<rect x="0" y="0" width="1000" height="1000" '
        'fill="white" stroke="black" stroke-width="2"/>',
    ]
    for i, s in enumerate(p.squares):
        fill = "lightgray" if i in shaded else "none"
        top = Fraction(1) - s.y_end
        lines.append(
            f'<rect x="{_svg_coord(s.x)}" y="{_svg_coord(top)}" '
            f'width="{_svg_coord(s.side)}" height="{_svg_coord(s.side)}" '
            f'fill="{fill}" stroke="black" stroke-width="1"/>'
        )
    if k is not None:
        for j in range(k):
            x = _svg_coord(a + Fraction(j, k))
            lines.append(
                f'<line x1="{x}" y1="-10" x2="{x}" y2="1010" '
                'stroke="black" stroke-width="3"/>'
            )
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
