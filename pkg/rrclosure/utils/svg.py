"""Staircase plots of two-variable monomial ideals.

Output depends only on the inputs: fixed header, cells emitted column by
column, no timestamps or random ids.
"""
from html import escape
from typing import List, Optional, Sequence

from ..core.errors import UnsupportedDimensionError
from ..models.monomial import MonomialIdeal

CELL = 24
MARGIN = 40
INPUT_FILL = "#1f4e79"
RESULT_FILL = "#9dc3e6"
GRID_STROKE = "#d0d0d0"


def staircase_svg(
    ideal: MonomialIdeal,
    result: Optional[MonomialIdeal] = None,
    names: Sequence[str] = ("x", "y"),
    title: str = "",
) -> str:
    """Exponents of ``ideal`` in the dark shade, those only in ``result`` in the light one."""
    for i in (ideal, result):
        if i is not None and i.nvars != 2:
            raise UnsupportedDimensionError("staircase plot", i.nvars)
    gens = list(ideal.generators) + (list(result.generators) if result is not None else [])
    extent = max(max(g) for g in gens) + 2
    side = extent * CELL
    width = height = side + 2 * MARGIN

    parts: List[str] = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        f'<rect x="0" y="0" width="{width}" height="{height}" fill="#ffffff"/>',
    ]
    if title:
        parts.append(
            f'<text x="{width // 2}" y="{MARGIN // 2}" text-anchor="middle" '
            f'font-family="sans-serif" font-size="14">{escape(title)}</text>'
        )

    for x in range(extent):
        for y in range(extent):
            if (x, y) in ideal:
                fill = INPUT_FILL
            elif result is not None and (x, y) in result:
                fill = RESULT_FILL
            else:
                continue
            px = MARGIN + x * CELL
            py = MARGIN + (extent - 1 - y) * CELL
            parts.append(f'<rect x="{px}" y="{py}" width="{CELL}" height="{CELL}" fill="{fill}"/>')

    for t in range(extent + 1):
        offset = MARGIN + t * CELL
        parts.append(
            f'<line x1="{offset}" y1="{MARGIN}" x2="{offset}" y2="{MARGIN + side}" stroke="{GRID_STROKE}"/>'
        )
        parts.append(
            f'<line x1="{MARGIN}" y1="{offset}" x2="{MARGIN + side}" y2="{offset}" stroke="{GRID_STROKE}"/>'
        )

    origin_y = MARGIN + side
    parts.append(f'<line x1="{MARGIN}" y1="{origin_y}" x2="{MARGIN + side}" y2="{origin_y}" stroke="#000000"/>')
    parts.append(f'<line x1="{MARGIN}" y1="{MARGIN}" x2="{MARGIN}" y2="{origin_y}" stroke="#000000"/>')
    for t in range(extent):
        center = t * CELL + CELL // 2
        parts.append(
            f'<text x="{MARGIN + center}" y="{origin_y + 14}" text-anchor="middle" '
            f'font-family="sans-serif" font-size="10">{t}</text>'
        )
        parts.append(
            f'<text x="{MARGIN - 6}" y="{origin_y - center + 4}" text-anchor="end" '
            f'font-family="sans-serif" font-size="10">{t}</text>'
        )
    parts.append(
        f'<text x="{MARGIN + side // 2}" y="{origin_y + 32}" text-anchor="middle" '
        f'font-family="sans-serif" font-size="12">{escape(names[0])}</text>'
    )
    parts.append(
        f'<text x="{MARGIN // 3}" y="{MARGIN + side // 2}" text-anchor="middle" '
        f'font-family="sans-serif" font-size="12">{escape(names[1])}</text>'
    )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
