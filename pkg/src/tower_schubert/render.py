"""Text pictures of tower diagrams, optionally with a Schubert path drawn over them."""

from __future__ import annotations

from .monk import Marker, SchubertPath
from .towerdiag import Cell, TowerDiagram

__all__ = ["render_ascii", "ASCII", "UNICODE"]

ASCII = {"cell": "#", "empty": ".", "ground": "-", Marker.BULLET: "@", Marker.CIRCLE: "o", Marker.STAR: "*"}
UNICODE = {"cell": "■", "empty": "·", "ground": "─", Marker.BULLET: "•", Marker.CIRCLE: "∘", Marker.STAR: "∗"}


def render_ascii(T: TowerDiagram, overlay: SchubertPath | None = None, *, unicode: bool = False) -> str:
    """One character per unit square, top row first, ground drawn as a rule.

    With an overlay the path's markers replace the cell glyphs and the
    terminal cell is drawn one line below the ground.
    """
    glyph = UNICODE if unicode else ASCII
    marks: dict[Cell, Marker] = {}
    if overlay is not None:
        marks = dict(zip(overlay.cells, overlay.markers))
    width = max([len(T), 1] + [c.col for c in marks])
    top = max([0] + list(T.heights) + [c.row + 1 for c in marks])

    lines = []
    for row in range(top - 1, -1, -1):
        chars = []
        for col in range(1, width + 1):
            c = Cell(col, row)
            if c in marks:
                chars.append(glyph[marks[c]])
            else:
                chars.append(glyph["cell"] if c in T else glyph["empty"])
        lines.append("".join(chars))
    lines.append(glyph["ground"] * width)
    below = [c for c in marks if c.row < 0]
    if below:
        lines.append("".join(glyph[marks[Cell(col, -1)]] if Cell(col, -1) in marks else " "
                             for col in range(1, width + 1)).rstrip())
    return "\n".join(lines)
