"""
Monk's rule on tower diagrams.

The Schubert path of ``k`` starts at cell ``(1, k-1)``, moves east through
cells of the diagram and south-east through empty cells, and stops one step
below the ground.  New cells for ``S_w * S_{s_k}`` can only start at critical
cells of that path; :func:`candidates_at` tries every admissible number of
extra cells above one critical cell and keeps the tries where each extra cell,
slid to the right, erases a cell.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .permcore import Permutation, Transposition, compose, inverse, length
from .towerdiag import (
    Cell, TowerDiagram, _slide_into, diagram_of_perm, gfn, perm_of_diagram, tower_index,
)

__all__ = [
    "Marker", "SchubertPath", "MonkProduct",
    "schubert_path", "critical_cells", "essential_cells", "candidates_at",
    "monk_products", "monk_oracle", "monk_perms",
]


class Marker(enum.Enum):
    BULLET = "bullet"      # a cell of the diagram, or the terminal cell below ground
    CIRCLE = "circle"
    STAR = "star"          # critical


@dataclass(frozen=True)
class SchubertPath:
    k: int
    cells: tuple[Cell, ...]
    markers: tuple[Marker, ...]

    @property
    def terminal(self) -> Cell:
        return self.cells[-1]

    def marker_at(self, cell: Cell) -> Marker | None:
        try:
            return self.markers[self.cells.index(cell)]
        except ValueError:
            return None


def _path_cells(T: TowerDiagram, k: int) -> list[Cell]:
    col, row = 1, k - 1
    cells = [Cell(col, row)]
    while row >= 0:
        if row >= T.height(col):
            row -= 1
        col += 1
        cells.append(Cell(col, row))
    return cells


def _next_bullet(T: TowerDiagram, cells: list[Cell] | tuple[Cell, ...], pos: int) -> Cell:
    for d in cells[pos + 1:]:
        if d in T or d.row < 0:
            return d
    raise AssertionError("a Schubert path always ends below ground")


def _critical(T: TowerDiagram, cells, pos: int) -> bool:
    c = cells[pos]
    if c in T or c.row < 0:
        return False
    empty_below = c.row - T.height(c.col)
    if empty_below == 0:
        return True
    d = _next_bullet(T, cells, pos)
    return d.row + 1 >= empty_below


def schubert_path(T: TowerDiagram, k: int) -> SchubertPath:
    if k < 1:
        raise ValueError("k must be positive")
    cells = _path_cells(T, k)
    markers = []
    for pos, c in enumerate(cells):
        if c in T or c.row < 0:
            markers.append(Marker.BULLET)
        elif _critical(T, cells, pos):
            markers.append(Marker.STAR)
        else:
            markers.append(Marker.CIRCLE)
    return SchubertPath(k, tuple(cells), tuple(markers))


def critical_cells(P: SchubertPath, T: TowerDiagram) -> list[Cell]:
    return [c for pos, c in enumerate(P.cells) if _critical(T, P.cells, pos)]


def essential_cells(P: SchubertPath, T: TowerDiagram) -> list[Cell]:
    """Critical cells sitting directly on top of their (possibly empty) tower."""
    return [c for c in critical_cells(P, T) if c.row == T.height(c.col)]


@dataclass(frozen=True)
class MonkProduct:
    """One term of ``S_w * S_{s_k}``: the diagram of ``w * t_{a,b}``."""

    diagram: TowerDiagram
    a: int
    b: int
    raised: int               # tower receiving the new cells
    lowered: int | None       # tower losing ``moved`` top cells, if any
    moved: int
    new_cell: Cell            # bottom added cell e_0
    extra: int                # the loop counter r that produced it

    @property
    def perm(self) -> Permutation:
        return perm_of_diagram(self.diagram)


def candidates_at(T: TowerDiagram, k: int, c: Cell, *, check: bool = True) -> list[MonkProduct]:
    """Diagrams of ``k . T`` whose new cells go on the tower under the critical cell ``c``."""
    P_cells = _path_cells(T, k)
    try:
        pos = P_cells.index(c)
    except ValueError:
        raise ValueError(f"{c} is not on the Schubert path of {k} in {T}") from None
    if not _critical(T, P_cells, pos):
        raise ValueError(f"{c} is not a critical cell of the Schubert path of {k} in {T}")
    l = c.col
    base = T.height(l)
    empty_below = c.row - base
    d = _next_bullet(T, P_cells, pos)
    above_bullet = T.height(d.col) - d.row - 1 if d.row >= 0 else T.height(d.col)

    out = []
    for r in range(above_bullet + 2):
        stack = empty_below + r
        hs = list(T.heights) + [0] * max(0, l - len(T))
        hs[l - 1] = base + stack + 1
        deleted_from = set()
        for row in range(base + stack, base, -1):
            outcome = _slide_into(hs, l + row, l + 1)
            if outcome.kind != "deleted":
                break
            deleted_from.add(outcome.cell.col)
        else:
            assert len(deleted_from) <= 1, "erased cells must be the top cells of one tower"
            U = TowerDiagram(hs)
            lowered = next(iter(deleted_from), None)
            a = tower_index(T, l)
            b = tower_index(T, lowered) if lowered is not None else gfn(T, c)[1] + 1
            if check:
                w, v = perm_of_diagram(T), perm_of_diagram(U)
                assert compose(inverse(w), v) == Transposition(a, b).perm(), "label mismatch"
            out.append(MonkProduct(U, a, b, l, lowered, stack, Cell(l, base), r))
    return out


def monk_products(T: TowerDiagram, k: int, *, check: bool = True) -> list[MonkProduct]:
    """The set ``k . T``, sorted by heights."""
    P_cells = _path_cells(T, k)
    out = []
    for pos, c in enumerate(P_cells):
        if _critical(T, P_cells, pos):
            out.extend(candidates_at(T, k, c, check=check))
    out.sort(key=lambda p: p.diagram.heights)
    assert len({p.diagram for p in out}) == len(out)
    return out


def monk_perms(w: Permutation, k: int) -> set[Permutation]:
    return {p.perm for p in monk_products(diagram_of_perm(w), k)}


def monk_oracle(w: Permutation, k: int) -> set[Permutation]:
    """``{w * t_{i,j} : i <= k < j, l(w t_{i,j}) = l(w) + 1}`` by enumeration."""
    if k < 1:
        raise ValueError("k must be positive")
    n = max(w.n, k) + 1
    imgs = list(w.one_line(n))
    target = length(w) + 1
    out = set()
    for i in range(1, k + 1):
        for j in range(k + 1, n + 1):
            imgs[i - 1], imgs[j - 1] = imgs[j - 1], imgs[i - 1]
            v = Permutation(imgs)
            if length(v) == target:
                out.add(v)
            imgs[i - 1], imgs[j - 1] = imgs[j - 1], imgs[i - 1]
    return out
