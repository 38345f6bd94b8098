"""
Pieri's rule by repeated labelled Monk steps.

Each Monk step labels its bottom new cell ``(step, a, b)`` where ``w_new =
w_old * t_{a,b}``.  Keeping only label sequences with ``a`` weakly decreasing
and no two labelled cells in one tower gives one diagram per term of
``S_w * h_m(x1..xk)``; keeping ``b`` weakly decreasing with distinct ``a``
gives the terms of ``S_w * e_m(x1..xk)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Literal

from .monk import MonkProduct, monk_products
from .permcore import Permutation, Transposition, length
from .towerdiag import Cell, TowerDiagram, perm_of_diagram

__all__ = [
    "Label", "LabeledDiagram", "labeled_monk_step", "iterated_monk",
    "is_row_sequence", "is_col_sequence", "pieri_row", "pieri_col", "pieri", "chain_oracle",
]

Mode = Literal["row", "col"]


@dataclass(frozen=True)
class Label:
    step: int
    a: int
    b: int
    cell: Cell


@dataclass(frozen=True)
class LabeledDiagram:
    diagram: TowerDiagram
    labels: tuple[Label, ...] = ()
    k: int | None = None
    # towers raised at each step, in step order
    raised: tuple[int, ...] = field(default=(), compare=False)

    @property
    def perm(self) -> Permutation:
        return perm_of_diagram(self.diagram)

    @property
    def chain(self) -> list[tuple[int, int]]:
        return [(lab.a, lab.b) for lab in self.labels]


def _move_label(cell: Cell, before: TowerDiagram, p: MonkProduct) -> Cell:
    # cells erased from the lowered tower reappear top-to-top on the raised one
    if p.lowered is None or cell.col != p.lowered:
        return cell
    h = before.height(p.lowered)
    if cell.row < h - p.moved:
        return cell
    depth = h - 1 - cell.row
    top = p.diagram.height(p.raised) - 1
    return Cell(p.raised, top - depth)


def _extend(L: LabeledDiagram, p: MonkProduct) -> LabeledDiagram:
    labels = tuple(Label(lab.step, lab.a, lab.b, _move_label(lab.cell, L.diagram, p)) for lab in L.labels)
    labels += (Label(len(L.labels) + 1, p.a, p.b, p.new_cell),)
    return LabeledDiagram(p.diagram, labels, L.k, L.raised + (p.raised,))


def labeled_monk_step(L: LabeledDiagram, k: int) -> list[LabeledDiagram]:
    if L.k is not None and L.k != k:
        raise ValueError(f"labels were produced with k={L.k}, not {k}")
    L = LabeledDiagram(L.diagram, L.labels, k, L.raised)
    return [_extend(L, p) for p in monk_products(L.diagram, k)]


def iterated_monk(T: TowerDiagram, k: int, m: int,
                  keep: Callable[[LabeledDiagram], bool] | None = None) -> list[LabeledDiagram]:
    """All labelled diagrams after ``m`` Monk steps with ``k``.

    ``keep`` prunes after every step; it must be closed under taking prefixes
    of the label sequence for the result to equal filtering at the end.
    """
    if m < 0:
        raise ValueError("m must be non-negative")
    level = [LabeledDiagram(T, (), k)]
    for _ in range(m):
        level = [L2 for L in level for L2 in labeled_monk_step(L, k) if keep is None or keep(L2)]
    return level


def _weakly_decreasing(xs: list[int]) -> bool:
    return all(x >= y for x, y in zip(xs, xs[1:]))


def is_row_sequence(L: LabeledDiagram) -> bool:
    """``a`` weakly decreasing and no tower holds two labelled cells."""
    cols = [lab.cell.col for lab in L.labels]
    return _weakly_decreasing([lab.a for lab in L.labels]) and len(set(cols)) == len(cols)


def is_col_sequence(L: LabeledDiagram) -> bool:
    """``b`` weakly decreasing and all ``a`` distinct."""
    a = [lab.a for lab in L.labels]
    return _weakly_decreasing([lab.b for lab in L.labels]) and len(set(a)) == len(a)


def _sorted(Ls: list[LabeledDiagram]) -> list[LabeledDiagram]:
    Ls = sorted(Ls, key=lambda L: L.diagram.heights)
    assert len({L.diagram for L in Ls}) == len(Ls), "each shape appears only once"
    return Ls


def pieri_row(T: TowerDiagram, k: int, m: int) -> list[LabeledDiagram]:
    """Diagrams of the terms of ``S_{w_T} * S_{r[k,m]}``, pruning after every Monk step."""
    return _sorted(iterated_monk(T, k, m, keep=is_row_sequence))


def pieri_col(T: TowerDiagram, k: int, m: int) -> list[LabeledDiagram]:
    """Diagrams of the terms of ``S_{w_T} * S_{c[k,m]}``."""
    if m > k:
        raise ValueError(f"column Pieri needs m <= k, got m={m}, k={k}")
    return _sorted(iterated_monk(T, k, m, keep=is_col_sequence))


def pieri(T: TowerDiagram, k: int, m: int, mode: Mode) -> list[LabeledDiagram]:
    if mode == "row":
        return pieri_row(T, k, m)
    if mode == "col":
        return pieri_col(T, k, m)
    raise ValueError(f"mode must be 'row' or 'col', got {mode!r}")


def chain_oracle(w: Permutation, k: int, m: int, mode: Mode) -> set[Permutation]:
    """End points of saturated k-Bruhat chains of length ``m`` from ``w`` with
    distinct ``b``'s (``row``) or distinct ``a``'s (``col``), by depth-first search."""
    if mode not in ("row", "col"):
        raise ValueError(f"mode must be 'row' or 'col', got {mode!r}")
    if mode == "col" and m > k:
        raise ValueError(f"column Pieri needs m <= k, got m={m}, k={k}")
    found: set[Permutation] = set()

    def walk(v: Permutation, used: frozenset[int], depth: int) -> None:
        if depth == m:
            found.add(v)
            return
        n = max(v.n, k) + 1
        lv = length(v)
        for i in range(1, k + 1):
            for j in range(k + 1, n + 1):
                tag = j if mode == "row" else i
                if tag in used:
                    continue
                u = v * Transposition(i, j).perm()
                if length(u) == lv + 1:
                    walk(u, used | {tag}, depth + 1)

    walk(w, frozenset(), 0)
    return found
