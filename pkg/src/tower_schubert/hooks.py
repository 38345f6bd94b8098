"""
Sliding transpositions.  The diagram of ``t_{i,j+1}`` is the hook
``h(i, j)`` with its heel on slide ``i`` and foot and leg on slides
``i+1..j``; it crosses each tower in one of five ways, which determines how
``w * t`` differs from ``w`` as a tower diagram.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from .permcore import Permutation, Transposition, Word
from .towerdiag import (
    Cell, SlideOutcome, TowerDiagram, _slide_into, _support, diagram_of_perm, flight_number, gfn, tower_index,
)

__all__ = [
    "Hook", "PassKind", "PassStep", "PassTrace", "Case1", "Case2", "ModifiedTowers",
    "hook_word", "slide_hook", "length_change_case", "modified_towers", "format_trace",
]


@dataclass(frozen=True)
class Hook:
    """``h(i, j)``, the tower diagram of the transposition ``t_{i,j+1}``."""

    i: int
    j: int

    def __post_init__(self):
        if not 1 <= self.i <= self.j:
            raise ValueError(f"hook needs 1 <= i <= j, got h[{self.i},{self.j}]")

    @classmethod
    def of(cls, t: Transposition) -> Hook:
        return cls(t.i, t.j - 1)

    @property
    def transposition(self) -> Transposition:
        return Transposition(self.i, self.j + 1)

    def __str__(self) -> str:
        return f"h[{self.i},{self.j}]"


class PassKind(enum.Enum):
    DIRECT = "direct"
    BROKEN_PLUS = "broken+"
    SHRUNKEN = "shrunken"
    BROKEN_MINUS = "broken-"
    ZIGZAG = "zigzag"


@dataclass(frozen=True)
class PassStep:
    tower: int
    kind: PassKind
    hook: Hook | None        # hook carried on to the next tower; None once it breaks


@dataclass(frozen=True)
class PassTrace:
    steps: tuple[PassStep, ...]
    # after a broken pass the rest of the hook travels as single cells
    tail: tuple[tuple[int, SlideOutcome], ...] = field(default=())

    @property
    def kinds(self) -> list[PassKind]:
        return [s.kind for s in self.steps]


def hook_word(h: Hook) -> Word:
    """``s_j ... s_{i+1} s_i s_{i+1} ... s_j``."""
    return tuple(range(h.j, h.i, -1)) + tuple(range(h.i, h.j + 1))


def slide_hook(T: TowerDiagram, h: Hook) -> tuple[TowerDiagram, PassTrace]:
    """Slide the hook ``h`` into ``T`` tower by tower.

    The result agrees with ``slide_word(T, hook_word(h))``.  Empty towers are
    only recorded in the trace when the heel lands on them.
    """
    hs = list(T.heights)
    i, j = h.i, h.j
    col = 1
    steps: list[PassStep] = []
    tail: list[tuple[int, SlideOutcome]] = []
    while True:
        height = hs[col - 1] if col <= len(hs) else 0
        top = col + height - 1
        if top + 1 < i:
            if height:
                steps.append(PassStep(col, PassKind.DIRECT, Hook(i, j)))
        elif top + 1 == i:
            # heel and leg land here, the foot travels on
            if col > len(hs):
                hs.extend([0] * (col - len(hs)))
            hs[col - 1] += j - i + 1
            steps.append(PassStep(col, PassKind.BROKEN_PLUS, None))
            for s in range(j, i, -1):
                tail.append((s, _slide_into(hs, s, col + 1)))
            break
        elif top < j:
            i += 1
            steps.append(PassStep(col, PassKind.SHRUNKEN, Hook(i, j)))
        elif top == j:
            # foot and heel erase the top j-i+1 cells, the leg travels on
            hs[col - 1] -= j - i + 1
            steps.append(PassStep(col, PassKind.BROKEN_MINUS, None))
            for s in range(i + 1, j + 1):
                tail.append((s, _slide_into(hs, s, col + 1)))
            break
        else:
            i, j = i + 1, j + 1
            steps.append(PassStep(col, PassKind.ZIGZAG, Hook(i, j)))
        col += 1
    return TowerDiagram(hs), PassTrace(tuple(steps), tuple(tail))


def format_trace(trace: PassTrace) -> str:
    lines = [f"tower={s.tower} pass={s.kind.value}" + (f" hook={s.hook}" if s.hook else "")
             for s in trace.steps]
    lines += [f"tower={o.cell.col} letter={s} {o.kind}" for s, o in trace.tail]
    return "\n".join(lines)


@dataclass(frozen=True)
class Case1:
    """The hook shrinks to one cell and fills the empty cell on top of ``tower``."""

    tower: int
    cell: Cell
    gfn: tuple[int, int]


@dataclass(frozen=True)
class Case2:
    """``moved + 1`` cells land on ``tower`` and the top ``moved`` cells of ``partner`` are erased."""

    tower: int
    partner: int
    moved: int


def _classify(T: TowerDiagram, h: Hook, result: TowerDiagram, trace: PassTrace) -> Case1 | Case2 | None:
    last = trace.steps[-1]
    if last.kind is not PassKind.BROKEN_PLUS:
        return None
    l = last.tower
    if not trace.tail:
        cell = Cell(l, T.height(l))
        return Case1(l, cell, gfn(T, cell))
    if any(o.kind != "deleted" for _, o in trace.tail):
        return None
    partners = {o.cell.col for _, o in trace.tail}
    assert len(partners) == 1, "erased cells must come from a single tower"
    (s,) = partners
    assert s > l
    return Case2(l, s, len(trace.tail))


def length_change_case(w: Permutation, t: Transposition) -> Case1 | Case2 | None:
    """How ``w * t`` arises from ``w`` when its length goes up by one; ``None`` otherwise."""
    T = diagram_of_perm(w)
    h = Hook.of(t)
    result, trace = slide_hook(T, h)
    return _classify(T, h, result, trace)


@dataclass(frozen=True)
class ModifiedTowers:
    raised: int
    partner: int
    new_cell: Cell
    diagram: TowerDiagram


def modified_towers(T: TowerDiagram, t: Transposition) -> ModifiedTowers:
    """Towers changed when passing from ``w_T`` to ``w_T * t``, which must be a cover."""
    h = Hook.of(t)
    result, trace = slide_hook(T, h)
    case = _classify(T, h, result, trace)
    if case is None:
        raise ValueError(f"l(w * t_{{{t.i},{t.j}}}) != l(w) + 1 for the diagram {T}")
    hi = max(_support(T), t.j)
    index = {tower_index(T, col): col for col in range(1, hi + 1)}
    raised, partner = index[t.i], index[t.j]
    assert raised == case.tower and raised < partner
    new_cell = Cell(raised, T.height(raised))
    assert flight_number(result, new_cell) == t.i
    return ModifiedTowers(raised, partner, new_cell, result)
