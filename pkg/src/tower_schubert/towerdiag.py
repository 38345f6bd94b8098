"""
Tower diagrams, the generalized sliding algorithm and the flight algorithm.

A tower diagram is a finitely supported sequence of heights; tower ``i``
occupies the strip over ``[i-1, i]``.  Cells are addressed ``(col, row)`` with
``col >= 1`` and ``row = 0`` on the ground, and the slide of a cell is
``col + row``.  A number ``s`` slid into a diagram travels along its slide,
tower by tower, and either lands on a tower, deletes a tower's top cell or
zigzags one level up.

>>> slide_word(TowerDiagram(), (4, 3, 4, 1, 3))
TowerDiagram(1, 0, 2)
>>> perm_of_diagram(TowerDiagram([0, 3, 3, 1, 1, 0, 1]))
Permutation(1, 6, 4, 5, 8, 2, 3, 7)
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Literal, NamedTuple, Sequence

from .permcore import Permutation, Word, reduced_word

__all__ = [
    "Cell", "TowerDiagram", "SlideOutcome",
    "slide_number", "slide_word", "slide_word_trace", "diagram_of_perm", "slide_diagram",
    "diagram_reading_word", "restrict", "splice",
    "flight_path", "flight_number", "gfn", "corner_cells", "canonical_word",
    "perm_of_diagram", "omega_index", "tower_index",
    "parse_diagram", "format_diagram",
]


class Cell(NamedTuple):
    col: int
    row: int

    @property
    def slide(self) -> int:
        return self.col + self.row


@dataclass(frozen=True, init=False)
class TowerDiagram:
    """Tower heights with trailing zeros trimmed; the empty diagram has no towers."""

    heights: tuple[int, ...]

    def __init__(self, heights: Iterable[int] = ()):
        hs = list(heights)
        if any(h < 0 for h in hs):
            raise ValueError(f"tower heights must be non-negative: {hs}")
        while hs and hs[-1] == 0:
            hs.pop()
        object.__setattr__(self, "heights", tuple(hs))

    def height(self, col: int) -> int:
        return self.heights[col - 1] if 1 <= col <= len(self.heights) else 0

    def __contains__(self, cell: Cell) -> bool:
        col, row = cell
        return col >= 1 and 0 <= row < self.height(col)

    @property
    def size(self) -> int:
        return sum(self.heights)

    def __len__(self) -> int:
        return len(self.heights)

    def cells(self) -> Iterator[Cell]:
        for col, h in enumerate(self.heights, start=1):
            for row in range(h):
                yield Cell(col, row)

    def top_cells(self) -> list[Cell]:
        return [Cell(col, h - 1) for col, h in enumerate(self.heights, start=1) if h]

    def with_height(self, col: int, h: int) -> TowerDiagram:
        hs = list(self.heights) + [0] * max(0, col - len(self.heights))
        hs[col - 1] = h
        return TowerDiagram(hs)

    def remove(self, cell: Cell) -> TowerDiagram:
        """Erase a top cell."""
        if self.height(cell.col) != cell.row + 1:
            raise ValueError(f"{cell} is not a top cell of {self}")
        return self.with_height(cell.col, cell.row)

    def __lt__(self, other: TowerDiagram) -> bool:
        return self.heights < other.heights

    def __repr__(self) -> str:
        return f"TowerDiagram{self.heights}" if len(self.heights) != 1 else f"TowerDiagram({self.heights[0]})"

    def __str__(self) -> str:
        return format_diagram(self)


@dataclass(frozen=True)
class SlideOutcome:
    kind: Literal["added", "deleted"]
    cell: Cell


def _slide_into(heights: list[int], s: int, start: int = 1) -> SlideOutcome:
    """Slide a cell currently on slide ``s`` into ``heights`` from tower ``start`` on.

    ``heights`` is modified in place and may grow.
    """
    col = start
    while True:
        h = heights[col - 1] if col <= len(heights) else 0
        if s > col + h:
            pass                                   # direct pass
        elif s == col + h:
            if col > len(heights):
                heights.extend([0] * (col - len(heights)))
            heights[col - 1] += 1
            return SlideOutcome("added", Cell(col, h))
        elif s == col + h - 1:
            heights[col - 1] -= 1
            return SlideOutcome("deleted", Cell(col, h - 1))
        else:
            s += 1                                 # zigzag pass
        col += 1


def slide_number(T: TowerDiagram, i: int) -> tuple[TowerDiagram, SlideOutcome]:
    """Slide the number ``i`` into ``T``."""
    if i < 1:
        raise ValueError("only positive numbers can be slid")
    hs = list(T.heights)
    outcome = _slide_into(hs, i)
    return TowerDiagram(hs), outcome


def slide_word_trace(T: TowerDiagram, word: Iterable[int]) -> list[tuple[TowerDiagram, SlideOutcome]]:
    """Diagrams and outcomes after each letter of ``word`` is slid in turn."""
    hs = list(T.heights)
    trace = []
    for a in word:
        if a < 1:
            raise ValueError("only positive numbers can be slid")
        outcome = _slide_into(hs, a)
        trace.append((TowerDiagram(hs), outcome))
    return trace


def slide_word(T: TowerDiagram, word: Iterable[int]) -> TowerDiagram:
    hs = list(T.heights)
    for a in word:
        if a < 1:
            raise ValueError("only positive numbers can be slid")
        _slide_into(hs, a)
    return TowerDiagram(hs)


def diagram_of_perm(w: Permutation) -> TowerDiagram:
    hs: list[int] = []
    for a in reduced_word(w):
        outcome = _slide_into(hs, a)
        assert outcome.kind == "added", "a reduced word never deletes"
    return TowerDiagram(hs)


def diagram_reading_word(U: TowerDiagram) -> Word:
    """Slides of the cells of ``U``: columns right to left, each bottom to top."""
    return tuple(col + row for col in range(len(U), 0, -1) for row in range(U.height(col)))


def slide_diagram(T: TowerDiagram, U: TowerDiagram) -> TowerDiagram:
    """Slide the cells of ``U`` into ``T``; the result is the diagram of ``w_T * w_U``."""
    return slide_word(T, diagram_reading_word(U))


def restrict(T: TowerDiagram, lo: int, hi: int | None = None) -> TowerDiagram:
    """Keep towers ``lo..hi`` (``hi=None`` means unbounded) and zero the rest."""
    if hi is not None and lo > hi:
        raise ValueError("restrict needs lo <= hi")
    return TowerDiagram(h if lo <= col and (hi is None or col <= hi) else 0
                        for col, h in enumerate(T.heights, start=1))


def splice(T: TowerDiagram, U: TowerDiagram) -> TowerDiagram:
    """``T ⊔ U``: towers of ``T`` followed by those of ``U``; their supports must not overlap."""
    lo = min((c for c, h in enumerate(U.heights, start=1) if h), default=len(T) + 1)
    if len(T) >= lo:
        raise ValueError("splice needs T to end before U starts")
    return TowerDiagram(list(T.heights) + [0] * (lo - 1 - len(T)) + list(U.heights[lo - 1:]))


def flight_path(T: TowerDiagram, c: Cell) -> list[Cell]:
    """Cells of the flight path of ``c``, from column 1 to ``c``."""
    col, row = c
    if col < 1 or row < 0:
        raise ValueError(f"flight paths start from a cell in the first quadrant, got {c}")
    path = [Cell(col, row)]
    while col > 1:
        col -= 1
        if row >= T.height(col):
            row += 1
        path.append(Cell(col, row))
    path.reverse()
    return path


def flight_number(T: TowerDiagram, c: Cell) -> int:
    col, row = c
    while col > 1:
        col -= 1
        if row >= T.height(col):
            row += 1
    return 1 + row


def gfn(T: TowerDiagram, c: Cell) -> tuple[int, int]:
    """Generalized flight number ``(flight, hook)`` of a top cell or an empty cell above a tower."""
    if c.row < T.height(c.col) - 1:
        raise ValueError(f"{c} lies strictly inside tower {c.col} of {T}")
    path = flight_path(T, c)
    n = 0
    for cell in reversed(path[:-1]):
        h = T.height(cell.col)
        if cell.row < h and h - cell.row - 1 <= n:
            n += 1
    first = path[0]
    return first.slide, n + first.slide


def tower_index(T: TowerDiagram, col: int) -> int:
    """The omega-index of tower ``col``: flight number of the empty cell on top of it."""
    return flight_number(T, Cell(col, T.height(col)))


def corner_cells(T: TowerDiagram) -> list[Cell]:
    out = []
    for c in T.top_cells():
        f, h = gfn(T, c)
        if f == h:
            out.append(c)
    return out


def canonical_word(T: TowerDiagram) -> Word:
    """A reduced word of ``w_T`` read off by erasing corner cells.

    Each erased corner contributes its flight number as the last letter of
    what remains to be read; among several corners the rightmost is erased
    first.
    """
    letters = []
    while T.size:
        c = corner_cells(T)[-1]
        letters.append(flight_number(T, c))
        T = T.remove(c)
    return tuple(reversed(letters))


def _support(T: TowerDiagram) -> int:
    return max((c.slide for c in T.top_cells()), default=0) + 1


def omega_index(T: TowerDiagram) -> tuple[int, ...]:
    """The sequence ``(f_1, ..., f_n)`` of flight numbers of the empty cells atop each tower."""
    return tuple(tower_index(T, col) for col in range(1, _support(T) + 1))


def perm_of_diagram(T: TowerDiagram) -> Permutation:
    index = omega_index(T)
    imgs = [0] * len(index)
    for col, f in enumerate(index, start=1):
        imgs[f - 1] = col
    return Permutation(imgs)


def parse_diagram(text: str) -> TowerDiagram:
    """Parse ``"[1,0,2]"`` (brackets optional)."""
    body = text.strip().strip("[]()")
    if not body:
        return TowerDiagram()
    try:
        return TowerDiagram(int(tok) for tok in body.replace(",", " ").split())
    except ValueError:
        raise ValueError(f"cannot parse tower diagram from {text!r}") from None


def format_diagram(T: TowerDiagram | Sequence[int]) -> str:
    hs = T.heights if isinstance(T, TowerDiagram) else T
    return "[" + ",".join(map(str, hs)) + "]"
