"""
Finite permutations of the positive integers in one-line notation, words in
the adjacent transpositions, and the row/column cycles used by Pieri's rule.

Multiplication follows ``(u * v)(x) == u(v(x))``, so right multiplication by a
transposition ``t(i, j)`` swaps positions ``i`` and ``j`` of the one-line
notation, and a word ``a_1 ... a_l`` stands for ``s_{a_1} * ... * s_{a_l}``.

>>> Permutation([2, 1]) * transposition(1, 3)
Permutation(3, 1, 2)
>>> word_to_perm((4, 3, 4, 1, 3))
Permutation(2, 1, 4, 5, 3)
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

__all__ = [
    "Permutation", "Transposition", "Word",
    "identity", "compose", "inverse", "length", "lehmer_code", "perm_from_code",
    "simple", "transposition", "word_to_perm", "reduced_word",
    "row_perm", "col_perm", "all_perms",
    "parse_perm", "format_perm", "parse_word", "format_word",
]

# a word in the adjacent transpositions s_1, s_2, ...
Word = tuple[int, ...]


@dataclass(frozen=True, init=False)
class Permutation:
    """A bijection of the positive integers fixing everything past ``len(images)``.

    The one-line notation is stored with trailing fixed points trimmed, so
    ``Permutation([2, 1, 3]) == Permutation([2, 1])`` and the identity has
    empty ``images``.
    """

    images: tuple[int, ...]

    def __init__(self, images: Iterable[int] = ()):
        imgs = list(images)
        if sorted(imgs) != list(range(1, len(imgs) + 1)):
            raise ValueError(f"not a permutation in one-line notation: {imgs}")
        while imgs and imgs[-1] == len(imgs):
            imgs.pop()
        object.__setattr__(self, "images", tuple(imgs))

    @classmethod
    def _trusted(cls, imgs: list[int]) -> Permutation:
        # skips the bijection check; callers guarantee a valid one-line list
        while imgs and imgs[-1] == len(imgs):
            imgs.pop()
        obj = object.__new__(cls)
        object.__setattr__(obj, "images", tuple(imgs))
        return obj

    @property
    def n(self) -> int:
        """Support bound: the smallest N with w(p) = p for all p > N."""
        return len(self.images)

    def __call__(self, x: int) -> int:
        if x < 1:
            raise ValueError("permutations act on positive integers")
        return self.images[x - 1] if x <= len(self.images) else x

    def __mul__(self, other: Permutation) -> Permutation:
        return compose(self, other)

    def one_line(self, n: int | None = None) -> tuple[int, ...]:
        """One-line notation padded with fixed points up to length ``n``."""
        n = self.n if n is None else max(n, self.n)
        return self.images + tuple(range(self.n + 1, n + 1))

    def inverse(self) -> Permutation:
        return inverse(self)

    def length(self) -> int:
        return length(self)

    def is_identity(self) -> bool:
        return not self.images

    def __iter__(self) -> Iterator[int]:
        return iter(self.images)

    def __len__(self) -> int:
        return len(self.images)

    def __lt__(self, other: Permutation) -> bool:
        return self.images < other.images

    def __repr__(self) -> str:
        return f"Permutation{self.images}" if len(self.images) != 1 else "Permutation(1)"

    def __str__(self) -> str:
        return format_perm(self)


@dataclass(frozen=True, order=True)
class Transposition:
    """The transposition ``t_{i,j}`` exchanging ``i < j``."""

    i: int
    j: int

    def __post_init__(self):
        if not 1 <= self.i < self.j:
            raise ValueError(f"transposition needs 1 <= i < j, got ({self.i}, {self.j})")

    def perm(self) -> Permutation:
        imgs = list(range(1, self.j + 1))
        imgs[self.i - 1], imgs[self.j - 1] = self.j, self.i
        return Permutation._trusted(imgs)


def identity() -> Permutation:
    return Permutation._trusted([])


def simple(i: int) -> Permutation:
    """The adjacent transposition s_i."""
    return Transposition(i, i + 1).perm()


def transposition(i: int, j: int) -> Permutation:
    return Transposition(i, j).perm()


def compose(u: Permutation, v: Permutation) -> Permutation:
    """Return ``u * v``, i.e. ``x -> u(v(x))``."""
    n = max(u.n, v.n)
    return Permutation._trusted([u(v(x)) for x in range(1, n + 1)])


def inverse(w: Permutation) -> Permutation:
    inv = [0] * w.n
    for p, q in enumerate(w.images, start=1):
        inv[q - 1] = p
    return Permutation._trusted(inv)


def length(w: Permutation) -> int:
    """Number of inversions, which is the length of any reduced word."""
    imgs = w.images
    return sum(1 for p, q in itertools.combinations(range(len(imgs)), 2) if imgs[p] > imgs[q])


def lehmer_code(w: Permutation) -> tuple[int, ...]:
    """``c_p = #{q > p : w(q) < w(p)}`` with trailing zeros trimmed."""
    imgs = w.images
    code = [sum(1 for q in imgs[p + 1:] if q < imgs[p]) for p in range(len(imgs))]
    while code and code[-1] == 0:
        code.pop()
    return tuple(code)


def perm_from_code(code: Sequence[int]) -> Permutation:
    """Inverse of :func:`lehmer_code`."""
    n = len(code) + (max(code, default=0))
    available = list(range(1, n + 2))
    imgs = []
    for c in code:
        if c < 0:
            raise ValueError("Lehmer code entries must be non-negative")
        imgs.append(available.pop(c))
    imgs.extend(available)
    return Permutation(imgs)


def word_to_perm(word: Iterable[int]) -> Permutation:
    """The product ``s_{a_1} * ... * s_{a_l}``."""
    imgs: list[int] = []
    for a in word:
        if a < 1:
            raise ValueError(f"word letters must be positive, got {a}")
        if a + 1 > len(imgs):
            imgs.extend(range(len(imgs) + 1, a + 2))
        imgs[a - 1], imgs[a] = imgs[a], imgs[a - 1]
    return Permutation._trusted(imgs)


def reduced_word(w: Permutation) -> Word:
    """A reduced word for ``w``, found by peeling right descents."""
    imgs = list(w.images)
    letters = []
    while True:
        for i in range(len(imgs) - 1):
            if imgs[i] > imgs[i + 1]:
                imgs[i], imgs[i + 1] = imgs[i + 1], imgs[i]
                letters.append(i + 1)
                break
        else:
            break
    return tuple(reversed(letters))


def row_perm(k: int, m: int) -> Permutation:
    """The cycle ``(k+m k+m-1 ... k)``: sends k to k+m and p to p-1 for k < p <= k+m."""
    if k < 1 or m < 0:
        raise ValueError("row_perm needs k >= 1 and m >= 0")
    imgs = list(range(1, k + m + 1))
    imgs[k - 1] = k + m
    for p in range(k + 1, k + m + 1):
        imgs[p - 1] = p - 1
    return Permutation._trusted(imgs)


def col_perm(k: int, m: int) -> Permutation:
    """The cycle ``(k-m+1 k-m+2 ... k k+1)``."""
    if k < 1 or m < 0:
        raise ValueError("col_perm needs k >= 1 and m >= 0")
    if m > k:
        raise ValueError(f"col_perm needs m <= k, got m={m}, k={k}")
    imgs = list(range(1, k + 2))
    for p in range(k - m + 1, k + 1):
        imgs[p - 1] = p + 1
    imgs[k] = k - m + 1
    return Permutation._trusted(imgs)


def all_perms(n: int) -> Iterator[Permutation]:
    """Every element of S_n, in lexicographic order of one-line notation."""
    for imgs in itertools.permutations(range(1, n + 1)):
        yield Permutation._trusted(list(imgs))


def parse_perm(text: str) -> Permutation:
    """Parse ``"1,2,5,6,4"`` (commas and/or spaces, optional brackets)."""
    body = text.strip().strip("[]()")
    if not body:
        return identity()
    try:
        imgs = [int(tok) for tok in body.replace(",", " ").split()]
    except ValueError:
        raise ValueError(f"cannot parse permutation from {text!r}") from None
    return Permutation(imgs)


def format_perm(w: Permutation) -> str:
    return ",".join(map(str, w.images)) if w.images else "1"


def parse_word(text: str) -> Word:
    body = text.strip().strip("[]()")
    if not body:
        return ()
    try:
        letters = tuple(int(tok) for tok in body.replace(",", " ").split())
    except ValueError:
        raise ValueError(f"cannot parse word from {text!r}") from None
    if any(a < 1 for a in letters):
        raise ValueError(f"word letters must be positive: {text!r}")
    return letters


def format_word(word: Sequence[int]) -> str:
    return ",".join(map(str, word))
