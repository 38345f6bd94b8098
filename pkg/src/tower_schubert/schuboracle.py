"""
Exact integer polynomials in ``x1, x2, ...`` and Schubert polynomials via
divided differences, used to check Monk and Pieri expansions independently
of any tower diagram.

>>> str(schubert_polynomial(Permutation([1, 3, 2])))
'x1 + x2'
"""

from __future__ import annotations

import itertools
import re
import threading
from typing import Iterable, Mapping

from .permcore import Permutation, col_perm, row_perm, simple

__all__ = [
    "Polynomial", "poly_mul", "divided_difference", "schubert_polynomial",
    "complete_homogeneous", "elementary", "verify_monk", "verify_pieri", "parse_polynomial",
]

Monomial = tuple[int, ...]


def _trim(exps: Iterable[int]) -> Monomial:
    e = list(exps)
    while e and e[-1] == 0:
        e.pop()
    return tuple(e)


class Polynomial:
    """Sparse polynomial: trimmed exponent vectors mapped to nonzero integers."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Monomial, int] | None = None):
        clean: dict[Monomial, int] = {}
        for mono, coeff in (terms or {}).items():
            if coeff:
                key = _trim(mono)
                clean[key] = clean.get(key, 0) + coeff
                if not clean[key]:
                    del clean[key]
        self.terms = clean

    @classmethod
    def _raw(cls, terms: dict[Monomial, int]) -> Polynomial:
        p = object.__new__(cls)
        p.terms = terms
        return p

    @classmethod
    def constant(cls, c: int) -> Polynomial:
        return cls._raw({(): c} if c else {})

    @classmethod
    def var(cls, i: int) -> Polynomial:
        if i < 1:
            raise ValueError("variables are x1, x2, ...")
        return cls._raw({(0,) * (i - 1) + (1,): 1})

    @classmethod
    def monomial(cls, exps: Iterable[int], coeff: int = 1) -> Polynomial:
        return cls({tuple(exps): coeff})

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = Polynomial.constant(other)
        return isinstance(other, Polynomial) and self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __add__(self, other: Polynomial | int) -> Polynomial:
        if isinstance(other, int):
            other = Polynomial.constant(other)
        out = dict(self.terms)
        for mono, coeff in other.terms.items():
            c = out.get(mono, 0) + coeff
            if c:
                out[mono] = c
            else:
                out.pop(mono, None)
        return Polynomial._raw(out)

    __radd__ = __add__

    def __neg__(self) -> Polynomial:
        return Polynomial._raw({m: -c for m, c in self.terms.items()})

    def __sub__(self, other: Polynomial | int) -> Polynomial:
        return self + (-other)

    def __rsub__(self, other: int) -> Polynomial:
        return (-self) + other

    def __mul__(self, other: Polynomial | int) -> Polynomial:
        if isinstance(other, int):
            return Polynomial._raw({m: c * other for m, c in self.terms.items()} if other else {})
        return poly_mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> Polynomial:
        out = Polynomial.constant(1)
        for _ in range(e):
            out = out * self
        return out

    @property
    def nvars(self) -> int:
        return max((len(m) for m in self.terms), default=0)

    def degree(self) -> int:
        return max((sum(m) for m in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(m) for m in self.terms}) <= 1

    def swap(self, i: int) -> Polynomial:
        """Exchange ``x_i`` and ``x_{i+1}``."""
        out: dict[Monomial, int] = {}
        for mono, coeff in self.terms.items():
            e = list(mono) + [0] * max(0, i + 1 - len(mono))
            e[i - 1], e[i] = e[i], e[i - 1]
            key = _trim(e)
            out[key] = out.get(key, 0) + coeff
        return Polynomial(out)

    def sorted_terms(self) -> list[tuple[Monomial, int]]:
        """Graded lexicographic order, largest first."""
        n = self.nvars
        return sorted(self.terms.items(),
                      key=lambda mc: (sum(mc[0]), mc[0] + (0,) * (n - len(mc[0]))), reverse=True)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for mono, coeff in self.sorted_terms():
            factors = [f"x{v}" + (f"^{e}" if e > 1 else "") for v, e in enumerate(mono, start=1) if e]
            mag = abs(coeff)
            body = "*".join(([str(mag)] if mag != 1 or not factors else []) + factors)
            parts.append(("- " if coeff < 0 else "+ ") + body)
        text = " ".join(parts)
        return text[2:] if text.startswith("+ ") else "-" + text[2:]

    def __repr__(self) -> str:
        return f"Polynomial({str(self)!r})"


_TERM = re.compile(r"^(\d+)?\*?((?:x\d+(?:\^\d+)?\*?)*)$")


def parse_polynomial(text: str) -> Polynomial:
    """Parse the text form produced by ``str(Polynomial)``, e.g. ``"x1^2*x2 + 3*x1*x3"``."""
    s = text.replace(" ", "")
    if not s:
        raise ValueError("empty polynomial")
    if s[0] not in "+-":
        s = "+" + s
    out = Polynomial()
    for sign, body in re.findall(r"([+-])([^+-]+)", s):
        m = _TERM.match(body)
        if not m or not body:
            raise ValueError(f"cannot parse term {body!r} in {text!r}")
        coeff = int(m.group(1) or 1)
        exps: dict[int, int] = {}
        for v, e in re.findall(r"x(\d+)(?:\^(\d+))?", m.group(2)):
            exps[int(v)] = exps.get(int(v), 0) + int(e or 1)
        if any(v < 1 for v in exps):
            raise ValueError(f"variables are x1, x2, ...: {text!r}")
        mono = [0] * max(exps, default=0)
        for v, e in exps.items():
            mono[v - 1] = e
        out = out + Polynomial.monomial(mono, -coeff if sign == "-" else coeff)
    if "".join(sign + body for sign, body in re.findall(r"([+-])([^+-]+)", s)) != s:
        raise ValueError(f"cannot parse polynomial {text!r}")
    return out


def poly_mul(f: Polynomial, g: Polynomial) -> Polynomial:
    out: dict[Monomial, int] = {}
    for m1, c1 in f.terms.items():
        for m2, c2 in g.terms.items():
            key = tuple(a + b for a, b in itertools.zip_longest(m1, m2, fillvalue=0))
            out[key] = out.get(key, 0) + c1 * c2
    return Polynomial._raw({m: c for m, c in out.items() if c})


def divided_difference(f: Polynomial, i: int) -> Polynomial:
    """``(f - s_i f) / (x_i - x_{i+1})``, computed monomial by monomial.

    For ``a > b``, ``(x^a y^b - x^b y^a)/(x - y) = x^b y^b (x^{a-b-1} + ... + y^{a-b-1})``
    and the case ``a < b`` is its negative, so the quotient is always exact.
    """
    if i < 1:
        raise ValueError("divided differences are indexed from 1")
    out: dict[Monomial, int] = {}
    for mono, coeff in f.terms.items():
        e = list(mono) + [0] * max(0, i + 1 - len(mono))
        a, b = e[i - 1], e[i]
        if a == b:
            continue
        sign = 1 if a > b else -1
        lo, gap = min(a, b), abs(a - b)
        for p in range(gap):
            e[i - 1], e[i] = lo + gap - 1 - p, lo + p
            key = _trim(e)
            out[key] = out.get(key, 0) + sign * coeff
    return Polynomial(out)


_cache: dict[tuple[tuple[int, ...], int], Polynomial] = {}
_cache_lock = threading.Lock()


def schubert_polynomial(w: Permutation, N: int | None = None) -> Polynomial:
    """Schubert polynomial of ``w`` computed inside ``S_N`` (default: ``N = w.n``).

    Starts from ``x1^{N-1} x2^{N-2} ... x_{N-1}`` for the longest element and
    applies ``S_w = d_i S_{w s_i}`` at the first ascent ``i`` of ``w``.
    """
    N = max(w.n, 1) if N is None else N
    if w.n > N:
        raise ValueError(f"{w} does not lie in S_{N}")
    key = (w.images, N)
    hit = _cache.get(key)
    if hit is not None:
        return hit
    imgs = list(w.one_line(N))
    for i in range(1, N):
        if imgs[i - 1] < imgs[i]:
            imgs[i - 1], imgs[i] = imgs[i], imgs[i - 1]
            poly = divided_difference(schubert_polynomial(Permutation(imgs), N), i)
            break
    else:
        poly = Polynomial.monomial(range(N - 1, -1, -1))
    with _cache_lock:
        _cache.setdefault(key, poly)
    return poly


def complete_homogeneous(m: int, k: int) -> Polynomial:
    """``h_m(x1, ..., xk)``: every monomial of degree ``m`` in ``k`` variables."""
    out = Polynomial()
    for combo in itertools.combinations_with_replacement(range(k), m):
        e = [0] * k
        for v in combo:
            e[v] += 1
        out = out + Polynomial.monomial(e)
    return out


def elementary(m: int, k: int) -> Polynomial:
    """``e_m(x1, ..., xk)``: squarefree monomials of degree ``m``."""
    out = Polynomial()
    for combo in itertools.combinations(range(k), m):
        e = [0] * k
        for v in combo:
            e[v] = 1
        out = out + Polynomial.monomial(e)
    return out


def _expansion(claimed: Iterable[Permutation]) -> Polynomial:
    total = Polynomial()
    for v in claimed:
        total = total + schubert_polynomial(v)
    return total


def verify_monk(w: Permutation, k: int, claimed: Iterable[Permutation]) -> bool:
    """Whether ``S_w * S_{s_k}`` equals the sum of ``S_v`` over ``claimed``."""
    return schubert_polynomial(w) * schubert_polynomial(simple(k)) == _expansion(claimed)


def verify_pieri(w: Permutation, k: int, m: int, mode: str, claimed: Iterable[Permutation]) -> bool:
    """Whether ``S_w * h_m(x1..xk)`` (``mode='row'``) or ``S_w * e_m(x1..xk)`` (``'col'``)
    equals the sum of ``S_v`` over ``claimed``."""
    mode = mode.lower()
    if mode == "row":
        factor = schubert_polynomial(row_perm(k, m))
        assert factor == complete_homogeneous(m, k)
    elif mode == "col":
        factor = schubert_polynomial(col_perm(k, m))
        assert factor == elementary(m, k)
    else:
        raise ValueError(f"mode must be 'row' or 'col', got {mode!r}")
    return schubert_polynomial(w) * factor == _expansion(claimed)
