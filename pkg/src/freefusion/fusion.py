"""The fusion semiring of the free unitary quantum group.

An Element is a finite formal sum of simples with positive integer
multiplicities, stored as a dict mapping word -> multiplicity.  The product
of two simples r_x r_y is the sum of r_{ab} over all ways of writing
x = a g and y = involute(g) b; the general product extends this bilinearly.
Python integers are unbounded, so multiplicities can never wrap around.
"""

from __future__ import annotations

from functools import lru_cache

from .words import format_word, involute, parse_word, shortlex_key

Element = dict[str, int]

UNIT: Element = {"": 1}


def valid_cuts(x: str, y: str) -> list[int]:
    """All k such that the length-k suffix g of x has involute(g) equal to
    the length-k prefix of y, in increasing order.  k = 0 is always valid."""
    return [
        k
        for k in range(min(len(x), len(y)) + 1)
        if involute(x[len(x) - k :]) == y[:k]
    ]


@lru_cache(maxsize=None)
def _simple_terms(x: str, y: str) -> tuple[str, ...]:
    return tuple(x[: len(x) - k] + y[k:] for k in valid_cuts(x, y))


def mul_simple(x: str, y: str) -> Element:
    """Product of two simples: one term a + b per valid cut x = a g,
    y = involute(g) b, collected as a multiset."""
    out: Element = {}
    for t in _simple_terms(x, y):
        out[t] = out.get(t, 0) + 1
    return out


def mul(a: Element, b: Element) -> Element:
    """Bilinear extension of mul_simple."""
    out: Element = {}
    for x, mx in a.items():
        for y, my in b.items():
            mxy = mx * my
            for t in _simple_terms(x, y):
                out[t] = out.get(t, 0) + mxy
    return out


def mul_many(factors: list[Element]) -> Element:
    """Left fold of mul over a nonempty list of factors."""
    if not factors:
        raise ValueError("mul_many requires at least one factor")
    acc = factors[0]
    for f in factors[1:]:
        acc = mul(acc, f)
    return acc


def simple(w: str) -> Element:
    """The Element consisting of the single simple w."""
    return {w: 1}


def dual(a: Element) -> Element:
    """Apply the dual involution to every term, keeping multiplicities."""
    return {involute(w): m for w, m in a.items()}


def trivial_multiplicity(a: Element) -> int:
    """Multiplicity of the trivial simple (the empty word)."""
    return a.get("", 0)


def element_to_json(a: Element) -> dict[str, int]:
    """JSON form: word strings to multiplicities, keys in shortlex order."""
    return {format_word(w): a[w] for w in sorted(a, key=shortlex_key)}


def element_from_json(obj: dict[str, int]) -> Element:
    out: Element = {}
    for text, m in obj.items():
        if not isinstance(m, int) or m <= 0:
            raise ValueError(f"multiplicity of {text!r} must be a positive integer")
        out[parse_word(text)] = m
    return out
