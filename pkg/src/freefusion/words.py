"""Binary words: the free monoid on two generators.

A word is a plain Python string over the alphabet {'0', '1'}; '0' is the
fundamental generator, '1' its dual.  The empty string is the unit and is
rendered as "e" in the textual format so that it survives a trip through a
command line.  All functions here are pure and words are immutable, so
everything is trivially thread-safe.
"""

from __future__ import annotations

_FLIP = str.maketrans("01", "10")


def parse_word(text: str) -> str:
    """Parse the textual form: "e" for the unit, otherwise a '0'/'1' string.

    The empty string is rejected as ambiguous; the unit must be spelled "e".
    """
    if text == "e":
        return ""
    if not text:
        raise ValueError('empty word token; the unit is written "e"')
    if set(text) - {"0", "1"}:
        raise ValueError(f"invalid word {text!r}: only '0' and '1' allowed")
    return text


def format_word(w: str) -> str:
    """Canonical textual form; the empty word prints as "e"."""
    return w if w else "e"


def involute(w: str) -> str:
    """Dual of a simple: reverse the word and flip every symbol.

    An involutive anti-automorphism: involute(involute(w)) == w and
    involute(x + y) == involute(y) + involute(x).
    """
    return w[::-1].translate(_FLIP)


def flip(w: str) -> str:
    """Swap 0 <-> 1 pointwise, without reversing."""
    return w.translate(_FLIP)


def degree(w: str) -> int:
    """Count of '0's minus count of '1's.

    This is the image of the simple under the central circle quotient;
    degree 0 characterizes the simples of the projective quotient.
    """
    return 2 * w.count("0") - len(w)


def is_balanced(w: str) -> bool:
    """True iff the word has equally many '0's and '1's."""
    return degree(w) == 0


def zero_runs(w: str) -> tuple[int, int]:
    """(length of the leading run of '0's, longest run of '0's anywhere)."""
    leading = len(w) - len(w.lstrip("0"))
    longest = max((len(r) for r in w.split("1")), default=0)
    return leading, longest


def one_runs(w: str) -> tuple[int, int]:
    """Same as zero_runs but for '1's."""
    return zero_runs(flip(w))


def concat(x: str, y: str) -> str:
    """Free monoid multiplication: juxtaposition."""
    return x + y


def shortlex_key(w: str) -> tuple[int, str]:
    """Sort key for the shortlex order: length first, then lexicographic."""
    return (len(w), w)
