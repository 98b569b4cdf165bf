"""Shared test utilities, kept independent of the library's product path."""

from itertools import product as iproduct


def flip_reverse(w: str) -> str:
    """Dual of a word, written without the library's translate table."""
    return "".join("1" if c == "0" else "0" for c in reversed(w))


def brute_force_product(x: str, y: str) -> dict[str, int]:
    """Independent oracle for the product of two simples: enumerate every
    split x = a + g and y = p + b and keep those with dual(g) == p."""
    out: dict[str, int] = {}
    for i in range(len(x) + 1):
        a, g = x[:i], x[i:]
        for j in range(len(y) + 1):
            p, b = y[:j], y[j:]
            if flip_reverse(g) == p:
                t = a + b
                out[t] = out.get(t, 0) + 1
    return out


def words_up_to(n: int) -> list[str]:
    """All binary words of length <= n, shortlex."""
    return ["".join(t) for k in range(n + 1) for t in iproduct("01", repeat=k)]


def balanced_words_up_to(n: int) -> list[str]:
    return [w for w in words_up_to(n) if w.count("0") * 2 == len(w)]
