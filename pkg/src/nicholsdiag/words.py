"""Words over x_1 < ... < x_n: lexicographic order, Lyndon words, factorizations.

A word is a tuple of 0-based letter indices.  Python's tuple ordering is exactly
the lexicographic order with a proper prefix smaller than its extensions.
"""

from __future__ import annotations

from itertools import product
from typing import Iterator

Word = tuple[int, ...]


def compare(u: Word, v: Word) -> int:
    """-1, 0 or 1."""
    return (u > v) - (u < v)


def multidegree(u: Word, n: int) -> tuple[int, ...]:
    deg = [0] * n
    for a in u:
        deg[a] += 1
    return tuple(deg)


def is_lyndon(u: Word) -> bool:
    """u < vw... for every split u = wv with both parts nonempty: u < v + w."""
    if not u:
        raise ValueError("the empty word is not considered")
    return all(u < u[k:] + u[:k] for k in range(1, len(u)))


def is_lyndon_by_suffix(u: Word) -> bool:
    """Equivalent test: u is strictly smaller than each of its proper suffixes."""
    return all(u < u[k:] for k in range(1, len(u)))


def shirshov_decompose(u: Word) -> tuple[Word, Word]:
    """u = v w with v, w Lyndon and v shortest (w the longest proper Lyndon suffix)."""
    if len(u) < 2 or not is_lyndon(u):
        raise ValueError(f"Shirshov decomposition needs a Lyndon word of length >= 2, got {u}")
    for k in range(1, len(u)):
        v, w = u[:k], u[k:]
        if is_lyndon(v) and is_lyndon(w):
            return v, w
    raise AssertionError("unreachable: every Lyndon word has a standard factorization")


def lyndon_factorization(u: Word) -> list[Word]:
    """Unique non-increasing factorization into Lyndon words (Duval)."""
    out = []
    n = len(u)
    i = 0
    while i < n:
        j, k = i + 1, i
        while j < n and u[k] <= u[j]:
            k = i if u[k] < u[j] else k + 1
            j += 1
        while i <= k:
            out.append(u[i:i + j - k])
            i += j - k
    return out


def all_words(n: int, length: int) -> Iterator[Word]:
    return product(range(n), repeat=length)


def lyndon_enum(n: int, D: int) -> list[Word]:
    """All Lyndon words of length <= D over n letters, in lexicographic order."""
    if D < 1:
        raise ValueError("degree cap must be at least 1")
    out = [w for d in range(1, D + 1) for w in all_words(n, d) if is_lyndon(w)]
    return sorted(out)


def words_of_multidegree(mu: tuple[int, ...]) -> list[Word]:
    """All words with letter counts mu, in ascending lexicographic order."""
    out: list[Word] = []
    counts = list(mu)
    total = sum(mu)
    buf: list[int] = []

    def rec():
        if len(buf) == total:
            out.append(tuple(buf))
            return
        for a, c in enumerate(counts):
            if c:
                counts[a] -= 1
                buf.append(a)
                rec()
                buf.pop()
                counts[a] += 1

    rec()
    return out


def lyndon_of_multidegree(mu: tuple[int, ...]) -> list[Word]:
    return [w for w in words_of_multidegree(mu) if is_lyndon(w)]


def format_word(u: Word) -> str:
    return "".join(f"x{a + 1}" for a in u) or "1"
