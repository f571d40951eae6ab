"""Alternating words, their Fibonacci subsequence counts, and extension maxima.

The alternating word ABAB... of length n has F(n+3) - 1 distinct
subsequences, the maximum over all length-n binary words (shared only with
its letterwise complement BABA...). Appending n letters to a fixed word
ending in B, the alternating extension ABAB... is the unique way to
maximize the subsequence count of the result. Both facts are exercised
here by explicit brute force, never assumed.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import BudgetError
from .euclid import fibonacci
from .words import A, B, check_word, count_subsequences

#: Hard cap for the 2**n enumerations below.
EXTENSION_MAX_LEN = 20
MEAN_MAX_LEN = 20


def alternating_word(n: int) -> str:
    """ABAB... of length n (empty for n = 0)."""
    if n < 0:
        raise ValueError(f"length must be >= 0, got {n}")
    return ("AB" * ((n + 1) // 2))[:n]


def alternating_count(n: int) -> int:
    """Distinct subsequences of the alternating word of length n.

    Closed form F(n+3) - 1; rechecked against the counting DP for small n.
    """
    c = fibonacci(n + 3) - 1
    assert n > 30 or c == count_subsequences(alternating_word(n))
    return c


def min_length_lower_bound(n: int) -> int:
    """Smallest m with F(m+3) - 1 >= n.

    Every binary word with n distinct subsequences has length >= m, since
    the per-length maximum count is F(length+3) - 1.
    """
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    m = 0
    x, y = 1, 2  # F(3), F(4)
    while y - 1 < n:
        x, y = y, x + y
        m += 1
    return m


@dataclass(frozen=True, slots=True)
class ExtensionReport:
    """Outcome of maximizing the subsequence count over all n-letter extensions."""

    base: str
    n: int
    best_t: str
    best_count: int
    unique: bool


def best_extension(base: str, n: int) -> ExtensionReport:
    """Exhaustively maximize count(base + t) over all 2**n words t.

    The base must be empty or end with B; for an A-ending base apply the
    letter-complement symmetry and reflect the answer. Ties go to the
    lexicographically smallest t, and ``unique`` reports whether exactly
    one extension attains the maximum. This is a brute-force harness by
    design; it never assumes anything about where the maximum lies.
    """
    check_word(base)
    if n < 0:
        raise ValueError(f"extension length must be >= 0, got {n}")
    if base and base[-1] == A:
        raise ValueError(
            "base ends with A; complement the base (swap A and B), extend, "
            "and complement the answer back"
        )
    if n > EXTENSION_MAX_LEN:
        raise BudgetError(f"2**{n} extensions exceed the cap of 2**{EXTENSION_MAX_LEN}")

    ea = eb = 1
    for ch in base:
        if ch == A:
            ea += eb
        else:
            eb += ea

    best = -1
    best_t = ""
    ties = 0
    path: list[str] = []

    def visit(ea: int, eb: int, depth: int) -> None:
        nonlocal best, best_t, ties
        if depth == n:
            total = ea + eb - 1
            if total > best:
                best = total
                best_t = "".join(path)
                ties = 1
            elif total == best:
                ties += 1
            return
        path.append(A)
        visit(ea + eb, eb, depth + 1)
        path.pop()
        path.append(B)
        visit(ea, ea + eb, depth + 1)
        path.pop()

    visit(ea, eb, 0)
    return ExtensionReport(base=base, n=n, best_t=best_t, best_count=best, unique=ties == 1)


def mean_subseq_exact(n: int) -> Fraction:
    """Exact average subsequence count over all 2**n words of length n.

    Computed by summing the counting DP over the full binary tree of words,
    as an exact rational. Equals 2*(3/2)**n - 1.
    """
    if n < 0:
        raise ValueError(f"length must be >= 0, got {n}")
    if n > MEAN_MAX_LEN:
        raise BudgetError(f"summing over 2**{n} words exceeds the cap of 2**{MEAN_MAX_LEN}")

    def subtree_sum(ea: int, eb: int, depth: int) -> int:
        if depth == n:
            return ea + eb - 1
        return subtree_sum(ea + eb, eb, depth + 1) + subtree_sum(ea, ea + eb, depth + 1)

    return Fraction(subtree_sum(1, 1, 0), 1 << n)
