"""Binary words over {A, B} and exact distinct-subsequence counting.

Words are plain Python strings over the two-letter alphabet. Subsequences
are counted as distinct realized words, the empty one included, and every
count is an arbitrary-precision integer: the totals grow roughly like
phi**n, which overflows 64-bit machine words near length 90.

Two independent counting routes are provided. ``profile`` runs a linear
dynamic program over the four directional counts; ``brute_force_count``
enumerates all 2**len subsets of positions and deduplicates the realized
words. They share no code and are cross-checked against each other in the
test suite.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from math import gcd

import numpy as np

from .errors import BudgetError

A = "A"
B = "B"
ALPHABET = A + B

#: Hard cap on brute-force enumeration; 2**22 subsets keep scratch ~50 MB.
BRUTE_FORCE_MAX_LEN = 22

_WORD_RE = re.compile(r"[AB]*\Z")
_COMPLEMENT = str.maketrans(ALPHABET, "BA")


def check_word(s: str) -> str:
    """Validate that ``s`` is a word over {A, B} and return it unchanged."""
    if not isinstance(s, str) or _WORD_RE.match(s) is None:
        raise ValueError(f"not a word over {{A, B}}: {s!r}")
    return s


def concat(s: str, t: str) -> str:
    """Concatenation of two words."""
    return check_word(s) + check_word(t)


def complement(s: str) -> str:
    """Letterwise A/B swap. An involution; works on letters and whole words."""
    return check_word(s).translate(_COMPLEMENT)


@dataclass(frozen=True, slots=True)
class SubseqProfile:
    """Distinct-subsequence counts of a word, empty subsequence included.

    ``start_a``/``start_b`` count the distinct subsequences starting with A
    resp. B, ``end_a``/``end_b`` those ending with A resp. B. Each of the
    four includes the empty subsequence, so both directions overcount the
    total by exactly one:

        start_a + start_b - 1 == end_a + end_b - 1 == total

    The start counts of any word are coprime; the map word -> (start_a,
    start_b) is a bijection onto coprime pairs of positive integers (see
    :mod:`euclidwords.euclid`).
    """

    start_a: int
    start_b: int
    end_a: int
    end_b: int
    total: int

    def __post_init__(self):
        assert min(self.start_a, self.start_b, self.end_a, self.end_b) >= 1
        assert self.start_a + self.start_b == self.total + 1
        assert self.end_a + self.end_b == self.total + 1
        assert gcd(self.start_a, self.start_b) == 1


def profile(s: str) -> SubseqProfile:
    """Exact distinct-subsequence profile of ``s``.

    Appending A to a word maps its end counts (end_a, end_b) to
    (end_a + end_b, end_b); appending B is symmetric. The start counts obey
    the mirror recurrence under prepending, so a right-to-left scan of the
    same word produces them. Both scans must agree on the total.
    """
    check_word(s)
    ea = eb = 1
    for ch in s:
        if ch == A:
            ea += eb
        else:
            eb += ea
    sa = sb = 1
    for ch in reversed(s):
        if ch == A:
            sa += sb
        else:
            sb += sa
    assert sa + sb == ea + eb
    return SubseqProfile(sa, sb, ea, eb, sa + sb - 1)


def count_subsequences(s: str) -> int:
    """Number of distinct subsequences of ``s``, the empty one included."""
    return profile(s).total


def concat_count(ps: SubseqProfile, pt: SubseqProfile) -> int:
    """Distinct subsequences of a concatenation, from the two profiles alone.

    For words s and t this equals ``count_subsequences(concat(s, t))``:
    a subsequence of s.t splits into a part ending in s and a part starting
    in t, and classifying by the letter at the seam counts every realized
    word once except the empty one, which is counted twice.
    """
    return ps.end_a * pt.start_b + ps.end_b * pt.start_a - 1


def brute_force_count(s: str) -> int:
    """Count distinct subsequences by enumerating all 2**len subsets.

    Each subset mask realizes one candidate word; realized words are encoded
    as length-prefixed bit strings (a 1 sentinel followed by one bit per
    letter) so that deduplication is a set-membership test over integers.
    Independent oracle: shares nothing with the recurrence in ``profile``.
    """
    check_word(s)
    n = len(s)
    if n > BRUTE_FORCE_MAX_LEN:
        raise BudgetError(
            f"brute-force enumeration of 2**{n} subsets exceeds the "
            f"length cap of {BRUTE_FORCE_MAX_LEN}"
        )
    # realized[m] is the encoding of the subsequence picked by subset mask m;
    # processing letter i fills the masks whose top selected position is i.
    realized = np.empty(1 << n, dtype=np.int32)
    realized[0] = 1
    size = 1
    for ch in s:
        np.left_shift(realized[:size], 1, out=realized[size : 2 * size])
        if ch == B:
            realized[size : 2 * size] |= 1
        size *= 2
    seen = np.zeros(1 << (n + 1), dtype=bool)
    seen[realized] = True
    return int(np.count_nonzero(seen))
