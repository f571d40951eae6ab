"""Euclidean word construction, coprime pairs, and continued fractions.

A coprime pair (a, b) of positive integers maps to the binary word that
traces the subtractive Euclidean algorithm on it: emit A and replace a by
a - b while a > b, emit B and replace b by b - a while b > a, stop at
(1, 1). The resulting word has exactly a + b - 1 distinct subsequences,
and the map is a bijection onto all binary words whose inverse reads off
the start counts of the subsequence profile.

The run lengths of the word coincide with the continued fraction of a/b
except that the final partial quotient is one larger than the final run,
which makes words, coprime pairs and canonical continued fractions three
views of the same object.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import groupby
from math import gcd
from typing import Iterable, Iterator

from .errors import InvalidPairError
from .words import A, B, check_word, complement, profile

__all__ = [
    "CoprimePair",
    "RunLengthWord",
    "ContinuedFraction",
    "euclid_word",
    "word_to_pair",
    "cf_of_rational",
    "word_to_cf",
    "cf_to_word",
    "partial_quotient_sum",
    "euler_phi",
    "fibonacci",
]


@dataclass(frozen=True, slots=True)
class CoprimePair:
    """A pair of coprime positive integers; unpacks like a 2-tuple."""

    a: int
    b: int

    def __post_init__(self):
        if self.a < 1 or self.b < 1 or gcd(self.a, self.b) != 1:
            raise InvalidPairError(
                f"expected coprime positive integers, got ({self.a}, {self.b})"
            )

    def __iter__(self) -> Iterator[int]:
        yield self.a
        yield self.b


@dataclass(frozen=True, slots=True)
class RunLengthWord:
    """A binary word as its first letter plus the lengths of its runs.

    Adjacent runs alternate letters by construction, so the first letter
    and the run lengths determine the word. The empty word has
    ``first is None`` and no runs. Round-tripping through ``from_word`` and
    ``expand`` is the identity.
    """

    first: str | None
    runs: tuple[int, ...]

    def __post_init__(self):
        if self.first is None:
            if self.runs:
                raise ValueError("runs present but no first letter")
        elif self.first not in (A, B):
            raise ValueError(f"first letter must be A or B, got {self.first!r}")
        elif not self.runs:
            raise ValueError("first letter present but no runs")
        if any(r < 1 for r in self.runs):
            raise ValueError(f"run lengths must be positive: {self.runs}")

    @classmethod
    def from_word(cls, s: str) -> "RunLengthWord":
        check_word(s)
        if not s:
            return cls(None, ())
        return cls(s[0], tuple(sum(1 for _ in g) for _, g in groupby(s)))

    @property
    def length(self) -> int:
        return sum(self.runs)

    def expand(self) -> str:
        letter = self.first
        parts = []
        for r in self.runs:
            parts.append(letter * r)
            letter = complement(letter)
        return "".join(parts)


@dataclass(frozen=True, slots=True)
class ContinuedFraction:
    """Canonical continued fraction [c0; c1, ..., ck] of a positive rational.

    Canonical means c0 >= 0, every later quotient >= 1, and the final
    quotient >= 2 unless the expansion is the single term [c0] (which then
    must be >= 1). Every positive rational has exactly one such expansion.
    The expansion of the rational 1 is [1]; that choice makes the word/CF
    duality degenerate consistently on the empty word.
    """

    quotients: tuple[int, ...]

    def __post_init__(self):
        q = self.quotients
        if not q:
            raise ValueError("a continued fraction needs at least one quotient")
        if len(q) == 1:
            if q[0] < 1:
                raise ValueError(f"single-term CF must be a positive integer: {q}")
            return
        if q[0] < 0 or any(c < 1 for c in q[1:]) or q[-1] < 2:
            raise ValueError(f"not a canonical continued fraction: {q}")

    def value(self) -> Fraction:
        """The positive rational this expansion represents."""
        num, den = self.quotients[-1], 1
        for c in reversed(self.quotients[:-1]):
            num, den = c * num + den, num
        return Fraction(num, den)


def euclid_word(a: int, b: int) -> RunLengthWord:
    """Word tracing the subtractive Euclidean algorithm on coprime (a, b).

    Whole runs are emitted with division rather than one subtraction at a
    time, so the cost is O(log(a + b)) arithmetic steps and the result is
    usable for pairs far beyond any expandable word length. The terminal
    cases are explicit: once the smaller component hits 1, the larger one
    has exactly larger-1 subtractions left (the naive floor quotient would
    overshoot that last run by one).
    """
    CoprimePair(a, b)
    runs: list[int] = []
    first = A if a > b else B if b > a else None
    x, y = a, b
    while x != 1 or y != 1:
        if x > y:
            if y == 1:
                runs.append(x - 1)
                x = 1
            else:
                q, x = divmod(x, y)
                runs.append(q)
        else:
            if x == 1:
                runs.append(y - 1)
                y = 1
            else:
                q, y = divmod(y, x)
                runs.append(q)
    return RunLengthWord(first, tuple(runs))


def word_to_pair(s: str) -> CoprimePair:
    """The coprime pair whose Euclidean word is ``s``: the start counts.

    Inverse of ``euclid_word``: ``euclid_word(*word_to_pair(s))`` expands
    back to ``s`` for every word, and the empty word maps to (1, 1).
    """
    p = profile(s)
    return CoprimePair(p.start_a, p.start_b)


def cf_of_rational(num: int, den: int) -> ContinuedFraction:
    """Canonical continued fraction of num/den for coprime num, den >= 1."""
    if num < 1 or den < 1:
        raise InvalidPairError(f"expected positive integers, got ({num}, {den})")
    if gcd(num, den) != 1:
        raise InvalidPairError(f"expected a reduced fraction, got {num}/{den}")
    quotients = []
    u, v = num, den
    while v:
        q, r = divmod(u, v)
        quotients.append(q)
        u, v = v, r
    # The division algorithm ends with a quotient >= 2 whenever there is
    # more than one term, so the result is canonical as produced.
    return ContinuedFraction(tuple(quotients))


def word_to_cf(s: str | RunLengthWord) -> ContinuedFraction:
    """Continued fraction of a/b where (a, b) = word_to_pair(s).

    Computed directly from the run lengths: a leading B gets a formal A-run
    of length 0, the final run gains 1, and the empty word gives [1].
    Agrees with ``cf_of_rational(*word_to_pair(s))`` for every word. A
    run-length word is accepted as is, so enormous words never need
    expanding.
    """
    rlw = s if isinstance(s, RunLengthWord) else RunLengthWord.from_word(s)
    if not rlw.runs:
        return ContinuedFraction((1,))
    quotients = list(rlw.runs)
    if rlw.first == B:
        quotients.insert(0, 0)
    quotients[-1] += 1
    return ContinuedFraction(tuple(quotients))


def cf_to_word(cf: ContinuedFraction | Iterable[int]) -> str:
    """The binary word whose continued fraction is ``cf``.

    Inverse of ``word_to_cf`` on canonical expansions. A plain quotient
    sequence is accepted as well and is canonicalized first (by value), so
    e.g. a trailing quotient of 1 folds into its predecessor.
    """
    cf = _as_canonical(cf)
    qs = cf.quotients
    if len(qs) == 1:
        return A * (qs[0] - 1)
    runs = list(qs[:-1]) + [qs[-1] - 1]
    if runs[0] == 0:
        return RunLengthWord(B, tuple(runs[1:])).expand()
    return RunLengthWord(A, tuple(runs)).expand()


def _as_canonical(cf: ContinuedFraction | Iterable[int]) -> ContinuedFraction:
    if isinstance(cf, ContinuedFraction):
        return cf
    qs = tuple(int(c) for c in cf)
    if not qs:
        raise ValueError("a continued fraction needs at least one quotient")
    if qs[0] < 0 or any(c < 1 for c in qs[1:]):
        raise ValueError(f"quotients after the first must be >= 1: {qs}")
    value = Fraction(qs[-1])
    for c in reversed(qs[:-1]):
        value = c + 1 / value
    if value <= 0:
        raise ValueError(f"continued fraction does not represent a positive rational: {qs}")
    return cf_of_rational(value.numerator, value.denominator)


def partial_quotient_sum(a: int, N: int) -> int:
    """Sum of all partial quotients of a/N, for coprime 1 <= a < N.

    Equals ``euclid_word(a, N - a).length + 2``: the quotient sum counts
    the subtractive steps of the Euclidean algorithm plus the two terminal
    units, which is the word length plus 2.
    """
    if not 1 <= a < N:
        raise InvalidPairError(f"need 1 <= a < N, got a={a}, N={N}")
    if gcd(a, N) != 1:
        raise InvalidPairError(f"expected a reduced fraction, got {a}/{N}")
    total = 0
    u, v = a, N
    while v:
        q, r = divmod(u, v)
        total += q
        u, v = v, r
    assert total == euclid_word(a, N - a).length + 2
    return total


def _prime_factors(n: int) -> list[int]:
    """Distinct prime factors by trial division; fine up to about 10**12."""
    primes = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            primes.append(d)
            while n % d == 0:
                n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        primes.append(n)
    return primes


def euler_phi(n: int) -> int:
    """Euler's totient of n >= 1, via trial-division factorization."""
    if n < 1:
        raise ValueError(f"totient needs n >= 1, got {n}")
    phi = n
    for p in _prime_factors(n):
        phi -= phi // p
    return phi


def fibonacci(m: int) -> int:
    """The m-th Fibonacci number with F1 = F2 = 1 (and F0 = 0)."""
    if m < 0:
        raise ValueError(f"Fibonacci index must be >= 0, got {m}")
    x, y = 0, 1
    for _ in range(m):
        x, y = y, x + y
    return x
