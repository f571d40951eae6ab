"""Rational approximation of bounded-quotient targets, measured in words.

A target number in (0, 1) is described by its partial quotients (a finite
prefix plus an optional repeating tail), all bounded by a declared C, and
never by a float: the interesting error scales sit far below double
precision. Approximating the target by a reduced fraction a/N and building
the Euclidean word of (a, N-a) yields a word with N-1 distinct
subsequences whose length is governed by C*ln(N) plus N*sqrt(delta*C^3),
where delta is the approximation error. The routines here realize that
experiment and report the measured length against those two terms.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .euclid import euclid_word, word_to_pair

__all__ = [
    "BoundedQuotientTarget",
    "ApproxReport",
    "convergent",
    "best_coprime_numerator",
    "approx_experiment",
    "bound_sweep",
]


@dataclass(frozen=True, slots=True)
class BoundedQuotientTarget:
    """A number in (0, 1) given by bounded partial quotients.

    ``prefix`` lists the leading quotients and must start with 0 (the
    target is below 1); ``tail``, when present, repeats forever after the
    prefix. Every quotient after the first is in [1, bound]. A target with
    no tail is the rational its prefix spells out.
    """

    prefix: tuple[int, ...]
    tail: tuple[int, ...] | None
    bound: int

    def __post_init__(self):
        object.__setattr__(self, "prefix", tuple(self.prefix))
        if self.tail is not None:
            object.__setattr__(self, "tail", tuple(self.tail))
        if self.bound < 1:
            raise ValueError(f"quotient bound must be >= 1, got {self.bound}")
        if not self.prefix or self.prefix[0] != 0:
            raise ValueError("prefix must start with quotient 0 (target below 1)")
        for c in self.prefix[1:]:
            if not 1 <= c <= self.bound:
                raise ValueError(f"prefix quotient {c} outside [1, {self.bound}]")
        if self.tail is not None:
            if not self.tail:
                raise ValueError("periodic tail, when present, must be nonempty")
            for c in self.tail:
                if not 1 <= c <= self.bound:
                    raise ValueError(f"tail quotient {c} outside [1, {self.bound}]")

    def quotient(self, i: int) -> int:
        """The i-th partial quotient, unrolling the periodic tail."""
        if i < 0:
            raise ValueError(f"quotient index must be >= 0, got {i}")
        if i < len(self.prefix):
            return self.prefix[i]
        if self.tail is None:
            raise ValueError(
                f"target has only {len(self.prefix)} quotients and no periodic tail"
            )
        return self.tail[(i - len(self.prefix)) % len(self.tail)]


def convergent(target: BoundedQuotientTarget, index: int) -> Fraction:
    """The convergent p_k/q_k of the target at quotient index k, exactly.

    Index 0 is the integer part alone. The classical bound
    |target - p_k/q_k| < 1/q_k**2 holds for every truncation of an
    infinite expansion.
    """
    if index < 0:
        raise ValueError(f"convergent index must be >= 0, got {index}")
    p_prev, q_prev = 1, 0
    p, q = target.quotient(0), 1
    for k in range(1, index + 1):
        c = target.quotient(k)
        p, p_prev = c * p + p_prev, p
        q, q_prev = c * q + q_prev, q
    return Fraction(p, q)


def _surrogate(target: BoundedQuotientTarget, N: int) -> Fraction:
    """A convergent of the target with denominator above N**2.

    Distances from the surrogate order candidate fractions a/N exactly as
    distances from the target do, because no a/N can sit within 1/q**2 of
    the deep convergent. A finite target that runs out of quotients first
    is simply its exact rational value.
    """
    limit = N * N
    p_prev, q_prev = 1, 0
    p, q = target.quotient(0), 1
    k = 0
    while q <= limit:
        k += 1
        if target.tail is None and k >= len(target.prefix):
            break
        c = target.quotient(k)
        p, p_prev = c * p + p_prev, p
        q, q_prev = c * q + q_prev, q
    return Fraction(p, q)


def best_coprime_numerator(target: BoundedQuotientTarget, N: int) -> tuple[int, Fraction]:
    """The a in [1, N-1], gcd(a, N) = 1, minimizing |target - a/N|.

    Candidates are visited outward from the target scaled by N, in exact
    order of distance with ties going to the smaller numerator, and the
    first coprime one wins. All comparisons are exact rational arithmetic
    against a convergent surrogate of denominator > N**2, so the returned
    delta is reliable even when it is near 1/N**2.
    """
    if N < 2:
        raise ValueError(f"need N >= 2, got {N}")
    xi = _surrogate(target, N)
    scaled = xi * N
    lo = scaled.numerator // scaled.denominator
    hi = lo + 1
    while lo >= 1 or hi <= N - 1:
        if lo >= 1 and (hi > N - 1 or scaled - lo <= hi - scaled):
            candidate, lo = lo, lo - 1
        else:
            candidate, hi = hi, hi + 1
        if math.gcd(candidate, N) == 1:
            return candidate, abs(xi - Fraction(candidate, N))
    raise AssertionError(f"no coprime numerator found for N={N}")


@dataclass(frozen=True, slots=True)
class ApproxReport:
    """One approximation experiment: a/N, its error, and the word it buys.

    ``delta`` is the exact rational |target - a/N| (with the target taken
    at surrogate precision beyond N**2). ``bound_term1`` is C*ln(N),
    ``bound_term2`` is N*sqrt(delta*C^3), and ``ratio`` is the measured
    word length over their sum; the ratio carries no asserted constant.
    """

    denominator: int
    numerator: int
    delta: Fraction
    word_length: int
    bound_term1: float
    bound_term2: float
    ratio: float


def approx_experiment(target: BoundedQuotientTarget, N: int) -> ApproxReport:
    """Approximate the target by a/N and measure the resulting word."""
    a, delta = best_coprime_numerator(target, N)
    word = euclid_word(a, N - a)
    assert tuple(word_to_pair(word.expand())) == (a, N - a)
    c = target.bound
    term1 = c * math.log(N)
    term2 = N * math.sqrt(float(delta) * c**3)
    return ApproxReport(
        denominator=N,
        numerator=a,
        delta=delta,
        word_length=word.length,
        bound_term1=term1,
        bound_term2=term2,
        ratio=word.length / (term1 + term2),
    )


def bound_sweep(
    target: BoundedQuotientTarget, n_values: Sequence[int] | Iterable[int]
) -> list[ApproxReport]:
    """One report per denominator, in input order."""
    return [approx_experiment(target, N) for N in n_values]
