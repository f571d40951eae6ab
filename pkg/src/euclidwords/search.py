"""Exact searches over coprime numerators: shortest words, witnesses, stats.

Every binary word with exactly n distinct subsequences is the Euclidean
word of (a, n+1-a) for some a coprime to n+1, so questions about words
with a prescribed count become scans over the units modulo N = n+1. The
length of such a word is the partial-quotient sum of a/N minus 2, which
lets the scans run entirely on integer arithmetic and materialize only the
winning word.

The hot scan is compiled with numba when available (it is a declared
dependency); a pure-Python fallback with identical semantics is kept both
as a safety net and as the reference the compiled path is tested against.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

import numpy as np

from .errors import BudgetError
from .euclid import (
    ContinuedFraction,
    RunLengthWord,
    _prime_factors,
    cf_of_rational,
    euclid_word,
    euler_phi,
)
from .extremal import min_length_lower_bound
from .words import A, B

__all__ = [
    "ShortestWordResult",
    "ZarembaResult",
    "SumStats",
    "shortest_word",
    "brute_force_shortest",
    "count_words",
    "zaremba_witness",
    "zaremba_scan",
    "quotient_sum_stats",
]

#: brute_force_shortest enumerates words by length; n above this is refused.
BRUTE_SHORTEST_MAX_N = 10_000
#: quotient_sum_stats materializes one integer per unit mod N.
STATS_MAX_TOTIENT = 10**7
#: zaremba_scan range cap.
SCAN_MAX_N = 10**7

# Above this modulus the compiled scan could overflow int64 partials.
_JIT_MAX_N = 1 << 60
_STATS_CHUNK = 1 << 22

try:
    import numba
except ImportError:  # pragma: no cover - numba is a declared dependency
    numba = None


def _sum_quotients(a: int, n: int) -> int:
    """Partial-quotient sum of a/n without validation; caller ensures gcd 1."""
    total = 0
    u, v = a, n
    while v:
        q, r = divmod(u, v)
        total += q
        u, v = v, r
    return total


# Numerators near these ratios tend to have small, flat quotient patterns;
# they seed the branch-and-bound scans with a tight initial bound.
_SEED_RATIOS = (0.3819660112501051, 0.41421356237309515, 0.30277563773199456)


def _seed_bound(N: int, hi: int) -> int:
    """An attainable upper bound for min quotient sum over coprime a <= hi."""
    best = N  # a = 1 always attains N
    for ratio in _SEED_RATIOS:
        base = int(ratio * N)
        for a in (base, base + 1, base - 1, base + 2):
            if 1 <= a <= hi and gcd(a, N) == 1:
                s = _sum_quotients(a, N)
                if s < best:
                    best = s
                break
    return best


def _scan_min_py(N: int, hi: int, seed_s: int, primes) -> tuple[int, int]:
    """Reference scan: (min quotient sum, smallest attainer) over coprime a <= hi.

    ``seed_s`` must be attained by some coprime a <= hi. Partial sums only
    grow and an unfinished candidate owes at least one more quotient, so a
    candidate whose partial sum reaches the incumbent can be dropped
    without disturbing the smallest-attainer tie-break.
    """
    best_s = seed_s + 1
    best_a = 0
    for a in range(1, hi + 1):
        if any(a % p == 0 for p in primes):
            continue
        u, v, s = N, a, 0
        while v:
            q = u // v
            s += q
            if s >= best_s:
                v = -1
                break
            u, v = v, u - q * v
        if v == -1 or u != 1:
            continue
        best_s = s
        best_a = a
    return best_s, best_a


if numba is not None:

    @numba.njit(cache=True, nogil=True)
    def _scan_min_jit(N, hi, seed_s, primes):  # pragma: no cover - numba mirror
        best_s = seed_s + 1
        best_a = 0
        for a in range(1, hi + 1):
            skip = False
            for p in primes:
                if a % p == 0:
                    skip = True
                    break
            if skip:
                continue
            u = N
            v = a
            s = 0
            while v != 0:
                q = u // v
                s += q
                if s >= best_s:
                    v = -1
                    break
                r = u - q * v
                u = v
                v = r
            if v == -1 or u != 1:
                continue
            best_s = s
            best_a = a
        return best_s, best_a

    @numba.njit(cache=True, nogil=True)
    def _sums_chunk_jit(N, lo, hi, primes):  # pragma: no cover - numba mirror
        out_a = np.empty(hi - lo + 1, dtype=np.int64)
        out_s = np.empty(hi - lo + 1, dtype=np.int64)
        k = 0
        for a in range(lo, hi + 1):
            skip = False
            for p in primes:
                if a % p == 0:
                    skip = True
                    break
            if skip:
                continue
            u = N
            v = a
            s = 0
            while v != 0:
                q = u // v
                s += q
                r = u - q * v
                u = v
                v = r
            if u != 1:
                continue
            out_a[k] = a
            out_s[k] = s
            k += 1
        return out_a[:k], out_s[:k]


def _sums_chunk_py(N, lo, hi, primes):
    """Reference: (numerators, quotient sums) for coprime a in [lo, hi]."""
    out_a = []
    out_s = []
    for a in range(lo, hi + 1):
        if any(a % p == 0 for p in primes):
            continue
        out_a.append(a)
        out_s.append(_sum_quotients(a, N))
    return np.asarray(out_a, dtype=np.int64), np.asarray(out_s, dtype=np.int64)


def _scan_min(N: int, hi: int, seed_s: int, primes: list[int]) -> tuple[int, int]:
    if numba is not None and N <= _JIT_MAX_N:
        pvec = np.asarray(primes, dtype=np.int64)
        s, a = _scan_min_jit(N, hi, seed_s, pvec)
        return int(s), int(a)
    return _scan_min_py(N, hi, seed_s, primes)


def _sums_chunk(N, lo, hi, primes):
    if numba is not None and N <= _JIT_MAX_N:
        pvec = np.asarray(primes, dtype=np.int64)
        return _sums_chunk_jit(N, lo, hi, pvec)
    return _sums_chunk_py(N, lo, hi, primes)


@dataclass(frozen=True, slots=True)
class ShortestWordResult:
    """A shortest binary word with exactly ``n`` distinct subsequences."""

    n: int
    best_a: int
    word: RunLengthWord
    word_length: int
    lower_bound: int
    candidates_scanned: int


def shortest_word(n: int) -> ShortestWordResult:
    """Exact minimum-length word with exactly ``n`` distinct subsequences.

    Scans the coprime numerators a of N = n+1, reading each candidate's
    length off the partial-quotient sum of a/N; no candidate word is ever
    materialized, only the winner. Mirrored numerators a and N-a give
    letter-complement words of equal length, so the scan covers a <= N/2;
    the smallest optimal a (the documented tie-break) always lies there.
    ``candidates_scanned`` counts the coprime candidates of that half scan.
    """
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    N = n + 1
    hi = N // 2
    primes = _prime_factors(N)
    seed = _seed_bound(N, hi)
    best_s, best_a = _scan_min(N, hi, seed, primes)
    word = euclid_word(best_a, N - best_a)
    length = best_s - 2
    assert length == word.length
    lower = min_length_lower_bound(n)
    assert length >= lower
    scanned = euler_phi(N) // 2 if N > 2 else 1
    return ShortestWordResult(
        n=n,
        best_a=best_a,
        word=word,
        word_length=length,
        lower_bound=lower,
        candidates_scanned=scanned,
    )


def brute_force_shortest(n: int) -> str:
    """First word in (length, lexicographic) order with exactly ``n`` counts.

    Enumerates every word of length 0, 1, 2, ... in lexicographic order
    (A before B) and returns the first whose distinct-subsequence count is
    exactly n. Independent oracle for ``shortest_word``: it never consults
    quotient sums, coprimality, or any length bound.
    """
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    if n > BRUTE_SHORTEST_MAX_N:
        raise BudgetError(
            f"brute-force shortest-word search is capped at n <= {BRUTE_SHORTEST_MAX_N}"
        )
    length = 0
    while True:
        for mask in range(1 << length):
            ea = eb = 1
            for i in range(length - 1, -1, -1):
                if mask >> i & 1:
                    eb += ea
                else:
                    ea += eb
                if ea + eb - 1 > n:
                    break
            if ea + eb - 1 == n:
                return "".join(
                    B if mask >> i & 1 else A for i in range(length - 1, -1, -1)
                )
        length += 1


def count_words(N: int) -> int:
    """Number of binary words with exactly ``N`` distinct subsequences.

    Equals phi(N+1): such words are the Euclidean words of (a, N+1-a) with
    a ranging over the units modulo N+1.
    """
    if N < 1:
        raise ValueError(f"need N >= 1, got {N}")
    return euler_phi(N + 1)


@dataclass(frozen=True, slots=True)
class ZarembaResult:
    """Smallest coprime numerator whose quotients stay within ``bound``, if any."""

    n: int
    bound: int
    witness: int | None
    cf: ContinuedFraction | None


def _quotients_within(a: int, n: int, bound: int) -> bool:
    """Whether every canonical partial quotient of a/n is <= bound.

    Aborts on the first quotient above the bound. Caller guarantees
    gcd(a, n) = 1 and a < n (so the leading quotient is 0).
    """
    u, v = n, a
    while v:
        q, r = divmod(u, v)
        if q > bound:
            return False
        u, v = v, r
    return True


def zaremba_witness(N: int, bound: int = 5) -> ZarembaResult:
    """Smallest a in [1, N-1], gcd(a, N) = 1, with all quotients of a/N <= bound.

    The check uses the canonical expansion (final quotient >= 2), so for
    bound = 1 no witness can exist. ``witness`` and ``cf`` are None when no
    numerator qualifies.
    """
    if N < 2:
        raise ValueError(f"need N >= 2, got {N}")
    if bound < 1:
        raise ValueError(f"need bound >= 1, got {bound}")
    for a in range(1, N):
        if gcd(a, N) == 1 and _quotients_within(a, N, bound):
            return ZarembaResult(n=N, bound=bound, witness=a, cf=cf_of_rational(a, N))
    return ZarembaResult(n=N, bound=bound, witness=None, cf=None)


def _zaremba_span(span: tuple[int, int, int]) -> list[ZarembaResult]:
    lo, hi, bound = span
    return [zaremba_witness(N, bound) for N in range(lo, hi + 1)]


def zaremba_scan(
    lo: int,
    hi: int,
    bound: int = 5,
    jobs: int = 1,
    chunk_size: int | None = None,
) -> list[ZarembaResult]:
    """One ZarembaResult per N in [lo, hi], in ascending N order.

    With jobs > 1 the range is split into contiguous chunks handled by a
    process pool; results are merged back in range order, so the output is
    identical for any job count. ``chunk_size`` tunes the split granularity.
    """
    if lo < 2 or lo > hi:
        raise ValueError(f"need 2 <= lo <= hi, got [{lo}, {hi}]")
    if hi > SCAN_MAX_N:
        raise BudgetError(f"scan range is capped at N <= {SCAN_MAX_N}")
    if bound < 1:
        raise ValueError(f"need bound >= 1, got {bound}")
    if jobs < 1:
        raise ValueError(f"need jobs >= 1, got {jobs}")
    if jobs == 1:
        return _zaremba_span((lo, hi, bound))
    if chunk_size is None:
        chunk_size = max(64, (hi - lo + 1) // (jobs * 8))
    spans = [
        (start, min(hi, start + chunk_size - 1), bound)
        for start in range(lo, hi + 1, chunk_size)
    ]
    results: list[ZarembaResult] = []
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        for part in pool.map(_zaremba_span, spans):
            results.extend(part)
    return results


@dataclass(frozen=True, slots=True)
class SumStats:
    """Distribution of partial-quotient sums of a/N over the units a mod N.

    ``mean_sum`` is exact. ``reference`` is the heuristic location
    (12/pi^2) * ln(N) * ln(ln(N)) around which the median is expected to
    sit for typical N; it is diagnostic output, never a tolerance.
    """

    n: int
    min_sum: int
    median_sum: int
    mean_sum: Fraction
    argmin_a: int
    reference: float
    sample_size: int


def quotient_sum_stats(N: int) -> SumStats:
    """Exact min/median/mean of the quotient sums of a/N over a in Z*_N.

    The median is the lower middle element (sample sizes are even for
    N >= 3). The smallest a attaining the minimum is reported.
    """
    if N < 3:
        raise ValueError(f"need N >= 3, got {N}")
    phi = euler_phi(N)
    if phi > STATS_MAX_TOTIENT:
        raise BudgetError(
            f"phi({N}) = {phi} exceeds the stats cap of {STATS_MAX_TOTIENT}"
        )
    primes = _prime_factors(N)
    a_parts = []
    s_parts = []
    for lo in range(1, N, _STATS_CHUNK):
        hi = min(N - 1, lo + _STATS_CHUNK - 1)
        avals, sums = _sums_chunk(N, lo, hi, primes)
        a_parts.append(avals)
        s_parts.append(sums)
    avals = np.concatenate(a_parts)
    sums = np.concatenate(s_parts)
    assert sums.size == phi
    i = int(np.argmin(sums))
    k = (phi - 1) // 2
    median = int(np.partition(sums, k)[k])
    mean = Fraction(int(sums.sum(dtype=np.int64)), phi)
    reference = (12 / math.pi**2) * math.log(N) * math.log(math.log(N))
    return SumStats(
        n=N,
        min_sum=int(sums[i]),
        median_sum=median,
        mean_sum=mean,
        argmin_a=int(avals[i]),
        reference=reference,
        sample_size=phi,
    )
