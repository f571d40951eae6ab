"""Alternating words, extension maxima, and the exact mean identity."""

from fractions import Fraction

import pytest

from euclidwords import (
    BudgetError,
    alternating_count,
    alternating_word,
    best_extension,
    brute_force_shortest,
    complement,
    count_subsequences,
    fibonacci,
    mean_subseq_exact,
    min_length_lower_bound,
)
from helpers import words_of_length


def test_alternating_word():
    assert alternating_word(0) == ""
    assert alternating_word(4) == "ABAB"
    assert alternating_word(5) == "ABABA"
    with pytest.raises(ValueError):
        alternating_word(-1)


def test_alternating_count_examples():
    assert alternating_count(0) == 1
    assert alternating_count(4) == 12
    assert alternating_count(10) == 232


def test_alternating_count_matches_dp_and_complement():
    for n in range(26):
        c = alternating_count(n)
        assert c == fibonacci(n + 3) - 1
        assert c == count_subsequences(alternating_word(n))
        assert c == count_subsequences(complement(alternating_word(n)))


def test_alternating_words_are_the_per_length_maximum():
    for n in range(11):
        z = alternating_word(n)
        best = max(count_subsequences(w) for w in words_of_length(n))
        winners = {w for w in words_of_length(n) if count_subsequences(w) == best}
        assert best == alternating_count(n)
        assert winners == {z, complement(z)}


def test_min_length_lower_bound_examples():
    assert min_length_lower_bound(1) == 0
    assert min_length_lower_bound(12) == 4
    assert min_length_lower_bound(17) == 5
    with pytest.raises(ValueError):
        min_length_lower_bound(0)


def test_min_length_lower_bound_consistent_with_brute_force():
    for n in range(1, 81):
        m = min_length_lower_bound(n)
        assert fibonacci(m + 3) - 1 >= n
        assert m == 0 or fibonacci(m + 2) - 1 < n
        assert len(brute_force_shortest(n)) >= m


def test_best_extension_examples():
    r = best_extension("B", 2)
    assert (r.best_t, r.best_count, r.unique) == ("AB", 7, True)
    r = best_extension("", 3)
    assert (r.best_t, r.best_count, r.unique) == ("ABA", 7, False)
    r = best_extension("B", 0)
    assert (r.best_t, r.best_count, r.unique) == ("", 2, True)


def test_best_extension_errors():
    with pytest.raises(ValueError, match="complement"):
        best_extension("BA", 2)
    with pytest.raises(BudgetError):
        best_extension("B", 21)


def test_best_extension_reports_true_maximum():
    # cross-check the report against direct maximization over all extensions
    for base in ("", "B", "AB", "BB", "AAB", "ABAB"):
        for n in range(5):
            r = best_extension(base, n)
            counts = {t: count_subsequences(base + t) for t in words_of_length(n)}
            best = max(counts.values())
            assert r.best_count == best == counts[r.best_t]
            assert r.unique == (sum(1 for v in counts.values() if v == best) == 1)
            assert min(t for t, v in counts.items() if v == best) == r.best_t


def test_alternating_extension_wins_small():
    for base in ("B", "AB", "ABB", "BAAB"):
        for n in range(5):
            r = best_extension(base, n)
            assert r.best_t == alternating_word(n)
            assert r.unique


def test_mean_examples():
    assert mean_subseq_exact(0) == 1
    assert mean_subseq_exact(1) == 2
    assert mean_subseq_exact(2) == Fraction(7, 2)


def test_mean_matches_direct_enumeration_and_closed_form():
    for n in range(13):
        direct = Fraction(sum(count_subsequences(w) for w in words_of_length(n)), 2**n)
        assert mean_subseq_exact(n) == direct == 2 * Fraction(3, 2) ** n - 1


def test_mean_budget():
    with pytest.raises(BudgetError):
        mean_subseq_exact(21)
    with pytest.raises(ValueError):
        mean_subseq_exact(-1)
