"""Word operations and the two independent subsequence-counting routes."""

import random
from math import gcd

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from euclidwords import (
    BudgetError,
    SubseqProfile,
    brute_force_count,
    check_word,
    complement,
    concat,
    concat_count,
    count_subsequences,
    profile,
)
from helpers import all_words, random_word, subsequence_set

words = st.text(alphabet="AB", max_size=12)


def test_check_word_accepts_and_rejects():
    assert check_word("") == ""
    assert check_word("ABBA") == "ABBA"
    for bad in ("abx", "A B", "AB1", "ба"):
        with pytest.raises(ValueError):
            check_word(bad)
    with pytest.raises(ValueError):
        check_word(None)


def test_concat_examples():
    assert concat("AB", "ABB") == "ABABB"
    assert concat("", "BAB") == "BAB"
    assert concat("A", "BA") == "ABA"


def test_complement_examples():
    assert complement("ABABB") == "BABAA"
    assert complement("") == ""
    assert complement(complement("ABA")) == "ABA"
    assert complement("A") == "B" and complement("B") == "A"


def test_profile_examples():
    p = profile("ABABB")
    assert (p.start_a, p.start_b, p.total) == (11, 7, 17)
    assert profile("") == SubseqProfile(1, 1, 1, 1, 1)
    p = profile("BA")
    assert (p.start_a, p.start_b, p.total) == (2, 3, 4)
    assert subsequence_set("BA") == {"", "A", "B", "BA"}


def test_count_examples():
    assert count_subsequences("ABABB") == 17
    for k in range(7):
        assert count_subsequences("A" * k) == k + 1
    assert count_subsequences("ABAB") == 12


def test_brute_force_examples():
    assert brute_force_count("ABABB") == 17
    assert brute_force_count("") == 1
    assert brute_force_count("BBB") == 4


def test_brute_force_budget():
    with pytest.raises(BudgetError):
        brute_force_count("AB" * 12)


def test_concat_count_examples():
    assert concat_count(profile("AB"), profile("ABB")) == 17
    assert concat_count(profile("AB"), profile("ABB")) == brute_force_count("ABABB")
    t = "BAB"
    assert concat_count(profile(""), profile(t)) == profile(t).total
    assert concat_count(profile("A"), profile("A")) == 3


def test_profile_invariants_enforced():
    with pytest.raises(AssertionError):
        SubseqProfile(2, 2, 3, 1, 3)  # start counts not coprime
    with pytest.raises(AssertionError):
        SubseqProfile(2, 1, 1, 1, 2)  # directions disagree


def test_counts_agree_exhaustively_small():
    for w in all_words(10):
        c = count_subsequences(w)
        assert c == brute_force_count(w)
        assert c == len(subsequence_set(w))


@settings(max_examples=200, deadline=None, derandomize=True)
@given(words)
def test_profile_direction_identity_and_coprimality(w):
    p = profile(w)
    assert p.start_a + p.start_b == p.end_a + p.end_b == p.total + 1
    assert min(p.start_a, p.start_b, p.end_a, p.end_b) >= 1
    assert gcd(p.start_a, p.start_b) == 1


@settings(max_examples=200, deadline=None, derandomize=True)
@given(words)
def test_complement_swaps_letter_counts(w):
    p, q = profile(w), profile(complement(w))
    assert (q.start_a, q.start_b, q.end_a, q.end_b) == (p.start_b, p.start_a, p.end_b, p.end_a)
    assert q.total == p.total


@settings(max_examples=200, deadline=None, derandomize=True)
@given(words)
def test_reversal_swaps_start_and_end_counts(w):
    p, q = profile(w), profile(w[::-1])
    assert (q.start_a, q.start_b) == (p.end_a, p.end_b)
    assert (q.end_a, q.end_b) == (p.start_a, p.start_b)
    assert q.total == p.total


@settings(max_examples=200, deadline=None, derandomize=True)
@given(words, st.sampled_from("AB"))
def test_appending_strictly_increases_count(w, letter):
    assert count_subsequences(w + letter) > count_subsequences(w)


@settings(max_examples=150, deadline=None, derandomize=True)
@given(st.text(alphabet="AB", max_size=8), st.text(alphabet="AB", max_size=8))
def test_concat_count_matches_brute_force(s, t):
    assert concat_count(profile(s), profile(t)) == brute_force_count(s + t)


def test_counts_agree_on_random_midsize_words():
    rng = random.Random(20260810)
    for _ in range(300):
        w = random_word(rng, rng.randint(11, 16))
        assert count_subsequences(w) == brute_force_count(w)
