"""Shared helpers for the test suite."""

from itertools import product


def all_words(max_len):
    """Every word over {A, B} of length 0..max_len, shortest first, lex within a length."""
    for length in range(max_len + 1):
        for letters in product("AB", repeat=length):
            yield "".join(letters)


def words_of_length(length):
    for letters in product("AB", repeat=length):
        yield "".join(letters)


def random_word(rng, length):
    return "".join(rng.choice("AB") for _ in range(length))


def subsequence_set(word):
    """All distinct subsequences of a tiny word, by literal subset enumeration."""
    out = set()
    n = len(word)
    for mask in range(1 << n):
        out.add("".join(word[i] for i in range(n) if mask >> i & 1))
    return out


def slow_euclid_word(a, b):
    """Letter-at-a-time subtractive recursion; the literal one-step reference."""
    letters = []
    while (a, b) != (1, 1):
        if a > b:
            letters.append("A")
            a -= b
        else:
            letters.append("B")
            b -= a
    return "".join(letters)
