import math
import random

import pytest

from conftest import random_regex
from kuniv.automaton import normalize
from kuniv.oracle import (enumerate_language, max_index_by_enumeration,
                          max_universality_product, regex_language)
from kuniv.regex import (Alt, Concat, Empty, Epsilon, Letter, RegexSyntaxError, Star,
                         is_star_free, k_esu_regex, max_universality_regex, parse_regex,
                         prune_empty, regex_unbounded, size, star_free_reduce, thompson,
                         to_text)
from kuniv.words import universality_index

A, B, C = Letter(1), Letter(2), Letter(3)


def test_parse_example_expression():
    r = parse_regex("(a*b*c|bc)|a*", 3)
    assert r == Alt(Alt(Concat(Star(A), Concat(Star(B), C)), Concat(B, C)), Star(A))
    assert parse_regex("a*b|_", 2) == Alt(Concat(Star(A), B), Epsilon())


def test_parse_extras():
    assert parse_regex("<2>#", 2) == Concat(B, Empty())
    assert parse_regex(" a b ", 2) == Concat(A, B)
    assert parse_regex("a**", 1) == Star(Star(A))


@pytest.mark.parametrize("text", ["((", "a|", "()", "a)", "*a", "d", "<3>", "<x>"])
def test_syntax_errors(text):
    with pytest.raises(RegexSyntaxError):
        parse_regex(text, 2)


def test_syntax_error_position():
    with pytest.raises(RegexSyntaxError) as info:
        parse_regex("ab|c", 2)
    assert info.value.position == 3


def test_to_text_round_trip():
    for text in ["(a*b*c|bc)|a*", "a(bc)*d", "(ab)*", "_|#", "(a|b)c"]:
        r = parse_regex(text, 4)
        assert parse_regex(to_text(r), 4) == r
    assert to_text(Concat(Letter(27), Letter(1)), 27) == "<27><1>"


def test_unbounded_detection():
    assert regex_unbounded(parse_regex("(abc)*", 3), 3)
    assert not regex_unbounded(parse_regex("(a*b*c|bc)|a*", 3), 3)
    assert not regex_unbounded(parse_regex("a(bc)*", 3), 3)
    # the only covering star sits in a dead branch
    assert not regex_unbounded(parse_regex("(ab)*#|a", 2), 2)


def test_prune_empty():
    assert prune_empty(parse_regex("a#|b", 2)) == B
    assert prune_empty(parse_regex("#*", 2)) == Epsilon()
    assert prune_empty(parse_regex("#|#", 2)) == Empty()


def test_star_free_examples():
    assert to_text(star_free_reduce(parse_regex("a(bc)*d", 4), 4)) == "abcbcd"
    assert to_text(star_free_reduce(parse_regex("a*", 2), 2)) == "aa"
    r = parse_regex("(a|b)c|_", 3)
    assert star_free_reduce(r, 3) == r
    with pytest.raises(ValueError):
        star_free_reduce(parse_regex("(ab)*", 2), 2)


def test_star_free_examples_keep_max_index():
    for text, sigma in [("a(bc)*d", 4), ("a*", 2)]:
        r = parse_regex(text, sigma)
        s = star_free_reduce(r, sigma)
        bound = 2 * size(r)
        assert (max(universality_index(w, sigma) for w in regex_language(r, sigma, bound))
                == max(universality_index(w, sigma) for w in regex_language(s, sigma, bound)))


def test_thompson_small_cases():
    t = thompson(A, 1)
    assert t.n == 2 and len(t.transitions) == 1
    assert enumerate_language(thompson(parse_regex("ab|ba", 2), 2), 3) == [(1, 2), (2, 1)]
    assert enumerate_language(thompson(Epsilon(), 2), 3) == [()]


def test_esu_examples():
    r = "(a*b*c|bc)|a*"
    assert k_esu_regex(r, 3, 1)
    assert not k_esu_regex(r, 3, 2)
    assert k_esu_regex("(ab)*", 2, 1000)
    assert max_universality_regex("(ab)*", 2) == math.inf
    assert max_universality_regex("#", 2) is None
    assert not k_esu_regex("a#", 2, 1)


def test_thompson_matches_tree_semantics():
    rng = random.Random(5)
    for _ in range(200):
        sigma = rng.randint(1, 3)
        r = random_regex(rng, rng.randint(1, 10), sigma)
        limit = 6 if sigma < 3 else 4
        words = enumerate_language(thompson(r, sigma), limit)
        assert set(words) == regex_language(r, sigma, limit)
        assert set(words) == regex_language(prune_empty(r), sigma, limit)


def test_star_free_reduction_properties():
    rng = random.Random(9)
    checked = 0
    while checked < 150:
        sigma = rng.randint(1, 3)
        r = prune_empty(random_regex(rng, rng.randint(1, 12), sigma))
        if isinstance(r, Empty) or regex_unbounded(r, sigma):
            continue
        checked += 1
        s = star_free_reduce(r, sigma)
        assert is_star_free(s)
        assert size(s) <= 3 * size(r)
        best = max_universality_regex(r, sigma)
        a = normalize(thompson(r, sigma))
        assert best == max_universality_product(a)
        assert max_index_by_enumeration(a, 2 * size(r)) <= best
