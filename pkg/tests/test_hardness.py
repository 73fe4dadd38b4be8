import random
from itertools import product

import pytest

from kuniv.automaton import normalize
from kuniv.hardness import (CnfInstance, DimacsError, assignment_to_word, parse_dimacs,
                            random_3sat, reduce_to_regex, to_dimacs)
from kuniv.oracle import max_universality_product
from kuniv.regex import (Alt, Concat, Epsilon, Letter, is_star_free, k_esu_regex, size,
                         thompson, to_text)
from kuniv.words import universality_index


def brute_force_sat(cnf):
    return any(cnf.satisfied_by(bits) for bits in product((False, True), repeat=cnf.num_vars))


def test_parse_dimacs():
    cnf = parse_dimacs("p cnf 2 1\n1 2 0")
    assert cnf.num_vars == 2 and cnf.clauses == (frozenset({1, 2}),)
    cnf = parse_dimacs("c comment\np cnf 1 2\n1 0\n-1 0\n")
    assert cnf.clauses == (frozenset({1}), frozenset({-1}))
    # clauses may span lines
    assert parse_dimacs("p cnf 3 1\n1 -2\n3 0\n").clauses == (frozenset({1, -2, 3}),)


@pytest.mark.parametrize("text", [
    "garbage", "p cnf 2 1\n1 x 0", "p cnf 2 1\n3 0", "p cnf 2 2\n1 0",
    "1 2 0", "p cnf 1 1\n1 -1 0", "p dnf 2 1\n1 0",
])
def test_parse_dimacs_errors(text):
    with pytest.raises(DimacsError):
        parse_dimacs(text)


def test_contradiction_reduction():
    cnf = CnfInstance(1, ({1}, {-1}))
    r, sigma = reduce_to_regex(cnf)
    assert sigma == 2
    assert r == Alt(Letter(1), Letter(2))
    assert not k_esu_regex(r, sigma, 1)


def test_single_clause_reduction():
    cnf = CnfInstance(2, ({1, 2},))
    r, sigma = reduce_to_regex(cnf)
    assert r == Concat(Alt(Letter(1), Epsilon()), Alt(Letter(1), Epsilon()))
    assert to_text(r, sigma) == "(a|_)(a|_)"
    assert k_esu_regex(r, sigma, 1)


def test_no_clauses_rejected():
    with pytest.raises(ValueError):
        reduce_to_regex(CnfInstance(2, ()))


def test_assignment_words():
    cnf = CnfInstance(3, ({1, -2}, {2, 3}, {-1, -3}))
    for bits in product((False, True), repeat=3):
        w = assignment_to_word(cnf, bits)
        if cnf.satisfied_by(bits):
            assert universality_index(w, 3) >= 1
        else:
            assert universality_index(w, 3) == 0
    with pytest.raises(ValueError):
        assignment_to_word(cnf, (True,))


def test_random_3sat_generator():
    assert random_3sat(5, 5, seed=1) == random_3sat(5, 5, seed=1)
    cnf = random_3sat(8, 30, seed=4)
    assert all(len({abs(l) for l in c}) == 3 for c in cnf.clauses)
    assert parse_dimacs(to_dimacs(cnf)) == cnf
    with pytest.raises(ValueError):
        random_3sat(2, 3, seed=0)


def test_reduction_equivalence_and_size():
    rng = random.Random(8)
    for _ in range(60):
        n, m = rng.randint(3, 9), rng.randint(1, 14)
        cnf = random_3sat(n, m, seed=rng.random())
        r, sigma = reduce_to_regex(cnf)
        assert is_star_free(r)
        assert size(r) <= 6 * m + 4 * n
        sat = brute_force_sat(cnf)
        assert k_esu_regex(r, sigma, 1) == sat
        if m <= 8:
            best = max_universality_product(normalize(thompson(r, sigma)))
            assert (best >= 1) == sat
