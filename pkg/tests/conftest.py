import random

import pytest

from kuniv.automaton import Nfa

# letters: a=1, b=2, c=3
FIGURE_A = Nfa(3, 3, 0, {2}, {(0, 1, 0), (0, 2, 0), (0, 3, 1), (1, 1, 2), (2, 2, 2), (2, 3, 2)})

# the six permutations of abc, one branch per word
FIGURE_B = Nfa(3, 16, 0, {3, 5, 8, 10, 13, 15}, [
    (0, 1, 1), (1, 2, 2), (2, 3, 3), (1, 3, 4), (4, 2, 5),
    (0, 2, 6), (6, 1, 7), (7, 3, 8), (6, 3, 9), (9, 1, 10),
    (0, 3, 11), (11, 1, 12), (12, 2, 13), (11, 2, 14), (14, 1, 15),
])


def full_automaton(sigma):
    return Nfa(sigma, 1, 0, {0}, {(0, x, 0) for x in range(1, sigma + 1)})


def random_nfa(rng, n, sigma, density, epsilon=0.0):
    transitions = set()
    for p in range(n):
        for q in range(n):
            for x in range(1, sigma + 1):
                if rng.random() < density:
                    transitions.add((p, x, q))
            if epsilon and p != q and rng.random() < epsilon:
                transitions.add((p, 0, q))
    finals = rng.sample(range(n), rng.randint(1, n))
    return Nfa(sigma, n, 0, finals, transitions)


def forward_nfa(rng, n, sigma, loop_density=0.3, back=0.05):
    """Mostly acyclic automata, so the universality index stays finite more often."""
    transitions = set()
    for p in range(n):
        for x in range(1, sigma + 1):
            if rng.random() < loop_density:
                transitions.add((p, x, p))
        for _ in range(rng.randint(1, 3)):
            q = rng.randrange(n) if rng.random() < back else rng.randrange(p, n)
            transitions.add((p, rng.randint(0 if rng.random() < 0.1 else 1, sigma), q))
    finals = rng.sample(range(n), rng.randint(1, min(n, 2)))
    return Nfa(sigma, n, 0, finals, transitions)


def random_dfa(rng, n, sigma, fill=0.8):
    transitions = {(p, x, rng.randrange(n)) for p in range(n) for x in range(1, sigma + 1)
                   if rng.random() < fill}
    finals = rng.sample(range(n), rng.randint(1, n))
    return Nfa(sigma, n, 0, finals, transitions)


@pytest.fixture
def rng():
    return random.Random(20240611)


def random_regex(rng, budget, sigma):
    """Random expression tree with at most ``budget`` nodes."""
    from kuniv.regex import Alt, Concat, Empty, Epsilon, Letter, Star

    if budget <= 1:
        roll = rng.random()
        if roll < 0.06:
            return Empty()
        if roll < 0.16:
            return Epsilon()
        return Letter(rng.randint(1, sigma))
    roll = rng.random()
    if roll < 0.25:
        return Star(random_regex(rng, budget - 1, sigma))
    left = rng.randint(1, budget - 2) if budget > 2 else 1
    right = budget - 1 - left
    if right < 1:
        return Star(random_regex(rng, budget - 1, sigma))
    cls = Concat if roll < 0.65 else Alt
    return cls(random_regex(rng, left, sigma), random_regex(rng, right, sigma))
