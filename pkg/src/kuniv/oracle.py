"""Brute-force and product-automaton oracles.

Everything here is deliberately simple and independent of the SCC-based
algorithms, so the two can be checked against each other.
"""

from __future__ import annotations

import math
from collections import Counter, deque
from dataclasses import dataclass
from typing import Optional

from .automaton import EPSILON, Nfa, epsilon_closure
from .regex import Alt, Concat, Empty, Epsilon, Letter, Regex, Star
from .words import arch_factorize, full_mask, letter_bit, universality_index


def _step(a: Nfa, succ, current: frozenset, x: int) -> frozenset:
    nxt = {q for p in current for y, q in succ[p] if y == x}
    return epsilon_closure(a, nxt, succ) if nxt else frozenset()


def enumerate_language(a: Optional[Nfa], max_len: int) -> list:
    """Every accepted word of length at most ``max_len``, in shortlex order."""
    if a is None:
        return []
    succ = a.successors()
    level = [((), epsilon_closure(a, [a.initial], succ))]
    out = []
    for length in range(max_len + 1):
        out.extend(w for w, states in level if states & a.finals)
        if length == max_len:
            break
        nxt = []
        for w, states in level:
            for x in range(1, a.sigma + 1):
                s = _step(a, succ, states, x)
                if s:
                    nxt.append((w + (x,), s))
        level = nxt
    return out


def _search(a: Nfa, max_len: int, cap: int):
    """Explore all words of length <= ``max_len`` breadth-first, keeping one
    representative per (reached state set, arch count capped at ``cap``, rest
    alphabet).  Words sharing that key are interchangeable for every suffix,
    so nothing is lost.  Yields accepted representatives."""
    succ = a.successors()
    start = epsilon_closure(a, [a.initial], succ)
    seen = set()
    level = [()]
    states_of = {(): start}
    for length in range(max_len + 1):
        nxt = []
        for w in level:
            states = states_of.pop(w)
            fact = arch_factorize(w, a.sigma)
            key = (states, min(len(fact.arches), cap), frozenset(fact.rest))
            if key in seen:
                continue
            seen.add(key)
            if states & a.finals:
                yield w
            if length == max_len:
                continue
            for x in range(1, a.sigma + 1):
                s = _step(a, succ, states, x)
                if s:
                    v = w + (x,)
                    states_of[v] = s
                    nxt.append(v)
        level = nxt


def esu_by_enumeration(a: Optional[Nfa], k: int, max_len: int) -> bool:
    """Is some accepted word of length <= ``max_len`` ``k``-universal?"""
    if a is None:
        return False
    return any(universality_index(w, a.sigma) >= k for w in _search(a, max_len, k))


def max_index_by_enumeration(a: Optional[Nfa], max_len: int) -> Optional[int]:
    """Largest index among accepted words of length <= ``max_len``."""
    if a is None:
        return None
    best = None
    for w in _search(a, max_len, max_len + 1):
        i = universality_index(w, a.sigma)
        best = i if best is None else max(best, i)
    return best


def index_histogram(a: Optional[Nfa], max_len: int) -> Counter:
    if a is None:
        return Counter()
    return Counter(universality_index(w, a.sigma) for w in enumerate_language(a, max_len))


@dataclass(frozen=True)
class ProductAutomaton:
    """States ``(q, c, R)``: automaton state, arches read so far (at most
    ``cap``), bitmask of the current rest."""

    cap: int
    states: frozenset
    transitions: frozenset
    start: tuple


def build_product(a: Nfa, cap: int, keep_rest_at_cap: bool = False) -> ProductAutomaton:
    full = full_mask(a.sigma)
    succ = a.successors()
    start = (a.initial, 0, 0)
    seen = {start}
    transitions = set()
    queue = deque([start])
    while queue:
        q, c, rest = node = queue.popleft()
        for x, r in succ[q]:
            if x == EPSILON:
                target = (r, c, rest)
            elif c == cap and not keep_rest_at_cap:
                target = (r, c, 0)
            else:
                s = rest | letter_bit(x)
                target = (r, min(c + 1, cap), 0) if s == full else (r, c, s)
            transitions.add((node, x, target))
            if target not in seen:
                seen.add(target)
                queue.append(target)
    return ProductAutomaton(cap, frozenset(seen), frozenset(transitions), start)


def max_universality_product(a: Optional[Nfa]):
    """Largest index over ``L(a)`` read off the reachable product states.

    The arch counter is capped at ``n + 1``: a word with ``n + 1`` arches
    starts two of them in the same state, and the walk between those starts
    is a cycle covering the alphabet, so reaching the cap at a final state
    means the index is unbounded (``math.inf``).
    """
    if a is None:
        return None
    cap = a.n + 1
    prod = build_product(a, cap)
    best = None
    for q, c, _ in prod.states:
        if q in a.finals:
            best = c if best is None else max(best, c)
    if best is not None and best >= cap:
        return math.inf
    return best


def usu_decide(a: Optional[Nfa], k: int) -> bool:
    """Is every accepted word ``k``-universal?  Vacuously true for the empty language."""
    if a is None:
        return True
    prod = build_product(a, k)
    return not any(q in a.finals and c < k for q, c, _ in prod.states)


def regex_language(r: Regex, sigma: int, max_len: int) -> frozenset:
    """Words of ``L(r)`` of length at most ``max_len``, computed from the
    expression tree directly."""
    if isinstance(r, Empty):
        return frozenset()
    if isinstance(r, Epsilon):
        return frozenset([()])
    if isinstance(r, Letter):
        return frozenset([(r.letter,)]) if max_len >= 1 else frozenset()
    if isinstance(r, Alt):
        return regex_language(r.left, sigma, max_len) | regex_language(r.right, sigma, max_len)
    if isinstance(r, Concat):
        left = regex_language(r.left, sigma, max_len)
        right = regex_language(r.right, sigma, max_len)
        return frozenset(u + v for u in left for v in right if len(u) + len(v) <= max_len)
    inner = [w for w in regex_language(r.inner, sigma, max_len) if w]
    result = {()}
    frontier = {()}
    while frontier:
        frontier = {u + v for u in frontier for v in inner if len(u) + len(v) <= max_len} - result
        result |= frontier
    return frozenset(result)
