"""Exact counting and ranking of k-universal accepted words and paths.

The path tables are layered by length.  A cell of layer ``l`` at state ``q``
is keyed by ``(c, R)``: ``c`` arches read so far (``c == k`` stands for
"at least ``k``") and ``R`` the bitmask of the rest's alphabet.  The rest is
kept up to date even after the arch counter saturates, which is what the
perfect-universality counts need.

Word semantics require a deterministic automaton (one path per word); path
semantics accept any NFA.  Automata with ``ε``-transitions are converted
first, and path counts then refer to the ``ε``-free automaton.
"""

from __future__ import annotations

import math
from collections import defaultdict
from dataclasses import dataclass
from typing import Optional, Sequence

from .automaton import Nfa, remove_epsilon
from .errors import CapacityError
from .graph import tarjan
from .oracle import build_product
from .words import arch_state, check_word, full_mask, letter_bit

MAX_SIGMA = 20
MODES = ("exact", "at_most", "total")


@dataclass
class PathTables:
    sigma: int
    m: int
    k: int
    layers: list

    def t(self, q: int, length: int, arches: int, rest: int) -> int:
        """Paths of ``length`` from the initial state to ``q`` whose label has
        exactly ``arches < k`` arches and rest alphabet ``rest``."""
        if not 0 <= arches < self.k:
            raise ValueError(f"arch count must lie in [0, {self.k - 1}]")
        return self.layers[length][q].get((arches, rest), 0)

    def u(self, q: int, length: int) -> int:
        """Paths of ``length`` to ``q`` whose label is ``k``-universal."""
        return sum(v for (c, _), v in self.layers[length][q].items() if c == self.k)

    def perfect(self, q: int, length: int) -> int:
        """Like :meth:`u`, restricted to labels with an empty rest."""
        return self.layers[length][q].get((self.k, 0), 0)


def _prepare(a: Optional[Nfa], paths: bool) -> Optional[Nfa]:
    if a is None:
        return None
    if a.sigma > MAX_SIGMA:
        raise CapacityError(f"sigma={a.sigma} exceeds the counting bound {MAX_SIGMA}")
    a = remove_epsilon(a)
    if a is not None and not paths and not a.is_deterministic():
        raise ValueError("word counting needs a deterministic automaton; "
                         "count paths instead or determinize first")
    return a


def _propagate(a: Nfa, m: int, k: int, seeds: dict) -> list:
    full = full_mask(a.sigma)
    succ = a.successors()

    def seeded(layer, length):
        for q, c, rest, count in seeds.get(length, ()):
            layer[q][(c, rest)] = layer[q].get((c, rest), 0) + count
        return layer

    layers = [seeded([dict() for _ in range(a.n)], 0)]
    for length in range(1, m + 1):
        prev = layers[-1]
        cur = [defaultdict(int) for _ in range(a.n)]
        for p in range(a.n):
            if not prev[p]:
                continue
            for x, q in succ[p]:
                bit = letter_bit(x)
                target = cur[q]
                for (c, rest), count in prev[p].items():
                    s = rest | bit
                    if s == full:
                        target[(min(c + 1, k), 0)] += count
                    else:
                        target[(c, s)] += count
        layers.append(seeded([dict(d) for d in cur], length))
    return layers


def build_tables(a: Nfa, m: int, k: int) -> PathTables:
    """Path tables of length ``m`` for the ``ε``-free automaton ``a``."""
    if a.has_epsilon:
        raise ValueError("remove epsilon-transitions before building path tables")
    if a.sigma > MAX_SIGMA:
        raise CapacityError(f"sigma={a.sigma} exceeds the counting bound {MAX_SIGMA}")
    if k < 1 or m < 0:
        raise ValueError("need k >= 1 and m >= 0")
    seeds = {0: [(a.initial, 0, 0, 1)]}
    return PathTables(a.sigma, m, k, _propagate(a, m, k, seeds))


def _accepted(tables: PathTables, finals, length: int, perfect: bool) -> int:
    if perfect:
        return sum(tables.perfect(q, length) for q in finals)
    return sum(tables.u(q, length) for q in finals)


def count_exact(a: Optional[Nfa], m: int, k: int, perfect: bool = False,
                paths: bool = False) -> int:
    """Accepted ``k``-universal words (or paths) of length exactly ``m``."""
    a = _prepare(a, paths)
    if a is None or k * a.sigma > m:
        return 0
    return _accepted(build_tables(a, m, k), a.finals, m, perfect)


def count_at_most(a: Optional[Nfa], m: int, k: int, perfect: bool = False,
                  paths: bool = False) -> int:
    """Accepted ``k``-universal words (or paths) of length at most ``m``."""
    a = _prepare(a, paths)
    if a is None or k * a.sigma > m:
        return 0
    tables = build_tables(a, m, k)
    return sum(_accepted(tables, a.finals, length, perfect) for length in range(m + 1))


def count_total(a: Optional[Nfa], k: int, paths: bool = False):
    """All accepted ``k``-universal words (or paths); ``math.inf`` if infinitely many.

    Works on the product of ``a`` with an arch counter saturating at ``k``:
    after discarding product states that cannot reach ``(final, k)``, the
    count is infinite exactly when a cycle remains, and otherwise it is the
    number of paths in what is left.
    """
    a = _prepare(a, paths)
    if a is None:
        return 0
    if k < 1:
        raise ValueError("need k >= 1")
    prod = build_product(a, k)
    nodes = sorted(prod.states)
    index = {s: i for i, s in enumerate(nodes)}
    radj = [[] for _ in nodes]
    for src, _, dst in prod.transitions:
        radj[index[dst]].append(index[src])
    alive = [False] * len(nodes)
    stack = [i for i, (q, c, _) in enumerate(nodes) if q in a.finals and c == k]
    for i in stack:
        alive[i] = True
    while stack:
        v = stack.pop()
        for u in radj[v]:
            if not alive[u]:
                alive[u] = True
                stack.append(u)
    if not alive[index[prod.start]]:
        return 0
    adj = [[] for _ in nodes]
    for src, _, dst in prod.transitions:
        i, j = index[src], index[dst]
        if alive[i] and alive[j]:
            adj[i].append(j)
    comps = tarjan(len(nodes), adj)
    for comp in comps:
        if len(comp) > 1 or comp[0] in adj[comp[0]]:
            if alive[comp[0]]:
                return math.inf
    # tarjan lists sinks first, so walk the list backwards for a topological order
    ways = [0] * len(nodes)
    ways[index[prod.start]] = 1
    total = 0
    for v in (v for comp in reversed(comps) for v in comp):
        if not alive[v] or not ways[v]:
            continue
        q, c, _ = nodes[v]
        if q in a.finals and c == k:
            total += ways[v]
        for j in adj[v]:
            ways[j] += ways[v]
    return total


def _prefix_seeds(a: Nfa, w: Sequence[int], k: int) -> dict:
    """Seeds for the table of words having a prefix in
    ``{w[:i] + x : x < w[i]}``; each prefix is entered once per path."""
    succ = a.successors()
    seeds = defaultdict(list)
    vector = {a.initial: 1}
    for i, letter in enumerate(w):
        for x in range(1, letter):
            reached = defaultdict(int)
            for p, count in vector.items():
                for y, q in succ[p]:
                    if y == x:
                        reached[q] += count
            if reached:
                c, rest = arch_state(w[:i] + (x,), a.sigma)
                for q, count in reached.items():
                    seeds[i + 1].append((q, min(c, k), rest, count))
        nxt = defaultdict(int)
        for p, count in vector.items():
            for y, q in succ[p]:
                if y == letter:
                    nxt[q] += count
        vector = nxt
    return seeds


def _rank_same_length(a: Nfa, w: tuple, k: int) -> int:
    if k * a.sigma > len(w):
        return 0
    layers = _propagate(a, len(w), k, _prefix_seeds(a, w, k))
    tables = PathTables(a.sigma, len(w), k, layers)
    return _accepted(tables, a.finals, len(w), False)


def rank(a: Optional[Nfa], w: Sequence[int], k: int, mode: str = "exact",
         m: Optional[int] = None, paths: bool = False) -> int:
    """Number of accepted ``k``-universal words smaller than ``w``.

    ``exact`` ranks among words of length ``|w|`` in lexicographic order;
    ``at_most`` (words of length at most ``m``) and ``total`` use shortlex
    order.  With ``paths=True`` every accepting path of a smaller word is
    counted.
    """
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}")
    a = _prepare(a, paths)
    if a is None:
        return 0
    w = check_word(w, a.sigma)
    if mode == "exact":
        if m is not None and m != len(w):
            raise ValueError(f"exact mode ranks among words of length {m}, got |w|={len(w)}")
        return _rank_same_length(a, w, k)
    if mode == "at_most" and m is not None and len(w) > m:
        raise ValueError(f"|w|={len(w)} exceeds the length bound {m}")
    if mode == "total" and count_total(a, k, paths=True) == math.inf:
        raise ValueError("infinitely many k-universal words; ranking among all of them "
                         "is not supported")
    shorter = count_at_most(a, len(w) - 1, k, paths=True) if w else 0
    return shorter + _rank_same_length(a, w, k)
