"""Maximum universality index by enumerating subsets of states.

For a fixed sequence of states lying in pairwise distinct components, whether
a walk through exactly those components can spell one full arch is a
bipartite matching question: letters missing from the components' internal
labels must each be supplied by a distinct connecting transition.  Arches are
then packed greedily along the sequence, and the driver maximizes over all
subsets of states.
"""

from __future__ import annotations

import math
from collections import deque
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Optional, Sequence

from .automaton import EPSILON, NormalizedNfa
from .errors import CapacityError
from .graph import SccDecomposition, decompose, has_unbounded_universality
from .words import full_mask, letter_bit, mask_to_letters

DEFAULT_MAX_STATES = 24


@dataclass(frozen=True)
class MatchingInstance:
    """Left vertices are gaps ``0..h-2`` between consecutive components,
    right vertices are the letters not covered inside any component."""

    left: tuple
    right: tuple
    edges: frozenset


def hopcroft_karp(inst: MatchingInstance) -> set:
    """Maximum-cardinality matching, returned as a set of ``(left, right)`` edges."""
    adj = {u: [] for u in inst.left}
    for u, v in sorted(inst.edges):
        adj[u].append(v)
    match_l = {u: None for u in inst.left}
    match_r = {v: None for v in inst.right}
    inf = math.inf
    dist = {}

    def bfs():
        queue = deque()
        for u in inst.left:
            if match_l[u] is None:
                dist[u] = 0
                queue.append(u)
            else:
                dist[u] = inf
        found = False
        while queue:
            u = queue.popleft()
            for v in adj[u]:
                w = match_r[v]
                if w is None:
                    found = True
                elif dist[w] == inf:
                    dist[w] = dist[u] + 1
                    queue.append(w)
        return found

    def dfs(u):
        for v in adj[u]:
            w = match_r[v]
            if w is None or (dist[w] == dist[u] + 1 and dfs(w)):
                match_l[u] = v
                match_r[v] = u
                return True
        dist[u] = inf
        return False

    while bfs():
        for u in inst.left:
            if match_l[u] is None:
                dfs(u)
    return {(u, v) for u, v in match_l.items() if v is not None}


def _segment_feasible(comps: Sequence[int], d: SccDecomposition, full: int) -> bool:
    inside = 0
    for c in comps:
        inside |= d.v_sets[c]
    gaps = []
    for i, j in zip(comps, comps[1:]):
        labels = d.cross_labels.get((i, j))
        if not labels:
            return False
        gaps.append(labels)
    if inside == full:
        return True
    missing = full & ~inside
    letters = mask_to_letters(missing)
    if len(letters) > len(gaps):
        return False
    edges = frozenset((g, x) for g, labels in enumerate(gaps) for x in labels
                      if x != EPSILON and missing & letter_bit(x))
    inst = MatchingInstance(tuple(range(len(gaps))), letters, edges)
    return len(hopcroft_karp(inst)) == len(letters)


def _components(seq: Sequence[int], d: SccDecomposition) -> list:
    comps = [d.component_of[q] for q in seq]
    if len(set(comps)) != len(comps):
        raise ValueError("states of a sequence must lie in distinct components")
    if comps != sorted(comps):
        raise ValueError("sequence is not in topological order")
    return comps


def one_arch_feasible(seq: Sequence[int], d: SccDecomposition, sigma: int) -> bool:
    """Is there a walk from ``seq[0]`` to ``seq[-1]`` through exactly the
    components of ``seq``, in order, whose label is 1-universal?"""
    return _segment_feasible(_components(seq, d), d, full_mask(sigma))


def _greedy_arches(comps: Sequence[int], d: SccDecomposition, full: int) -> int:
    count = 0
    start = 0
    h = len(comps)
    while True:
        for end in range(start + 1, h):
            if _segment_feasible(comps[start:end + 1], d, full):
                count += 1
                start = end
                break
        else:
            return count


def max_arches_for_sequence(seq: Sequence[int], d: SccDecomposition, sigma: int) -> int:
    """Number of arches packed greedily along ``seq``; each arch ends at the
    earliest state where it can be completed."""
    return _greedy_arches(_components(seq, d), d, full_mask(sigma))


def _connected(comps: Sequence[int], d: SccDecomposition) -> bool:
    return all((i, j) in d.cross_labels for i, j in zip(comps, comps[1:]))


def _scan(args) -> int:
    # Evaluates subset masks in [lo, hi); module-level so it pickles for workers.
    d, sigma, start, last, others, lo, hi = args
    full = full_mask(sigma)
    comp_of = d.component_of
    best = 0
    seen = set()
    for mask in range(lo, hi):
        comp_mask = (1 << start) | (1 << last)
        ok = True
        bit = 0
        m = mask
        while m:
            if m & 1:
                c = comp_of[others[bit]]
                cb = 1 << c
                if comp_mask & cb:
                    ok = False
                    break
                comp_mask |= cb
            m >>= 1
            bit += 1
        if not ok or comp_mask in seen:
            continue
        seen.add(comp_mask)
        comps = [c for c in range(d.e) if comp_mask >> c & 1]
        # a walk visiting these components must use a direct transition between
        # each consecutive pair; sequences failing this can never beat one that
        # describes a real walk
        if not _connected(comps, d):
            continue
        best = max(best, _greedy_arches(comps, d, full))
    return best


def max_universality_states(a: Optional[NormalizedNfa], d: Optional[SccDecomposition] = None,
                            max_states: int = DEFAULT_MAX_STATES, workers: int = 1):
    """Largest ``ι(w)`` over ``L(a)`` by subset enumeration.

    ``math.inf`` when unbounded, ``None`` for the empty language.
    """
    if a is None:
        return None
    d = d if d is not None else decompose(a)
    if has_unbounded_universality(d, a.sigma):
        return math.inf
    if a.n > max_states:
        raise CapacityError(f"n={a.n} exceeds the subset-enumeration bound {max_states}")
    start = d.component_of[a.initial]
    last = d.component_of[a.final]
    others = [q for q in range(a.n) if q not in (a.initial, a.final)]
    total = 1 << len(others)
    if workers <= 1 or total < 1024:
        return _scan((d, a.sigma, start, last, others, 0, total))
    chunks = max(workers * 8, 1)
    step = -(-total // chunks)
    jobs = [(d, a.sigma, start, last, others, lo, min(lo + step, total))
            for lo in range(0, total, step)]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return max(pool.map(_scan, jobs))


def k_esu_states(a: Optional[NormalizedNfa], k: int, d: Optional[SccDecomposition] = None,
                 max_states: int = DEFAULT_MAX_STATES, workers: int = 1) -> bool:
    best = max_universality_states(a, d, max_states, workers)
    return best is not None and best >= k
