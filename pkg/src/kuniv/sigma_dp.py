"""Maximum universality index by dynamic programming over the condensation.

``table[i][S]`` is the largest number of arches of a word that labels a walk
from the initial state through components ``0..i`` (ending in ``i``) and
whose rest has alphabet ``S``.  Only cells that are ever reached are stored,
so the exponential dependence on ``sigma`` only shows up when the automaton
really produces that many distinct rests.
"""

from __future__ import annotations

import math
from typing import Optional

from .automaton import NormalizedNfa
from .errors import CapacityError
from .graph import SccDecomposition, decompose, has_unbounded_universality
from .words import full_mask, letter_bit

DEFAULT_MAX_SIGMA = 24


def sigma_table(a: NormalizedNfa, d: Optional[SccDecomposition] = None,
                max_sigma: int = DEFAULT_MAX_SIGMA) -> list:
    if a.sigma > max_sigma:
        raise CapacityError(f"sigma={a.sigma} exceeds the bound {max_sigma}")
    d = d if d is not None else decompose(a)
    full = full_mask(a.sigma)
    v = d.v_sets
    table = [dict() for _ in range(d.e)]
    start = d.component_of[a.initial]
    table[start][v[start]] = 0
    for i in range(start + 1, d.e):
        row = table[i]
        vi = v[i]
        for h, x in d.cross_sets[i]:
            grow = letter_bit(x) | vi
            for rest, arches in table[h].items():
                s = rest | grow
                if s == full:
                    s, arches = vi, arches + 1
                if row.get(s, -1) < arches:
                    row[s] = arches
    return table


def max_universality_sigma(a: Optional[NormalizedNfa], d: Optional[SccDecomposition] = None,
                           max_sigma: int = DEFAULT_MAX_SIGMA):
    """Largest ``ι(w)`` over ``w`` in ``L(a)``.

    ``math.inf`` when the language holds words of every universality index,
    ``None`` for the empty language.
    """
    if a is None:
        return None
    d = d if d is not None else decompose(a)
    if has_unbounded_universality(d, a.sigma):
        return math.inf
    table = sigma_table(a, d, max_sigma)
    return max(table[d.component_of[a.final]].values())


def k_esu_sigma(a: Optional[NormalizedNfa], k: int, d: Optional[SccDecomposition] = None,
                max_sigma: int = DEFAULT_MAX_SIGMA) -> bool:
    best = max_universality_sigma(a, d, max_sigma)
    return best is not None and best >= k
