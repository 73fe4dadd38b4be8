"""Strongly connected components of the automaton graph and their label sets."""

from __future__ import annotations

from dataclasses import dataclass

from .automaton import EPSILON, Nfa
from .words import format_word, full_mask, letter_bit, mask_to_letters


@dataclass(frozen=True)
class SccDecomposition:
    """Components are numbered ``0..e-1`` in topological order.

    ``v_sets[i]`` is the bitmask of letters labelling transitions inside
    component ``i``.  ``cross_sets[j]`` holds the pairs ``(i, label)`` of
    transitions entering ``j`` from another component ``i``; ``label`` may be
    ``0`` for an ``ε``-transition.  ``cross_labels[(i, j)]`` is the same data
    grouped by component pair.
    """

    component_of: tuple
    e: int
    condensation_edges: frozenset
    topo_order: tuple
    v_sets: tuple
    cross_sets: tuple
    cross_labels: dict

    def members(self, i: int) -> list:
        return [q for q, c in enumerate(self.component_of) if c == i]


def tarjan(n: int, adj) -> list:
    """Iterative Tarjan.  Components come out sinks first (reverse topological)."""
    index = [-1] * n
    low = [0] * n
    on_stack = [False] * n
    stack = []
    components = []
    counter = 0
    for root in range(n):
        if index[root] != -1:
            continue
        work = [(root, 0)]
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        on_stack[root] = True
        while work:
            v, i = work[-1]
            if i < len(adj[v]):
                work[-1] = (v, i + 1)
                w = adj[v][i]
                if index[w] == -1:
                    index[w] = low[w] = counter
                    counter += 1
                    stack.append(w)
                    on_stack[w] = True
                    work.append((w, 0))
                elif on_stack[w]:
                    low[v] = min(low[v], index[w])
                continue
            work.pop()
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[v])
            if low[v] == index[v]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    comp.append(w)
                    if w == v:
                        break
                components.append(comp)
    return components


def decompose(a: Nfa) -> SccDecomposition:
    adj = [[] for _ in range(a.n)]
    for p, _, q in a.transitions:
        adj[p].append(q)
    comps = tarjan(a.n, adj)
    e = len(comps)
    component_of = [0] * a.n
    for idx, comp in enumerate(comps):
        for q in comp:
            component_of[q] = e - 1 - idx

    v_sets = [0] * e
    cross = set()
    for p, x, q in a.transitions:
        i, j = component_of[p], component_of[q]
        if i == j:
            v_sets[i] |= letter_bit(x)
        else:
            cross.add((i, x, j))
    # sorted by target, then source, then label (ε first)
    cross = sorted(cross, key=lambda t: (t[2], t[0], t[1]))
    cross_sets = [[] for _ in range(e)]
    cross_labels = {}
    for i, x, j in cross:
        cross_sets[j].append((i, x))
        cross_labels.setdefault((i, j), set()).add(x)
    return SccDecomposition(
        component_of=tuple(component_of),
        e=e,
        condensation_edges=frozenset((i, j) for i, _, j in cross),
        topo_order=tuple(range(e)),
        v_sets=tuple(v_sets),
        cross_sets=tuple(tuple(s) for s in cross_sets),
        cross_labels={k: frozenset(v) for k, v in cross_labels.items()},
    )


def has_unbounded_universality(d: SccDecomposition, sigma: int) -> bool:
    """Some component's internal labels cover the whole alphabet."""
    full = full_mask(sigma)
    return any(v == full for v in d.v_sets)


def dump_scc(d: SccDecomposition, sigma: int) -> str:
    lines = []
    for i in d.topo_order:
        letters = format_word(mask_to_letters(d.v_sets[i]), sigma) if d.v_sets[i] else "-"
        lines.append(f"C{i}: states {d.members(i)} V={letters}")
    for i, j in sorted(d.condensation_edges):
        labels = sorted(d.cross_labels[(i, j)])
        shown = ",".join("_" if x == EPSILON else format_word((x,), sigma) for x in labels)
        lines.append(f"C{i} -> C{j} [{shown}]")
    return "\n".join(lines)
