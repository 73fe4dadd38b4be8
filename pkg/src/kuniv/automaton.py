"""NFA data model, text format and normalization.

Transitions are ``(source, label, target)`` triples where label ``0`` is the
empty word and labels ``1..sigma`` are letters.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence, TextIO, Union

from .words import check_sigma, check_word

EPSILON = 0


class NfaSyntaxError(ValueError):
    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        super().__init__(message if line is None else f"line {line}: {message}")


@dataclass(frozen=True)
class Nfa:
    sigma: int
    n: int
    initial: int
    finals: frozenset
    transitions: frozenset

    def __post_init__(self):
        check_sigma(self.sigma)
        object.__setattr__(self, "finals", frozenset(self.finals))
        object.__setattr__(self, "transitions", frozenset(self.transitions))
        if self.n < 1:
            raise ValueError("an automaton needs at least one state")
        if not 0 <= self.initial < self.n:
            raise ValueError(f"initial state {self.initial} out of range")
        for q in self.finals:
            if not 0 <= q < self.n:
                raise ValueError(f"final state {q} out of range")
        for p, a, q in self.transitions:
            if not (0 <= p < self.n and 0 <= q < self.n):
                raise ValueError(f"transition ({p}, {a}, {q}) has a state out of range")
            if not 0 <= a <= self.sigma:
                raise ValueError(f"transition ({p}, {a}, {q}): letter out of range")

    @property
    def has_epsilon(self) -> bool:
        return any(a == EPSILON for _, a, _ in self.transitions)

    def successors(self) -> list:
        """``succ[p]`` is the sorted list of ``(label, target)`` leaving ``p``."""
        succ = [[] for _ in range(self.n)]
        for p, a, q in self.transitions:
            succ[p].append((a, q))
        for lst in succ:
            lst.sort()
        return succ

    def is_deterministic(self) -> bool:
        seen = set()
        for p, a, _ in self.transitions:
            if a == EPSILON or (p, a) in seen:
                return False
            seen.add((p, a))
        return True


@dataclass(frozen=True)
class NormalizedNfa(Nfa):
    """Trim NFA with a single final state that has no outgoing transitions."""

    def __post_init__(self):
        super().__post_init__()
        if len(self.finals) != 1:
            raise ValueError("a normalized NFA has exactly one final state")
        f = self.final
        if any(p == f for p, _, _ in self.transitions):
            raise ValueError("the final state of a normalized NFA has outgoing transitions")

    @property
    def final(self) -> int:
        (f,) = self.finals
        return f


def parse_nfa(source: Union[str, TextIO]) -> Nfa:
    """Read the line-oriented ``nfa ... end`` format."""
    text = source if isinstance(source, str) else source.read()
    header = {}
    transitions = set()
    started = ended = False
    lineno = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        toks = line.split()
        if ended:
            raise NfaSyntaxError("content after 'end'", lineno)
        if not started:
            if toks != ["nfa"]:
                raise NfaSyntaxError("missing header: expected 'nfa'", lineno)
            started = True
            continue
        key = toks[0]
        if key == "end" and len(toks) == 1:
            ended = True
        elif key in ("sigma", "states", "initial"):
            if len(toks) != 2 or not toks[1].isdigit():
                raise NfaSyntaxError(f"'{key}' expects one nonnegative integer", lineno)
            if key in header:
                raise NfaSyntaxError(f"duplicate '{key}'", lineno)
            header[key] = int(toks[1])
        elif key == "final":
            if len(toks) < 2 or not all(t.isdigit() for t in toks[1:]):
                raise NfaSyntaxError("'final' expects at least one state id", lineno)
            if "final" in header:
                raise NfaSyntaxError("duplicate 'final'", lineno)
            header["final"] = [int(t) for t in toks[1:]]
        elif len(toks) == 3 and all(t.isdigit() for t in toks):
            for field in ("sigma", "states", "initial", "final"):
                if field not in header:
                    raise NfaSyntaxError(f"missing header field '{field}'", lineno)
            p, a, q = map(int, toks)
            n = header["states"]
            if a > header["sigma"]:
                raise NfaSyntaxError(f"letter out of range: {a}", lineno)
            if p >= n or q >= n:
                raise NfaSyntaxError(f"state out of range in transition {p} {a} {q}", lineno)
            transitions.add((p, a, q))
        else:
            raise NfaSyntaxError(f"cannot parse {line!r}", lineno)
    if not started:
        raise NfaSyntaxError("missing header")
    for field in ("sigma", "states", "initial", "final"):
        if field not in header:
            raise NfaSyntaxError(f"missing header field '{field}'")
    if not ended:
        raise NfaSyntaxError("missing 'end'", lineno)
    if header["sigma"] < 1 or header["states"] < 1:
        raise NfaSyntaxError("sigma and states must be positive")
    n = header["states"]
    for q in [header["initial"], *header["final"]]:
        if q >= n:
            raise NfaSyntaxError(f"state out of range: {q}")
    return Nfa(header["sigma"], n, header["initial"], frozenset(header["final"]),
               frozenset(transitions))


def format_nfa(a: Nfa) -> str:
    lines = ["nfa", f"sigma {a.sigma}", f"states {a.n}", f"initial {a.initial}",
             "final " + " ".join(str(q) for q in sorted(a.finals))]
    lines += [f"{p} {x} {q}" for p, x, q in sorted(a.transitions)]
    lines.append("end")
    return "\n".join(lines) + "\n"


def _reach(n: int, start: Iterable[int], edges: Iterable[tuple]) -> list:
    adj = [[] for _ in range(n)]
    for p, q in edges:
        adj[p].append(q)
    seen = [False] * n
    queue = deque(start)
    for q in queue:
        seen[q] = True
    while queue:
        p = queue.popleft()
        for q in adj[p]:
            if not seen[q]:
                seen[q] = True
                queue.append(q)
    return seen


def _trim(sigma: int, n: int, initial: int, finals: Iterable[int],
          transitions: Iterable[tuple], cls=Nfa) -> Optional[Nfa]:
    finals = set(finals)
    transitions = list(transitions)
    fwd = _reach(n, [initial], ((p, q) for p, _, q in transitions))
    bwd = _reach(n, finals, ((q, p) for p, _, q in transitions))
    keep = [q for q in range(n) if fwd[q] and bwd[q]]
    if not fwd[initial] or not bwd[initial]:
        return None
    new_id = {q: i for i, q in enumerate(keep)}
    trans = frozenset((new_id[p], a, new_id[q]) for p, a, q in transitions
                      if p in new_id and q in new_id)
    return cls(sigma, len(keep), new_id[initial],
               frozenset(new_id[q] for q in finals if q in new_id), trans)


def trim(a: Nfa) -> Optional[Nfa]:
    """Drop states that are not accessible or not co-accessible.

    Returns ``None`` when the language is empty.  Surviving states keep their
    relative order.
    """
    return _trim(a.sigma, a.n, a.initial, a.finals, a.transitions)


def normalize(a: Nfa) -> Optional[NormalizedNfa]:
    """Trim ``a`` and route every final state by ``ε`` into a fresh sink ``f``.

    ``f`` is the last state of the result.  Returns ``None`` if ``L(a)`` is
    empty.
    """
    f = a.n
    transitions = set(a.transitions) | {(q, EPSILON, f) for q in a.finals}
    return _trim(a.sigma, a.n + 1, a.initial, [f], transitions, cls=NormalizedNfa)


def epsilon_closure(a: Nfa, states: Iterable[int], succ=None) -> frozenset:
    succ = succ if succ is not None else a.successors()
    closure = set(states)
    stack = list(closure)
    while stack:
        p = stack.pop()
        for x, q in succ[p]:
            if x == EPSILON and q not in closure:
                closure.add(q)
                stack.append(q)
    return frozenset(closure)


def remove_epsilon(a: Nfa) -> Optional[Nfa]:
    """Language-equivalent trim NFA without ``ε``-transitions.

    ``p --x--> r`` is kept for every ``q`` in the ``ε``-closure of ``p`` with
    ``q --x--> r``; ``p`` becomes final when its closure meets a final state.
    The result has a set of final states (it must, whenever the empty word is
    accepted).  Returns ``None`` for the empty language.
    """
    if not a.has_epsilon:
        return trim(a)
    succ = a.successors()
    transitions = set()
    finals = set()
    for p in range(a.n):
        closure = epsilon_closure(a, [p], succ)
        if closure & a.finals:
            finals.add(p)
        for q in closure:
            for x, r in succ[q]:
                if x != EPSILON:
                    transitions.add((p, x, r))
    return _trim(a.sigma, a.n, a.initial, finals, transitions)


def accepts(a: Nfa, w: Sequence[int]) -> bool:
    """On-the-fly subset simulation with ``ε``-closures."""
    w = check_word(w, a.sigma)
    succ = a.successors()
    current = epsilon_closure(a, [a.initial], succ)
    for x in w:
        step = {q for p in current for y, q in succ[p] if y == x}
        if not step:
            return False
        current = epsilon_closure(a, step, succ)
    return bool(current & a.finals)
