"""3-SAT to star-free regex reduction, used to generate structured instances.

Clause ``j`` becomes letter ``j``.  Variable ``i`` contributes the block
``(T_i | F_i)`` where ``T_i`` spells the clauses made true by ``x_i = True``
and ``F_i`` those made true by ``x_i = False``.  The concatenated expression
has a 1-universal word iff the formula is satisfiable.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Sequence

from .regex import Alt, Concat, Epsilon, Letter, Regex


class DimacsError(ValueError):
    pass


@dataclass(frozen=True)
class CnfInstance:
    num_vars: int
    clauses: tuple

    def __post_init__(self):
        clauses = tuple(frozenset(c) for c in self.clauses)
        object.__setattr__(self, "clauses", clauses)
        for clause in clauses:
            if not clause:
                raise ValueError("empty clause")
            for lit in clause:
                if lit == 0 or abs(lit) > self.num_vars:
                    raise ValueError(f"literal {lit} out of range")
                if -lit in clause:
                    raise ValueError(f"clause {sorted(clause)} contains a literal and its negation")

    def satisfied_by(self, assignment: Sequence[bool]) -> bool:
        return all(any(assignment[abs(l) - 1] == (l > 0) for l in c) for c in self.clauses)


def parse_dimacs(text: str) -> CnfInstance:
    num_vars = num_clauses = None
    clauses = []
    current = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c") or line.startswith("%"):
            continue
        if line.startswith("p"):
            toks = line.split()
            if len(toks) != 4 or toks[1] != "cnf" or not toks[2].isdigit() or not toks[3].isdigit():
                raise DimacsError(f"line {lineno}: malformed problem line {line!r}")
            num_vars, num_clauses = int(toks[2]), int(toks[3])
            continue
        if num_vars is None:
            raise DimacsError(f"line {lineno}: clause before problem line")
        for tok in line.split():
            try:
                lit = int(tok)
            except ValueError:
                raise DimacsError(f"line {lineno}: bad literal {tok!r}") from None
            if lit == 0:
                if not current:
                    raise DimacsError(f"line {lineno}: empty clause")
                clauses.append(current)
                current = []
            else:
                if abs(lit) > num_vars:
                    raise DimacsError(f"line {lineno}: literal {lit} exceeds {num_vars} variables")
                current.append(lit)
    if num_vars is None:
        raise DimacsError("missing problem line")
    if current:
        clauses.append(current)
    if len(clauses) != num_clauses:
        raise DimacsError(f"problem line announces {num_clauses} clauses, found {len(clauses)}")
    try:
        return CnfInstance(num_vars, tuple(clauses))
    except ValueError as exc:
        raise DimacsError(str(exc)) from None


def to_dimacs(cnf: CnfInstance) -> str:
    lines = [f"p cnf {cnf.num_vars} {len(cnf.clauses)}"]
    for clause in cnf.clauses:
        lits = sorted(clause, key=lambda l: (abs(l), l))
        lines.append(" ".join(str(l) for l in lits) + " 0")
    return "\n".join(lines) + "\n"


def _blocks(cnf: CnfInstance, var: int) -> tuple:
    true = tuple(j for j, c in enumerate(cnf.clauses, start=1) if var in c)
    false = tuple(j for j, c in enumerate(cnf.clauses, start=1) if -var in c)
    return true, false


def _spell(letters: Sequence[int]) -> Regex:
    if not letters:
        return Epsilon()
    node = Letter(letters[-1])
    for x in reversed(letters[:-1]):
        node = Concat(Letter(x), node)
    return node


def reduce_to_regex(cnf: CnfInstance) -> tuple:
    """Returns ``(regex, sigma)`` with ``sigma`` the number of clauses."""
    if not cnf.clauses:
        raise ValueError("the reduction needs at least one clause (alphabet would be empty)")
    if cnf.num_vars < 1:
        raise ValueError("the reduction needs at least one variable")
    parts = []
    for var in range(1, cnf.num_vars + 1):
        true, false = _blocks(cnf, var)
        parts.append(Alt(_spell(true), _spell(false)))
    node = parts[-1]
    for part in reversed(parts[:-1]):
        node = Concat(part, node)
    return node, len(cnf.clauses)


def assignment_to_word(cnf: CnfInstance, assignment: Sequence[bool]) -> tuple:
    if len(assignment) != cnf.num_vars:
        raise ValueError(f"expected {cnf.num_vars} truth values, got {len(assignment)}")
    word = []
    for var, value in enumerate(assignment, start=1):
        true, false = _blocks(cnf, var)
        word.extend(true if value else false)
    return tuple(word)


def random_3sat(n: int, m: int, seed=None) -> CnfInstance:
    """``m`` clauses over 3 distinct variables each, signs uniform."""
    if m < 1 or n < 1:
        raise ValueError("need n >= 1 and m >= 1")
    if n < 3:
        raise ValueError("three distinct variables per clause need n >= 3")
    rng = random.Random(seed)
    clauses = []
    for _ in range(m):
        variables = rng.sample(range(1, n + 1), 3)
        clauses.append(tuple(v if rng.random() < 0.5 else -v for v in variables))
    return CnfInstance(n, tuple(clauses))
