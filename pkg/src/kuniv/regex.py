"""Regular expressions: parsing, star-free reduction and Thompson's construction.

Concrete syntax: letters ``a``-``z`` (``<n>`` names letter ``n`` directly),
``|`` for alternation, juxtaposition for concatenation, postfix ``*``,
parentheses, ``_`` for the empty word and ``#`` for the empty language.
Whitespace is ignored.  Precedence is star, then concatenation, then
alternation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Union

from .automaton import EPSILON, Nfa, normalize
from .sigma_dp import max_universality_sigma
from .words import check_sigma, full_mask, letter_bit, mask_to_letters


class RegexSyntaxError(ValueError):
    def __init__(self, message: str, position: int):
        self.position = position
        super().__init__(f"{message} at position {position}")


@dataclass(frozen=True)
class Empty:
    pass


@dataclass(frozen=True)
class Epsilon:
    pass


@dataclass(frozen=True)
class Letter:
    letter: int


@dataclass(frozen=True)
class Concat:
    left: "Regex"
    right: "Regex"


@dataclass(frozen=True)
class Alt:
    left: "Regex"
    right: "Regex"


@dataclass(frozen=True)
class Star:
    inner: "Regex"


Regex = Union[Empty, Epsilon, Letter, Concat, Alt, Star]


class _Parser:
    def __init__(self, text: str, sigma: int):
        self.toks = [(i, ch) for i, ch in enumerate(text) if not ch.isspace()]
        self.pos = 0
        self.sigma = sigma
        self.end = len(text)

    def peek(self):
        return self.toks[self.pos][1] if self.pos < len(self.toks) else None

    def where(self):
        return self.toks[self.pos][0] if self.pos < len(self.toks) else self.end

    def parse(self) -> Regex:
        node = self.alternation()
        if self.peek() is not None:
            raise RegexSyntaxError(f"unexpected {self.peek()!r}", self.where())
        return node

    def alternation(self) -> Regex:
        node = self.concatenation()
        while self.peek() == "|":
            self.pos += 1
            node = Alt(node, self.concatenation())
        return node

    def concatenation(self) -> Regex:
        parts = []
        while self.peek() is not None and self.peek() not in "|)":
            parts.append(self.starred())
        if not parts:
            raise RegexSyntaxError("empty operand (write '_' for the empty word)", self.where())
        node = parts[-1]
        for part in reversed(parts[:-1]):
            node = Concat(part, node)
        return node

    def starred(self) -> Regex:
        node = self.atom()
        while self.peek() == "*":
            self.pos += 1
            node = Star(node)
        return node

    def atom(self) -> Regex:
        at = self.where()
        ch = self.peek()
        if ch is None:
            raise RegexSyntaxError("unexpected end of expression", at)
        self.pos += 1
        if ch == "(":
            node = self.alternation()
            if self.peek() != ")":
                raise RegexSyntaxError("missing ')'", self.where())
            self.pos += 1
            return node
        if ch == "_":
            return Epsilon()
        if ch == "#":
            return Empty()
        if ch == "<":
            digits = ""
            while self.peek() is not None and self.peek().isdigit():
                digits += self.peek()
                self.pos += 1
            if not digits or self.peek() != ">":
                raise RegexSyntaxError("malformed letter '<n>'", at)
            self.pos += 1
            return self.letter(int(digits), at)
        if "a" <= ch <= "z":
            return self.letter(ord(ch) - ord("a") + 1, at)
        raise RegexSyntaxError(f"unexpected {ch!r}", at)

    def letter(self, x: int, at: int) -> Letter:
        if not 1 <= x <= self.sigma:
            raise RegexSyntaxError(f"letter {x} outside alphabet of size {self.sigma}", at)
        return Letter(x)


def parse_regex(text: str, sigma: int) -> Regex:
    check_sigma(sigma)
    return _Parser(text, sigma).parse()


def to_text(r: Regex, sigma: int = 26) -> str:
    """Render with the minimal parentheses the precedence rules need."""

    def letter(x):
        return chr(ord("a") + x - 1) if sigma <= 26 else f"<{x}>"

    def go(node, ctx):
        # ctx: 0 alternation, 1 concatenation, 2 star operand
        if isinstance(node, Empty):
            return "#"
        if isinstance(node, Epsilon):
            return "_"
        if isinstance(node, Letter):
            return letter(node.letter)
        if isinstance(node, Star):
            return go(node.inner, 2) + "*"
        if isinstance(node, Concat):
            s = go(node.left, 1) + go(node.right, 1)
            return f"({s})" if ctx > 1 else s
        s = go(node.left, 0) + "|" + go(node.right, 0)
        return f"({s})" if ctx > 0 else s

    return go(r, 0)


def size(r: Regex) -> int:
    """Number of AST nodes."""
    if isinstance(r, (Concat, Alt)):
        return 1 + size(r.left) + size(r.right)
    if isinstance(r, Star):
        return 1 + size(r.inner)
    return 1


def letters_mask(r: Regex) -> int:
    """Bitmask of letters occurring syntactically in ``r``."""
    if isinstance(r, Letter):
        return letter_bit(r.letter)
    if isinstance(r, (Concat, Alt)):
        return letters_mask(r.left) | letters_mask(r.right)
    if isinstance(r, Star):
        return letters_mask(r.inner)
    return 0


def prune_empty(r: Regex) -> Regex:
    """Equivalent expression that is either ``Empty()`` or free of ``Empty``.

    After pruning every subexpression denotes a nonempty language and lies in a
    nonempty context, so syntactic letter sets coincide with the letters that
    actually occur in words.
    """
    if isinstance(r, Concat):
        left, right = prune_empty(r.left), prune_empty(r.right)
        if isinstance(left, Empty) or isinstance(right, Empty):
            return Empty()
        return Concat(left, right)
    if isinstance(r, Alt):
        left, right = prune_empty(r.left), prune_empty(r.right)
        if isinstance(left, Empty):
            return right
        if isinstance(right, Empty):
            return left
        return Alt(left, right)
    if isinstance(r, Star):
        inner = prune_empty(r.inner)
        return Epsilon() if isinstance(inner, Empty) else Star(inner)
    return r


def _stars(r: Regex):
    if isinstance(r, Star):
        yield r
        yield from _stars(r.inner)
    elif isinstance(r, (Concat, Alt)):
        yield from _stars(r.left)
        yield from _stars(r.right)


def regex_unbounded(r: Regex, sigma: int) -> bool:
    """Does some starred subexpression cover the whole alphabet?"""
    full = full_mask(sigma)
    return any(letters_mask(s.inner) == full for s in _stars(prune_empty(r)))


def _block(letters: tuple) -> Regex:
    if not letters:
        return Epsilon()
    node = Letter(letters[-1])
    for x in reversed(letters[:-1]):
        node = Concat(Letter(x), node)
    return node


def star_free_reduce(r: Regex, sigma: int) -> Regex:
    """Replace each outermost ``(U)*`` by ``u u`` where ``u`` lists the letters
    of ``U`` in increasing order.

    The maximum universality index over the language is unchanged as long as
    no starred body covers the alphabet.
    """
    r = prune_empty(r)
    if regex_unbounded(r, sigma):
        raise ValueError("expression has a star covering the alphabet; no star-free "
                         "equivalent preserves the maximum universality index")

    def go(node):
        if isinstance(node, Star):
            u = _block(mask_to_letters(letters_mask(node.inner)))
            return u if isinstance(u, Epsilon) else Concat(u, u)
        if isinstance(node, Concat):
            return Concat(go(node.left), go(node.right))
        if isinstance(node, Alt):
            return Alt(go(node.left), go(node.right))
        return node

    return go(r)


def is_star_free(r: Regex) -> bool:
    return next(_stars(r), None) is None


def thompson(r: Regex, sigma: int) -> Nfa:
    """Thompson's construction; one fresh initial and final state per node."""
    check_sigma(sigma)
    transitions = []
    count = 0

    def new():
        nonlocal count
        count += 1
        return count - 1

    def build(node):
        s, t = new(), new()
        if isinstance(node, Letter):
            transitions.append((s, node.letter, t))
        elif isinstance(node, Epsilon):
            transitions.append((s, EPSILON, t))
        elif isinstance(node, Concat):
            s1, t1 = build(node.left)
            s2, t2 = build(node.right)
            transitions.extend([(s, EPSILON, s1), (t1, EPSILON, s2), (t2, EPSILON, t)])
        elif isinstance(node, Alt):
            for part in (node.left, node.right):
                s1, t1 = build(part)
                transitions.extend([(s, EPSILON, s1), (t1, EPSILON, t)])
        elif isinstance(node, Star):
            s1, t1 = build(node.inner)
            transitions.extend([(s, EPSILON, s1), (t1, EPSILON, t),
                                (s, EPSILON, t), (t1, EPSILON, s1)])
        return s, t

    start, end = build(r)
    return Nfa(sigma, count, start, frozenset([end]), frozenset(transitions))


def max_universality_regex(r: Union[str, Regex], sigma: int):
    """``math.inf`` if unbounded, ``None`` for the empty language, else the maximum."""
    if isinstance(r, str):
        r = parse_regex(r, sigma)
    r = prune_empty(r)
    if isinstance(r, Empty):
        return None
    if regex_unbounded(r, sigma):
        return math.inf
    return max_universality_sigma(normalize(thompson(star_free_reduce(r, sigma), sigma)))


def k_esu_regex(r: Union[str, Regex], sigma: int, k: int) -> bool:
    best = max_universality_regex(r, sigma)
    return best is not None and best >= k
