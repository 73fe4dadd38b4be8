"""Words over integer alphabets, arch factorization and the universality index.

Letters are the integers ``1..sigma``; a word is a tuple of letters.  The
alphabet size is always passed explicitly because the universality index of
a word depends on the alphabet it is measured against, not only on the
letters that happen to occur in it.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence

Word = tuple  # tuple[int, ...]


def full_mask(sigma: int) -> int:
    return (1 << sigma) - 1


def letter_bit(x: int) -> int:
    """Bitmask of a single letter; the empty label 0 maps to the empty mask."""
    return 0 if x == 0 else 1 << (x - 1)


def mask_to_letters(mask: int) -> tuple:
    out = []
    x = 1
    while mask:
        if mask & 1:
            out.append(x)
        mask >>= 1
        x += 1
    return tuple(out)


def letters_to_mask(letters: Iterable[int]) -> int:
    mask = 0
    for x in letters:
        mask |= letter_bit(x)
    return mask


def check_sigma(sigma: int) -> None:
    if not isinstance(sigma, int) or sigma < 1:
        raise ValueError(f"alphabet size must be a positive integer, got {sigma!r}")


def check_word(w: Sequence[int], sigma: int) -> Word:
    """Validate ``w`` against ``sigma`` and return it as a tuple."""
    check_sigma(sigma)
    w = tuple(w)
    for x in w:
        if not isinstance(x, int) or not 1 <= x <= sigma:
            raise ValueError(f"letter {x!r} out of range for alphabet size {sigma}")
    return w


def parse_word(text: str, sigma: int) -> Word:
    """Parse ``"2,1,1,2"`` or, for ``sigma <= 26``, the shortcut ``"baab"``.

    The empty string (or ``"_"``) is the empty word.
    """
    text = text.strip()
    if text in ("", "_"):
        return ()
    if "," in text or text.isdigit():
        try:
            letters = [int(tok) for tok in text.split(",")]
        except ValueError:
            raise ValueError(f"malformed word {text!r}") from None
    else:
        if sigma > 26:
            raise ValueError("letter shortcut a-z needs sigma <= 26")
        if not text.isalpha() or not text.islower():
            raise ValueError(f"malformed word {text!r}")
        letters = [ord(ch) - ord("a") + 1 for ch in text]
    return check_word(letters, sigma)


def format_word(w: Sequence[int], sigma: int) -> str:
    """Inverse of :func:`parse_word`; uses letters a-z whenever ``sigma <= 26``."""
    if not w:
        return "_"
    if sigma <= 26:
        return "".join(chr(ord("a") + x - 1) for x in w)
    return ",".join(str(x) for x in w)


def is_subsequence(u: Sequence[int], w: Sequence[int]) -> bool:
    """True iff ``u`` embeds into ``w`` preserving order (greedy scan)."""
    it = iter(w)
    return all(x in it for x in u)


@dataclass(frozen=True)
class ArchFactorization:
    arches: tuple
    rest: Word

    def join(self) -> Word:
        return tuple(itertools.chain(*self.arches, self.rest))

    def __len__(self):
        return len(self.arches)


def arch_factorize(w: Sequence[int], sigma: int) -> ArchFactorization:
    """Greedy left-to-right arch factorization of ``w`` over ``1..sigma``.

    An arch is closed at the first position where every letter of the
    alphabet has been seen since the previous arch ended; whatever is left
    over is the rest.
    """
    w = check_word(w, sigma)
    full = full_mask(sigma)
    arches = []
    start = 0
    seen = 0
    for i, x in enumerate(w):
        seen |= letter_bit(x)
        if seen == full:
            arches.append(w[start:i + 1])
            start = i + 1
            seen = 0
    return ArchFactorization(tuple(arches), w[start:])


def arch_state(w: Sequence[int], sigma: int) -> tuple:
    """``(number of arches, bitmask of the rest's alphabet)`` of ``w``."""
    full = full_mask(sigma)
    count = 0
    seen = 0
    for x in w:
        seen |= letter_bit(x)
        if seen == full:
            count += 1
            seen = 0
    return count, seen


def universality_index(w: Sequence[int], sigma: int) -> int:
    """Largest ``k`` such that every word of length ``k`` is a subsequence of ``w``."""
    return len(arch_factorize(w, sigma).arches)


def subseq_set(w: Sequence[int], k: int) -> set:
    """All length-``k`` subsequences of ``w``.  Exponential; meant for tests."""
    if k > len(w):
        return set()
    return {tuple(w[i] for i in idx) for idx in itertools.combinations(range(len(w)), k)}
