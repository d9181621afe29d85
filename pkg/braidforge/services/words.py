"""Free-group words over named generator alphabets.

Words are stored in syllable form: a tuple of (generator, exponent) pairs with
adjacent generators distinct and no zero exponents. The empty tuple is the
identity. Equality is free equality only; no group relations are applied here.
"""

import logging
import re
from collections.abc import Iterable, Iterator, Mapping
from dataclasses import dataclass
from functools import lru_cache
from typing import NoReturn

from .errors import SubstitutionError, WordSyntaxError

logger = logging.getLogger(__name__)

STRAND_NAME = re.compile(r"^[sr](\d+)$")

_TOKEN = re.compile(
    r"\s*(?:"
    r"(?P<name>[A-Za-z_][A-Za-z0-9_]*(?:\[[^\]]*\])?)"
    r"|(?P<caret>\^)"
    r"|(?P<int>-?\d+)"
    r"|(?P<open>\()"
    r"|(?P<close>\))"
    r")"
)


@dataclass(frozen=True, slots=True)
class GeneratorSymbol:
    """A named generator, optionally carrying a strand index (s2 -> 2)."""

    name: str
    index: int | None = None

    def __str__(self) -> str:
        return self.name


@lru_cache(maxsize=None)
def symbol(name: str) -> GeneratorSymbol:
    """Interned generator symbol for a name.

    Names of the form ``s<i>`` / ``r<i>`` get their strand index filled in.
    """
    match = STRAND_NAME.match(name)
    index = int(match.group(1)) if match else None
    return GeneratorSymbol(name=name, index=index)


Syllable = tuple[GeneratorSymbol, int]


@dataclass(frozen=True, slots=True)
class Word:
    """Freely reduced word. Build through ``free_reduce`` or ``parse_word``."""

    syllables: tuple[Syllable, ...] = ()

    @classmethod
    def identity(cls) -> "Word":
        return cls(())

    @classmethod
    def letter(cls, generator: GeneratorSymbol, exponent: int = 1) -> "Word":
        return free_reduce([(generator, exponent)])

    @property
    def length(self) -> int:
        """Number of letters (sum of absolute exponents)."""
        return sum(abs(e) for _, e in self.syllables)

    def __len__(self) -> int:
        return self.length

    def __mul__(self, other: "Word") -> "Word":
        return free_reduce(self.syllables + other.syllables)

    def __str__(self) -> str:
        return format_word(self)

    def inverse(self) -> "Word":
        return invert(self)

    def power(self, k: int) -> "Word":
        if k < 0:
            return self.inverse().power(-k)
        return free_reduce(self.syllables * k)

    def letters(self) -> Iterator[tuple[GeneratorSymbol, int]]:
        """Yield the word letter by letter as (generator, +1 or -1)."""
        for g, e in self.syllables:
            sign = 1 if e > 0 else -1
            for _ in range(abs(e)):
                yield g, sign

    def generators(self) -> set[GeneratorSymbol]:
        return {g for g, _ in self.syllables}

    def occurrences(self, g: GeneratorSymbol) -> int:
        """Number of letters equal to g or its inverse."""
        return sum(abs(e) for h, e in self.syllables if h == g)

    def exponent_sum(self, g: GeneratorSymbol) -> int:
        return sum(e for h, e in self.syllables if h == g)

    def rotate(self, k: int) -> "Word":
        """Cyclic rotation by k letters (self must be cyclically reduced)."""
        letters = list(self.letters())
        if not letters:
            return self
        k %= len(letters)
        return free_reduce(letters[k:] + letters[:k])


def free_reduce(raw: Iterable[Syllable]) -> Word:
    """Merge equal neighbours and cancel inverse pairs.

    Args:
        raw: (generator, exponent) pairs, possibly unreduced

    Returns:
        The freely reduced word
    """
    stack: list[list] = []
    for g, e in raw:
        if e == 0:
            continue
        if stack and stack[-1][0] == g:
            stack[-1][1] += e
            if stack[-1][1] == 0:
                stack.pop()
        else:
            stack.append([g, e])
    return Word(tuple((g, e) for g, e in stack))


def invert(w: Word) -> Word:
    return Word(tuple((g, -e) for g, e in reversed(w.syllables)))


def cyclically_reduce(w: Word) -> Word:
    """Shortest cyclic conjugate of w."""
    syllables = w.syllables
    while len(syllables) >= 2 and syllables[0][0] == syllables[-1][0]:
        g = syllables[0][0]
        total = syllables[0][1] + syllables[-1][1]
        inner = syllables[1:-1]
        syllables = ((g, total),) + inner if total else inner
    return Word(syllables)


def substitute(
    w: Word, g: GeneratorSymbol, replacement: Word, single_pass: bool = False
) -> Word:
    """Replace every g^e in w by replacement^e.

    Args:
        w: Word to rewrite
        g: Generator being replaced
        replacement: Its replacement word
        single_pass: Allow g to occur in the replacement (one pass only)

    Returns:
        Freely reduced result

    Raises:
        SubstitutionError: g occurs in replacement and single_pass is not set
    """
    if not single_pass and g in replacement.generators():
        raise SubstitutionError(f"{g} occurs in its own replacement {replacement}")
    return substitute_all(w, {g: replacement})


def substitute_all(w: Word, images: Mapping[GeneratorSymbol, Word]) -> Word:
    """Simultaneous single-pass substitution; unmapped generators are kept."""
    raw: list[Syllable] = []
    for h, e in w.syllables:
        image = images.get(h)
        if image is None:
            raw.append((h, e))
            continue
        piece = image.syllables if e > 0 else invert(image).syllables
        raw.extend(piece * abs(e))
    return free_reduce(raw)


def canonical_cyclic(w: Word) -> Word:
    """Canonical representative of w up to cyclic rotation and inversion."""
    reduced = cyclically_reduce(w)
    if not reduced.syllables:
        return reduced
    best: tuple | None = None
    best_word = reduced
    for candidate in (reduced, invert(reduced)):
        letters = list(candidate.letters())
        for k in range(len(letters)):
            rotated = letters[k:] + letters[:k]
            key = tuple((g.name, s) for g, s in rotated)
            if best is None or key < best:
                best = key
                best_word = free_reduce(rotated)
    return best_word


def reduce_involutions(w: Word, involutive: Iterable[GeneratorSymbol]) -> Word:
    """Normal form when the given generators square to the identity."""
    involutions = set(involutive)
    current = w
    while True:
        raw = [(g, e % 2 if g in involutions else e) for g, e in current.syllables]
        reduced = free_reduce(raw)
        if reduced == current:
            return reduced
        current = reduced


def format_word(w: Word) -> str:
    """Text form: ``s1^2 r1 s2^-1``; the identity prints as ``1``."""
    if not w.syllables:
        return "1"
    return " ".join(g.name if e == 1 else f"{g.name}^{e}" for g, e in w.syllables)


def parse_word(text: str) -> Word:
    """Parse word text, accepting parenthesized groups with powers: ``(a b)^3 c^-1``."""
    parser = _WordParser(text)
    word = parser.parse()
    logger.debug(f"Parsed word {text!r} -> {word}")
    return word


class _WordParser:
    """Recursive-descent parser over the token regex."""

    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def parse(self) -> Word:
        word = self._sequence()
        self._skip_space()
        if self.pos != len(self.text):
            self._fail(f"unexpected {self.text[self.pos]!r}")
        return word

    def _skip_space(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def _peek(self) -> tuple[str, str] | None:
        self._skip_space()
        if self.pos >= len(self.text):
            return None
        match = _TOKEN.match(self.text, self.pos)
        if not match or match.end() == self.pos:
            self._fail(f"unexpected {self.text[self.pos]!r}")
        kind = match.lastgroup or ""
        return kind, match.group(kind)

    def _take(self) -> tuple[str, str]:
        token = self._peek()
        if token is None:
            self._fail("unexpected end of input")
        match = _TOKEN.match(self.text, self.pos)
        assert match is not None
        self.pos = match.end()
        return token

    def _fail(self, message: str) -> NoReturn:
        raise WordSyntaxError(
            f"{message} at column {self.pos + 1} in {self.text!r}", self.text, self.pos + 1
        )

    def _sequence(self) -> Word:
        raw: list[Syllable] = []
        while True:
            token = self._peek()
            if token is None or token[0] == "close":
                break
            raw.extend(self._factor().syllables)
        return free_reduce(raw)

    def _factor(self) -> Word:
        kind, value = self._take()
        if kind == "name":
            base = Word(((symbol(value), 1),))
        elif kind == "int" and value == "1":
            base = Word.identity()
        elif kind == "open":
            base = self._sequence()
            closing = self._take()
            if closing[0] != "close":
                self._fail("expected ')'")
        else:
            self._fail(f"unexpected {value!r}")
        token = self._peek()
        if token is not None and token[0] == "caret":
            self._take()
            kind, value = self._take()
            if kind != "int":
                self._fail("expected integer exponent")
            return base.power(int(value))
        return base
