"""Presentation file format.

    name: WB_3
    gens: s1 s2 r1 r2
    rels: s1 s2 s1 s2^-1 s1^-1 s2^-1, r1^2, ...
    families: braid, sym-square, ...

``rels:`` and ``families:`` may continue on indented lines. Derived
presentations add ``trivial:`` and a ``provenance:`` block with one line per
relator: ``<k>: <family> | <source relator> | <conjugator> | <rewritten>``.
"""

import logging
import re

from ..errors import BraidforgeError, WordSyntaxError
from ..words import Word, format_word, parse_word, symbol
from .presentation import (
    Presentation,
    PresentationDocument,
    RelatorOrigin,
    UndeclaredGeneratorError,
)

logger = logging.getLogger(__name__)

KEYS = ("name", "gens", "rels", "families", "trivial", "provenance")
PROVENANCE_LINE = re.compile(r"^\s*(\d+)\s*:\s*(.*)$")


class PresentationParseError(BraidforgeError):
    """Presentation text does not follow the file format."""

    def __init__(self, message: str, line: int, column: int = 1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


def split_top_level(text: str) -> list[tuple[str, int]]:
    """Split on commas outside () and [], returning (piece, column offset)."""
    pieces: list[tuple[str, int]] = []
    depth = 0
    start = 0
    for i, ch in enumerate(text):
        if ch in "([":
            depth += 1
        elif ch in ")]":
            depth -= 1
        elif ch == "," and depth == 0:
            pieces.append((text[start:i], start))
            start = i + 1
    pieces.append((text[start:], start))
    return [(p, offset) for p, offset in pieces if p.strip()]


def _sections(text: str) -> dict[str, list[tuple[int, int, str]]]:
    """Group lines into keyed sections: key -> [(line no, column, content)]."""
    sections: dict[str, list[tuple[int, int, str]]] = {}
    current: str | None = None
    for number, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        continues = raw[:1].isspace() and current is not None
        if not continues:
            key, sep, rest = raw.partition(":")
            key = key.strip().lower()
            if not sep or key not in KEYS:
                raise PresentationParseError(f"expected one of {', '.join(KEYS)}", number)
            if key in sections:
                raise PresentationParseError(f"duplicate '{key}:' line", number)
            current = key
            sections[key] = []
            column = len(raw) - len(rest) + 1
            if rest.strip():
                sections[key].append((number, column, rest))
        else:
            assert current is not None
            sections[current].append((number, 1, raw))
    return sections


def _parse_words(
    entries: list[tuple[int, int, str]],
) -> list[tuple[Word, int]]:
    words: list[tuple[Word, int]] = []
    for number, column, content in entries:
        for piece, offset in split_top_level(content):
            try:
                words.append((parse_word(piece), number))
            except WordSyntaxError as e:
                raise PresentationParseError(
                    str(e), number, column + offset + (e.column or 1) - 1
                ) from e
    return words


def parse_document(text: str) -> PresentationDocument:
    """Parse presentation text including any provenance block.

    Raises:
        PresentationParseError: syntax error, with line and column
        UndeclaredGeneratorError: relator uses an undeclared generator
    """
    sections = _sections(text)
    if "gens" not in sections:
        raise PresentationParseError("missing 'gens:' line", 1)

    name = " ".join(c.strip() for _, _, c in sections.get("name", []))
    gen_names = [tok for _, _, c in sections["gens"] for tok in c.split()]
    generators = tuple(symbol(g) for g in gen_names)
    declared = set(generators)

    relators: list[Word] = []
    for word, number in _parse_words(sections.get("rels", [])):
        for g in word.generators():
            if g not in declared:
                raise UndeclaredGeneratorError(
                    f"line {number}: undeclared generator {g}", g.name, number
                )
        relators.append(word)

    families: tuple[str, ...] = ()
    if "families" in sections:
        families = tuple(
            p.strip() for _, _, c in sections["families"] for p, _ in split_top_level(c)
        )
        if len(families) != len(relators):
            number = sections["families"][0][0]
            raise PresentationParseError(
                f"{len(families)} families for {len(relators)} relators", number
            )

    trivial = tuple(tok for _, _, c in sections.get("trivial", []) for tok in c.split())
    provenance = tuple(_parse_provenance(sections.get("provenance", [])))

    presentation = Presentation(
        generators=generators,
        relators=tuple(relators),
        name=name,
        relator_families=families,
    )
    if provenance and len(provenance) != len(presentation.relators):
        raise PresentationParseError(
            f"{len(provenance)} provenance lines for {len(presentation.relators)} relators",
            sections["provenance"][0][0],
        )
    return PresentationDocument(presentation=presentation, provenance=provenance, trivial=trivial)


def _parse_provenance(entries: list[tuple[int, int, str]]) -> list[RelatorOrigin]:
    origins: list[RelatorOrigin] = []
    for number, _, content in entries:
        match = PROVENANCE_LINE.match(content)
        if not match:
            raise PresentationParseError("expected '<k>: family | relator | conjugator'", number)
        fields = [f.strip() for f in match.group(2).split("|")]
        if len(fields) not in (3, 4):
            raise PresentationParseError("provenance needs 3 or 4 '|' separated fields", number)
        try:
            words = [parse_word(f) for f in fields[1:]]
        except WordSyntaxError as e:
            raise PresentationParseError(str(e), number) from e
        origins.append(
            RelatorOrigin(
                family=fields[0],
                source=words[0],
                conjugator=words[1],
                rewritten=words[2] if len(words) == 3 else Word.identity(),
            )
        )
    return origins


def parse_presentation(text: str) -> Presentation:
    return parse_document(text).presentation


def serialize_document(document: PresentationDocument) -> str:
    """Text form of a presentation document; parse_document reads it back."""
    p = document.presentation
    lines = []
    if p.name:
        lines.append(f"name: {p.name}")
    lines.append(f"gens: {' '.join(g.name for g in p.generators)}")
    if p.relators:
        lines.append("rels:")
        body = [f"  {format_word(r)}" for r in p.relators]
        lines.extend(line + "," for line in body[:-1])
        lines.append(body[-1])
        lines.append(f"families: {', '.join(p.relator_families)}")
    else:
        lines.append("rels:")
    if document.trivial:
        lines.append(f"trivial: {' '.join(document.trivial)}")
    if document.provenance:
        lines.append("provenance:")
        for k, origin in enumerate(document.provenance, start=1):
            lines.append(
                f"  {k}: {origin.family} | {format_word(origin.source)} | "
                f"{format_word(origin.conjugator)} | {format_word(origin.rewritten)}"
            )
    return "\n".join(lines) + "\n"


def serialize_presentation(p: Presentation) -> str:
    return serialize_document(PresentationDocument(presentation=p))
