"""Finitely presented group values."""

import logging
from collections.abc import Sequence
from dataclasses import dataclass, field

from ..errors import BraidforgeError
from ..words import GeneratorSymbol, Word, cyclically_reduce, free_reduce

logger = logging.getLogger(__name__)

PRESENTED = "presented"


class UndeclaredGeneratorError(BraidforgeError):
    """A relator uses a generator missing from the generator list."""

    def __init__(self, message: str, name: str, line: int | None = None):
        super().__init__(message)
        self.name = name
        self.line = line


@dataclass(frozen=True)
class Presentation:
    """Generators plus relators (each relator r meaning r = 1).

    Relators are normalized on construction: cyclically reduced, identity
    relators dropped. ``relator_families`` tags each relator with the family
    it came from and stays aligned with ``relators``.
    """

    generators: tuple[GeneratorSymbol, ...]
    relators: tuple[Word, ...] = ()
    name: str = ""
    relator_families: tuple[str, ...] = ()

    def __post_init__(self) -> None:
        families = self.relator_families or (PRESENTED,) * len(self.relators)
        if len(families) != len(self.relators):
            raise BraidforgeError(
                f"{len(families)} family tags for {len(self.relators)} relators"
            )
        if len(set(self.generators)) != len(self.generators):
            raise BraidforgeError(f"Duplicate generator in {self.name or 'presentation'}")

        declared = set(self.generators)
        relators: list[Word] = []
        kept_families: list[str] = []
        for relator, family in zip(self.relators, families, strict=True):
            for g in relator.generators():
                if g not in declared:
                    raise UndeclaredGeneratorError(
                        f"Relator {relator} uses undeclared generator {g}", g.name
                    )
            reduced = cyclically_reduce(relator)
            if reduced.syllables:
                relators.append(reduced)
                kept_families.append(family)

        object.__setattr__(self, "generators", tuple(self.generators))
        object.__setattr__(self, "relators", tuple(relators))
        object.__setattr__(self, "relator_families", tuple(kept_families))

    @property
    def rank(self) -> int:
        return len(self.generators)

    def generator_position(self) -> dict[GeneratorSymbol, int]:
        """Column index of each generator."""
        return {g: i for i, g in enumerate(self.generators)}

    def with_relators(
        self, relators: Sequence[Word], families: Sequence[str] | None = None
    ) -> "Presentation":
        return Presentation(
            generators=self.generators,
            relators=tuple(relators),
            name=self.name,
            relator_families=tuple(families) if families is not None else (),
        )

    def without_generator(
        self, g: GeneratorSymbol, relators: Sequence[Word], families: Sequence[str]
    ) -> "Presentation":
        return Presentation(
            generators=tuple(h for h in self.generators if h != g),
            relators=tuple(relators),
            name=self.name,
            relator_families=tuple(families),
        )

    def total_length(self) -> int:
        return sum(r.length for r in self.relators)


def trivial_presentation(name: str = "trivial") -> Presentation:
    return Presentation(generators=(), relators=(), name=name)


@dataclass(frozen=True)
class RelatorOrigin:
    """Where a derived relator came from: tau(conjugator * source * conjugator^-1)."""

    family: str
    source: Word
    conjugator: Word
    rewritten: Word = field(default_factory=Word.identity)

    def conjugate(self) -> Word:
        return free_reduce(
            self.conjugator.syllables + self.source.syllables + self.conjugator.inverse().syllables
        )


@dataclass(frozen=True)
class PresentationDocument:
    """A presentation as read from or written to a file."""

    presentation: Presentation
    provenance: tuple[RelatorOrigin, ...] = ()
    trivial: tuple[str, ...] = ()
