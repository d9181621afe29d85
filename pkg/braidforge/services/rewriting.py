"""Reidemeister-Schreier rewriting.

Schreier generators S(c, a) = rep(c) a rep(c a)^-1 generate the kernel of a
quotient map. The rewriting process tau translates a kernel word letter by
letter into these generators; the derived presentation has one relator
tau(l r l^-1) per source relator r and conjugating representative l.
"""

import logging
from collections.abc import Iterable
from dataclasses import dataclass, field

from .errors import BraidforgeError, InvariantViolation
from .presentations import (
    Family,
    FamilySpec,
    Presentation,
    PresentationDocument,
    RelatorOrigin,
    catalog,
)
from .quotients import (
    Coset,
    GradedTransversal,
    Transversal,
    coset_table,
    graded_transversal,
    standard_quotient,
)
from .words import (
    GeneratorSymbol,
    Word,
    canonical_cyclic,
    cyclically_reduce,
    format_word,
    free_reduce,
    substitute_all,
    symbol,
)

logger = logging.getLogger(__name__)

# Letter pairs (sigma, rho) for the index-4 transversal {1, s1, r1, s1 r1}
FINITE_LABELS = {
    "1": ("a", "b"),
    "r1": ("c", "d"),
    "s1": ("e", "f"),
    "s1 r1": ("g", "h"),
}


class WordNotInKernel(BraidforgeError):
    """tau was asked to rewrite a word outside the kernel."""

    def __init__(self, word: Word, coset: Coset):
        super().__init__(f"{word} lies in coset {coset}, not in the kernel")
        self.word = word
        self.coset = coset


class MissingWindowError(BraidforgeError):
    """Graded derivation requested without a window."""

    pass


@dataclass(frozen=True)
class SchreierGenerator:
    """S(coset, letter) with its expansion in the ambient generators."""

    label: str
    coset: Coset
    letter: GeneratorSymbol
    expansion: Word

    @property
    def symbol(self) -> GeneratorSymbol:
        return symbol(self.label)

    @property
    def trivial(self) -> bool:
        return not self.expansion.syllables


def schreier_label(t: Transversal, coset: Coset, letter: GeneratorSymbol) -> str:
    if isinstance(t, GradedTransversal):
        assert isinstance(coset, tuple)
        m, eps = coset
        if letter.index is not None:
            name = "alpha" if letter.name.startswith("s") else "beta"
            return f"{name}[{m},{eps},{letter.index}]"
    rep = format_word(t.rep(coset))
    if rep in FINITE_LABELS and letter.index is not None:
        sigma_label, rho_label = FINITE_LABELS[rep]
        prefix = sigma_label if letter.name.startswith("s") else rho_label
        return f"{prefix}{letter.index}"
    return f"S[{rep.replace(' ', '.')},{letter.name}]"


class SchreierSystem:
    """Schreier generators of a transversal, built on demand and cached."""

    def __init__(self, transversal: Transversal, presentation: Presentation):
        self.transversal = transversal
        self.presentation = presentation
        self._cache: dict[tuple[Coset, GeneratorSymbol], SchreierGenerator] = {}

    def generator(self, coset: Coset, letter: GeneratorSymbol) -> SchreierGenerator:
        key = (coset, letter)
        if key not in self._cache:
            t = self.transversal
            after = t.step(coset, letter, 1)
            expansion = t.rep(coset) * Word.letter(letter) * t.rep(after).inverse()
            self._cache[key] = SchreierGenerator(
                label=schreier_label(t, coset, letter),
                coset=coset,
                letter=letter,
                expansion=expansion,
            )
        return self._cache[key]

    def generators(self) -> list[SchreierGenerator]:
        """Generators for every emitted coset, cosets first, then letters in order."""
        return [
            self.generator(c, g) for c in self.transversal.cosets() for g in self.presentation.generators
        ]

    def tau(self, w: Word) -> Word:
        """Rewrite a kernel word; trivial generators are erased.

        Raises:
            WordNotInKernel: w does not lie in the kernel
        """
        t = self.transversal
        end = t.coset_of(w)
        if end != t.identity:
            raise WordNotInKernel(w, end)

        coset = t.identity
        raw: list[tuple[GeneratorSymbol, int]] = []
        for letter, sign in w.letters():
            if sign > 0:
                s = self.generator(coset, letter)
                coset = t.step(coset, letter, 1)
            else:
                coset = t.step(coset, letter, -1)
                s = self.generator(coset, letter)
            if not s.trivial:
                raw.append((s.symbol, sign))
        return free_reduce(raw)


def schreier_generators(t: Transversal, p: Presentation) -> list[SchreierGenerator]:
    return SchreierSystem(t, p).generators()


def rewrite_tau(t: Transversal, w: Word) -> Word:
    return SchreierSystem(t, t.quotient.source).tau(w)


@dataclass
class DerivedPresentation:
    """Presentation of a kernel over Schreier generator labels."""

    base: Presentation
    origins: tuple[RelatorOrigin, ...]
    trivial_generators: tuple[str, ...]
    generators: dict[str, SchreierGenerator]
    transversal: Transversal
    slots: int = 0
    window: int | None = field(default=None)

    def expansion_images(self) -> dict[GeneratorSymbol, Word]:
        return {symbol(label): s.expansion for label, s in self.generators.items()}

    def to_document(self) -> PresentationDocument:
        return PresentationDocument(
            presentation=self.base, provenance=self.origins, trivial=self.trivial_generators
        )


def expand_labels(w: Word, derived: DerivedPresentation) -> Word:
    """Map a word over Schreier labels back to the ambient generators."""
    return substitute_all(w, derived.expansion_images())


def derived_presentation(t: Transversal, p: Presentation | None = None) -> DerivedPresentation:
    """Relators tau(l r l^-1) for every relator r and conjugating representative l.

    Relators equal up to rotation and inversion are merged, keeping the first
    origin. Origins record the raw rewritten word before cyclic reduction.
    """
    source = p or t.quotient.source
    system = SchreierSystem(t, source)
    emitted = system.generators()
    trivial = tuple(s.label for s in emitted if s.trivial)
    base_generators = tuple(s.symbol for s in emitted if not s.trivial)

    relators: list[Word] = []
    families: list[str] = []
    origins: list[RelatorOrigin] = []
    seen: set[Word] = set()
    slots = 0
    for relator, family in zip(source.relators, source.relator_families, strict=True):
        for coset in t.conjugators():
            slots += 1
            conjugator = t.rep(coset)
            conjugate = conjugator * relator * conjugator.inverse()
            rewritten = system.tau(conjugate)
            reduced = cyclically_reduce(rewritten)
            if not reduced.syllables:
                continue
            key = canonical_cyclic(reduced)
            if key in seen:
                continue
            seen.add(key)
            relators.append(reduced)
            families.append(family)
            origins.append(
                RelatorOrigin(family=family, source=relator, conjugator=conjugator, rewritten=rewritten)
            )

    undeclared = {g for r in relators for g in r.generators()} - set(base_generators)
    if undeclared:
        raise InvariantViolation(
            f"Rewritten relators leave the generator window: {sorted(g.name for g in undeclared)}"
        )

    base = Presentation(
        generators=base_generators,
        relators=tuple(relators),
        name=f"{source.name}'",
        relator_families=tuple(families),
    )
    derived = DerivedPresentation(
        base=base,
        origins=tuple(origins),
        trivial_generators=trivial,
        generators={s.label: s for s in emitted},
        transversal=t,
        slots=slots,
        window=t.window if isinstance(t, GradedTransversal) else None,
    )
    logger.info(
        f"Derived {base.name}: {len(emitted)} Schreier generators ({len(trivial)} trivial), "
        f"{slots} relator slots, {len(relators)} relators after dedup"
    )
    return derived


def derive(family: Family, n: int, window: int | None = None) -> DerivedPresentation:
    """catalog -> standard quotient -> transversal -> derived presentation.

    Raises:
        MissingWindowError: infinite-index family without a window
    """
    p = catalog(FamilySpec(family, n))
    q = standard_quotient(p, family)
    t: Transversal
    if q.target.is_finite:
        _, t = coset_table(q)
    else:
        if window is None:
            raise MissingWindowError(f"{p.name} has infinite index quotient; a window is required")
        t = graded_transversal(q, window)
    return derived_presentation(t, p)


def telescopes(derived: DerivedPresentation) -> Iterable[tuple[RelatorOrigin, bool]]:
    """Each origin with whether its rewritten word expands back to the conjugate."""
    images = derived.expansion_images()
    for origin in derived.origins:
        yield origin, substitute_all(origin.rewritten, images) == origin.conjugate()

