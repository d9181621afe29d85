"""Quotient maps onto abelian groups and Schreier transversals of their kernels.

Finite targets (Z/2 x Z/2 for the flat families) get an explicit coset table.
The Z x Z/2 target of the welded braid groups gets a graded transversal with
representatives s1^m r1^eps, m tracked exactly.
"""

import logging
from collections import deque
from dataclasses import dataclass, field
from math import prod

from .abelianize import int_matrix, invariant_factor_list, invariants_from_factors
from .errors import BraidforgeError
from .presentations import FLAT_FAMILIES, Family, Presentation, UndeclaredGeneratorError
from .words import GeneratorSymbol, Word, format_word, free_reduce, symbol

logger = logging.getLogger(__name__)

Element = tuple[int, ...]
Coset = int | tuple[int, int]


class RelatorNotKilled(BraidforgeError):
    """A relator has a nonzero image in the target."""

    def __init__(self, relator: Word, image: Element):
        super().__init__(f"Relator {relator} maps to {image}, not to zero")
        self.relator = relator
        self.image = image


class NotSurjective(BraidforgeError):
    """Generator images do not generate the target."""

    pass


class TargetShapeError(BraidforgeError):
    """The target or its images do not fit the requested construction."""

    pass


@dataclass(frozen=True)
class AbelianTarget:
    """Z^free_rank x Z/t1 x Z/t2 ..."""

    free_rank: int
    torsion: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if self.free_rank < 0:
            raise TargetShapeError("free rank must be nonnegative")
        if any(t < 2 for t in self.torsion):
            raise TargetShapeError(f"torsion entries must be at least 2: {self.torsion}")
        object.__setattr__(self, "torsion", tuple(self.torsion))

    def __str__(self) -> str:
        parts = ["Z"] * self.free_rank + [f"Z/{t}" for t in self.torsion]
        return " x ".join(parts) or "1"

    @property
    def dimension(self) -> int:
        return self.free_rank + len(self.torsion)

    @property
    def is_finite(self) -> bool:
        return self.free_rank == 0

    @property
    def order(self) -> int:
        if not self.is_finite:
            raise TargetShapeError("infinite target has no finite order")
        return prod(self.torsion)

    def zero(self) -> Element:
        return (0,) * self.dimension

    def normalize(self, v: Element) -> Element:
        if len(v) != self.dimension:
            raise TargetShapeError(f"{v} does not have {self.dimension} coordinates")
        free = tuple(v[: self.free_rank])
        return free + tuple(x % t for x, t in zip(v[self.free_rank :], self.torsion, strict=True))

    def add(self, a: Element, b: Element, times: int = 1) -> Element:
        return self.normalize(tuple(x + times * y for x, y in zip(a, b, strict=True)))


Z_X_Z2 = AbelianTarget(1, (2,))
Z2_X_Z2 = AbelianTarget(0, (2, 2))


@dataclass(frozen=True)
class QuotientMap:
    """Homomorphism from a presented group onto an abelian target. Build with make_quotient_map."""

    source: Presentation
    target: AbelianTarget
    images: dict[GeneratorSymbol, Element]

    def image(self, w: Word) -> Element:
        value = self.target.zero()
        for g, e in w.syllables:
            if g not in self.images:
                raise UndeclaredGeneratorError(f"{g} is not a generator of {self.source.name}", g.name)
            value = self.target.add(value, self.images[g], e)
        return value

    def step(self, value: Element, g: GeneratorSymbol, sign: int) -> Element:
        return self.target.add(value, self.images[g], sign)


def make_quotient_map(
    p: Presentation, target: AbelianTarget, images: dict[GeneratorSymbol, Element]
) -> QuotientMap:
    """Validated quotient map.

    Raises:
        TargetShapeError: a generator has no image or an image has the wrong shape
        RelatorNotKilled: a relator has a nonzero image
        NotSurjective: the images do not generate the target
    """
    missing = [g.name for g in p.generators if g not in images]
    if missing:
        raise TargetShapeError(f"No image for generators {', '.join(missing)}")
    normalized = {g: target.normalize(tuple(images[g])) for g in p.generators}
    q = QuotientMap(source=p, target=target, images=normalized)

    zero = target.zero()
    for relator in p.relators:
        image = q.image(relator)
        if image != zero:
            raise RelatorNotKilled(relator, image)

    # images plus torsion rows must span Z^dimension
    rows = [list(normalized[g]) for g in p.generators]
    for k, t in enumerate(target.torsion):
        row = [0] * target.dimension
        row[target.free_rank + k] = t
        rows.append(row)
    factors = invariant_factor_list(int_matrix(rows, target.dimension))
    if not invariants_from_factors(factors, target.dimension).is_trivial:
        raise NotSurjective(f"Images of {p.name or 'presentation'} generators do not generate the target")

    logger.debug(f"Quotient map {p.name} -> {target}")
    return q


def standard_quotient(p: Presentation, family: Family) -> QuotientMap:
    """Abelianization map of a catalog family: s_i -> s1-bar, r_i -> r1-bar."""
    sigmas = [g for g in p.generators if g.name.startswith("s") and g.index is not None]
    rhos = [g for g in p.generators if g.name.startswith("r") and g.index is not None]
    if family is Family.WELDED_BRAID:
        target = Z_X_Z2
        images = {g: (1, 0) for g in sigmas} | {g: (0, 1) for g in rhos}
    elif family in FLAT_FAMILIES:
        target = Z2_X_Z2
        images = {g: (1, 0) for g in sigmas} | {g: (0, 1) for g in rhos}
    elif family is Family.BRAID:
        target = AbelianTarget(1)
        images = {g: (1,) for g in sigmas}
    elif family is Family.SYMMETRIC:
        target = AbelianTarget(0, (2,))
        images = {g: (1,) for g in rhos}
    else:
        raise TargetShapeError(f"No standard quotient for {family.value}")
    return make_quotient_map(p, target, images)


@dataclass
class CosetTable:
    """Cosets 0..N-1 of the kernel (0 is the kernel itself) and the generator action."""

    elements: list[Element]
    generators: tuple[GeneratorSymbol, ...]
    action: dict[tuple[int, GeneratorSymbol, int], int] = field(default_factory=dict)

    @property
    def size(self) -> int:
        return len(self.elements)

    def act(self, coset: int, g: GeneratorSymbol, sign: int) -> int:
        return self.action[(coset, g, sign)]

    def format(self) -> str:
        header = ["coset"] + [f"{g}{'' if s > 0 else '^-1'}" for g in self.generators for s in (1, -1)]
        lines = ["\t".join(header)]
        for c in range(self.size):
            cells = [str(c)] + [str(self.act(c, g, s)) for g in self.generators for s in (1, -1)]
            lines.append("\t".join(cells))
        return "\n".join(lines)


@dataclass
class FiniteTransversal:
    """Schreier transversal read off a finite coset table."""

    quotient: QuotientMap
    table: CosetTable
    reps: list[Word]
    index_of: dict[Element, int]

    identity: Coset = 0

    def rep(self, coset: Coset) -> Word:
        assert isinstance(coset, int)
        return self.reps[coset]

    def coset_of(self, w: Word) -> Coset:
        return self.index_of[self.quotient.image(w)]

    def step(self, coset: Coset, g: GeneratorSymbol, sign: int) -> Coset:
        assert isinstance(coset, int)
        return self.table.act(coset, g, sign)

    def cosets(self) -> list[Coset]:
        """Cosets whose Schreier generators are emitted."""
        return list(range(self.table.size))

    def conjugators(self) -> list[Coset]:
        """Cosets whose representatives conjugate the relators."""
        return self.cosets()


@dataclass
class GradedTransversal:
    """Representatives s1^m r1^eps of Z x Z/2, windowed for instantiation only.

    ``window`` bounds the conjugating representatives (|m| <= window);
    Schreier generators are emitted for |m| <= window + shift, where shift is
    the largest s1-degree any relator prefix reaches.
    """

    quotient: QuotientMap
    window: int
    shift: int
    sigma: GeneratorSymbol
    rho: GeneratorSymbol

    identity: Coset = (0, 0)

    def rep(self, coset: Coset) -> Word:
        assert isinstance(coset, tuple)
        m, eps = coset
        return free_reduce([(self.sigma, m), (self.rho, eps)])

    def coset_of(self, w: Word) -> Coset:
        m, eps = self.quotient.image(w)
        return (m, eps)

    def step(self, coset: Coset, g: GeneratorSymbol, sign: int) -> Coset:
        assert isinstance(coset, tuple)
        m, eps = self.quotient.step(coset, g, sign)
        return (m, eps)

    def cosets(self) -> list[Coset]:
        radius = self.window + self.shift
        return [(m, eps) for m in range(-radius, radius + 1) for eps in (0, 1)]

    def conjugators(self) -> list[Coset]:
        return [(m, eps) for m in range(-self.window, self.window + 1) for eps in (0, 1)]


Transversal = FiniteTransversal | GradedTransversal


def coset_table(q: QuotientMap) -> tuple[CosetTable, FiniteTransversal]:
    """Coset table of ker q by breadth-first search over the target.

    Representatives come out minimal by (length, generator order), each
    inverse tried right after its generator, so the transversal is prefix-closed.

    Raises:
        TargetShapeError: infinite target (use graded_transversal)
    """
    if not q.target.is_finite:
        raise TargetShapeError(f"Target {q.target} is infinite; use graded_transversal")

    generators = q.source.generators
    zero = q.target.zero()
    elements: list[Element] = [zero]
    reps: list[Word] = [Word.identity()]
    index_of: dict[Element, int] = {zero: 0}
    action: dict[tuple[int, GeneratorSymbol, int], int] = {}

    queue = deque([0])
    while queue:
        c = queue.popleft()
        for g in generators:
            for sign in (1, -1):
                value = q.step(elements[c], g, sign)
                if value not in index_of:
                    index_of[value] = len(elements)
                    elements.append(value)
                    reps.append(reps[c] * Word.letter(g, sign))
                    queue.append(index_of[value])
                action[(c, g, sign)] = index_of[value]

    table = CosetTable(elements=elements, generators=generators, action=action)
    transversal = FiniteTransversal(quotient=q, table=table, reps=reps, index_of=index_of)
    logger.info(
        f"Coset table for {q.source.name}: {table.size} cosets, "
        f"reps {', '.join(format_word(r) for r in reps)}"
    )
    return table, transversal


def relator_shift(q: QuotientMap) -> int:
    """Largest |s1-degree| reached by any prefix of any relator."""
    shift = 0
    for relator in q.source.relators:
        value = q.target.zero()
        for g, sign in relator.letters():
            value = q.step(value, g, sign)
            shift = max(shift, abs(value[0]))
    return shift


def graded_transversal(q: QuotientMap, window: int) -> GradedTransversal:
    """Transversal s1^m r1^eps for a map onto Z x Z/2 with s1 -> (1,0), r1 -> (0,1).

    Raises:
        TargetShapeError: other target, other images or negative window
    """
    if q.target != Z_X_Z2:
        raise TargetShapeError(f"Graded transversal needs target Z x Z/2, got {q.target}")
    if window < 0:
        raise TargetShapeError(f"Window must be nonnegative, got {window}")
    sigma, rho = symbol("s1"), symbol("r1")
    if q.images.get(sigma) != (1, 0) or q.images.get(rho) != (0, 1):
        raise TargetShapeError("Graded transversal needs s1 -> (1,0) and r1 -> (0,1)")
    transversal = GradedTransversal(
        quotient=q, window=window, shift=relator_shift(q), sigma=sigma, rho=rho
    )
    logger.info(
        f"Graded transversal for {q.source.name}: window {window}, shift {transversal.shift}"
    )
    return transversal


def coset_of(t: Transversal, w: Word) -> Coset:
    return t.coset_of(w)
