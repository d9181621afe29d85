"""Action of the welded braid group on the free group F_n.

s_i: x_i -> x_i x_{i+1} x_i^-1, x_{i+1} -> x_i
r_i: x_i <-> x_{i+1}

The representation WB_n -> Aut(F_n) is faithful, so a word over s/r is the
identity in WB_n exactly when its action fixes every basis element. The
"false" answer is exact by construction; the "true" answer relies on that
faithfulness theorem. Flat quotients (FVB_n, FWB_n) do not act this way.
"""

import logging
from collections.abc import Iterable
from dataclasses import dataclass
from enum import Enum

from .errors import BraidforgeError, InvariantViolation
from .presentations import Family, FamilySpec, catalog
from .words import GeneratorSymbol, Word, format_word, substitute_all, symbol

logger = logging.getLogger(__name__)


class BasisMismatch(BraidforgeError):
    """Endomorphisms over different bases were combined."""

    pass


class InvalidLetter(BraidforgeError):
    """A letter has no action on the given basis."""

    def __init__(self, letter: GeneratorSymbol, rank: int):
        super().__init__(f"{letter} does not act on F_{rank}")
        self.letter = letter
        self.rank = rank


class CompositionOrder(str, Enum):
    """How a word's letters combine into one endomorphism.

    LEFT_TO_RIGHT: the action of u v substitutes v's images into u's images.
    RIGHT_TO_LEFT: the action of u v substitutes u's images into v's images.
    """

    LEFT_TO_RIGHT = "left-to-right"
    RIGHT_TO_LEFT = "right-to-left"


@dataclass(frozen=True)
class FreeBasis:
    """Basis x1..x_rank of a free group."""

    rank: int

    def __post_init__(self) -> None:
        if self.rank < 1:
            raise BraidforgeError(f"Free basis needs rank at least 1, got {self.rank}")

    @property
    def symbols(self) -> tuple[GeneratorSymbol, ...]:
        return tuple(symbol(f"x{i}") for i in range(1, self.rank + 1))

    def x(self, i: int) -> Word:
        return Word.letter(symbol(f"x{i}"))


@dataclass(frozen=True)
class FreeGroupEndo:
    """Endomorphism of F_n given by the images of the basis."""

    basis: FreeBasis
    images: tuple[Word, ...]

    @classmethod
    def identity(cls, basis: FreeBasis) -> "FreeGroupEndo":
        return cls(basis, tuple(Word.letter(x) for x in basis.symbols))

    def image(self, i: int) -> Word:
        """Image of x_i (1-based)."""
        return self.images[i - 1]

    def apply(self, w: Word) -> Word:
        return substitute_all(w, dict(zip(self.basis.symbols, self.images, strict=True)))

    def is_identity(self) -> bool:
        return self == FreeGroupEndo.identity(self.basis)

    def __str__(self) -> str:
        return ", ".join(
            f"{x} -> {format_word(w)}" for x, w in zip(self.basis.symbols, self.images, strict=True)
        )


def _check_letter(g: GeneratorSymbol, basis: FreeBasis) -> int:
    if g.index is None or not 1 <= g.index <= basis.rank - 1 or g.name[0] not in "sr":
        raise InvalidLetter(g, basis.rank)
    return g.index


def generator_action(g: GeneratorSymbol, basis: FreeBasis) -> FreeGroupEndo:
    """Automorphism of s_i or r_i.

    Raises:
        InvalidLetter: not s_i / r_i with 1 <= i <= rank - 1
    """
    i = _check_letter(g, basis)
    images = list(FreeGroupEndo.identity(basis).images)
    xi, xj = basis.x(i), basis.x(i + 1)
    if g.name.startswith("s"):
        images[i - 1] = xi * xj * xi.inverse()
        images[i] = xi
    else:
        images[i - 1], images[i] = xj, xi
    return FreeGroupEndo(basis, tuple(images))


def inverse_generator_action(g: GeneratorSymbol, basis: FreeBasis) -> FreeGroupEndo:
    """Automorphism of s_i^-1 or r_i^-1 (= r_i)."""
    i = _check_letter(g, basis)
    if g.name.startswith("r"):
        return generator_action(g, basis)
    images = list(FreeGroupEndo.identity(basis).images)
    xi, xj = basis.x(i), basis.x(i + 1)
    images[i - 1] = xj
    images[i] = xj.inverse() * xi * xj
    return FreeGroupEndo(basis, tuple(images))


def compose(f: FreeGroupEndo, g: FreeGroupEndo) -> FreeGroupEndo:
    """Substitute g's images into f's images: x -> g(f(x)).

    Raises:
        BasisMismatch: f and g act on different bases
    """
    if f.basis != g.basis:
        raise BasisMismatch(f"F_{f.basis.rank} vs F_{g.basis.rank}")
    return FreeGroupEndo(f.basis, tuple(g.apply(w) for w in f.images))


def action_of_word(
    w: Word, basis: FreeBasis, order: CompositionOrder = CompositionOrder.LEFT_TO_RIGHT
) -> FreeGroupEndo:
    """Endomorphism of a word over s/r letters, composed in the given order."""
    result = FreeGroupEndo.identity(basis)
    for g, sign in w.letters():
        step = generator_action(g, basis) if sign > 0 else inverse_generator_action(g, basis)
        if order is CompositionOrder.LEFT_TO_RIGHT:
            result = compose(result, step)
        else:
            result = compose(step, result)
    return result


def strands_of(w: Word) -> int:
    """Smallest strand count whose s/r letters cover w."""
    indices = [g.index for g in w.generators() if g.index is not None]
    return max(indices, default=1) + 1


def is_identity_in_WBn(
    w: Word, n: int | None = None, order: CompositionOrder = CompositionOrder.LEFT_TO_RIGHT
) -> bool:
    """Word problem in WB_n through the faithful action on F_n."""
    basis = FreeBasis(n if n is not None else strands_of(w))
    return action_of_word(w, basis, order).is_identity()


def relators_act_trivially(relators: Iterable[Word], n: int, order: CompositionOrder) -> bool:
    return all(is_identity_in_WBn(r, n, order) for r in relators)


def pin_composition_order(n: int = 3) -> CompositionOrder:
    """Composition order under which every WB_n relator acts trivially and s1^2 does not.

    Raises:
        InvariantViolation: neither order works
    """
    relators = catalog(FamilySpec(Family.WELDED_BRAID, n)).relators
    square = Word.letter(symbol("s1"), 2)
    for order in CompositionOrder:
        if relators_act_trivially(relators, n, order) and not is_identity_in_WBn(square, n, order):
            if order is not CompositionOrder.LEFT_TO_RIGHT:
                logger.warning(f"WB_{n} action only consistent with {order.value} composition")
            logger.debug(f"WB_{n} action convention: {order.value}")
            return order
    raise InvariantViolation(f"No composition order makes every WB_{n} relator act trivially")
