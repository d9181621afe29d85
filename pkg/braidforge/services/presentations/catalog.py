"""Built-in catalog of braid-like group presentations.

Generators are s1..s_{n-1} (sigma) and r1..r_{n-1} (rho). Relators are stored
in canonical order: family order first, then strand index. Equations u = v are
stored as u v^-1.
"""

import logging
from collections.abc import Callable, Iterator
from dataclasses import dataclass
from enum import Enum

from braidforge.config import FAMILY_ALIASES

from ..errors import BraidforgeError
from ..words import GeneratorSymbol, Word, free_reduce, parse_word, symbol
from .presentation import Presentation

logger = logging.getLogger(__name__)


class Family(str, Enum):
    """Catalog families."""

    BRAID = "Braid"
    SYMMETRIC = "Symmetric"
    WELDED_BRAID = "WeldedBraid"
    FLAT_VIRTUAL_BRAID = "FlatVirtualBraid"
    FLAT_WELDED_BRAID = "FlatWeldedBraid"
    EXPLICIT_FVB3_PRIME = "ExplicitFVB3Prime"
    EXPLICIT_FWB3_PRIME = "ExplicitFWB3Prime"


# Relator family tags, in catalog order
BRAID_COMMUTE = "braid-commute"
BRAID_RELATION = "braid"
FLAT = "flat"
SYM_SQUARE = "sym-square"
SYM_COMMUTE = "sym-commute"
SYM_BRAID = "sym-braid"
MIXED_COMMUTE = "mixed-commute"
MIXED = "mixed"
FORBIDDEN = "forbidden"

FLAT_FAMILIES = frozenset({Family.FLAT_VIRTUAL_BRAID, Family.FLAT_WELDED_BRAID})
EXPLICIT_FAMILIES = frozenset({Family.EXPLICIT_FVB3_PRIME, Family.EXPLICIT_FWB3_PRIME})


class InvalidFamilyError(BraidforgeError):
    """Unknown family or unusable strand count."""

    pass


@dataclass(frozen=True)
class FamilySpec:
    """A catalog family instantiated at a strand count."""

    family: Family
    strands: int = 3

    def __post_init__(self) -> None:
        if self.strands < 2:
            raise InvalidFamilyError(f"{self.family.value} needs at least 2 strands, got {self.strands}")


def sigma(i: int) -> GeneratorSymbol:
    return symbol(f"s{i}")


def rho(i: int) -> GeneratorSymbol:
    return symbol(f"r{i}")


def _word(*letters: tuple[GeneratorSymbol, int]) -> Word:
    return free_reduce(letters)


def _far_pairs(n: int, ordered: bool) -> Iterator[tuple[int, int]]:
    """Index pairs (i, j) in [1, n-1] with |i - j| > 1."""
    for i in range(1, n):
        for j in range(1, n):
            if abs(i - j) > 1 and (ordered or i < j):
                yield i, j


RelatorBuilder = Callable[[int], list[Word]]


class _WeldedRelators:
    """Relator families of WB_n, one method per family."""

    @staticmethod
    def braid_commute(n: int) -> list[Word]:
        return [
            _word((sigma(i), 1), (sigma(j), 1), (sigma(i), -1), (sigma(j), -1))
            for i, j in _far_pairs(n, ordered=False)
        ]

    @staticmethod
    def braid(n: int) -> list[Word]:
        return [
            _word(
                (sigma(i), 1), (sigma(i + 1), 1), (sigma(i), 1),
                (sigma(i + 1), -1), (sigma(i), -1), (sigma(i + 1), -1),
            )
            for i in range(1, n - 1)
        ]

    @staticmethod
    def sym_square(n: int) -> list[Word]:
        return [_word((rho(i), 2)) for i in range(1, n)]

    @staticmethod
    def sym_commute(n: int) -> list[Word]:
        return [
            _word((rho(i), 1), (rho(j), 1), (rho(i), 1), (rho(j), 1))
            for i, j in _far_pairs(n, ordered=False)
        ]

    @staticmethod
    def sym_braid(n: int) -> list[Word]:
        return [_word(*[(rho(i), 1), (rho(i + 1), 1)] * 3) for i in range(1, n - 1)]

    @staticmethod
    def mixed_commute(n: int) -> list[Word]:
        # sigma_i rho_j = rho_j sigma_i, as a commutator
        return [
            _word((sigma(i), 1), (rho(j), 1), (sigma(i), -1), (rho(j), -1))
            for i, j in _far_pairs(n, ordered=True)
        ]

    @staticmethod
    def mixed(n: int) -> list[Word]:
        return [
            _word(
                (rho(i), 1), (rho(i + 1), 1), (sigma(i), 1),
                (rho(i + 1), 1), (rho(i), 1), (sigma(i + 1), -1),
            )
            for i in range(1, n - 1)
        ]

    @staticmethod
    def forbidden(n: int) -> list[Word]:
        return [
            _word(
                (rho(i), 1), (sigma(i + 1), 1), (sigma(i), 1),
                (rho(i + 1), 1), (sigma(i), -1), (sigma(i + 1), -1),
            )
            for i in range(1, n - 1)
        ]


class _FlatRelators:
    """Relator families of FVB_n / FWB_n; sigma_i is an involution here."""

    @staticmethod
    def braid_commute(n: int) -> list[Word]:
        return [
            _word((sigma(i), 1), (sigma(j), 1), (sigma(i), 1), (sigma(j), 1))
            for i, j in _far_pairs(n, ordered=False)
        ]

    @staticmethod
    def braid(n: int) -> list[Word]:
        return [_word(*[(sigma(i), 1), (sigma(i + 1), 1)] * 3) for i in range(1, n - 1)]

    @staticmethod
    def flat(n: int) -> list[Word]:
        return [_word((sigma(i), 2)) for i in range(1, n)]

    @staticmethod
    def mixed_commute(n: int) -> list[Word]:
        return [
            _word((sigma(i), 1), (rho(j), 1), (sigma(i), 1), (rho(j), 1))
            for i, j in _far_pairs(n, ordered=True)
        ]

    @staticmethod
    def mixed(n: int) -> list[Word]:
        return [
            _word(
                (rho(i), 1), (rho(i + 1), 1), (sigma(i), 1),
                (rho(i + 1), 1), (rho(i), 1), (sigma(i + 1), 1),
            )
            for i in range(1, n - 1)
        ]

    @staticmethod
    def forbidden(n: int) -> list[Word]:
        return [
            _word(
                (rho(i), 1), (sigma(i + 1), 1), (sigma(i), 1),
                (rho(i + 1), 1), (sigma(i), 1), (sigma(i + 1), 1),
            )
            for i in range(1, n - 1)
        ]


FAMILY_RELATORS: dict[Family, list[tuple[str, RelatorBuilder]]] = {
    Family.BRAID: [
        (BRAID_COMMUTE, _WeldedRelators.braid_commute),
        (BRAID_RELATION, _WeldedRelators.braid),
    ],
    Family.SYMMETRIC: [
        (SYM_SQUARE, _WeldedRelators.sym_square),
        (SYM_COMMUTE, _WeldedRelators.sym_commute),
        (SYM_BRAID, _WeldedRelators.sym_braid),
    ],
    Family.WELDED_BRAID: [
        (BRAID_COMMUTE, _WeldedRelators.braid_commute),
        (BRAID_RELATION, _WeldedRelators.braid),
        (SYM_SQUARE, _WeldedRelators.sym_square),
        (SYM_COMMUTE, _WeldedRelators.sym_commute),
        (SYM_BRAID, _WeldedRelators.sym_braid),
        (MIXED_COMMUTE, _WeldedRelators.mixed_commute),
        (MIXED, _WeldedRelators.mixed),
        (FORBIDDEN, _WeldedRelators.forbidden),
    ],
    Family.FLAT_VIRTUAL_BRAID: [
        (BRAID_COMMUTE, _FlatRelators.braid_commute),
        (BRAID_RELATION, _FlatRelators.braid),
        (FLAT, _FlatRelators.flat),
        (SYM_SQUARE, _WeldedRelators.sym_square),
        (SYM_COMMUTE, _WeldedRelators.sym_commute),
        (SYM_BRAID, _WeldedRelators.sym_braid),
        (MIXED_COMMUTE, _FlatRelators.mixed_commute),
        (MIXED, _FlatRelators.mixed),
    ],
}
FAMILY_RELATORS[Family.FLAT_WELDED_BRAID] = FAMILY_RELATORS[Family.FLAT_VIRTUAL_BRAID] + [
    (FORBIDDEN, _FlatRelators.forbidden),
]

EXPLICIT_PRESENTATIONS: dict[Family, tuple[str, list[str], list[str]]] = {
    Family.EXPLICIT_FVB3_PRIME: (
        "FVB_3'",
        ["a", "b", "x", "y"],
        ["a^3", "b^3", "(a b)^3", "(x y)^3", "y a x b"],
    ),
    Family.EXPLICIT_FWB3_PRIME: (
        "FWB_3'",
        ["a", "b", "c", "x"],
        ["a^3", "b^3", "c^3", "a b c", "a x c (b a x)^-1", "b a x (x c b)^-1"],
    ),
}

SHORT_NAMES = {
    Family.BRAID: "B",
    Family.SYMMETRIC: "S",
    Family.WELDED_BRAID: "WB",
    Family.FLAT_VIRTUAL_BRAID: "FVB",
    Family.FLAT_WELDED_BRAID: "FWB",
}


def uses_sigma(family: Family) -> bool:
    return family is not Family.SYMMETRIC


def uses_rho(family: Family) -> bool:
    return family is not Family.BRAID


def strand_generators(family: Family, n: int) -> tuple[GeneratorSymbol, ...]:
    """s1..s_{n-1} then r1..r_{n-1}, restricted to the letters the family uses."""
    sigmas = [sigma(i) for i in range(1, n)] if uses_sigma(family) else []
    rhos = [rho(i) for i in range(1, n)] if uses_rho(family) else []
    return tuple(sigmas + rhos)


def catalog(spec: FamilySpec) -> Presentation:
    """Exact presentation of a catalog family.

    Args:
        spec: Family and strand count

    Returns:
        Presentation with relators in canonical order and family tags

    Raises:
        InvalidFamilyError: strand count below 2 (checked by FamilySpec)
    """
    if spec.family in EXPLICIT_PRESENTATIONS:
        name, gens, rels = EXPLICIT_PRESENTATIONS[spec.family]
        return Presentation(
            generators=tuple(symbol(g) for g in gens),
            relators=tuple(parse_word(r) for r in rels),
            name=name,
        )

    n = spec.strands
    relators: list[Word] = []
    families: list[str] = []
    for tag, builder in FAMILY_RELATORS[spec.family]:
        instances = builder(n)
        relators.extend(instances)
        families.extend([tag] * len(instances))

    presentation = Presentation(
        generators=strand_generators(spec.family, n),
        relators=tuple(relators),
        name=f"{SHORT_NAMES[spec.family]}_{n}",
        relator_families=tuple(families),
    )
    logger.debug(
        f"Catalog {presentation.name}: {presentation.rank} generators, "
        f"{len(presentation.relators)} relators"
    )
    return presentation


def involutive_generators(family: Family, p: Presentation) -> set[GeneratorSymbol]:
    """Generators that square to 1 in the family (rho always, sigma when flat)."""
    involutive = {g for g in p.generators if g.name.startswith("r") and g.index is not None}
    if family in FLAT_FAMILIES:
        involutive |= {g for g in p.generators if g.name.startswith("s") and g.index is not None}
    return involutive


def family_from_alias(alias: str) -> Family:
    """Resolve a CLI alias (wb, fvb, fwb3p, ...) or a full family name."""
    key = alias.strip().lower()
    if key in FAMILY_ALIASES:
        return Family(FAMILY_ALIASES[key])
    for family in Family:
        if family.value.lower() == key:
            return family
    raise InvalidFamilyError(f"Unknown family {alias!r}")
