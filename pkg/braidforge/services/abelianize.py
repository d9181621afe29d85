"""Exact integer linear algebra for abelianizations.

Relation matrices hold exponent sums (one row per relator, one column per
generator) as sympy ``DomainMatrix`` values over ZZ. Smith normal form gives
the abelian invariants of the presented group; entries are arbitrary
precision, so nothing wraps.
"""

import logging
from collections.abc import Iterable, Sequence
from dataclasses import dataclass

from sympy import ZZ, divisors
from sympy.polys.matrices import DomainMatrix
from sympy.polys.matrices.normalforms import hermite_normal_form, invariant_factors, smith_normal_decomp

from .errors import InvariantViolation
from .presentations import Presentation
from .words import GeneratorSymbol

logger = logging.getLogger(__name__)

IntMatrix = DomainMatrix


def int_matrix(rows: Sequence[Sequence[int]], cols: int | None = None) -> IntMatrix:
    """Integer matrix over ZZ; ``cols`` is required when there are no rows."""
    width = cols if cols is not None else (len(rows[0]) if rows else 0)
    if not rows:
        return DomainMatrix.zeros((0, width), ZZ)
    return DomainMatrix([[ZZ(x) for x in row] for row in rows], (len(rows), width), ZZ)


def entries(m: IntMatrix) -> list[list[int]]:
    return [[int(x) for x in row] for row in m.to_list()]


@dataclass
class SmithForm:
    """D = U * A * V with U, V unimodular and D diagonal."""

    D: IntMatrix
    U: IntMatrix
    V: IntMatrix

    @property
    def diagonal(self) -> list[int]:
        rows, cols = self.D.shape
        d = entries(self.D)
        return [d[i][i] for i in range(min(rows, cols))]

    @property
    def rank(self) -> int:
        return sum(1 for d in self.diagonal if d != 0)


@dataclass(frozen=True)
class AbelianInvariants:
    """Free rank plus torsion coefficients d1 | d2 | ..., each at least 2."""

    free_rank: int
    torsion: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if self.free_rank < 0:
            raise ValueError("free rank must be nonnegative")
        for a, b in zip(self.torsion, self.torsion[1:], strict=False):
            if b % a:
                raise ValueError(f"torsion {self.torsion} is not a divisibility chain")
        if any(d < 2 for d in self.torsion):
            raise ValueError(f"torsion entries must be at least 2: {self.torsion}")

    @property
    def is_trivial(self) -> bool:
        return self.free_rank == 0 and not self.torsion

    def __str__(self) -> str:
        return format_invariants(self)


def relation_matrix(p: Presentation) -> IntMatrix:
    """Exponent-sum matrix: one row per relator, one column per generator."""
    position = p.generator_position()
    rows = []
    for relator in p.relators:
        row = [0] * p.rank
        for g, e in relator.syllables:
            row[position[g]] += e
        rows.append(row)
    return int_matrix(rows, p.rank)


def _check_chain(factors: Sequence[int]) -> None:
    nonzero = [d for d in factors if d]
    if any(d < 0 for d in factors) or any(y % x for x, y in zip(nonzero, nonzero[1:], strict=False)):
        raise InvariantViolation(f"Smith diagonal {list(factors)} is not a nonnegative divisibility chain")


def smith_normal_form(a: IntMatrix) -> SmithForm:
    """Smith normal form with its unimodular transforms.

    Raises:
        InvariantViolation: U * A * V does not reproduce D
    """
    d, u, v = smith_normal_decomp(a)
    form = SmithForm(D=d, U=u, V=v)
    if entries(u.to_dense() * a.to_dense() * v.to_dense()) != entries(d):
        raise InvariantViolation(f"U*A*V != D for a {a.shape[0]}x{a.shape[1]} matrix")
    _check_chain(form.diagonal)
    return form


def invariant_factor_list(a: IntMatrix) -> list[int]:
    """Smith diagonal without the transforms, zeros last."""
    factors = [abs(int(x)) for x in invariant_factors(a)]
    _check_chain(factors)
    return factors


def invariants_from_factors(factors: Iterable[int], generators: int) -> AbelianInvariants:
    nonzero = [d for d in factors if d]
    return AbelianInvariants(
        free_rank=generators - len(nonzero),
        torsion=tuple(d for d in nonzero if d > 1),
    )


def abelian_invariants(p: Presentation) -> AbelianInvariants:
    """Abelian invariants of the group presented by p."""
    invariants = invariants_from_factors(invariant_factor_list(relation_matrix(p)), p.rank)
    logger.debug(f"Abelianized {p.name or 'presentation'}: {invariants}")
    return invariants


def format_invariants(inv: AbelianInvariants) -> str:
    """Canonical text: ``Z^1 x Z/2``; the trivial group prints as ``Z^0``."""
    parts = [f"Z^{inv.free_rank}"] if inv.free_rank else []
    parts.extend(f"Z/{d}" for d in inv.torsion)
    return " x ".join(parts) or "Z^0"


def is_perfect(p: Presentation) -> bool:
    return abelian_invariants(p).is_trivial


def generator_orders(
    p: Presentation, generators: Iterable[GeneratorSymbol] | None = None
) -> dict[GeneratorSymbol, int]:
    """Order of each generator's image in the abelianization (0 = infinite, 1 = killed).

    A finite order divides the torsion exponent, so only those multiples of
    the unit vector are tested against the Hermite basis of the relator lattice.
    """
    wanted = list(p.generators if generators is None else generators)
    if not p.relators:
        return {g: 0 for g in wanted}

    position = p.generator_position()
    a = relation_matrix(p)
    exponent = max(invariant_factor_list(a), default=1) or 1
    orders_to_try = divisors(exponent)
    basis = entries(hermite_normal_form(a.transpose()))

    orders: dict[GeneratorSymbol, int] = {}
    for g in wanted:
        orders[g] = 0
        for m in orders_to_try:
            v = [0] * p.rank
            v[position[g]] = m
            if _lattice_contains(basis, v):
                orders[g] = m
                break
    logger.debug(f"Generator orders for {p.name or 'presentation'}: {len(orders)} generators")
    return orders


def _lattice_contains(basis: list[list[int]], v: list[int]) -> bool:
    """Whether v is an integer combination of the columns of a Hermite basis.

    Each basis column is zero below its pivot row and no two columns share a
    pivot row.
    """
    v = list(v)
    rows = len(basis)
    cols = len(basis[0]) if basis else 0
    pivots = sorted(((max(i for i in range(rows) if basis[i][c]), c) for c in range(cols)), reverse=True)
    for pivot, c in pivots:
        if any(v[i] for i in range(pivot + 1, rows)):
            return False
        q, r = divmod(v[pivot], basis[pivot][c])
        if r:
            return False
        if q:
            for i in range(pivot + 1):
                v[i] -= q * basis[i][c]
    return not any(v)
