"""Printed relation families of the windowed WB_n' presentation.

Each family is written over graded labels alpha[k,mu,r] / beta[k,mu,r] and
keyed by the WB_n relator family it is derived from. Comparisons erase the
generators alpha[k,0,1] and beta[k,mu,1], which are trivial in WB_n'.
"""

from collections.abc import Callable
from dataclasses import dataclass
from itertools import product

from ..presentations.catalog import (
    BRAID_COMMUTE,
    BRAID_RELATION,
    FORBIDDEN,
    MIXED,
    MIXED_COMMUTE,
    SYM_BRAID,
    SYM_COMMUTE,
    SYM_SQUARE,
)
from ..tietze.scripts import label_fields
from ..words import Word, canonical_cyclic, free_reduce, symbol

RelationBuilder = Callable[[int, int, int, int], Word]


def alpha(k: int, mu: int, r: int) -> Word:
    return Word.letter(symbol(f"alpha[{k},{mu},{r}]"))


def beta(k: int, mu: int, r: int) -> Word:
    return Word.letter(symbol(f"beta[{k},{mu},{r}]"))


def _braid_commute(k: int, mu: int, r: int, s: int) -> Word:
    return alpha(k, mu, r) * alpha(k + 1, mu, s) * alpha(k + 1, mu, r).inverse() * alpha(k, mu, s).inverse()


def _braid(k: int, mu: int, r: int, _: int) -> Word:
    left = alpha(k, mu, r) * alpha(k + 1, mu, r + 1) * alpha(k + 2, mu, r)
    right = alpha(k, mu, r + 1) * alpha(k + 1, mu, r) * alpha(k + 2, mu, r + 1)
    return left * right.inverse()


def _sym_square(k: int, mu: int, r: int, _: int) -> Word:
    return beta(k, mu, r) * beta(k, 1 - mu, r)


def _sym_commute(k: int, mu: int, r: int, s: int) -> Word:
    return (beta(k, mu, r) * beta(k, mu, s)).power(2)


def _sym_braid(k: int, mu: int, r: int, _: int) -> Word:
    return (beta(k, mu, r) * beta(k, mu, r + 1)).power(3)


def _mixed_commute(k: int, mu: int, r: int, s: int) -> Word:
    return alpha(k, mu, r) * beta(k + 1, 1 - mu, s) * alpha(k, 1 - mu, r).inverse() * beta(k, mu, s)


def _mixed_commute_inverted(k: int, mu: int, r: int, s: int) -> Word:
    return alpha(k, mu, r) * beta(k + 1, 1 - mu, s) * alpha(k, 1 - mu, r).inverse() * beta(k, mu, s).inverse()


def _mixed(k: int, mu: int, r: int, _: int) -> Word:
    return (
        alpha(k, mu, r) * beta(k + 1, mu, r + 1) * beta(k + 1, 1 - mu, r)
        * alpha(k, mu, r + 1).inverse() * beta(k, mu, r) * beta(k, 1 - mu, r + 1)
    )


def _forbidden(k: int, mu: int, r: int, _: int) -> Word:
    return (
        alpha(k, mu, r + 1) * alpha(k + 1, mu, r) * beta(k + 2, mu, r + 1)
        * alpha(k + 1, 1 - mu, r).inverse() * alpha(k, 1 - mu, r + 1).inverse() * beta(k, mu, r)
    )


PRINTED_RELATIONS: dict[str, RelationBuilder] = {
    BRAID_COMMUTE: _braid_commute,
    BRAID_RELATION: _braid,
    SYM_SQUARE: _sym_square,
    SYM_COMMUTE: _sym_commute,
    SYM_BRAID: _sym_braid,
    MIXED_COMMUTE: _mixed_commute,
    MIXED: _mixed,
    FORBIDDEN: _forbidden,
}

# Sign readings of the mixed-commute family, checked against the oracle
MIXED_COMMUTE_VARIANTS: dict[str, RelationBuilder] = {
    "printed": _mixed_commute,
    "inverted-last-beta": _mixed_commute_inverted,
}


@dataclass(frozen=True)
class Erratum:
    """A printed family known to disagree with the derived relators.

    Failing instances with ``r >= min_r`` are reported under the erratum
    instead of failing the family.
    """

    note: str
    min_r: int = 1

    def excuses(self, r: int) -> bool:
        return r >= self.min_r


ERRATA: dict[str, Erratum] = {
    MIXED_COMMUTE: Erratum(
        note="sign of the final beta is ambiguous as printed; see mixed-commute-sign-readings",
    ),
    FORBIDDEN: Erratum(
        note="refuted by the WB_n word problem at r = 2; r = 1 matches literally",
        min_r=2,
    ),
}


def index_pairs(family: str, n: int) -> list[tuple[int, int]]:
    """(r, s) strand indices a printed family is stated for; s is 0 when unused."""
    indices = range(1, n)
    if family == BRAID_COMMUTE:
        return [(r, s) for r, s in product(indices, indices) if r < s and s - r > 1]
    if family == SYM_COMMUTE:
        return [(r, s) for r, s in product(indices, indices) if 2 <= r < s and s - r > 1]
    if family == MIXED_COMMUTE:
        return [(r, s) for r, s in product(indices, indices) if abs(r - s) > 1]
    if family == SYM_SQUARE:
        return [(r, 0) for r in indices]
    return [(r, 0) for r in range(1, n - 1)]


def is_erasable(name: str) -> bool:
    """alpha[k,0,1] and beta[k,mu,1]."""
    split = label_fields(name)
    if split is None or len(split[1]) != 3:
        return False
    head, (_, mu, r) = split
    return r == 1 and (head == "beta" or (head == "alpha" and mu == 0))


def normalize(w: Word) -> Word:
    return canonical_cyclic(free_reduce((g, e) for g, e in w.syllables if not is_erasable(g.name)))
