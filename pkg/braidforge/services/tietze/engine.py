"""Tietze transformations and script replay.

Every move is validated when it runs: a generator is only eliminated through a
relator where it occurs exactly once, so a replayed script is a checked
derivation rather than a trusted transcript.
"""

import logging
from collections.abc import Sequence
from dataclasses import dataclass, field

from ..abelianize import abelian_invariants
from ..errors import BraidforgeError, InvariantViolation
from ..presentations import Presentation
from ..words import (
    GeneratorSymbol,
    Word,
    canonical_cyclic,
    format_word,
    free_reduce,
    substitute,
    symbol,
)
from .scripts import MoveKind, TietzeMove, TietzeScript, label_fields

logger = logging.getLogger(__name__)

# Graded generators with |k| above window - BOUNDARY_MARGIN are boundary artifacts
BOUNDARY_MARGIN = 2


class NotSolvable(BraidforgeError):
    """The chosen relator does not define the generator."""

    pass


class UnknownGenerator(BraidforgeError):
    """The generator is not in the presentation."""

    pass


class MoveInvalid(BraidforgeError):
    """A script move failed validation."""

    def __init__(self, step: int, reason: str):
        super().__init__(f"step {step}: {reason}")
        self.step = step
        self.reason = reason


@dataclass
class TietzeResult:
    """Outcome of a simplification or script replay."""

    presentation: Presentation
    script: TietzeScript
    boundary: list[str] = field(default_factory=list)


def _lookup(p: Presentation, name: str) -> GeneratorSymbol:
    g = symbol(name)
    if g not in p.generators:
        raise UnknownGenerator(f"{name} is not a generator of {p.name or 'the presentation'}")
    return g


def _relator_at(p: Presentation, index: int) -> Word:
    if not 0 <= index < len(p.relators):
        raise NotSolvable(f"relator index {index} out of range (0..{len(p.relators) - 1})")
    return p.relators[index]


def solve_for(relator: Word, g: GeneratorSymbol) -> Word:
    """Expression for g from a relator containing it exactly once.

    Raises:
        NotSolvable: g occurs zero or several times, or with exponent other than +-1
    """
    if relator.occurrences(g) != 1:
        raise NotSolvable(f"{g} occurs {relator.occurrences(g)} times in {relator}")
    letters = list(relator.letters())
    k = next(i for i, (h, _) in enumerate(letters) if h == g)
    rotated = letters[k:] + letters[:k]
    sign = rotated[0][1]
    rest = free_reduce(rotated[1:])
    # g^sign rest = 1
    return rest.inverse() if sign > 0 else rest


def eliminate_generator(p: Presentation, generator: str | GeneratorSymbol, relator_index: int) -> Presentation:
    """Remove a generator using the relator at relator_index as its definition.

    The defining relator is dropped and the solved expression substituted
    into every other relator. Relators that become the identity are dropped.

    Raises:
        UnknownGenerator: generator not in p
        NotSolvable: relator does not contain it exactly once
    """
    g = _lookup(p, generator.name if isinstance(generator, GeneratorSymbol) else generator)
    definition = solve_for(_relator_at(p, relator_index), g)
    relators = []
    families = []
    for i, (relator, family) in enumerate(zip(p.relators, p.relator_families, strict=True)):
        if i == relator_index:
            continue
        relators.append(substitute(relator, g, definition))
        families.append(family)
    logger.debug(f"Eliminated {g} := {format_word(definition)} using relator {relator_index}")
    return p.without_generator(g, relators, families)


def add_relator(p: Presentation, word: Word, sources: Sequence[tuple[int, int]] = (), family: str = "presented") -> Presentation:
    """Append a consequence of existing relators.

    The word must agree, up to rotation and inversion, with the product of the
    listed relators (index, +1 or -1), or with one relator when none are listed.

    Raises:
        NotSolvable: the word is not certified by the sources
    """
    target = canonical_cyclic(word)
    if sources:
        product = Word.identity()
        for index, sign in sources:
            product = product * _relator_at(p, index).power(sign)
        certified = canonical_cyclic(product) == target
    else:
        certified = not target.syllables or any(canonical_cyclic(r) == target for r in p.relators)
    if not certified:
        raise NotSolvable(f"{format_word(word)} is not certified as a consequence")
    return p.with_relators(p.relators + (word,), p.relator_families + (family,))


def remove_redundant_relator(p: Presentation, index: int) -> Presentation:
    """Drop a relator that repeats another one up to rotation and inversion.

    Raises:
        NotSolvable: no other relator certifies it
    """
    relator = _relator_at(p, index)
    key = canonical_cyclic(relator)
    if not any(i != index and canonical_cyclic(r) == key for i, r in enumerate(p.relators)):
        raise NotSolvable(f"relator {index} ({relator}) is not a duplicate of another relator")
    keep = [i for i in range(len(p.relators)) if i != index]
    return p.with_relators([p.relators[i] for i in keep], [p.relator_families[i] for i in keep])


def simplify_relators(p: Presentation) -> Presentation:
    """Cyclically reduced, identity-free relators with duplicates merged (first kept)."""
    seen: set[Word] = set()
    relators = []
    families = []
    for relator, family in zip(p.relators, p.relator_families, strict=True):
        key = canonical_cyclic(relator)
        if not key.syllables or key in seen:
            continue
        seen.add(key)
        relators.append(relator)
        families.append(family)
    return p.with_relators(relators, families)


def _check_invariants(before: Presentation, after: Presentation, move: TietzeMove | str) -> None:
    if abelian_invariants(before) != abelian_invariants(after):
        raise InvariantViolation(f"Move {move} changed the abelian invariants")


def _elimination_candidates(p: Presentation) -> list[tuple[int, int, int, GeneratorSymbol]]:
    """(relator length, generator position, relator index, generator) for single occurrences."""
    position = p.generator_position()
    candidates = []
    for index, relator in enumerate(p.relators):
        for g in relator.generators():
            if relator.occurrences(g) == 1:
                candidates.append((relator.length, position[g], index, g))
    return sorted(candidates, key=lambda c: c[:3])


def simplify(p: Presentation, budget: int = 500, check_invariants: bool = False) -> TietzeResult:
    """Greedy simplification within a move budget.

    Eliminations are tried shortest defining relator first, ties by generator
    order, and accepted only when total relator length does not grow.
    """
    script = TietzeScript(name="simplify")
    current = p
    cleaned = simplify_relators(current)
    if cleaned.relators != current.relators and budget > 0:
        script.moves.append(TietzeMove(kind=MoveKind.SIMPLIFY))
        current = cleaned

    while len(script.moves) < budget:
        step = None
        for _, _, index, g in _elimination_candidates(current):
            eliminated = eliminate_generator(current, g, index)
            candidate = simplify_relators(eliminated)
            if candidate.total_length() <= current.total_length():
                step = (TietzeMove.eliminate(g.name, index), eliminated, candidate)
                break
        if step is None:
            break
        move, eliminated, candidate = step
        if check_invariants:
            _check_invariants(current, candidate, move)
        script.moves.append(move)
        # keep the recorded script replayable move for move
        if candidate.relators != eliminated.relators:
            script.moves.append(TietzeMove(kind=MoveKind.SIMPLIFY))
        current = candidate

    logger.info(
        f"Simplified {p.name or 'presentation'}: {p.rank} -> {current.rank} generators, "
        f"{len(p.relators)} -> {len(current.relators)} relators in {len(script.moves)} moves"
    )
    return TietzeResult(presentation=current, script=script)


def label_depth(label: str) -> int:
    """|k| of a graded label alpha[k,eps,i] / beta[k,eps,i]; 0 for other labels."""
    split = label_fields(label)
    if split is None or len(split[1]) != 3:
        return 0
    return abs(split[1][0])


def _target_order(label: str) -> tuple:
    split = label_fields(label)
    values = split[1] if split else ()
    return (tuple(abs(v) for v in values), values, label)


class ScriptRunner:
    """Replays a script against a presentation, one validated move at a time."""

    def __init__(self, window: int | None = None, check_invariants: bool = False):
        self.window = window
        self.check_invariants = check_invariants

    def is_boundary(self, label: str) -> bool:
        if self.window is None:
            return False
        split = label_fields(label)
        if split is None or len(split[1]) != 3:
            return False
        return label_depth(label) > self.window - BOUNDARY_MARGIN

    def run(self, p: Presentation, script: TietzeScript) -> TietzeResult:
        executed = TietzeScript(name=script.name)
        boundary: list[str] = []
        current = p
        for step, move in enumerate(script.moves, start=1):
            before = current
            current = self._apply(step, current, move, executed, boundary)
            if self.check_invariants:
                _check_invariants(before, current, move)
            logger.debug(f"Step {step} ({move}): {current.rank} generators, {len(current.relators)} relators")

        if boundary:
            logger.warning(f"Script {script.name}: quarantined {len(boundary)} boundary generators")
        logger.info(
            f"Replayed {script.name or 'script'} on {p.name or 'presentation'}: "
            f"{p.rank} -> {current.rank} generators"
        )
        return TietzeResult(presentation=current, script=executed, boundary=boundary)

    def _apply(
        self,
        step: int,
        p: Presentation,
        move: TietzeMove,
        executed: TietzeScript,
        boundary: list[str],
    ) -> Presentation:
        try:
            if move.kind is MoveKind.SIMPLIFY:
                executed.moves.append(move)
                return simplify_relators(p)
            if move.kind is MoveKind.REMOVE_REDUNDANT:
                assert move.relator_index is not None
                result = remove_redundant_relator(p, move.relator_index)
                executed.moves.append(move)
                return result
            if move.kind is MoveKind.ADD:
                assert move.word is not None
                result = add_relator(p, move.word, move.sources)
                executed.moves.append(move)
                return result
        except (NotSolvable, UnknownGenerator) as e:
            raise MoveInvalid(step, str(e)) from e
        return self._eliminate_pattern(step, p, move, executed, boundary)

    def _eliminate_pattern(
        self,
        step: int,
        p: Presentation,
        move: TietzeMove,
        executed: TietzeScript,
        boundary: list[str],
    ) -> Presentation:
        assert move.pattern is not None
        targets = sorted((g.name for g in p.generators if move.matches(g.name)), key=_target_order)
        if not targets and not move.pattern.variables:
            raise MoveInvalid(step, f"{move.pattern} is not a generator of {p.name or 'the presentation'}")
        if move.relator_index is not None and len(targets) != 1:
            raise MoveInvalid(step, f"'using' needs exactly one target, {move.pattern} matches {len(targets)}")

        current = p
        for label in targets:
            if label in boundary:
                continue
            g = symbol(label)
            if move.relator_index is not None:
                index: int | None = move.relator_index
            else:
                index = self._choose_relator(current, g, move.via)
            if index is None:
                reason = f"no relator{' in ' + ', '.join(move.via) if move.via else ''} defines {label}"
                if self.is_boundary(label):
                    logger.warning(f"Step {step}: quarantined boundary generator {label}: {reason}")
                    boundary.append(label)
                    continue
                raise MoveInvalid(step, reason)
            try:
                current = eliminate_generator(current, g, index)
            except (NotSolvable, UnknownGenerator) as e:
                raise MoveInvalid(step, str(e)) from e
            executed.moves.append(TietzeMove.eliminate(label, index))
        return current

    @staticmethod
    def _choose_relator(p: Presentation, g: GeneratorSymbol, via: Sequence[str]) -> int | None:
        """Shortest relator defining g, preferring ones whose other generators lie nearer k = 0."""
        best: tuple[int, int, int] | None = None
        for index, (relator, family) in enumerate(zip(p.relators, p.relator_families, strict=True)):
            if via and family not in via:
                continue
            if relator.occurrences(g) != 1:
                continue
            others = [label_depth(h.name) for h in relator.generators() if h != g]
            key = (relator.length, max(others, default=0), index)
            if best is None or key < best:
                best = key
        return best[2] if best else None


def run_script(
    p: Presentation,
    script: TietzeScript,
    window: int | None = None,
    check_invariants: bool = False,
) -> TietzeResult:
    """Replay a script, reporting the executed concrete moves and the boundary set.

    Raises:
        MoveInvalid: first move that fails validation, with its step number
    """
    return ScriptRunner(window=window, check_invariants=check_invariants).run(p, script)


def replay_script(p: Presentation, script: TietzeScript, window: int | None = None) -> Presentation:
    return run_script(p, script, window=window).presentation
