"""Tietze scripts: one move per line.

    # comment
    eliminate beta[k,1,1] via sym-square
    eliminate alpha[k,mu,r] where r>=3 keep alpha[0,0,r] via braid-commute, mixed-commute
    eliminate y using 4
    add a b a^-1 from 0 1^-1
    remove-redundant 7
    simplify

Generator patterns bind integer variables: ``alpha[k,mu,r]`` matches
``alpha[2,0,3]``, and ``c[i]`` matches ``c3``. A pattern without variables
names one generator. Relator indices are 0-based.
"""

import logging
import operator
import re
from collections.abc import Callable
from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path

from braidforge.config import SCRIPTS_DIR

from ..errors import BraidforgeError, WordSyntaxError
from ..presentations.fileformat import split_top_level
from ..words import Word, format_word, parse_word

logger = logging.getLogger(__name__)

SCRIPT_SUFFIX = ".tz"

BRACKET_LABEL = re.compile(r"^([A-Za-z_]+)\[([^\]]*)\]$")
INDEXED_LABEL = re.compile(r"^([A-Za-z_]+?)(-?\d+)$")
CONDITION = re.compile(r"^\s*([A-Za-z_]\w*)\s*(>=|<=|==|!=|>|<)\s*(-?\d+)\s*$")
ELIMINATE = re.compile(
    r"^eliminate\s+(?P<pattern>\S+)"
    r"(?:\s+using\s+(?P<using>\d+))?"
    r"(?:\s+where\s+(?P<where>.+?))?"
    r"(?:\s+keep\s+(?P<keep>.+?))?"
    r"(?:\s+via\s+(?P<via>.+?))?\s*$"
)
ADD = re.compile(r"^add\s+(?P<word>.+?)(?:\s+from\s+(?P<sources>[-\d\s^]+))?\s*$")
SOURCE = re.compile(r"^(\d+)(\^-1)?$")

OPERATORS: dict[str, Callable[[int, int], bool]] = {
    ">=": operator.ge,
    "<=": operator.le,
    ">": operator.gt,
    "<": operator.lt,
    "==": operator.eq,
    "!=": operator.ne,
}


class ScriptSyntaxError(BraidforgeError):
    """Script text could not be parsed."""

    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


class MoveKind(str, Enum):
    ELIMINATE = "eliminate"
    ADD = "add"
    REMOVE_REDUNDANT = "remove-redundant"
    SIMPLIFY = "simplify"


def label_fields(label: str) -> tuple[str, tuple[int, ...]] | None:
    """Split ``alpha[1,0,2]`` into ("alpha", (1, 0, 2)) and ``c3`` into ("c", (3,))."""
    match = BRACKET_LABEL.match(label)
    if match:
        try:
            return match.group(1), tuple(int(f) for f in match.group(2).split(","))
        except ValueError:
            return None
    match = INDEXED_LABEL.match(label)
    if match:
        return match.group(1), (int(match.group(2)),)
    return None


@dataclass(frozen=True)
class Condition:
    variable: str
    op: str
    value: int

    def holds(self, bindings: dict[str, int]) -> bool:
        if self.variable not in bindings:
            return True
        return OPERATORS[self.op](bindings[self.variable], self.value)

    def __str__(self) -> str:
        return f"{self.variable}{self.op}{self.value}"


@dataclass(frozen=True)
class GeneratorPattern:
    """A generator name with integer fields, each a literal or a variable."""

    head: str
    fields: tuple[int | str, ...] = ()
    bracketed: bool = True

    @classmethod
    def parse(cls, text: str) -> "GeneratorPattern":
        match = BRACKET_LABEL.match(text)
        if not match:
            return cls(head=text, fields=(), bracketed=False)
        parts: list[int | str] = []
        for raw in match.group(2).split(","):
            raw = raw.strip()
            parts.append(int(raw) if re.fullmatch(r"-?\d+", raw) else raw)
        return cls(head=match.group(1), fields=tuple(parts))

    @property
    def variables(self) -> set[str]:
        return {f for f in self.fields if isinstance(f, str)}

    def match(self, label: str) -> dict[str, int] | None:
        if not self.fields:
            return {} if label == self.head else None
        split = label_fields(label)
        if split is None:
            return None
        head, values = split
        if head != self.head or len(values) != len(self.fields):
            return None
        bindings: dict[str, int] = {}
        for pattern_field, value in zip(self.fields, values, strict=True):
            if isinstance(pattern_field, int):
                if pattern_field != value:
                    return None
            elif bindings.setdefault(pattern_field, value) != value:
                return None
        return bindings

    def __str__(self) -> str:
        if not self.fields:
            return self.head
        return f"{self.head}[{','.join(str(f) for f in self.fields)}]"


@dataclass(frozen=True)
class TietzeMove:
    """One script step. Which fields are used depends on ``kind``."""

    kind: MoveKind
    pattern: GeneratorPattern | None = None
    relator_index: int | None = None
    where: tuple[Condition, ...] = ()
    keep: tuple[str, ...] = ()
    via: tuple[str, ...] = ()
    word: Word | None = None
    sources: tuple[tuple[int, int], ...] = ()
    line: int | None = None

    @classmethod
    def eliminate(cls, generator: str, relator_index: int) -> "TietzeMove":
        return cls(
            kind=MoveKind.ELIMINATE,
            pattern=GeneratorPattern.parse(generator),
            relator_index=relator_index,
        )

    def matches(self, label: str) -> bool:
        """True for generators this move eliminates; ``keep`` entries are patterns too."""
        if self.pattern is None:
            return False
        if any(GeneratorPattern.parse(k).match(label) is not None for k in self.keep):
            return False
        bindings = self.pattern.match(label)
        return bindings is not None and all(c.holds(bindings) for c in self.where)

    def __str__(self) -> str:
        return format_move(self)


@dataclass
class TietzeScript:
    name: str = ""
    moves: list[TietzeMove] = field(default_factory=list)

    def __len__(self) -> int:
        return len(self.moves)


def _parse_eliminate(text: str, number: int) -> TietzeMove:
    match = ELIMINATE.match(text)
    if not match:
        raise ScriptSyntaxError(f"cannot parse {text!r}", number)
    where = []
    if match.group("where"):
        for piece in match.group("where").split(","):
            condition = CONDITION.match(piece)
            if not condition:
                raise ScriptSyntaxError(f"bad condition {piece.strip()!r}", number)
            where.append(Condition(condition.group(1), condition.group(2), int(condition.group(3))))
    keep = tuple(p.strip() for p, _ in split_top_level(match.group("keep") or ""))
    via = tuple(v for v in re.split(r"[,\s]+", match.group("via") or "") if v)
    pattern = GeneratorPattern.parse(match.group("pattern"))
    unknown = {c.variable for c in where} - pattern.variables
    if unknown:
        raise ScriptSyntaxError(f"condition on unbound variable {', '.join(sorted(unknown))}", number)
    return TietzeMove(
        kind=MoveKind.ELIMINATE,
        pattern=pattern,
        relator_index=int(match.group("using")) if match.group("using") else None,
        where=tuple(where),
        keep=keep,
        via=via,
        line=number,
    )


def _parse_add(text: str, number: int) -> TietzeMove:
    match = ADD.match(text)
    if not match:
        raise ScriptSyntaxError(f"cannot parse {text!r}", number)
    try:
        word = parse_word(match.group("word"))
    except WordSyntaxError as e:
        raise ScriptSyntaxError(str(e), number) from e
    sources = []
    for token in (match.group("sources") or "").split():
        source = SOURCE.match(token)
        if not source:
            raise ScriptSyntaxError(f"bad relator reference {token!r}", number)
        sources.append((int(source.group(1)), -1 if source.group(2) else 1))
    return TietzeMove(kind=MoveKind.ADD, word=word, sources=tuple(sources), line=number)


def parse_script(text: str, name: str = "") -> TietzeScript:
    """Parse script text.

    Raises:
        ScriptSyntaxError: unknown move or malformed arguments, with line number
    """
    script = TietzeScript(name=name)
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        keyword = line.split(maxsplit=1)[0]
        if keyword == MoveKind.ELIMINATE.value:
            script.moves.append(_parse_eliminate(line, number))
        elif keyword == MoveKind.ADD.value:
            script.moves.append(_parse_add(line, number))
        elif keyword == MoveKind.REMOVE_REDUNDANT.value:
            args = line.split()[1:]
            if len(args) != 1 or not args[0].isdigit():
                raise ScriptSyntaxError("remove-redundant takes one relator index", number)
            script.moves.append(
                TietzeMove(kind=MoveKind.REMOVE_REDUNDANT, relator_index=int(args[0]), line=number)
            )
        elif keyword == MoveKind.SIMPLIFY.value:
            if line != keyword:
                raise ScriptSyntaxError("simplify takes no arguments", number)
            script.moves.append(TietzeMove(kind=MoveKind.SIMPLIFY, line=number))
        else:
            raise ScriptSyntaxError(f"unknown move {keyword!r}", number)
    logger.debug(f"Parsed script {name or '<text>'}: {len(script.moves)} moves")
    return script


def format_move(move: TietzeMove) -> str:
    if move.kind is MoveKind.ELIMINATE:
        parts = [f"eliminate {move.pattern}"]
        if move.relator_index is not None:
            parts.append(f"using {move.relator_index}")
        if move.where:
            parts.append(f"where {', '.join(str(c) for c in move.where)}")
        if move.keep:
            parts.append(f"keep {', '.join(move.keep)}")
        if move.via:
            parts.append(f"via {', '.join(move.via)}")
        return " ".join(parts)
    if move.kind is MoveKind.ADD:
        assert move.word is not None
        text = f"add {format_word(move.word)}"
        if move.sources:
            refs = " ".join(f"{i}{'^-1' if s < 0 else ''}" for i, s in move.sources)
            text += f" from {refs}"
        return text
    if move.kind is MoveKind.REMOVE_REDUNDANT:
        return f"remove-redundant {move.relator_index}"
    return "simplify"


def format_script(script: TietzeScript) -> str:
    header = [f"# {script.name}"] if script.name else []
    return "\n".join(header + [format_move(m) for m in script.moves]) + "\n"


def script_path(name_or_path: str | Path) -> Path:
    """A path as given, or a shipped script looked up by name (suffix optional)."""
    path = Path(name_or_path)
    if path.exists():
        return path
    shipped = SCRIPTS_DIR / path.name
    if shipped.suffix != SCRIPT_SUFFIX:
        shipped = shipped.with_name(shipped.name + SCRIPT_SUFFIX)
    return shipped


def shipped_scripts() -> list[str]:
    return sorted(p.stem for p in SCRIPTS_DIR.glob(f"*{SCRIPT_SUFFIX}"))


def load_script(name_or_path: str | Path) -> TietzeScript:
    """Load a script file or a shipped script such as ``lemma-2.3``.

    Raises:
        FileNotFoundError: no such file or shipped script
        ScriptSyntaxError: the file does not parse
    """
    path = script_path(name_or_path)
    if not path.exists():
        raise FileNotFoundError(f"No Tietze script {name_or_path}")
    name = path.name[: -len(SCRIPT_SUFFIX)] if path.name.endswith(SCRIPT_SUFFIX) else path.stem
    return parse_script(path.read_text(), name=name)
