"""Command-line front end.

Exit codes: 0 success, 1 failed verification checks, 2 usage or input
error, 3 internal invariant violation.
"""

import argparse
import json
import logging
import sys
from pathlib import Path

from .config import DEFAULT_BUDGET, DEFAULT_WINDOW, FAMILY_ALIASES, settings
from .models.schemas import DerivedPresentationDoc, InvariantsDoc, PresentationDoc, ScriptDoc
from .services.abelianize import abelian_invariants, format_invariants
from .services.errors import BraidforgeError, InvariantViolation
from .services.presentations import (
    FamilySpec,
    catalog,
    family_from_alias,
    parse_presentation,
    serialize_document,
    serialize_presentation,
)
from .services.rewriting import derive
from .services.tietze import format_script, load_script, run_script, simplify
from .services.tietze.scripts import format_move
from .services.verify import run_all

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2
EXIT_INTERNAL = 3

_GREEN, _RED, _RESET = "\033[32m", "\033[31m", "\033[0m"


def _emit(text: str, out: Path | None) -> None:
    if not text.endswith("\n"):
        text += "\n"
    if out is None:
        sys.stdout.write(text)
    else:
        out.write_text(text)
        logger.info(f"Wrote {out}")


def _read(path: Path) -> str:
    try:
        return path.read_text()
    except OSError as e:
        raise FileNotFoundError(f"Cannot read {path}: {e.strerror}") from e


def _colored(text: str, passed: bool) -> str:
    if not settings.color:
        return text
    return f"{_GREEN if passed else _RED}{text}{_RESET}"


def cmd_catalog(args: argparse.Namespace) -> int:
    p = catalog(FamilySpec(family_from_alias(args.family), args.n))
    if args.format == "structured":
        _emit(PresentationDoc.from_presentation(p).model_dump_json(indent=2), args.out)
    else:
        _emit(serialize_presentation(p), args.out)
    return EXIT_OK


def cmd_derive(args: argparse.Namespace) -> int:
    derived = derive(family_from_alias(args.family), args.n, args.window)
    document = derived.to_document()
    if args.format == "structured":
        doc = DerivedPresentationDoc.from_document(document, window=derived.window, slots=derived.slots)
        _emit(doc.model_dump_json(indent=2), args.out)
    else:
        _emit(serialize_document(document), args.out)
    return EXIT_OK


def cmd_abelianize(args: argparse.Namespace) -> int:
    invariants = abelian_invariants(parse_presentation(_read(args.file)))
    if args.format == "structured":
        _emit(InvariantsDoc.from_invariants(invariants).model_dump_json(indent=2), args.out)
    else:
        _emit(format_invariants(invariants), args.out)
    return EXIT_OK


def cmd_simplify(args: argparse.Namespace) -> int:
    p = parse_presentation(_read(args.file))
    if args.script:
        result = run_script(p, load_script(args.script), window=args.window, check_invariants=args.check_invariants)
    else:
        result = simplify(p, budget=args.budget, check_invariants=args.check_invariants)

    if args.script_out:
        args.script_out.write_text(format_script(result.script))
        logger.info(f"Wrote {len(result.script)} moves to {args.script_out}")
    print(
        f"{p.rank} -> {result.presentation.rank} generators, "
        f"{len(result.presentation.relators)} relators",
        file=sys.stderr,
    )
    if result.boundary:
        print(f"boundary: {' '.join(result.boundary)}", file=sys.stderr)

    if args.format == "structured":
        doc = ScriptDoc(
            name=result.script.name,
            moves=[format_move(m) for m in result.script.moves],
            boundary=result.boundary,
            result=PresentationDoc.from_presentation(result.presentation),
        )
        _emit(doc.model_dump_json(indent=2), args.out)
    else:
        _emit(serialize_presentation(result.presentation), args.out)
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    reports = run_all(args.filter)
    if args.format == "structured":
        _emit(json.dumps([r.to_doc().model_dump(mode="json") for r in reports], indent=2), args.out)
    else:
        blocks = [_colored(r.format_text(), r.passed) for r in reports]
        passed = sum(r.passed for r in reports)
        blocks.append(f"{passed}/{len(reports)} scenarios passed")
        _emit("\n\n".join(blocks), args.out)

    if any(r.internal_error for r in reports):
        return EXIT_INTERNAL
    return EXIT_OK if all(r.passed for r in reports) else EXIT_CHECK_FAILED


def cmd_serve(args: argparse.Namespace) -> int:
    import uvicorn

    uvicorn.run("braidforge.main:app", host=args.host, port=args.port)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--verbose", action="count", default=0, help="repeat for more logging (INFO, DEBUG)"
    )
    common.add_argument(
        "--format", choices=["text", "structured"], default="text", help="output format (default: text)"
    )
    common.add_argument("--out", type=Path, default=None, help="write to a file instead of stdout")

    families = ", ".join(sorted(FAMILY_ALIASES))
    parser = argparse.ArgumentParser(
        prog="braidforge",
        description="Commutator subgroups of welded and flat braid groups.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("catalog", parents=[common], help="print a catalog presentation")
    p.add_argument("--family", required=True, help=f"one of: {families}")
    p.add_argument("--n", type=int, default=3, help="strand count (default: 3)")
    p.set_defaults(handler=cmd_catalog)

    p = sub.add_parser("derive", parents=[common], help="derive the commutator subgroup presentation")
    p.add_argument("--family", required=True, help="wb (needs --window), fvb or fwb")
    p.add_argument("--n", type=int, default=3, help="strand count (default: 3)")
    p.add_argument(
        "--window", type=int, default=None, help=f"grading window K for wb (suggested: {DEFAULT_WINDOW})"
    )
    p.set_defaults(handler=cmd_derive)

    p = sub.add_parser("abelianize", parents=[common], help="abelian invariants of a presentation file")
    p.add_argument("file", type=Path)
    p.set_defaults(handler=cmd_abelianize)

    p = sub.add_parser("simplify", parents=[common], help="Tietze simplification of a presentation file")
    p.add_argument("file", type=Path)
    p.add_argument("--script", default=None, help="script file or shipped script name (e.g. lemma-2.4)")
    p.add_argument(
        "--budget", type=int, default=DEFAULT_BUDGET, help=f"greedy move budget (default: {DEFAULT_BUDGET})"
    )
    p.add_argument("--window", type=int, default=None, help="window of a graded presentation, for scripts")
    p.add_argument("--script-out", type=Path, default=None, help="write the executed moves here")
    p.add_argument("--check-invariants", action="store_true", help="recompute invariants after every move")
    p.set_defaults(handler=cmd_simplify)

    p = sub.add_parser("verify", parents=[common], help="run the verification scenarios")
    p.add_argument("--filter", default=None, help="run only scenario ids starting with this prefix")
    p.set_defaults(handler=cmd_verify)

    p = sub.add_parser("serve", parents=[common], help="run the HTTP API")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)
    p.set_defaults(handler=cmd_serve)

    return parser


def configure_logging(verbosity: int) -> None:
    level = logging.WARNING if verbosity <= 0 else logging.INFO if verbosity == 1 else logging.DEBUG
    logging.basicConfig(
        level=level,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
        force=True,
    )


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    configure_logging(args.verbose)
    try:
        return args.handler(args)
    except InvariantViolation as e:
        logger.error(f"Internal invariant violated: {e}")
        print(f"error: internal invariant violated: {e}", file=sys.stderr)
        return EXIT_INTERNAL
    except (BraidforgeError, FileNotFoundError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
