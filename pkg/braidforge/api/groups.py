"""Group-presentation API endpoints."""

import asyncio
import logging

from fastapi import APIRouter, HTTPException
from pydantic import BaseModel, Field

from braidforge.config import DEFAULT_BUDGET, FAMILY_ALIASES
from braidforge.models.schemas import (
    DerivedPresentationDoc,
    InvariantsDoc,
    PresentationDoc,
    ReportDoc,
    ScriptDoc,
)
from braidforge.services.abelianize import abelian_invariants
from braidforge.services.errors import BraidforgeError
from braidforge.services.presentations import (
    EXPLICIT_FAMILIES,
    FLAT_FAMILIES,
    Family,
    FamilySpec,
    InvalidFamilyError,
    catalog,
    family_from_alias,
    parse_presentation,
)
from braidforge.services.rewriting import derive
from braidforge.services.tietze import load_script, run_script, simplify
from braidforge.services.tietze.scripts import format_move
from braidforge.services.verify import SCENARIOS, VerificationRunner

logger = logging.getLogger(__name__)

router = APIRouter(prefix="/api/groups", tags=["groups"])


class FamilyResponse(BaseModel):
    """A catalog family and the aliases that select it."""

    name: str
    aliases: list[str]
    quotient: str


class CatalogRequest(BaseModel):
    """Catalog presentation request."""

    family: str
    n: int = 3


class DeriveRequest(BaseModel):
    """Derived presentation request; wb needs a window."""

    family: str
    n: int = 3
    window: int | None = None


class PresentationRequest(BaseModel):
    """A presentation in the text file format."""

    presentation: str


class SimplifyRequest(BaseModel):
    """Simplify by replaying a script, or greedily within a budget."""

    presentation: str
    script: str | None = None
    budget: int = Field(DEFAULT_BUDGET, ge=0)
    window: int | None = None
    check_invariants: bool = False


class VerifyRequest(BaseModel):
    """Run the scenarios whose id starts with filter (all when empty)."""

    filter: str | None = None


class ScenarioResponse(BaseModel):
    """A registered verification scenario."""

    id: str
    anchor: str
    params: dict


def _quotient_kind(family: Family) -> str:
    if family in FLAT_FAMILIES:
        return "index 4 (Z/2 x Z/2)"
    if family is Family.WELDED_BRAID:
        return "graded (Z x Z/2), needs a window"
    if family in EXPLICIT_FAMILIES:
        return "explicit, no derivation"
    return "abelianization only"


def _resolve(alias: str) -> Family:
    try:
        return family_from_alias(alias)
    except InvalidFamilyError as e:
        raise HTTPException(status_code=404, detail=str(e)) from e


def _bad_request(e: BraidforgeError) -> HTTPException:
    logger.warning(f"Rejected request: {type(e).__name__}: {e}")
    return HTTPException(status_code=400, detail=f"{type(e).__name__}: {e}")


@router.get("/families", response_model=list[FamilyResponse])
async def list_families():
    """List catalog families with their CLI aliases."""
    return [
        FamilyResponse(
            name=family.value,
            aliases=sorted(alias for alias, name in FAMILY_ALIASES.items() if name == family.value),
            quotient=_quotient_kind(family),
        )
        for family in Family
    ]


@router.post("/catalog", response_model=PresentationDoc)
async def get_catalog(request: CatalogRequest):
    """Exact presentation of a catalog family."""
    family = _resolve(request.family)
    try:
        return PresentationDoc.from_presentation(catalog(FamilySpec(family, request.n)))
    except BraidforgeError as e:
        raise _bad_request(e) from e


@router.post("/derive", response_model=DerivedPresentationDoc)
async def derive_presentation(request: DeriveRequest):
    """Reidemeister-Schreier presentation of the commutator subgroup."""
    family = _resolve(request.family)
    try:
        derived = await asyncio.to_thread(derive, family, request.n, request.window)
    except BraidforgeError as e:
        raise _bad_request(e) from e
    return DerivedPresentationDoc.from_document(
        derived.to_document(), window=derived.window, slots=derived.slots
    )


@router.post("/abelianize", response_model=InvariantsDoc)
async def abelianize(request: PresentationRequest):
    """Abelian invariants of a presentation."""
    try:
        p = parse_presentation(request.presentation)
        invariants = await asyncio.to_thread(abelian_invariants, p)
    except BraidforgeError as e:
        raise _bad_request(e) from e
    return InvariantsDoc.from_invariants(invariants)


@router.post("/simplify", response_model=ScriptDoc)
async def simplify_presentation(request: SimplifyRequest):
    """Replay a Tietze script, or run greedy simplification when none is named."""
    try:
        p = parse_presentation(request.presentation)
        if request.script:
            script = load_script(request.script)
            result = await asyncio.to_thread(
                run_script, p, script, request.window, request.check_invariants
            )
        else:
            result = await asyncio.to_thread(simplify, p, request.budget, request.check_invariants)
    except FileNotFoundError as e:
        raise HTTPException(status_code=404, detail=str(e)) from e
    except BraidforgeError as e:
        raise _bad_request(e) from e
    return ScriptDoc(
        name=result.script.name,
        moves=[format_move(m) for m in result.script.moves],
        boundary=result.boundary,
        result=PresentationDoc.from_presentation(result.presentation),
    )


@router.get("/scenarios", response_model=list[ScenarioResponse])
async def list_scenarios():
    """List verification scenarios in id order."""
    return [ScenarioResponse(id=s.id, anchor=s.anchor, params=s.params) for s in SCENARIOS.values()]


@router.post("/verify", response_model=list[ReportDoc])
async def verify(request: VerifyRequest):
    """Run verification scenarios; a filter matching none is a 404."""
    runner = VerificationRunner()
    if request.filter and not runner.select(request.filter):
        raise HTTPException(status_code=404, detail=f"No scenario matches {request.filter!r}")
    reports = await runner.run_all_async(request.filter)
    return [r.to_doc() for r in reports]
