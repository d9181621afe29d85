"""Structured export documents.

Every top-level document carries ``schema_version`` so consumers can pin the
layout; ``--format structured`` prints these as JSON.
"""

from typing import Any

from pydantic import BaseModel, Field

from braidforge.config import SCHEMA_VERSION
from braidforge.services.abelianize import AbelianInvariants, format_invariants
from braidforge.services.presentations import Presentation, PresentationDocument
from braidforge.services.words import format_word


class PresentationDoc(BaseModel):
    """A presentation: generator names, relator words, family tags."""

    schema_version: str = SCHEMA_VERSION
    name: str = ""
    generators: list[str]
    relators: list[str]
    families: list[str]

    @classmethod
    def from_presentation(cls, p: Presentation) -> "PresentationDoc":
        return cls(
            name=p.name,
            generators=[g.name for g in p.generators],
            relators=[format_word(r) for r in p.relators],
            families=list(p.relator_families),
        )


class ProvenanceEntry(BaseModel):
    """Where one derived relator came from."""

    index: int
    family: str
    source: str
    conjugator: str
    rewritten: str


class DerivedPresentationDoc(BaseModel):
    """Derived presentation plus provenance and the erased trivial generators."""

    schema_version: str = SCHEMA_VERSION
    presentation: PresentationDoc
    trivial_generators: list[str] = Field(default_factory=list)
    provenance: list[ProvenanceEntry] = Field(default_factory=list)
    window: int | None = None
    relator_slots: int | None = None

    @classmethod
    def from_document(
        cls, document: PresentationDocument, window: int | None = None, slots: int | None = None
    ) -> "DerivedPresentationDoc":
        return cls(
            presentation=PresentationDoc.from_presentation(document.presentation),
            trivial_generators=list(document.trivial),
            provenance=[
                ProvenanceEntry(
                    index=k,
                    family=o.family,
                    source=format_word(o.source),
                    conjugator=format_word(o.conjugator),
                    rewritten=format_word(o.rewritten),
                )
                for k, o in enumerate(document.provenance, start=1)
            ],
            window=window,
            relator_slots=slots,
        )


class InvariantsDoc(BaseModel):
    """Abelian invariants with their canonical text form."""

    schema_version: str = SCHEMA_VERSION
    free_rank: int
    torsion: list[int]
    text: str
    perfect: bool

    @classmethod
    def from_invariants(cls, inv: AbelianInvariants) -> "InvariantsDoc":
        return cls(
            free_rank=inv.free_rank,
            torsion=list(inv.torsion),
            text=format_invariants(inv),
            perfect=inv.is_trivial,
        )


class CheckDoc(BaseModel):
    """One named assertion of a verification scenario."""

    name: str
    status: str
    evidence: dict[str, Any] = Field(default_factory=dict)
    detail: str = ""


class ReportDoc(BaseModel):
    """Verification report for one scenario."""

    schema_version: str = SCHEMA_VERSION
    scenario: str
    anchor: str
    status: str
    params: dict[str, Any] = Field(default_factory=dict)
    checks: list[CheckDoc] = Field(default_factory=list)
    errors: list[str] = Field(default_factory=list)
    duration_seconds: float = 0.0


class ScriptDoc(BaseModel):
    """Executed Tietze script and its outcome."""

    schema_version: str = SCHEMA_VERSION
    name: str
    moves: list[str]
    boundary: list[str] = Field(default_factory=list)
    result: PresentationDoc
