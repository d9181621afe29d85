"""Structured export models."""

from .schemas import (
    CheckDoc,
    DerivedPresentationDoc,
    InvariantsDoc,
    PresentationDoc,
    ProvenanceEntry,
    ReportDoc,
    ScriptDoc,
)

__all__ = [
    "CheckDoc",
    "DerivedPresentationDoc",
    "InvariantsDoc",
    "PresentationDoc",
    "ProvenanceEntry",
    "ReportDoc",
    "ScriptDoc",
]
