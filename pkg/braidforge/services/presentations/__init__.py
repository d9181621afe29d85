"""Presentations, the family catalog and the presentation file format."""

from .catalog import (
    EXPLICIT_FAMILIES,
    FLAT_FAMILIES,
    Family,
    FamilySpec,
    InvalidFamilyError,
    catalog,
    family_from_alias,
    involutive_generators,
    rho,
    sigma,
)
from .fileformat import (
    PresentationParseError,
    parse_document,
    parse_presentation,
    serialize_document,
    serialize_presentation,
)
from .presentation import (
    Presentation,
    PresentationDocument,
    RelatorOrigin,
    UndeclaredGeneratorError,
    trivial_presentation,
)

__all__ = [
    "EXPLICIT_FAMILIES",
    "FLAT_FAMILIES",
    "Family",
    "FamilySpec",
    "InvalidFamilyError",
    "Presentation",
    "PresentationDocument",
    "PresentationParseError",
    "RelatorOrigin",
    "UndeclaredGeneratorError",
    "catalog",
    "family_from_alias",
    "involutive_generators",
    "parse_document",
    "parse_presentation",
    "rho",
    "serialize_document",
    "serialize_presentation",
    "sigma",
    "trivial_presentation",
]
