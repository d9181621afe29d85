"""API endpoints."""

from .groups import router as groups_router

__all__ = ["groups_router"]
