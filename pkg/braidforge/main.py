"""Main FastAPI application."""

import logging
from collections.abc import AsyncIterator
from contextlib import asynccontextmanager

from fastapi import FastAPI
from fastapi.responses import JSONResponse

from . import __version__
from .api import groups_router
from .health import get_health_status
from .services.presentations import Family
from .services.tietze import shipped_scripts

logger = logging.getLogger(__name__)


@asynccontextmanager
async def lifespan(app: FastAPI) -> AsyncIterator[None]:
    families = ", ".join(f.value for f in Family)
    logger.info(f"braidforge {__version__} serving families: {families}")
    logger.info(f"Shipped Tietze scripts: {', '.join(shipped_scripts())}")
    yield
    logger.info("braidforge shutting down")


app = FastAPI(
    title="braidforge - commutator subgroups of braid-like groups",
    version=__version__,
    lifespan=lifespan,
)

app.include_router(groups_router)


@app.get("/")
async def root():
    return {"service": "braidforge", "version": __version__, "families": [f.value for f in Family]}


@app.get("/health")
async def health():
    """Liveness probe - always returns OK if app is running."""
    return {"status": "ok"}


@app.get("/health/ready")
async def health_ready():
    """Readiness probe - runs the self-checks."""
    status = await get_health_status()
    code = 200 if status["status"] == "healthy" else 503
    return JSONResponse(content=status, status_code=code)


@app.get("/health/full")
async def health_full():
    """Full health check with details."""
    return await get_health_status()
