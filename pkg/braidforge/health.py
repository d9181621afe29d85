"""Health check endpoints."""

import asyncio
from typing import Any

from .services.abelianize import int_matrix, smith_normal_form
from .services.aut_action import pin_composition_order
from .services.tietze import load_script, shipped_scripts


async def check_action_convention() -> dict[str, Any]:
    """Check that the Aut(F_n) action kills every WB_3 relator and not s1^2."""
    try:
        order = await asyncio.to_thread(pin_composition_order, 3)
        return {"status": "healthy", "order": order.value}
    except Exception as e:
        return {"status": "unhealthy", "error": str(e)}


async def check_scripts() -> dict[str, Any]:
    """Check that every shipped Tietze script parses."""
    try:
        names = shipped_scripts()
        moves = {name: len(load_script(name)) for name in names}
        if not moves:
            return {"status": "unhealthy", "error": "no shipped scripts"}
        return {"status": "healthy", "scripts": moves}
    except Exception as e:
        return {"status": "unhealthy", "error": str(e)}


async def check_smith_form() -> dict[str, Any]:
    """Smith normal form of a fixed matrix with known diagonal 2, 6."""
    try:
        form = smith_normal_form(int_matrix([[2, 4], [6, 6]]))
        diagonal = form.diagonal
        if diagonal != [2, 6]:
            return {"status": "unhealthy", "diagonal": diagonal}
        return {"status": "healthy"}
    except Exception as e:
        return {"status": "unhealthy", "error": str(e)}


async def get_health_status() -> dict[str, Any]:
    """Get overall health status."""
    convention, scripts, smith = await asyncio.gather(
        check_action_convention(),
        check_scripts(),
        check_smith_form(),
        return_exceptions=True,
    )

    if isinstance(convention, BaseException):
        convention = {"status": "unhealthy", "error": str(convention)}
    if isinstance(scripts, BaseException):
        scripts = {"status": "unhealthy", "error": str(scripts)}
    if isinstance(smith, BaseException):
        smith = {"status": "unhealthy", "error": str(smith)}

    all_healthy = all(s.get("status") == "healthy" for s in [convention, scripts, smith])

    return {
        "status": "healthy" if all_healthy else "degraded",
        "checks": {
            "aut_action": convention,
            "tietze_scripts": scripts,
            "smith_form": smith,
        },
    }
