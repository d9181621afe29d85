"""Verification scenarios reproducing the published claims."""

from .report import Check, Report, ReportStatus, Scenario
from .runner import VerificationRunner, run_all, run_scenario
from .scenarios import SCENARIOS

__all__ = [
    "SCENARIOS",
    "Check",
    "Report",
    "ReportStatus",
    "Scenario",
    "VerificationRunner",
    "run_all",
    "run_scenario",
]
