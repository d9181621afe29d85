"""Runs verification scenarios and collects their reports."""

import asyncio
import logging
import time

from ..errors import InvariantViolation
from .report import Report, Scenario
from .scenarios import SCENARIOS

logger = logging.getLogger(__name__)


class VerificationRunner:
    """Runs scenarios in id order; an aborted scenario becomes a failed report."""

    def __init__(self, scenarios: dict[str, Scenario] | None = None):
        self.scenarios = SCENARIOS if scenarios is None else scenarios

    def select(self, prefix: str | None = None) -> list[Scenario]:
        chosen = [s for key, s in sorted(self.scenarios.items()) if not prefix or key.startswith(prefix)]
        if prefix and not chosen:
            logger.warning(f"No verification scenario matches {prefix!r}")
        return chosen

    def run_scenario(self, scenario: Scenario) -> Report:
        report = Report(scenario=scenario.id, anchor=scenario.anchor, params=dict(scenario.params))
        start = time.perf_counter()
        try:
            report.checks = scenario.run(scenario.params)
        except InvariantViolation as e:
            logger.error(f"Scenario {scenario.id}: internal invariant violated: {e}")
            report.errors.append(f"InvariantViolation: {e}")
            report.internal_error = True
        except Exception as e:
            logger.error(f"Scenario {scenario.id} aborted: {type(e).__name__}: {e}")
            report.errors.append(f"{type(e).__name__}: {e}")
        report.duration_seconds = time.perf_counter() - start

        failed = [c.name for c in report.checks if not c.passed]
        if failed:
            logger.warning(f"Scenario {scenario.id} failed checks: {', '.join(failed)}")
        logger.info(f"Scenario {scenario.id}: {report.status.value} in {report.duration_seconds:.2f}s")
        return report

    def run_all(self, prefix: str | None = None) -> list[Report]:
        return [self.run_scenario(s) for s in self.select(prefix)]

    async def run_all_async(self, prefix: str | None = None) -> list[Report]:
        """Same reports as run_all, each scenario in a worker thread."""
        scenarios = self.select(prefix)
        reports = await asyncio.gather(*(asyncio.to_thread(self.run_scenario, s) for s in scenarios))
        return list(reports)


def run_scenario(scenario_id: str) -> Report:
    """Run one scenario by id.

    Raises:
        KeyError: unknown scenario id
    """
    return VerificationRunner().run_scenario(SCENARIOS[scenario_id])


def run_all(prefix: str | None = None) -> list[Report]:
    return VerificationRunner().run_all(prefix)
