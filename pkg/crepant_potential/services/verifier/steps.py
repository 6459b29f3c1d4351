"""Chain of verification steps, each one producing the report of a suite."""
import logging
import time
from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from typing import ClassVar, Iterator, Optional

from ...models.report import Report
from ...settings import Settings

logger = logging.getLogger(__name__)


class SuiteStepError(Exception):
    pass


@dataclass
class VerificationContext:
    config: Settings
    reports: list[Report] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(report.passed for report in self.reports)


@dataclass
class StepProgressResult:
    current_step_name: str = field(init=False)
    current_step: 'SuiteStep'
    current_step_percent: float
    current_step_elapsed_time: float
    total_percent: float

    def __post_init__(self):
        self.current_step_name = type(self.current_step).__name__


@dataclass
class SuiteStep(ABC):
    context: VerificationContext
    description: str
    cost: float
    next_step: Optional['SuiteStep'] = None

    suite: ClassVar[str] = ''

    @property
    def all_steps(self) -> list['SuiteStep']:
        steps: list[SuiteStep] = []
        step: Optional[SuiteStep] = self
        while step is not None:
            steps.append(step)
            step = step.next_step
        return steps

    @property
    def total_cost(self) -> float:
        return sum(step.cost for step in self.all_steps)

    @abstractmethod
    def _perform(self, report: Report) -> Iterator[float]:
        """Fill `report`, yielding the completed fraction of the suite."""

    def handle(self) -> Iterator[tuple[float, float]]:
        start_time = time.perf_counter()
        report = Report(suite=self.suite)

        try:
            for progress_percent in self._perform(report):
                yield progress_percent, time.perf_counter() - start_time
        except Exception as e:
            raise SuiteStepError(f'suite {self.suite} aborted: {e}') from e

        self.context.reports.append(report)
        elapsed = time.perf_counter() - start_time
        logger.info('suite %s: %d cases, %s in %.2fs', self.suite, len(report.cases),
                    'pass' if report.passed else 'FAIL', elapsed)
        yield 1, elapsed

    def process_all(self) -> Iterator[StepProgressResult]:
        total_cost = self.total_cost
        completed_percent = 0.0
        current_step: Optional[SuiteStep] = self

        while current_step is not None:
            normalized_cost = current_step.cost / float(total_cost)

            for progress_percent, elapsed_time in current_step.handle():
                yield StepProgressResult(
                    current_step=current_step,
                    current_step_percent=progress_percent,
                    current_step_elapsed_time=elapsed_time,
                    total_percent=completed_percent + normalized_cost * progress_percent
                )

            completed_percent += normalized_cost
            current_step = current_step.next_step
