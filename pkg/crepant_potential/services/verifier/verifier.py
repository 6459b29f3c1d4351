import logging
from typing import Iterator, Optional, TypedDict

from rich.progress import Progress, TaskID

from ...models.report import Suite
from ...settings import Settings
from .steps import StepProgressResult, SuiteStep, VerificationContext
from .suites import REGISTERED_SUITE_STEPS

logger = logging.getLogger(__name__)


class Verifier:
    def __init__(self, suites: list[Suite], config: Settings) -> None:
        self.suites = Suite.expand(suites)
        if not self.suites:
            raise ValueError('no suite selected')

        self.context = VerificationContext(config=config)

        next_step: Optional[SuiteStep] = None
        for suite in reversed(self.suites):
            step_class, cost = REGISTERED_SUITE_STEPS[suite]
            next_step = step_class(
                context=self.context,
                description=f'Verifying {suite}...',
                cost=cost,
                next_step=next_step
            )
        self.root_step: SuiteStep = next_step  # type: ignore[assignment]

    def verify(self) -> VerificationContext:
        for _ in self.root_step.process_all():
            pass
        return self.context

    def verify_with_progress(self, progress: Progress) -> VerificationContext:
        overall_task = progress.add_task('All suites', total=1.0)
        for total_percent in process_with_progress_tui(progress, self.root_step):
            progress.update(overall_task, completed=total_percent)

        logger.info('%d suites verified: %s', len(self.suites), 'pass' if self.context.passed else 'FAIL')
        return self.context


ProgressState = TypedDict('ProgressState', {'current_step': SuiteStep | None, 'task_id': TaskID | None})


def process_with_progress_tui(progress: Progress, root_step: SuiteStep) -> Iterator[float]:
    state: ProgressState = {'current_step': None, 'task_id': None}

    def stop_previous_task():
        if state['task_id'] is None:
            return
        progress.stop_task(state['task_id'])
        progress.update(state['task_id'], visible=False)

    def add_task_if_needed(step_progress_result: StepProgressResult):
        if step_progress_result.current_step is not state['current_step']:
            stop_previous_task()
            state['current_step'] = step_progress_result.current_step
            state['task_id'] = progress.add_task(description=state['current_step'].description, total=1.0)

    def update_task(step_progress_result: StepProgressResult):
        if state['task_id'] is None:
            return
        progress.update(state['task_id'], completed=step_progress_result.current_step_percent)

    for step_progress_result in root_step.process_all():
        add_task_if_needed(step_progress_result)
        update_task(step_progress_result)
        yield step_progress_result.total_percent

    stop_previous_task()
