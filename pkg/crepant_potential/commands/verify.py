import logging
from pathlib import Path
from typing import Optional

from ..lib.serialization import dump_json
from ..lib.ui_factory import ProgressUIFactory
from ..lib.util import debug
from ..services.verifier.steps import SuiteStepError
from ..services.verifier.verifier import Verifier
from ..settings import Settings
from . import emit

logger = logging.getLogger(__name__)


@debug(logger)
def command(config: Settings, out: Optional[Path] = None) -> int:
    verifier = Verifier(config.suites, config)
    try:
        with ProgressUIFactory.create_overall_progress() as progress:
            context = verifier.verify_with_progress(progress)
    except SuiteStepError as e:
        logger.exception(e)
        context = verifier.context
        aborted = True
    else:
        aborted = False

    payload = {
        'pass': context.passed and not aborted,
        'reports': [report.to_json() for report in context.reports]
    }
    emit(dump_json(payload) + '\n', out)

    for report in context.reports:
        failed = [case.key for case in report.cases if not case.passed and not case.reported]
        if failed:
            logger.error('suite %s: %d failing cases, first %s', report.suite, len(failed), failed[0])
    return 0 if payload['pass'] else 1
