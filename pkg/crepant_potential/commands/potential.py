import logging
from pathlib import Path
from typing import Optional

from ..algebra.mpseries import SeriesError
from ..lib.serialization import dump_json, sections_to_csv, sections_to_json
from ..lib.ui_factory import ProgressUIFactory, transient_task_progress
from ..lib.util import debug
from ..services.potentials import potential_sections
from ..settings import Settings
from . import emit

logger = logging.getLogger(__name__)


@debug(logger)
def command(config: Settings, out: Optional[Path] = None) -> int:
    uorder = config.uorder if config.extended else None
    try:
        with ProgressUIFactory.create_overall_progress() as progress:
            with transient_task_progress(progress, f'Building potential up to q^{config.qmax}...'):
                sections = potential_sections(config.qmax, config.zorder, config.part, uorder=uorder)
    except SeriesError as e:
        logger.exception(e)
        return 2

    if config.format == 'csv':
        emit(sections_to_csv(sections), out)
    else:
        emit(dump_json(sections_to_json(sections)) + '\n', out)
    return 0
