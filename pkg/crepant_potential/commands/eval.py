import logging
from pathlib import Path
from typing import Optional

from ..algebra.ratfun import PoleError
from ..lib.serialization import AssignmentError, complex_to_json, dump_json, parse_evaluation_point
from ..lib.util import debug
from ..services.potentials import potential
from ..settings import Settings
from . import emit

logger = logging.getLogger(__name__)


@debug(logger)
def command(config: Settings, out: Optional[Path] = None) -> int:
    uorder = config.uorder if config.extended else None
    f = potential(config.qmax, config.zorder, config.part, uorder=uorder)

    try:
        t1, t2, values = parse_evaluation_point(config.at)
        unknown = sorted(set(values) - set(f.varset.names))
        if unknown:
            raise AssignmentError(f'{", ".join(unknown)} not among the variables {", ".join(f.varset.names)}')
    except AssignmentError as e:
        logger.exception(e)
        return 2

    try:
        value = f.evaluate(t1, t2, values)
    except PoleError as e:
        logger.exception(e)
        return 1

    logger.debug('truncated at q^%d, z^%d: %r', config.qmax, config.zorder, value)
    emit(dump_json(complex_to_json(value)) + '\n', out)
    return 0
