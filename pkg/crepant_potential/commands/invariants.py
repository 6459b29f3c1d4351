import logging
from pathlib import Path
from typing import Optional

from ..lib.serialization import dump_json
from ..lib.util import debug
from ..models.invariant_key import CohClass
from ..services.potentials import invariant_of_classes
from . import emit

logger = logging.getLogger(__name__)


@debug(logger)
def command(d: int, classes: list[CohClass], out: Optional[Path] = None) -> int:
    try:
        value = invariant_of_classes(d, classes)
    except ValueError as e:
        # ParityError included
        logger.exception(e)
        return 2

    payload = {'d': d, 'classes': [str(cls) for cls in classes], 'value': value.to_json(), 'display': str(value)}
    emit(dump_json(payload) + '\n', out)
    return 0
