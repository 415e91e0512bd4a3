import logging
import sys
from typing import Optional

from recurrent_workbench.settings import LogLevel, settings

LOG_FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"
HANDLER_NAME = "recurrent_workbench"

logger = logging.getLogger(__name__)


def _setup_logging(level: LogLevel) -> None:
    """
    Configure the root logger.

    The workbench handler writes to the current stderr and is installed
    once; other handlers on the root logger are left in place.

    :param level: level of the root logger.
    """
    root = logging.getLogger()
    root.setLevel(level.value)
    for installed in root.handlers:
        if installed.get_name() == HANDLER_NAME and isinstance(installed, logging.StreamHandler):
            installed.setStream(sys.stderr)
            return
    handler = logging.StreamHandler(sys.stderr)
    handler.set_name(HANDLER_NAME)
    handler.setFormatter(logging.Formatter(LOG_FORMAT))
    root.addHandler(handler)


def register_startup_event(level: Optional[LogLevel] = None) -> None:
    """
    Actions to run before a command.

    :param level: log level of this invocation, the configured one by default.
    """
    _setup_logging(level or settings.log_level)
    logger.debug("environment %s", settings.environment)
