import argparse
import logging
import sys
from importlib import metadata
from typing import Optional, Sequence

from recurrent_workbench.cli.lifetime import register_startup_event
from recurrent_workbench.cli.router import command_router
from recurrent_workbench.exceptions import WorkbenchError
from recurrent_workbench.settings import LogLevel

logger = logging.getLogger(__name__)


class Application:
    """Parses a command line, runs its handler and prints the report."""

    def __init__(self, parser: argparse.ArgumentParser) -> None:
        self.parser = parser

    def run(self, argv: Optional[Sequence[str]] = None) -> int:
        """
        Run one command.

        :param argv: arguments without the program name, sys.argv by default.
        :return: exit code: 0 on pass, 1 on a violated verdict, 2 on input errors.
        """
        try:
            namespace = self.parser.parse_args(argv)
        except SystemExit as exc:
            return exc.code if isinstance(exc.code, int) else 2
        register_startup_event(namespace.log_level)
        logger.info("running %s", namespace.command_name)
        try:
            report = namespace.handler(namespace)
        except WorkbenchError as exc:
            logger.error("%s failed: %s", namespace.command_name, exc.detail)
            print(f"error: {exc.detail}", file=sys.stderr)
            return exc.exit_code
        print(report.to_json() if namespace.json else report.render())
        return report.exit_code


def _version() -> str:
    try:
        return metadata.version("recurrent_workbench")
    except metadata.PackageNotFoundError:
        return "unknown"


def get_app() -> Application:
    """
    Get the command line application.

    This is the main constructor of an application.

    :return: application.
    """
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="print the report as JSON")
    common.add_argument(
        "--log-level",
        type=LogLevel,
        choices=list(LogLevel),
        default=None,
        help="override the configured log level",
    )
    parser = argparse.ArgumentParser(
        prog="recurrent-workbench",
        description="Recurrent complexes, billiard directions, diagrams and Artin groups.",
    )
    parser.add_argument("--version", action="version", version=_version())
    verbs = parser.add_subparsers(dest="verb", metavar="verb", required=True)

    # Commands of every group.
    command_router.mount(verbs, parents=[common])

    return Application(parser)
