import sys

from recurrent_workbench.cli.application import get_app


def main() -> None:
    """Entrypoint of the application."""
    sys.exit(get_app().run())


if __name__ == "__main__":
    main()
