"""Presentation commands: pieces, small cancellation and corner subwords."""
from recurrent_workbench.cli.commands.presentations.routes import router

__all__ = ["router"]
