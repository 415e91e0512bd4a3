"""Diagram commands."""
from recurrent_workbench.cli.commands.diagrams.routes import router

__all__ = ["router"]
