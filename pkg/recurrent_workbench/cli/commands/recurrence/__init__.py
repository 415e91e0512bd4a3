"""Recurrence and Markov digraph commands."""
from recurrent_workbench.cli.commands.recurrence.routes import router

__all__ = ["router"]
