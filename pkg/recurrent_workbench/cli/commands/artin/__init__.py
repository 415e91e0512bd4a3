"""Artin and Coxeter group commands."""
from recurrent_workbench.cli.commands.artin.routes import router

__all__ = ["router"]
