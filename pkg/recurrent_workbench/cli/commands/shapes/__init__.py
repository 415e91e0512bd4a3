"""Shape catalog commands."""
from recurrent_workbench.cli.commands.shapes.routes import router

__all__ = ["router"]
