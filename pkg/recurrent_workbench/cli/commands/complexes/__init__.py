"""Complex commands: validation, analysis and surgery."""
from recurrent_workbench.cli.commands.complexes.routes import router

__all__ = ["router"]
