"""Free-subgroup certificate commands."""
from recurrent_workbench.cli.commands.certificates.routes import router

__all__ = ["router"]
