from recurrent_workbench.cli.commands import (
    artin,
    certificates,
    complexes,
    diagrams,
    presentations,
    recurrence,
    shapes,
)
from recurrent_workbench.cli.routing import CommandRouter

command_router = CommandRouter()
command_router.include_router(complexes.router)
command_router.include_router(shapes.router)
command_router.include_router(recurrence.router)
command_router.include_router(certificates.router)
command_router.include_router(presentations.router)
command_router.include_router(diagrams.router)
command_router.include_router(artin.router)
