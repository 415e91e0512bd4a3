"""Command groups of the workbench."""
