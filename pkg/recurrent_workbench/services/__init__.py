"""Algorithms of the workbench."""
