"""Command line application of the workbench."""
