"""Repository classes for workbench files."""
