"""recurrent_workbench package."""
