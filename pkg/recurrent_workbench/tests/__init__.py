"""Tests for recurrent_workbench."""
