"""Unit tests for kfib_pillai."""
