"""Tests for kfib_pillai."""
