"""Unit tests for event hooks."""
