"""Unit tests for exact sequences."""
