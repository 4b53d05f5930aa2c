"""Unit tests for testing utilities."""
