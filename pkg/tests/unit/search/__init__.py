"""Unit tests for verification and search."""
