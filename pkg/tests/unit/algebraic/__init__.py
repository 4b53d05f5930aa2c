"""Unit tests for certified algebraic quantities."""
