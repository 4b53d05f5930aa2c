"""Integration tests for end-to-end computations."""
