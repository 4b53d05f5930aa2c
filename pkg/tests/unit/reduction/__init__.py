"""Unit tests for continued fractions and reductions."""
