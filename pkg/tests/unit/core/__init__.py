"""Unit tests for core exceptions."""
