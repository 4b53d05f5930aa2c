"""Unit tests for Baker bounds."""
