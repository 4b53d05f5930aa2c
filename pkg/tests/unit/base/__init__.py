"""Unit tests for base records and enumerations."""
