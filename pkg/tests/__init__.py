"""Test Module."""
