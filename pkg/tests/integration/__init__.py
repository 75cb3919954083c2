# tests/integration/__init__.py
"""Integration tests package."""

