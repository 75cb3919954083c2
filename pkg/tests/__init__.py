# tests/__init__.py
"""
Test suite package.

Contains unit and integration tests for the application.
"""

