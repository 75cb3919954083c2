# scripts/__init__.py
"""
Scripts package.

Contains batch scripts that write sweep tables for plotting.
"""
