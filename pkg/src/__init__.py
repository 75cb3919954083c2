# src/__init__.py
"""
Main source package for the covert jamming toolkit.

This package contains the domain types, the closed-form analysis and
design modules, the brute-force and Monte Carlo oracles, and the
command-line front end.
"""
