"""Core cross-cutting utilities.

This package contains:
- configuration management
- logging and audit trails
- centralized error handling and exit codes
- caching helpers
"""
