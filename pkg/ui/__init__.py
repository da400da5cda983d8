"""Command-line pages: one module per sub-command."""
