"""Exact verification sweeps behind `app.py verify`."""
