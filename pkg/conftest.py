"""Shared pytest setup: logs go to a throwaway directory, console stays quiet."""

import os
import tempfile

os.environ.setdefault("LOG_DIR", tempfile.mkdtemp(prefix="icecount-logs-"))
os.environ.setdefault("CONSOLE_LOG_LEVEL", "ERROR")
