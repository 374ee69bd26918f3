"""Runs the Python smoke tests; exits 77 (skip) when the module is not installed."""

import sys

try:
    import phl  # noqa: F401
except ImportError:
    print("phl Python module not installed; run `pip install --no-build-isolation -e .`")
    sys.exit(77)

import pytest

sys.exit(pytest.main(["-q", sys.argv[1]]))
