"""HTTP service exposing the engine; see app.py."""

from .app import app

__all__ = ["app"]
