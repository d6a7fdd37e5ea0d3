"""HTTP service layer; ``uvicorn stabshare.service:app`` starts it."""

from .app import app, create_app

__all__ = ["app", "create_app"]
