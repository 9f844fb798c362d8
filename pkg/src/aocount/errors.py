"""Shared exception types."""


class CapacityError(Exception):
    """An input exceeds a configured size or memory cap.

    Deliberately not a ValueError: callers that map errors to exit codes need
    to tell "too big" apart from "malformed".
    """
