"""
Utility functions for farahidy
"""

import os
import re
from typing import Optional


def format_error_message(error: Exception, context: str = "") -> str:
    """Format error message for display."""
    error_type = type(error).__name__
    error_msg = str(error)

    if context:
        return f"[{context}] {error_type}: {error_msg}"
    else:
        return f"{error_type}: {error_msg}"


def ensure_parent_directory(path: str) -> None:
    """Create the directory that will hold path, if it has one."""
    parent = os.path.dirname(os.path.abspath(path))
    os.makedirs(parent, exist_ok=True)


def safe_get_nested(data: dict, keys: list, default=None):
    """Safely get nested dictionary value."""
    current = data
    for key in keys:
        if isinstance(current, dict) and key in current:
            current = current[key]
        else:
            return default
    return current


def parse_index(text: str) -> Optional[int]:
    """Parse a decimal lexicon index; None if text is not a plain integer."""
    text = text.strip()
    if not re.fullmatch(r"-?[0-9]+", text):
        return None
    return int(text)

