"""
Base report rendering classes using Rich
"""

from abc import ABC, abstractmethod
from typing import Any, Dict, List, Optional, Sequence

from rich.console import Console

from ..errors import ConfigError


class BaseReport(ABC):
    """A titled block of rows sharing one set of column names."""

    def __init__(self, title: str, columns: Sequence[str], rows: Sequence[Sequence[Any]],
                 config: Optional[Dict[str, Any]] = None, lines: Optional[List[str]] = None):
        self.title = title
        self.columns = list(columns)
        self.rows = [list(row) for row in rows]
        self.config = config or {}
        # Pre-rendered template lines, used by line-oriented styles
        self.lines = lines

    @abstractmethod
    def render(self, console: Console) -> None:
        """Write the report to console."""
        pass


class ReportRenderer:
    """Factory class for creating and rendering reports."""

    _report_classes = {}

    @classmethod
    def register_report_class(cls, style: str, report_class: type):
        cls._report_classes[style] = report_class

    @classmethod
    def create_report(cls, style: str, title: str, columns: Sequence[str],
                      rows: Sequence[Sequence[Any]], config: Optional[Dict[str, Any]] = None,
                      lines: Optional[List[str]] = None) -> BaseReport:
        if style not in cls._report_classes:
            raise ConfigError(f"Unsupported display style: {style}")
        return cls._report_classes[style](title, columns, rows, config, lines)

    @classmethod
    def render_report(cls, console: Console, style: str, title: str, columns: Sequence[str],
                      rows: Sequence[Sequence[Any]], config: Optional[Dict[str, Any]] = None,
                      lines: Optional[List[str]] = None) -> None:
        cls.create_report(style, title, columns, rows, config, lines).render(console)

    @classmethod
    def get_supported_styles(cls) -> List[str]:
        return list(cls._report_classes.keys())

    @classmethod
    def is_supported(cls, style: str) -> bool:
        return style in cls._report_classes
