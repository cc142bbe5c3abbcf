"""
Report rendering module for farahidy using Rich
"""

from .base import BaseReport, ReportRenderer
from .plain import PlainReport
from .table import TableReport

# Register all report styles
ReportRenderer.register_report_class('plain', PlainReport)
ReportRenderer.register_report_class('table', TableReport)

__all__ = [
    'BaseReport',
    'ReportRenderer',
    'PlainReport',
    'TableReport',
]
