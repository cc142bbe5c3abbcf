"""
Line-oriented report: one tab-separated record per line, no header
"""

from rich.console import Console

from .base import BaseReport


class PlainReport(BaseReport):
    """Writes straight to the console's file; rich would expand the tabs."""

    def render(self, console: Console) -> None:
        lines = self.lines
        if lines is None:
            lines = ['\t'.join(str(cell) for cell in row) for row in self.rows]

        stream = console.file
        for line in lines:
            stream.write(line + '\n')
        stream.flush()
