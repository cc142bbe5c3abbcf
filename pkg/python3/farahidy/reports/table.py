"""
Table report implementation using Rich
"""

from rich.console import Console
from rich.table import Table
from rich.text import Text

from .base import BaseReport


class TableReport(BaseReport):
    """Rich table with the display styles from config."""

    def _create_rich_table(self) -> Table:
        return Table(
            title=Text(self.title, style=self.config.get('title_style', 'bold magenta')),
            show_header=True,
            show_lines=False,
            header_style=self.config.get('header_style', 'bold cyan'),
            border_style=self.config.get('border_style', 'blue'),
            row_styles=['', 'dim'],
        )

    def render(self, console: Console) -> None:
        table = self._create_rich_table()
        for column in self.columns:
            table.add_column(column)

        if not self.rows:
            table.add_row(*(["No data available"] + [''] * (len(self.columns) - 1)),
                          style='dim italic')

        for row in self.rows:
            # Text cells: definitions may contain [brackets] that rich would read as markup
            table.add_row(*(Text(str(cell)) for cell in row))

        console.print(table)
