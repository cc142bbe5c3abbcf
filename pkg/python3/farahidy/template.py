"""
Output line templates using Jinja2
"""

import logging
from typing import Any, Dict, Iterable, Optional

from jinja2 import BaseLoader, Environment, StrictUndefined, TemplateSyntaxError
from jinja2.exceptions import UndefinedError

logger = logging.getLogger(__name__)

DEFAULT_TEMPLATES = {
    'index': "{{ index }}\t{{ digits | digits }}",
    'word': "{{ word }}\t{{ length }}",
    'entry': "{{ index }}\t{{ headword | tsv }}\t{{ definition | tsv }}",
    'permutation': "{{ word }}\t{{ index }}",
    'export': "{{ headword | tsv }}\t{{ definition | tsv }}",
}


class OutputTemplateEngine:
    """Renders one output record per line from a Jinja2 template."""

    def __init__(self, templates: Optional[Dict[str, str]] = None):
        self.env = Environment(
            loader=BaseLoader(),
            autoescape=False,
            undefined=StrictUndefined,  # unknown variables raise
            keep_trailing_newline=False,
        )
        self._register_filters()

        self.templates = dict(DEFAULT_TEMPLATES)
        if templates:
            self.templates.update(templates)
        self._compiled = {}

    def _register_filters(self):
        def digits(values: Iterable[int]) -> str:
            """Comma-join a digit vector."""
            return ','.join(str(v) for v in values)

        def tsv(value: Any) -> str:
            """Escape a field for a tab-separated line."""
            text = '' if value is None else str(value)
            return (text.replace('\\', '\\\\')
                        .replace('\t', '\\t')
                        .replace('\n', '\\n')
                        .replace('\r', '\\r'))

        self.env.filters.update({
            'digits': digits,
            'tsv': tsv,
        })

    def validate_template(self, template_str: str) -> tuple[bool, Optional[str]]:
        """
        Validate template syntax without rendering.

        Returns:
            Tuple of (is_valid, error_message)
        """
        try:
            self.env.from_string(template_str)
            return True, None
        except TemplateSyntaxError as e:
            return False, str(e)

    def render_line(self, name: str, **context: Any) -> str:
        """
        Render the named template with context.

        Raises:
            KeyError: no template with that name
            UndefinedError: template refers to a variable not in context
            ValueError: the rendered text spans more than one line
        """
        template = self._compiled.get(name)
        if template is None:
            template = self.env.from_string(self.templates[name])
            self._compiled[name] = template

        try:
            line = template.render(**context)
        except UndefinedError as e:
            logger.error("Undefined variable in %s template: %s", name, e)
            raise

        if '\n' in line or '\r' in line:
            raise ValueError(f"Template '{name}' must render a single line")
        return line
