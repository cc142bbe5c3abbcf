"""
Configuration management for farahidy
"""

import logging
import os
from typing import Any, Dict, Optional

import yaml

from .errors import ConfigError
from .reports import ReportRenderer
from .template import DEFAULT_TEMPLATES, OutputTemplateEngine
from .utils import safe_get_nested

logger = logging.getLogger(__name__)


def validate_config_structure(config: Any) -> tuple[bool, Optional[str]]:
    """Validate basic config structure."""
    if not isinstance(config, dict):
        return False, "Config must be a mapping"

    for section in ('display', 'build', 'verify'):
        if section in config and not isinstance(config[section], dict):
            return False, f"'{section}' must be a mapping"

    lexicon = config.get('lexicon')
    if lexicon is not None and not isinstance(lexicon, str):
        return False, "'lexicon' must be a path string"

    templates = safe_get_nested(config, ['display', 'templates'], {})
    if not isinstance(templates, dict):
        return False, "'display.templates' must be a mapping"
    for name, value in templates.items():
        if name not in DEFAULT_TEMPLATES:
            return False, f"Unknown template '{name}'"
        if not isinstance(value, str):
            return False, f"Template '{name}' must be a string"

    style = safe_get_nested(config, ['display', 'style'], 'plain')
    if not isinstance(style, str) or not ReportRenderer.is_supported(style):
        supported = ', '.join(ReportRenderer.get_supported_styles())
        return False, f"Unknown display style '{style}' (expected one of: {supported})"

    return True, None


class ConfigManager:
    """Loads and validates the CLI configuration."""

    def __init__(self):
        self.config: Dict[str, Any] = self._apply_defaults({})
        self.config_path: Optional[str] = None
        self.template_engine = OutputTemplateEngine()

    def load_config(self, config_path: str) -> Dict[str, Any]:
        """Load and validate configuration from YAML file."""
        if not os.path.exists(config_path):
            raise ConfigError(f"Config file not found: {config_path}")

        try:
            with open(config_path, 'r', encoding='utf-8') as f:
                config = yaml.safe_load(f)
        except yaml.YAMLError as e:
            raise ConfigError(f"Invalid YAML format: {e}")
        except OSError as e:
            raise ConfigError(f"Error reading config file: {e}")

        if config is None:
            config = {}

        is_valid, error_msg = validate_config_structure(config)
        if not is_valid:
            raise ConfigError(f"Invalid config: {error_msg}")

        config = self._apply_defaults(config)
        config = self._normalize_config(config, config_path)

        templates = config['display']['templates']
        for name, template_str in templates.items():
            ok, error = self.template_engine.validate_template(template_str)
            if not ok:
                raise ConfigError(f"Invalid '{name}' template: {error}")
        self.template_engine = OutputTemplateEngine(templates)

        self.config = config
        self.config_path = config_path
        logger.debug("Loaded config from %s", config_path)
        return config

    def _apply_defaults(self, config: Dict[str, Any]) -> Dict[str, Any]:
        """Apply default values to configuration."""
        config.setdefault('lexicon', None)

        display = config.setdefault('display', {})
        display.setdefault('style', 'plain')
        display.setdefault('title_style', 'bold magenta')
        display.setdefault('header_style', 'bold cyan')
        display.setdefault('border_style', 'blue')
        display.setdefault('templates', {})

        build = config.setdefault('build', {})
        build.setdefault('distinct_only', False)

        verify = config.setdefault('verify', {})
        verify.setdefault('full', False)
        return config

    def _normalize_config(self, config: Dict[str, Any], config_path: str) -> Dict[str, Any]:
        """Resolve the lexicon path relative to the config file."""
        lexicon = config.get('lexicon')
        if lexicon and not os.path.isabs(lexicon):
            base_dir = os.path.dirname(os.path.abspath(config_path))
            config['lexicon'] = os.path.join(base_dir, lexicon)

        config['build']['distinct_only'] = bool(config['build']['distinct_only'])
        config['verify']['full'] = bool(config['verify']['full'])
        return config

    def get_lexicon_path(self) -> Optional[str]:
        return self.config.get('lexicon')

    def get_display_config(self) -> Dict[str, Any]:
        return self.config.get('display', {})

    def get_display_style(self) -> str:
        return self.get_display_config().get('style', 'plain')

    def get_distinct_only(self) -> bool:
        return self.config['build']['distinct_only']

    def get_verify_full(self) -> bool:
        return self.config['verify']['full']
