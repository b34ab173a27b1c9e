"""Python access to the fieldsym library.

Documents are the same JSON documents the ``fieldsym`` executable prints.
"""
import json

from ._fieldsym import (
    SCHEMA_VERSION,
    ConfigError,
    FieldsymError,
    casimir,
    command_names,
    fd_spectrum,
)
from . import _fieldsym

__all__ = [
    "SCHEMA_VERSION",
    "ConfigError",
    "FieldsymError",
    "acceptance",
    "casimir",
    "command_names",
    "execute",
    "fd_spectrum",
    "parse_toml",
]


def execute(command, config=None):
    """Run one command. Returns ``(document, exit_code)``; raises ConfigError on bad input."""
    text, code = _fieldsym.execute_json(command, json.dumps(config or {}))
    return json.loads(text), code


def parse_toml(text):
    return json.loads(_fieldsym.parse_toml(text))


def acceptance(seed=None):
    """The nine acceptance checks as a list of dicts."""
    rows = _fieldsym.acceptance_json() if seed is None else _fieldsym.acceptance_json(seed)
    return json.loads(rows)
