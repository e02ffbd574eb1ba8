"""Shipped example paths in the JSON path format."""

import json
from importlib import resources


def load(name: str) -> dict:
    return json.loads(resources.files(__name__).joinpath(name).read_text())
