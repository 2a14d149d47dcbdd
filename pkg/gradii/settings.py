"""Packaged defaults for the verification suites."""
import copy
import functools
import logging

import tomli
from importlib_resources import files

logger = logging.getLogger(__name__)

SUITES_RESOURCE = "suites.toml"


@functools.lru_cache(maxsize=None)
def _load() -> dict:
    text = files("gradii").joinpath(SUITES_RESOURCE).read_text()
    try:
        return tomli.loads(text)
    except tomli.TOMLDecodeError as e:
        raise RuntimeError(
            f"Packaged {SUITES_RESOURCE} is not valid TOML: {e}"
        ) from e


def suite_settings(name: str) -> dict:
    """Return a copy of the settings table for suite `name`.

    Raises
    ------
    KeyError
        If there is no table named `name`.
    """
    settings = _load()
    if name not in settings:
        raise KeyError(f"No settings for suite '{name}'")
    return copy.deepcopy(settings[name])
