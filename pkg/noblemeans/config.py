# -*- coding: utf-8 -*-
"""
noblemeans.config
-----------------

The run configuration shared by every command of the noblemeans CLI.

A configuration is a small self-describing JSON document::

    {"command": "freqs", "m": 1, "probs": [0.5, 0.5], "seed": 0, "params": {"ell": 2}}

Values are resolved as built-in defaults < configuration file < explicit
command line flags. Its digest identifies the run in the provenance header of
every output.
"""

__all__ = [
    'RunConfig'
]

import hashlib
import json

from dataclasses import dataclass, field, fields, replace
from typing import Optional, Tuple

from noblemeans.__about__ import __version__
from noblemeans.errors import ConfigError
from noblemeans.validators import raise_for_invalid_m, raise_for_invalid_probs


PACKAGE_NAME = 'noblemeans'


@dataclass(frozen=True)
class RunConfig(object):
    """A validated run configuration.

    Parameters
    ----------
    command
        The CLI subcommand.

    m
        The family parameter.

    probs
        The strictly positive probability vector (p_0, ..., p_m). Defaults to
        the uniform vector.

    seed
        The seed of the random generator.

    params
        Command-specific parameters (ell, n, k-grid, output format, ...).
    """

    command: Optional[str] = None
    m: int = 1
    probs: Optional[Tuple[float, ...]] = None
    seed: int = 0
    params: dict = field(default_factory=dict)

    def __post_init__(self):
        try:
            raise_for_invalid_m(self.m)
        except ValueError as error:
            raise ConfigError(str(error)) from error

        probs = self.probs
        if probs is None:
            probs = [1 / (self.m + 1)] * (self.m + 1)

        try:
            raise_for_invalid_probs(probs, self.m, strict=True, atol=1e-9)
        except ValueError as error:
            raise ConfigError(str(error)) from error

        if isinstance(self.seed, bool) or not isinstance(self.seed, int) or self.seed < 0:
            raise ConfigError(f'The seed "{self.seed}" is invalid. Enter a non-negative integer.')

        if not isinstance(self.params, dict):
            raise ConfigError(f'The params "{self.params}" are invalid. Enter a JSON object.')

        try:
            params = json.loads(json.dumps(self.params))
        except (TypeError, ValueError) as error:
            raise ConfigError(f'The params "{self.params}" are not JSON serializable.') from error

        object.__setattr__(self, 'probs', tuple(float(p) for p in probs))
        object.__setattr__(self, 'params', params)

    def to_dict(self) -> dict:
        return {
            'command': self.command,
            'm': self.m,
            'probs': list(self.probs),
            'seed': self.seed,
            'params': self.params
        }

    def to_json(self) -> str:
        """Canonical JSON (sorted keys, compact separators)."""

        return json.dumps(self.to_dict(), sort_keys=True, separators=(',', ':'))

    @classmethod
    def from_dict(cls, data: dict) -> 'RunConfig':
        if not isinstance(data, dict):
            raise ConfigError('The configuration is invalid. Enter a JSON object.')

        known = {f.name for f in fields(cls)}
        unknown = set(data) - known

        if unknown:
            msg_error = f'The configuration keys {sorted(unknown)} are invalid.'
            msg_error += f' The accepted keys are {sorted(known)}.'

            raise ConfigError(msg_error)

        values = dict(data)
        if values.get('probs') is not None:
            values['probs'] = tuple(values['probs'])

        return cls(**values)

    @classmethod
    def from_json(cls, text: str) -> 'RunConfig':
        try:
            data = json.loads(text)
        except ValueError as error:
            raise ConfigError(f'The configuration is not valid JSON: {error}') from error

        return cls.from_dict(data)

    @classmethod
    def from_file(cls, path: str) -> 'RunConfig':
        """Read a configuration file. ``OSError`` is left to the caller."""

        with open(path, encoding='utf-8') as config_file:
            return cls.from_json(config_file.read())

    def merged(self, **overrides) -> 'RunConfig':
        """A copy with every override that is not ``None`` applied; ``params`` are merged."""

        changes = {key: value for key, value in overrides.items() if value is not None and key != 'params'}

        if 'm' in changes and 'probs' not in changes and self.m != changes['m']:
            changes['probs'] = None

        params = dict(self.params)
        params.update({key: value for key, value in (overrides.get('params') or {}).items() if value is not None})
        changes['params'] = params

        return replace(self, **changes)

    def digest(self) -> str:
        """The first 12 hex digits of the SHA-256 of the canonical JSON."""

        return hashlib.sha256(self.to_json().encode('utf-8')).hexdigest()[:12]

    def provenance(self) -> dict:
        return {'package': PACKAGE_NAME, 'version': __version__, 'config': self.digest()}
