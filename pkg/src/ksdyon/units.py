"""Physical context: mass, action and coupling scales.

All downstream modules compute in the units fixed here. The defaults
``M = hbar = e2 = 1`` make Coulomb energies pure rationals.

The oscillator/monopole duality has two readings. In the oscillator
picture the frequency ``omega`` is a fixed parameter and the oscillator
energy is quantized; in the monopole picture the oscillator energy
``E_osc`` is fixed and the frequency is quantized. A context records at
most one of the two.
"""
from __future__ import annotations

import dataclasses
import json
import math
from typing import Any, Mapping, Optional

from .errors import InvalidParameterError

_KEYS = ("M", "hbar", "e2", "omega", "E_osc")


@dataclasses.dataclass(frozen=True)
class PhysicalContext:
    M: float = 1.0
    hbar: float = 1.0
    e2: float = 1.0
    omega: Optional[float] = None
    E_osc: Optional[float] = None

    def __post_init__(self):
        for name in ("M", "hbar", "e2"):
            value = getattr(self, name)
            if not (isinstance(value, (int, float)) and math.isfinite(value) and value > 0):
                raise InvalidParameterError(f"{name} must be a positive finite number, got {value!r}")
        for name in ("omega", "E_osc"):
            value = getattr(self, name)
            if value is not None and not (math.isfinite(value) and value > 0):
                raise InvalidParameterError(f"{name} must be positive when set, got {value!r}")
        if self.omega is not None and self.E_osc is not None:
            raise InvalidParameterError("set at most one of omega (oscillator picture) and E_osc (monopole picture)")

    @property
    def picture(self) -> Optional[str]:
        """``'oscillator'`` if omega is fixed, ``'monopole'`` if E_osc is fixed."""
        if self.omega is not None:
            return "oscillator"
        if self.E_osc is not None:
            return "monopole"
        return None

    @property
    def coupling(self) -> float:
        """Inverse Coulomb length ``M e^2 / hbar^2``."""
        return self.M * self.e2 / self.hbar**2

    @property
    def length_unit(self) -> float:
        """Coulomb length ``hbar^2 / (M e^2)``."""
        return self.hbar**2 / (self.M * self.e2)

    @property
    def energy_unit(self) -> float:
        """Coulomb energy scale ``M e^4 / hbar^2``."""
        return self.M * self.e2**2 / self.hbar**2

    def replace(self, **changes) -> "PhysicalContext":
        return dataclasses.replace(self, **changes)

    def to_dict(self) -> dict:
        return {key: getattr(self, key) for key in _KEYS}

    @classmethod
    def from_dict(cls, data: Mapping[str, Any]) -> "PhysicalContext":
        unknown = set(data) - set(_KEYS)
        if unknown:
            raise InvalidParameterError(f"unknown context keys: {sorted(unknown)}")
        return cls(**{k: data[k] for k in _KEYS if k in data and data[k] is not None})

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> "PhysicalContext":
        return cls.from_dict(json.loads(text))


def default_context(**overrides) -> PhysicalContext:
    """Return the canonical context ``M = hbar = e2 = 1`` with optional overrides."""
    return PhysicalContext(**overrides)
