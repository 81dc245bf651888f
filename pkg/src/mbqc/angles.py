"""Measurement angles.

Angles are kept exact when possible: a rational multiple of pi, normalized
into [0, 2), survives round trips and makes the {0, pi} restriction on Pauli
measurements decidable.  A float fallback and free symbolic variables (for
patterns stated with a generic plane angle) are also supported; simulation
requires all variables to be bound first.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError

_TWO_PI = 2.0 * math.pi


@dataclass(frozen=True)
class Angle:
    """Exactly one of ``pi_mult``, ``real``, ``var`` is set."""

    pi_mult: Fraction | None = None
    real: float | None = None
    var: str | None = None

    def __post_init__(self) -> None:
        present = [x is not None for x in (self.pi_mult, self.real, self.var)]
        if sum(present) != 1:
            raise DomainError("angle must be exactly one of pi-multiple, real, variable")
        if self.pi_mult is not None:
            object.__setattr__(self, "pi_mult", Fraction(self.pi_mult) % 2)
        if self.real is not None:
            r = math.fmod(float(self.real), _TWO_PI)
            if r < 0.0:
                r += _TWO_PI
            object.__setattr__(self, "real", r)

    @staticmethod
    def of_pi(mult: Fraction | int | str) -> Angle:
        return Angle(pi_mult=Fraction(mult))

    @staticmethod
    def of_real(value: float) -> Angle:
        return Angle(real=float(value))

    @staticmethod
    def variable(name: str) -> Angle:
        return Angle(var=name)

    @property
    def is_symbolic(self) -> bool:
        return self.var is not None

    def to_float(self) -> float:
        if self.var is not None:
            raise DomainError(f"angle variable {self.var!r} is unbound")
        if self.pi_mult is not None:
            return float(self.pi_mult) * math.pi
        assert self.real is not None
        return self.real

    def is_pauli_angle(self) -> bool:
        """True iff the angle is exactly 0 or pi."""
        if self.pi_mult is not None:
            return self.pi_mult in (Fraction(0), Fraction(1))
        if self.real is not None:
            return self.real in (0.0, math.pi)
        return False

    def bind(self, bindings: dict[str, Angle]) -> Angle:
        if self.var is not None and self.var in bindings:
            return bindings[self.var]
        return self

    def __str__(self) -> str:
        if self.var is not None:
            return self.var
        if self.pi_mult is not None:
            m = self.pi_mult
            if m == 0:
                return "0"
            if m == 1:
                return "pi"
            if m.denominator == 1:
                return f"{m.numerator}pi"
            if m.numerator == 1:
                return f"pi/{m.denominator}"
            return f"{m.numerator}pi/{m.denominator}"
        return repr(self.real)


Angle.ZERO = Angle.of_pi(0)
Angle.PI = Angle.of_pi(1)
