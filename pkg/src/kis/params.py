"""Map parameters shared by the quantum and classical dynamics."""

import math
from dataclasses import dataclass


@dataclass(frozen=True)
class MapParams:
    """Parameter triple of the kicked map plus a default kick count.

    theta : linear rotation angle per kick (radians)
    mu    : nonlinear rotation coefficient (radians per unit R^2)
    r     : squeeze parameter; the quadrature gain is g = e^r
    kicks : non-negative default number of kicks for trajectory runs
    """

    theta: float
    mu: float
    r: float
    kicks: int = 0

    def __post_init__(self):
        for name in ("theta", "mu", "r"):
            v = getattr(self, name)
            if not math.isfinite(v):
                raise ValueError(f"{name} must be finite, got {v!r}")
        if self.kicks < 0:
            raise ValueError(f"kicks must be >= 0, got {self.kicks}")

    @property
    def g(self) -> float:
        return math.exp(self.r)

    @classmethod
    def from_g(cls, theta: float, mu: float, g: float, kicks: int = 0) -> "MapParams":
        if g <= 0:
            raise ValueError(f"gain g must be positive, got {g}")
        return cls(theta=theta, mu=mu, r=math.log(g), kicks=kicks)
