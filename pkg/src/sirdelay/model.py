"""Delayed three-compartment susceptible/infected/recovered model.

The state (x, y, z) holds susceptible, infected and recovered densities.
With incidence f, vaccination V and recovery P the dynamics are

    x'(t) = a - b*f(x, y) - d*x - c*V(x) + alpha*z
    y'(t) = b1*f(x(t - tau), y) - r*P(y) - d1*y
    z'(t) = r*P(y(t - delta)) - alpha*z

where tau is the incubation delay and delta the recovery delay.
"""

from __future__ import annotations

import hashlib
import json
import math
from dataclasses import dataclass, replace

from .errors import DomainError
from .responses import ResponseFn, response_from_dict

__all__ = [
    "Params",
    "State",
    "ModelSpec",
    "JacCoeffs",
    "eval_rhs",
    "jacobian_coeffs",
    "jacobian_coeffs_fd",
]


@dataclass(frozen=True)
class Params:
    """Model rates and delays.

    a      susceptible inflow rate (>= 0)
    b      contact rate (> 0)
    b1     conversion rate, 0 < b1 <= b
    c      vaccination rate (>= 0; 0 when vaccination absent)
    d      susceptible removal rate (> 0)
    d1     infected removal rate (> 0)
    r      treatment rate (>= 0; 0 when treatment absent)
    alpha  re-susceptibility rate (> 0)
    tau    incubation delay (>= 0)
    delta  recovery delay (>= 0)
    """

    a: float
    b: float
    b1: float
    c: float
    d: float
    d1: float
    r: float
    alpha: float
    tau: float = 0.0
    delta: float = 0.0

    def __post_init__(self):
        for name in ("a", "b", "b1", "c", "d", "d1", "r", "alpha", "tau", "delta"):
            v = getattr(self, name)
            if not isinstance(v, (int, float)) or not math.isfinite(v):
                raise DomainError(f"parameter {name} must be finite, got {v!r}")
            if v < 0:
                raise DomainError(f"parameter {name} must be nonnegative, got {v}")
        for name in ("b", "b1", "d", "d1", "alpha"):
            if getattr(self, name) <= 0:
                raise DomainError(f"parameter {name} must be positive")
        if self.b1 > self.b:
            raise DomainError(f"conversion rate b1={self.b1} must not exceed contact rate b={self.b}")

    def with_delays(self, tau: float, delta: float) -> "Params":
        return replace(self, tau=tau, delta=delta)


@dataclass(frozen=True)
class State:
    """A point (x, y, z) of susceptible/infected/recovered densities."""

    x: float
    y: float
    z: float

    def as_tuple(self):
        return (self.x, self.y, self.z)

    def max_abs_diff(self, other: "State") -> float:
        return max(abs(self.x - other.x), abs(self.y - other.y), abs(self.z - other.z))

    def norm_inf(self) -> float:
        return max(abs(self.x), abs(self.y), abs(self.z))


@dataclass(frozen=True)
class ModelSpec:
    """Parameter set plus the three response-function choices.

    ``f`` is the two-argument incidence, ``V`` the one-argument vaccination
    response and ``P`` the one-argument recovery response (with P(0) = 0).
    """

    params: Params
    f: ResponseFn
    V: ResponseFn
    P: ResponseFn

    def __post_init__(self):
        if self.f.arity not in (None, 2):
            raise DomainError(f"incidence must take two arguments, got {self.f.kind}")
        if self.V.arity not in (None, 1):
            raise DomainError(f"vaccination response must take one argument, got {self.V.kind}")
        if self.P.arity not in (None, 1):
            raise DomainError(f"recovery response must take one argument, got {self.P.kind}")
        if abs(self.P.value(0.0)) > 1e-14:
            raise DomainError("recovery response must satisfy P(0) = 0")
        # V must be evaluable on the susceptible range [0, a/d]
        for u in (0.0, self.params.a / self.params.d):
            v = self.V.value(u)
            if not math.isfinite(v):
                raise DomainError(f"vaccination response not finite at x={u}")

    @property
    def supports_disease_free(self) -> bool:
        """True when the incidence vanishes at y = 0, a prerequisite for a
        disease-free steady state."""
        return self.f.zero_when_y_zero

    def to_dict(self) -> dict:
        p = self.params
        return {
            "params": {
                "a": p.a, "b": p.b, "b1": p.b1, "c": p.c, "d": p.d,
                "d1": p.d1, "r": p.r, "alpha": p.alpha,
                "tau": p.tau, "delta": p.delta,
            },
            "f": self.f.to_dict(),
            "V": self.V.to_dict(),
            "P": self.P.to_dict(),
        }

    @classmethod
    def from_dict(cls, d: dict) -> "ModelSpec":
        for key in ("params", "f", "V", "P"):
            if key not in d:
                raise DomainError(f"model spec missing {key!r}")
        return cls(
            params=Params(**d["params"]),
            f=response_from_dict(d["f"]),
            V=response_from_dict(d["V"]),
            P=response_from_dict(d["P"]),
        )

    def content_hash(self) -> str:
        """Short deterministic hash of the model definition."""
        blob = json.dumps(self.to_dict(), sort_keys=True).encode()
        return hashlib.sha256(blob).hexdigest()[:12]


def eval_rhs(model: ModelSpec, now: State, x_tau: float, y_delta: float):
    """Right-hand side of the delayed system.

    ``x_tau`` is the susceptible density at t - tau and ``y_delta`` the
    infected density at t - delta.  Returns the derivative triple
    (dx, dy, dz).
    """
    for v in (now.x, now.y, now.z, x_tau, y_delta):
        if not math.isfinite(v):
            raise DomainError(f"non-finite state passed to eval_rhs: {v!r}")
    p = model.params
    dx = p.a - p.b * model.f.value(now.x, now.y) - p.d * now.x - p.c * model.V.value(now.x) + p.alpha * now.z
    dy = p.b1 * model.f.value(x_tau, now.y) - p.r * model.P.value(now.y) - p.d1 * now.y
    dz = p.r * model.P.value(y_delta) - p.alpha * now.z
    return (dx, dy, dz)


@dataclass(frozen=True)
class JacCoeffs:
    """The five partial-derivative aggregates of the linearization.

    At an equilibrium (x*, y*, z*):

        A = -b*f_x - c*V' - d      (current x)
        B = -b*f_y                 (current y)
        C = b1*f_y - d1 - r*P'     (current y)
        D = b1*f_x                 (delayed x argument)
        E = r*P'                   (delayed y argument)

    plus alpha copied from the parameters.
    """

    A: float
    B: float
    C: float
    D: float
    E: float
    alpha: float


def jacobian_coeffs(model: ModelSpec, eq) -> JacCoeffs:
    """Evaluate the linearization coefficients analytically at an equilibrium.

    ``eq`` may be an Equilibrium or a bare State.
    """
    st = getattr(eq, "state", eq)
    p = model.params
    fx = model.f.partial(0, st.x, st.y)
    fy = model.f.partial(1, st.x, st.y)
    vp = model.V.partial(0, st.x)
    pp = model.P.partial(0, st.y)
    for v, label in ((fx, "df/dx"), (fy, "df/dy"), (vp, "dV/dx"), (pp, "dP/dy")):
        if not math.isfinite(v):
            raise DomainError(f"response partial {label} undefined at equilibrium {st}")
    return JacCoeffs(
        A=-p.b * fx - p.c * vp - p.d,
        B=-p.b * fy,
        C=p.b1 * fy - p.d1 - p.r * pp,
        D=p.b1 * fx,
        E=p.r * pp,
        alpha=p.alpha,
    )


def jacobian_coeffs_fd(model: ModelSpec, eq, h: float = 1e-6) -> JacCoeffs:
    """Central-finite-difference version of :func:`jacobian_coeffs`.

    Differentiates eval_rhs directly, treating current and delayed
    arguments independently.  Serves as a cross-check for the analytic
    coefficients.
    """
    st = getattr(eq, "state", eq)
    x, y, z = st.as_tuple()
    p = model.params

    def rhs(xc, yc, zc, xt, yd):
        return eval_rhs(model, State(xc, yc, zc), xt, yd)

    hx = h * (1.0 + abs(x))
    hy = h * (1.0 + abs(y))
    # A: d(dx)/dx with the delayed argument held fixed
    A = (rhs(x + hx, y, z, x, y)[0] - rhs(x - hx, y, z, x, y)[0]) / (2 * hx)
    B = (rhs(x, y + hy, z, x, y)[0] - rhs(x, y - hy, z, x, y)[0]) / (2 * hy)
    C = (rhs(x, y + hy, z, x, y)[1] - rhs(x, y - hy, z, x, y)[1]) / (2 * hy)
    D = (rhs(x, y, z, x + hx, y)[1] - rhs(x, y, z, x - hx, y)[1]) / (2 * hx)
    E = (rhs(x, y, z, x, y + hy)[2] - rhs(x, y, z, x, y - hy)[2]) / (2 * hy)
    return JacCoeffs(A=A, B=B, C=C, D=D, E=E, alpha=p.alpha)
