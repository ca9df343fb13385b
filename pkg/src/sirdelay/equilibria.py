"""Equilibrium computation: disease-free bisection and endemic root finding."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DomainError
from .model import ModelSpec, State, eval_rhs
from .responses import Bilinear, Linear

__all__ = [
    "Equilibrium",
    "find_disease_free",
    "find_endemic",
    "all_equilibria",
    "is_bilinear_special_case",
]

DISEASE_FREE = "disease_free"
ENDEMIC = "endemic"

#: residual bound every returned equilibrium satisfies
RESIDUAL_TOL = 1e-10
#: boundary band for the strict endemic-existence inequality
BOUNDARY_TOL = 1e-12


def _residual(model: ModelSpec, st: State) -> float:
    dx, dy, dz = eval_rhs(model, st, st.x, st.y)
    return max(abs(dx), abs(dy), abs(dz))


@dataclass(frozen=True)
class Equilibrium:
    """A constant solution of the model with a kind tag."""

    state: State
    kind: str  # "disease_free" | "endemic"
    residual: float

    def __str__(self):
        s = self.state
        return f"{self.kind}({s.x:.10g}, {s.y:.10g}, {s.z:.10g})"


def find_disease_free(model: ModelSpec):
    """Locate the disease-free steady state (xbar, 0, 0), if one exists.

    Solves a - d*x - c*V(x) = 0 by bisection on [0, a/d].  Returns None
    when the incidence does not vanish at y = 0 (no disease-free state can
    exist) or when the bracket carries no sign change.
    """
    if not model.supports_disease_free:
        return None
    p = model.params

    def g(x):
        return p.a - p.d * x - p.c * model.V.value(x)

    lo, hi = 0.0, p.a / p.d
    glo, ghi = g(lo), g(hi)
    if glo == 0.0:
        xbar = lo
    elif ghi == 0.0:
        xbar = hi
    elif glo < 0.0 or ghi > 0.0:
        return None
    else:
        xbar = None
        for _ in range(300):
            mid = 0.5 * (lo + hi)
            gm = g(mid)
            if abs(gm) < 1e-12 or hi - lo < 1e-15 * max(1.0, hi):
                xbar = mid
                break
            if gm > 0.0:
                lo = mid
            else:
                hi = mid
        if xbar is None:
            xbar = 0.5 * (lo + hi)
    st = State(xbar, 0.0, 0.0)
    return Equilibrium(state=st, kind=DISEASE_FREE, residual=_residual(model, st))


def is_bilinear_special_case(model: ModelSpec) -> bool:
    """True for f = x*y, V = x, P = y: the case with closed-form endemic
    coordinates and a delay-independent global stability criterion."""
    return (
        isinstance(model.f, Bilinear)
        and isinstance(model.V, Linear) and model.V.k == 1.0
        and isinstance(model.P, Linear) and model.P.k == 1.0
    )


def _closed_form_endemic(model: ModelSpec):
    """Endemic point of the bilinear special case, or None.

    x* = (d1+r)/b1, y* = (b1*a - (c+d)(d1+r)) / (b*d1 + r*(b-b1)),
    z* = (r/alpha)*y*.  Exists only under the strict threshold
    (d1+r)/b1 < a/(c+d); the equality boundary counts as nonexistent.
    """
    p = model.params
    xstar = (p.d1 + p.r) / p.b1
    thresh = p.a / (p.c + p.d)
    if xstar >= thresh - BOUNDARY_TOL * max(1.0, abs(thresh)):
        return None
    ystar = (p.b1 * p.a - (p.c + p.d) * (p.d1 + p.r)) / (p.b * p.d1 + p.r * (p.b - p.b1))
    zstar = (p.r / p.alpha) * ystar
    st = State(xstar, ystar, zstar)
    return Equilibrium(state=st, kind=ENDEMIC, residual=_residual(model, st))


def _newton_jacobian(model: ModelSpec, x, y, z):
    """Jacobian of the rhs with delayed arguments set to current values."""
    p = model.params
    fx = model.f.partial(0, x, y)
    fy = model.f.partial(1, x, y)
    vp = model.V.partial(0, x)
    pp = model.P.partial(0, y)
    return np.array([
        [-p.b * fx - p.d - p.c * vp, -p.b * fy, p.alpha],
        [p.b1 * fx, p.b1 * fy - p.r * pp - p.d1, 0.0],
        [0.0, p.r * pp, -p.alpha],
    ])


_NEWTON_FAILURES = (DomainError, ZeroDivisionError, OverflowError,
                    ValueError, np.linalg.LinAlgError)


def _damped_newton(model: ModelSpec, start, max_iter=60):
    """Damped Newton on the steady-state system; returns a State or None."""
    x, y, z = start

    def gvec(x, y, z):
        return np.array(eval_rhs(model, State(x, y, z), x, y))

    try:
        g = gvec(x, y, z)
    except _NEWTON_FAILURES:
        return None
    for _ in range(max_iter):
        gn = float(np.max(np.abs(g)))
        if gn < 1e-13:
            return State(float(x), float(y), float(z))
        try:
            J = _newton_jacobian(model, x, y, z)
            step = np.linalg.solve(J, -g)
        except _NEWTON_FAILURES:
            return None
        lam = 1.0
        for _ in range(40):
            xn, yn, zn = x + lam * step[0], y + lam * step[1], z + lam * step[2]
            try:
                g_new = gvec(xn, yn, zn)
            except _NEWTON_FAILURES:
                lam *= 0.5
                continue
            if float(np.max(np.abs(g_new))) < gn * (1.0 - 1e-4 * lam) or lam < 1e-10:
                x, y, z, g = xn, yn, zn, g_new
                break
            lam *= 0.5
        else:
            return None
    return State(float(x), float(y), float(z)) if float(np.max(np.abs(g))) < 1e-13 else None


def find_endemic(model: ModelSpec):
    """All endemic equilibria (y > 0) of the model.

    The bilinear special case (f = x*y, V = x, P = y) is answered in
    closed form.  Otherwise a damped Newton iteration is started from a
    deterministic 8x8x8 grid over [0, a/d]^3, solutions are deduplicated
    at 1e-8 distance, and every result is verified to residual < 1e-10.
    Nonconvergence from all starts yields an empty list.
    """
    if is_bilinear_special_case(model):
        eq = _closed_form_endemic(model)
        return [eq] if eq is not None else []

    p = model.params
    hi = p.a / p.d
    grid = np.linspace(0.0, hi, 8)
    found = []
    for gx in grid:
        for gy in grid:
            for gz in grid:
                st = _damped_newton(model, (gx, gy, gz))
                if st is None:
                    continue
                if st.y <= 1e-8 or st.x < -1e-9 or st.z < -1e-9:
                    continue
                res = _residual(model, st)
                if res >= RESIDUAL_TOL:
                    continue
                if any(st.max_abs_diff(e.state) < 1e-8 for e in found):
                    continue
                found.append(Equilibrium(state=st, kind=ENDEMIC, residual=res))
    found.sort(key=lambda e: (e.state.x, e.state.y, e.state.z))
    return found


def all_equilibria(model: ModelSpec):
    """Disease-free equilibrium (when present) followed by endemic ones."""
    eqs = []
    df = find_disease_free(model)
    if df is not None:
        eqs.append(df)
    eqs.extend(find_endemic(model))
    return eqs
