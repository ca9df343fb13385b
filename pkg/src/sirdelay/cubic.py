"""Closed-form real roots of cubic (and degenerate lower-degree) polynomials."""

from __future__ import annotations

import math

from .errors import DomainError

__all__ = ["solve_cubic_real"]


def _polish(c3, c2, c1, c0, x):
    # Newton steps push the residual to round-off; repeated roots converge
    # linearly, hence the extra iterations
    for _ in range(6):
        f = ((c3 * x + c2) * x + c1) * x + c0
        fp = (3.0 * c3 * x + 2.0 * c2) * x + c1
        if fp == 0.0:
            break
        x -= f / fp
    return x


def solve_cubic_real(c3: float, c2: float, c1: float, c0: float):
    """All real roots of c3*x^3 + c2*x^2 + c1*x + c0 = 0, sorted ascending.

    Handles degenerate leading coefficients (quadratic, linear).  Multiple
    roots are collapsed to a single entry.  Raises DomainError for the
    identically zero polynomial.  Each returned root r satisfies
    |p(r)| < 1e-9 * max(1, |c3|, |c2|, |c1|, |c0|).
    """
    for v in (c3, c2, c1, c0):
        if not math.isfinite(v):
            raise DomainError(f"non-finite cubic coefficient {v!r}")
    scale = max(abs(c3), abs(c2), abs(c1), abs(c0))
    if scale == 0.0:
        raise DomainError("identically zero polynomial has no well-defined roots")
    tiny = 1e-14 * scale

    if abs(c3) <= tiny:
        # quadratic c2*x^2 + c1*x + c0
        if abs(c2) <= tiny:
            if abs(c1) <= tiny:
                return []  # nonzero constant: no roots
            return [-c0 / c1]
        disc = c1 * c1 - 4.0 * c2 * c0
        if disc < 0.0:
            return []
        sq = math.sqrt(disc)
        # numerically stable split
        q = -0.5 * (c1 + math.copysign(sq, c1)) if c1 != 0.0 else 0.5 * sq
        if q == 0.0:
            roots = [0.0, 0.0] if c0 == 0.0 else [0.0]
        else:
            roots = [q / c2, c0 / q]
        roots = sorted(set(round(r, 15) for r in roots))
        return [_polish(0.0, c2, c1, c0, r) for r in roots]

    # depressed form t^3 + p*t + q with x = t - c2/(3*c3)
    b, c, d = c2 / c3, c1 / c3, c0 / c3
    shift = b / 3.0
    p = c - b * b / 3.0
    q = 2.0 * b**3 / 27.0 - b * c / 3.0 + d
    disc = -4.0 * p**3 - 27.0 * q * q
    # band around zero discriminant: repeated real roots up to round-off
    disc_tol = 1e-10 * max(1.0, abs(p) ** 3, q * q)
    roots = []
    if abs(p) < 1e-14 * max(1.0, b * b) and abs(q) < 1e-14 * max(1.0, abs(d), 1.0):
        roots = [0.0]
    elif disc > disc_tol:
        # three distinct real roots: trigonometric form (p < 0 here)
        m = 2.0 * math.sqrt(-p / 3.0)
        arg = 3.0 * q / (p * m)
        arg = max(-1.0, min(1.0, arg))
        theta = math.acos(arg)
        roots = [m * math.cos((theta - 2.0 * math.pi * k) / 3.0) for k in range(3)]
    else:
        half_q = q / 2.0
        inner = half_q * half_q + p**3 / 27.0
        if inner >= 0.0:
            s = math.sqrt(inner)
            u = math.copysign(abs(-half_q + s) ** (1.0 / 3.0), -half_q + s)
            v = math.copysign(abs(-half_q - s) ** (1.0 / 3.0), -half_q - s)
            roots = [u + v]
            if abs(disc) <= disc_tol and p != 0.0:
                roots.append(-roots[0] / 2.0)  # double-root partner of the single root
        else:
            # 0 < disc <= tol: three real roots with a nearly coincident pair
            m = 2.0 * math.sqrt(-p / 3.0)
            arg = max(-1.0, min(1.0, 3.0 * q / (p * m)))
            theta = math.acos(arg)
            roots = [m * math.cos((theta - 2.0 * math.pi * k) / 3.0) for k in range(3)]

    out = []
    bound = 1e-9 * max(1.0, scale)
    for t in roots:
        x = _polish(c3, c2, c1, c0, t - shift)
        if abs(((c3 * x + c2) * x + c1) * x + c0) >= bound:
            continue  # near-degenerate partner that is not actually a root
        if not any(abs(x - w) <= 1e-9 * max(1.0, abs(x)) for w in out):
            out.append(x)
    out.sort()
    return out
