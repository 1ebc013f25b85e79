"""Compactly supported smooth bumps, mollifier kernels, and smoothsteps.

All transitions are built from the standard C-infinity bump
``exp(-1/(1-s^2))`` so that every derived object has compact support with
analytically known first and second derivatives.
"""
from __future__ import annotations

import functools

import numpy as np


def bump(s):
    """exp(-1/(1-s^2)) on |s|<1, zero outside."""
    s = np.asarray(s, dtype=float)
    out = np.zeros_like(s)
    inside = np.abs(s) < 1.0
    si = s[inside]
    out[inside] = np.exp(-1.0 / (1.0 - si * si))
    return out


def bump_d1(s):
    """First derivative of :func:`bump`."""
    s = np.asarray(s, dtype=float)
    out = np.zeros_like(s)
    inside = np.abs(s) < 1.0
    si = s[inside]
    g = 1.0 - si * si
    out[inside] = np.exp(-1.0 / g) * (-2.0 * si / (g * g))
    return out


def bump_d2(s):
    """Second derivative of :func:`bump`."""
    s = np.asarray(s, dtype=float)
    out = np.zeros_like(s)
    inside = np.abs(s) < 1.0
    si = s[inside]
    g = 1.0 - si * si
    # d/ds [ -2s/g^2 * e^{-1/g} ] with g' = -2s
    e = np.exp(-1.0 / g)
    out[inside] = e * ((4.0 * si * si) / g**4 - 2.0 / (g * g) - 8.0 * si * si / g**3)
    return out


@functools.lru_cache(maxsize=1)
def bump_mass() -> float:
    """Integral of the unit bump over [-1, 1], computed once by quadrature."""
    n = 1 << 16
    h = 2.0 / n
    s = -1.0 + (np.arange(n) + 0.5) * h
    return float(np.sum(bump(s)) * h)


def mollifier(y, eps):
    """Unit-mass mollifier with support (-eps, eps)."""
    return bump(np.asarray(y, dtype=float) / eps) / (bump_mass() * eps)


def mollifier_d1(y, eps):
    """Derivative of :func:`mollifier`."""
    return bump_d1(np.asarray(y, dtype=float) / eps) / (bump_mass() * eps * eps)


def _psi(s):
    out = np.zeros_like(s)
    pos = s > 0
    out[pos] = np.exp(-1.0 / s[pos])
    return out


def _psi_d1(s):
    out = np.zeros_like(s)
    pos = s > 0
    sp = s[pos]
    out[pos] = np.exp(-1.0 / sp) / (sp * sp)
    return out


def _psi_d2(s):
    out = np.zeros_like(s)
    pos = s > 0
    sp = s[pos]
    out[pos] = np.exp(-1.0 / sp) * (1.0 / sp**4 - 2.0 / sp**3)
    return out


def smoothstep(s):
    """C-infinity monotone transition: 0 for s<=0, 1 for s>=1."""
    s = np.asarray(s, dtype=float)
    a = _psi(s)
    b = _psi(1.0 - s)
    with np.errstate(invalid="ignore"):
        out = np.where(s <= 0.0, 0.0, np.where(s >= 1.0, 1.0, a / (a + b)))
    return out


def smoothstep_d1(s):
    s = np.asarray(s, dtype=float)
    a, b = _psi(s), _psi(1.0 - s)
    a1 = _psi_d1(s)
    b1 = -_psi_d1(1.0 - s)
    d = a + b
    out = np.zeros_like(s)
    mid = (s > 0.0) & (s < 1.0)
    out[mid] = (a1[mid] * b[mid] - a[mid] * b1[mid]) / (d[mid] * d[mid])
    return out


def smoothstep_d2(s):
    s = np.asarray(s, dtype=float)
    a, b = _psi(s), _psi(1.0 - s)
    a1 = _psi_d1(s)
    b1 = -_psi_d1(1.0 - s)
    a2 = _psi_d2(s)
    b2 = _psi_d2(1.0 - s)
    d = a + b
    d1 = a1 + b1
    e = a1 * b - a * b1
    e1 = a2 * b - a * b2
    out = np.zeros_like(s)
    mid = (s > 0.0) & (s < 1.0)
    out[mid] = (e1[mid] * d[mid] - 2.0 * e[mid] * d1[mid]) / d[mid] ** 3
    return out


class RadialTransition:
    """Radial profile rising 0 -> 1 on [r_lo, r_hi] (or falling if reversed).

    Evaluates as a function of radius r >= 0 with analytic first and second
    radial derivatives.
    """

    def __init__(self, r_lo: float, r_hi: float, falling: bool = False):
        if not r_hi > r_lo:
            raise ValueError("transition needs r_hi > r_lo")
        self.r_lo = float(r_lo)
        self.r_hi = float(r_hi)
        self.falling = falling
        self._w = self.r_hi - self.r_lo

    def _s(self, r):
        return (np.asarray(r, dtype=float) - self.r_lo) / self._w

    def value(self, r):
        v = smoothstep(self._s(r))
        return 1.0 - v if self.falling else v

    def d1(self, r):
        v = smoothstep_d1(self._s(r)) / self._w
        return -v if self.falling else v

    def d2(self, r):
        v = smoothstep_d2(self._s(r)) / (self._w * self._w)
        return -v if self.falling else v
