"""Compiled range-scan kernels for linear-target searches over N domains.

Each kernel decides, for every n in [lo, hi), whether some (x, y, z, w) in
N^4 with x^2+y^2+z^2+w^2 = n puts the linear value a*x+b*y+c*z+e*w in the
power class {d * t^m}.  Kernels only decide existence; witnesses are
recomputed by the ordinary search, and every reported miss is re-verified
by the generic enumerator before it becomes a counterexample.

numba compiles the kernels when available; the pure-Python bodies are the
fallback and the reference implementation for the kernel tests.  Set
FOURSQ_NO_NUMBA=1 to force the fallback.
"""

from __future__ import annotations

import os

import numpy as np

try:
    if os.environ.get("FOURSQ_NO_NUMBA"):
        raise ImportError("disabled by FOURSQ_NO_NUMBA")
    from numba import njit
    HAVE_NUMBA = True
except ImportError:          # pragma: no cover - exercised via env flag
    HAVE_NUMBA = False

    def njit(*args, **kwargs):
        if args and callable(args[0]):
            return args[0]
        return lambda f: f


@njit(cache=True)
def _nb_isqrt(n):
    if n < 0:
        return -1
    if n < 2:
        return n
    x = int(np.sqrt(np.float64(n)))
    while x * x > n:
        x -= 1
    while (x + 1) * (x + 1) <= n:
        x += 1
    return x


@njit(cache=True)
def _nb_in_class(v, d, m, allow_neg):
    """v == d * t**m for some admissible t."""
    if v % d != 0:
        return False
    q = v // d
    if q < 0:
        if not allow_neg or m % 2 == 0:
            return False
        q = -q
    if q == 0:
        return True
    if m == 2:
        r = _nb_isqrt(q)
        return r * r == q
    t = int(np.float64(q) ** (1.0 / m) + 0.5)
    for cand in range(max(t - 2, 0), t + 3):
        p = 1
        for _ in range(m):
            p *= cand
        if p == q:
            return True
        if p > q:
            break
    return False


@njit(cache=True)
def scan_solved_z(lo, hi, a, b, c, d, m):
    """Existence over [lo, hi) for coeffs (a, b, c, 0), c > 0, a, b >= 0,
    target values d * t**m with t >= 0 (nonnegative classes only)."""
    out = np.zeros(hi - lo, dtype=np.uint8)
    for idx in range(hi - lo):
        n = lo + idx
        found = False
        sx = _nb_isqrt(n)
        for x in range(sx + 1):
            rx = n - x * x
            sy = _nb_isqrt(rx)
            for y in range(sy + 1):
                ry = rx - y * y
                base = a * x + b * y
                zmax = _nb_isqrt(ry)
                top = base + c * zmax
                t = 0
                while True:
                    v = d
                    for _ in range(m):
                        v *= t
                    if v > top:
                        break
                    if v >= base and (v - base) % c == 0:
                        z = (v - base) // c
                        w2 = ry - z * z
                        if w2 >= 0:
                            w = _nb_isqrt(w2)
                            if w * w == w2:
                                found = True
                                break
                    t += 1
                if found:
                    break
            if found:
                break
        if found:
            out[idx] = 1
    return out


@njit(cache=True)
def scan_xy_only(lo, hi, a, b, d, m, allow_neg):
    """Existence over [lo, hi) for coeffs (a, b, 0, 0); a, b of any sign."""
    out = np.zeros(hi - lo, dtype=np.uint8)
    for idx in range(hi - lo):
        n = lo + idx
        found = False
        sx = _nb_isqrt(n)
        for x in range(sx + 1):
            rx = n - x * x
            sy = _nb_isqrt(rx)
            for y in range(sy + 1):
                if not _nb_in_class(a * x + b * y, d, m, allow_neg):
                    continue
                ry = rx - y * y
                sz = _nb_isqrt(ry)
                for z in range(sz + 1):
                    w2 = ry - z * z
                    w = _nb_isqrt(w2)
                    if w * w == w2:
                        found = True
                        break
                if found:
                    break
            if found:
                break
        if found:
            out[idx] = 1
    return out


@njit(cache=True)
def scan_full(lo, hi, a, b, c, e, d, m, allow_neg):
    """Existence over [lo, hi) for general linear coeffs including w."""
    out = np.zeros(hi - lo, dtype=np.uint8)
    for idx in range(hi - lo):
        n = lo + idx
        found = False
        sx = _nb_isqrt(n)
        for x in range(sx + 1):
            rx = n - x * x
            sy = _nb_isqrt(rx)
            for y in range(sy + 1):
                ry = rx - y * y
                sz = _nb_isqrt(ry)
                for z in range(sz + 1):
                    w2 = ry - z * z
                    w = _nb_isqrt(w2)
                    if w * w != w2:
                        continue
                    if _nb_in_class(a * x + b * y + c * z + e * w,
                                    d, m, allow_neg):
                        found = True
                        break
                if found:
                    break
            if found:
                break
        if found:
            out[idx] = 1
    return out
