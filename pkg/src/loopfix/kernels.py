"""Hot simulation kernels: numba-jitted with a pure-Python/numpy fallback.

The death-birth trial loop dominates runtime for fixation-probability
estimates, so it is compiled with numba's ``@njit`` when available. Setting
the environment variable ``LOOPFIX_DISABLE_NUMBA=1`` (or any value other than
``0``/empty) before import selects the interpreted fallback, which runs the
exact same source and produces bit-identical results, just slower. The
undecorated functions stay importable (``*_py`` names) so the two paths can
be compared directly; see ``benchmarks/bench_kernels.py``.

Randomness is counter-based: trial t of a run draws from an xorshift128+
stream whose two seed words come from positions (2t+1, 2t+2) of a splitmix64
sequence, so trials are independent, order-insensitive, and reproducible
from ``(seed, stream, trial)`` alone.
"""
from __future__ import annotations

import math
import os

import numpy as np

DISABLE_ENV = "LOOPFIX_DISABLE_NUMBA"


def _numba_requested() -> bool:
    flag = os.environ.get(DISABLE_ENV, "").strip()
    return flag in ("", "0")


def _load_njit():
    if _numba_requested():
        try:
            from numba import njit as numba_njit

            return numba_njit, True
        except ImportError:
            pass

    def noop_njit(*args, **kwargs):
        if args and callable(args[0]) and len(args) == 1 and not kwargs:
            return args[0]

        def decorate(func):
            return func

        return decorate

    return noop_njit, False


njit, NUMBA_ENABLED = _load_njit()

# xorshift128+ constants; kept as uint64 so shifts and adds wrap identically
# under numba and under numpy scalar arithmetic
_SH23 = np.uint64(23)
_SH17 = np.uint64(17)
_SH26 = np.uint64(26)
_SH11 = np.uint64(11)
_INV53 = 1.0 / 9007199254740992.0  # 2^-53

_MASK64 = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15
_MIX1 = 0xBF58476D1CE4E5B9
_MIX2 = 0x94D049BB133111EB


def _splitmix64_int(x: int) -> int:
    """splitmix64 finalizer on Python ints (exact 64-bit wrap via masking)."""
    z = (x + _GOLDEN) & _MASK64
    z = ((z ^ (z >> 30)) * _MIX1) & _MASK64
    z = ((z ^ (z >> 27)) * _MIX2) & _MASK64
    return z ^ (z >> 31)


def trial_seeds(seed: int, trials: int, stream: int = 0) -> np.ndarray:
    """(trials, 2) uint64 seed words, one independent substream per trial."""
    base = _splitmix64_int((int(seed) & _MASK64) ^ ((int(stream) * _MIX1) & _MASK64))
    out = np.empty((trials, 2), dtype=np.uint64)
    with np.errstate(over="ignore"):
        t = np.arange(trials, dtype=np.uint64)
        for col, offset in ((0, 1), (1, 2)):
            z = np.uint64(base) + (np.uint64(2) * t + np.uint64(offset)) * np.uint64(_GOLDEN)
            z = (z ^ (z >> np.uint64(30))) * np.uint64(_MIX1)
            z = (z ^ (z >> np.uint64(27))) * np.uint64(_MIX2)
            out[:, col] = z ^ (z >> np.uint64(31))
    # an all-zero state would lock the generator; perturb that (measure-zero) case
    dead = (out[:, 0] | out[:, 1]) == 0
    if np.any(dead):
        out[dead, 0] = np.uint64(_GOLDEN)
    return out


def _xs128p_py(s0, s1):
    """One xorshift128+ step: returns (s0', s1', output word)."""
    x = s0 ^ (s0 << _SH23)
    s1n = x ^ s1 ^ (x >> _SH17) ^ (s1 >> _SH26)
    return s1, s1n, s1n + s1


def _db_fixation_py(
    nbr_ptr,
    nbr_idx,
    nbr_wt,
    loop_wt,
    strength,
    b,
    cost,
    delta,
    mutant_coop,
    seeds,
    step_limit,
):
    """Run one fixation trial per seed row; return (fixed, limit_hits, steps).

    Dynamics per step: a uniformly chosen vertex dies; the replacement
    strategy is drawn from its neighbors and itself with probability
    proportional to edge (or self-loop) weight times exp(delta * payoff),
    where payoff_j = b * q_j - cost * s_j and q_j is the walk-weighted
    cooperator fraction around j (self-loop included).
    """
    n = loop_wt.shape[0]
    trials = seeds.shape[0]
    max_deg = 0
    for i in range(n):
        d = nbr_ptr[i + 1] - nbr_ptr[i]
        if d > max_deg:
            max_deg = d

    s = np.empty(n, dtype=np.int8)
    q = np.empty(n, dtype=np.float64)
    fbuf = np.empty(max_deg + 1, dtype=np.float64)

    resident = 0 if mutant_coop else 1
    mutant = 1 - resident
    dm0 = 1.0 if mutant == 1 else -1.0

    fixed = 0
    limit_hits = 0
    total_steps = 0

    for t in range(trials):
        s0 = seeds[t, 0]
        s1 = seeds[t, 1]

        for i in range(n):
            s[i] = resident
            q[i] = float(resident)

        s0, s1, word = _xs128p_py(s0, s1)
        u = (word >> _SH11) * _INV53
        v0 = int(u * n)
        if v0 >= n:
            v0 = n - 1
        s[v0] = mutant
        q[v0] += dm0 * loop_wt[v0] / strength[v0]
        for e in range(nbr_ptr[v0], nbr_ptr[v0 + 1]):
            k = nbr_idx[e]
            q[k] += dm0 * nbr_wt[e] / strength[k]
        ncoop = 1 if mutant == 1 else n - 1

        steps = 0
        while 0 < ncoop < n:
            if steps >= step_limit:
                limit_hits += 1
                break
            steps += 1

            s0, s1, word = _xs128p_py(s0, s1)
            u = (word >> _SH11) * _INV53
            v = int(u * n)
            if v >= n:
                v = n - 1

            lo = nbr_ptr[v]
            hi = nbr_ptr[v + 1]
            fbuf[0] = loop_wt[v] * math.exp(delta * (b * q[v] - cost * s[v]))
            total = fbuf[0]
            for e in range(lo, hi):
                k = nbr_idx[e]
                f = nbr_wt[e] * math.exp(delta * (b * q[k] - cost * s[k]))
                fbuf[e - lo + 1] = f
                total += f

            s0, s1, word = _xs128p_py(s0, s1)
            r = ((word >> _SH11) * _INV53) * total
            new = s[v]
            acc = fbuf[0]
            if r >= acc:
                new = s[nbr_idx[hi - 1]]  # fallthrough guard
                for e in range(lo, hi):
                    acc += fbuf[e - lo + 1]
                    if r < acc:
                        new = s[nbr_idx[e]]
                        break

            if new != s[v]:
                dm = 1.0 if new == 1 else -1.0
                s[v] = new
                ncoop += 1 if new == 1 else -1
                q[v] += dm * loop_wt[v] / strength[v]
                for e in range(lo, hi):
                    k = nbr_idx[e]
                    q[k] += dm * nbr_wt[e] / strength[k]

        total_steps += steps
        if ncoop == n:
            if mutant == 1:
                fixed += 1
        elif ncoop == 0:
            if mutant == 0:
                fixed += 1

    return fixed, limit_hits, total_steps


if NUMBA_ENABLED:
    _xs128p = njit(cache=True)(_xs128p_py)

    def _compile_kernel():
        src = _db_fixation_py
        import types

        # rebind the RNG step to its jitted version inside the kernel body
        g = dict(src.__globals__)
        g["_xs128p_py"] = _xs128p
        clone = types.FunctionType(src.__code__, g, src.__name__, src.__defaults__)
        return njit(cache=True)(clone)

    db_fixation_kernel = _compile_kernel()
else:
    _xs128p = _xs128p_py
    db_fixation_kernel = _db_fixation_py

db_fixation_kernel_py = _db_fixation_py
