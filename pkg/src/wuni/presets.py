"""Built-in finite rings used as regression fixtures.

=========  ===================================================  =====
name       ring                                                 order
=========  ===================================================  =====
z4 z6 z8   integers modulo n (any ``zN`` is accepted)           n
f2 f3 f5   prime fields (``fP`` for any prime P)                P
f4         field with four elements                             4
m2f2       2x2 matrices over F_2                                16
t2f2       upper triangular 2x2 matrices over F_2               8
struct3f2  ``a I + b E13 + c E23`` in M_3(F_2)                   8
kxyf2      F_2[x, y] / (x^3, y^3, xy)                           32
=========  ===================================================  =====
"""

from __future__ import annotations

import itertools
import re
from functools import lru_cache

from sympy import isprime

from .finring import FiniteRing

__all__ = ["PRESET_NAMES", "preset", "zmod", "gf4", "matrix_ring_f2", "upper_triangular_f2",
           "struct3_f2", "kxy_f2"]

PRESET_NAMES = ("z4", "z6", "z8", "f2", "f4", "f5", "m2f2", "t2f2", "struct3f2", "kxyf2")


def zmod(n: int) -> FiniteRing:
    return FiniteRing(
        [[(a + b) % n for b in range(n)] for a in range(n)],
        [[(a * b) % n for b in range(n)] for a in range(n)],
        name=f"z{n}",
    )


def gf4() -> FiniteRing:
    # elements are bit pairs c0 + c1*a with a^2 = a + 1
    def mul(u, v):
        prod = 0
        for i in range(2):
            if v >> i & 1:
                prod ^= u << i
        if prod & 4:
            prod ^= 0b111
        return prod

    return FiniteRing(
        [[a ^ b for b in range(4)] for a in range(4)],
        [[mul(a, b) for b in range(4)] for a in range(4)],
        name="f4",
    )


def _matmul_f2(a, b):
    n = len(a)
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(n)) % 2 for j in range(n)) for i in range(n)
    )


def _matadd_f2(a, b):
    return tuple(tuple((x + y) % 2 for x, y in zip(r, s)) for r, s in zip(a, b))


def matrix_ring_f2() -> FiniteRing:
    mats = [((a, b), (c, d)) for a, b, c, d in itertools.product((0, 1), repeat=4)]
    return FiniteRing.from_operations(mats, _matadd_f2, _matmul_f2, name="m2f2")


def upper_triangular_f2() -> FiniteRing:
    mats = [((a, b), (0, c)) for a, b, c in itertools.product((0, 1), repeat=3)]
    return FiniteRing.from_operations(mats, _matadd_f2, _matmul_f2, name="t2f2")


def struct3_f2() -> FiniteRing:
    mats = [((a, 0, b), (0, a, c), (0, 0, a)) for a, b, c in itertools.product((0, 1), repeat=3)]
    return FiniteRing.from_operations(mats, _matadd_f2, _matmul_f2, name="struct3f2")


_KXY_BASIS = ((0, 0), (1, 0), (2, 0), (0, 1), (0, 2))  # 1, x, x^2, y, y^2 as (deg x, deg y)


def kxy_f2() -> FiniteRing:
    """F_2[x, y]/(x^3, y^3, xy); element bits follow the basis 1, x, x^2, y, y^2."""
    pos = {m: i for i, m in enumerate(_KXY_BASIS)}

    def mul(u, v):
        out = 0
        for i, mi in enumerate(_KXY_BASIS):
            if not u >> i & 1:
                continue
            for j, mj in enumerate(_KXY_BASIS):
                if not v >> j & 1:
                    continue
                m = (mi[0] + mj[0], mi[1] + mj[1])
                if m in pos:
                    out ^= 1 << pos[m]
        return out

    return FiniteRing(
        [[a ^ b for b in range(32)] for a in range(32)],
        [[mul(a, b) for b in range(32)] for a in range(32)],
        name="kxyf2",
    )


KXY_X, KXY_X2, KXY_Y, KXY_Y2 = 0b10, 0b100, 0b1000, 0b10000


@lru_cache(maxsize=None)
def preset(name: str) -> FiniteRing:
    """Ring by preset name; raises ``KeyError`` for unknown names."""
    key = name.lower()
    fixed = {
        "f4": gf4,
        "m2f2": matrix_ring_f2,
        "t2f2": upper_triangular_f2,
        "struct3f2": struct3_f2,
        "kxyf2": kxy_f2,
    }
    if key in fixed:
        return fixed[key]()
    m = re.fullmatch(r"([zf])(\d+)", key)
    if m:
        n = int(m.group(2))
        if m.group(1) == "f" and not isprime(n):
            raise KeyError(f"f{n}: only prime fields and f4 are built in")
        if n >= 2:
            ring = zmod(n)
            ring.name = key
            return ring
    raise KeyError(f"unknown ring preset {name!r}")
