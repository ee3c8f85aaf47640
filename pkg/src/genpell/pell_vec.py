"""Three-term vectors of consecutive sequence values, with dot, cross and mixed products.

A vector for index n is ``(s(n), s(n+1), s(n+2))`` where ``s`` is the
generalized Pell sequence (``"gen"``), its complex extension (``"complex"``)
or its dual extension (``"dual"``).  Products are computed directly from the
components; the ``closed_form_*`` functions evaluate the printed closed forms
independently so the two can be compared.
"""

from __future__ import annotations

import math
from functools import lru_cache
from typing import Any, Literal, NamedTuple

from genpell.gen_pell import PellParams, e_p, gen_pell
from genpell.hypercomplex import Complex, Dual, complex_pell, dual_pell, dual_sqrt
from genpell.pell_core import neg_one_pow as sgn
from genpell.pell_core import pell as P

Kind = Literal["gen", "complex", "dual"]
KINDS: tuple[Kind, ...] = ("gen", "complex", "dual")

# every cross product of sequence vectors is a multiple of this
CROSS_DIRECTION = (1, 2, -1)


class Vec3(NamedTuple):
    x: Any
    y: Any
    z: Any

    def scale(self, c: Any) -> Vec3:
        return Vec3(self.x * c, self.y * c, self.z * c)

    def __str__(self) -> str:
        return f"({self.x}, {self.y}, {self.z})"


def _zero(kind: Kind) -> Any:
    return {"gen": 0, "complex": Complex(0, 0), "dual": Dual(0, 0)}[kind]


def term(kind: Kind, params: PellParams, n: int) -> Any:
    if kind == "gen":
        return gen_pell(params, n)
    if kind == "complex":
        return complex_pell(params, n)
    if kind == "dual":
        return dual_pell(params, n)
    raise ValueError(f"unknown vector kind {kind!r}")


@lru_cache(maxsize=65536)
def _make_vec(kind: Kind, p: int, q: int, n: int) -> Vec3:
    params = PellParams(p, q)
    v = Vec3(term(kind, params, n), term(kind, params, n + 1), term(kind, params, n + 2))
    if v.z != 2 * v.y + v.x:
        raise AssertionError(f"{v} is not three consecutive terms")
    return v


def make_vec(kind: Kind, params: PellParams, n: int) -> Vec3:
    return _make_vec(kind, params.p, params.q, n)


def dot(u: Vec3, v: Vec3, conjugate: bool | None = None) -> Any:
    """Sum of componentwise products.

    ``conjugate=None`` picks the form per ring: Hermitian (second argument
    conjugated) for complex components, plain products otherwise.
    """
    if conjugate is None:
        conjugate = isinstance(v.x, Complex)
    if conjugate:
        return u.x * v.x.conj() + u.y * v.y.conj() + u.z * v.z.conj()
    return u.x * v.x + u.y * v.y + u.z * v.z


def cross(u: Vec3, v: Vec3) -> Vec3:
    return Vec3(
        u.y * v.z - u.z * v.y,
        u.z * v.x - u.x * v.z,
        u.x * v.y - u.y * v.x,
    )


def mixed(u: Vec3, v: Vec3, w: Vec3) -> Any:
    """``<u x v, w>`` with the plain (non-conjugating) dot: the 3x3 determinant."""
    return dot(cross(u, v), w, conjugate=False)


def cross_multiple(c: Vec3) -> Any | None:
    """The scalar s with ``c == s * (1, 2, -1)``, or None if c is not such a multiple."""
    s = c.x
    if c.y == s * 2 and c.z == -s:
        return s
    return None


def closed_form_dot(kind: Kind, params: PellParams, n: int, m: int) -> Any:
    p, q = params.p, params.q
    if kind == "gen":
        return (
            p * p * (P(n + m + 3) + P(n) * P(m))
            + p * q * (P(n + m + 2) + 2 * P(n + m) + 2 * P(n + 1) * P(m + 1))
            + q * q * (P(n + m + 1) + P(n - 1) * P(m - 1))
        )
    if kind == "complex":
        re = 7 * (p * p * P(n + m + 3) + 2 * p * q * P(n + m + 2) + q * q * P(n + m + 1))
        return Complex(re, sgn(n) * P(m - n) * e_p(params))
    if kind == "dual":
        k = n + m
        return (
            Dual(P(k + 3) + P(n) * P(m), 2 * P(k + 4) + P(k) + 2 * P(n) * P(m)) * (p * p)
            + Dual(
                P(k + 2) + 2 * P(n + 1) * P(m + 1) + 2 * P(k),
                2 * P(k + 3) + 4 * P(k + 1) + 2 * P(k + 2) + 4 * P(n + 1) * P(m + 1),
            ) * (p * q)
            + Dual(P(k + 1) + P(n - 1) * P(m - 1), 2 * P(k + 2) + P(k - 2) + 2 * P(n - 1) * P(m - 1))
            * (q * q)
        )
    raise ValueError(f"unknown vector kind {kind!r}")


def closed_form_cross_scalar(kind: Kind, params: PellParams, n: int, m: int) -> Any:
    """The printed multiplier of (1, 2, -1) in the cross product of vectors n and m.

    gen and dual carry the sign (-1)^(m+1) P(n-m); complex is printed with
    (-1)^n P(m-n).  The two agree because P(-k) = (-1)^(k+1) P(k).
    """
    e = e_p(params)
    if kind == "gen":
        return sgn(m + 1) * P(n - m) * e
    if kind == "complex":
        return Complex(2, 2) * (sgn(n) * P(m - n) * e)
    if kind == "dual":
        return Dual(1, 2) * (sgn(m + 1) * P(n - m) * e)
    raise ValueError(f"unknown vector kind {kind!r}")


def closed_form_cross(kind: Kind, params: PellParams, n: int, m: int) -> Vec3:
    s = closed_form_cross_scalar(kind, params, n, m)
    return Vec3(*(s * c for c in CROSS_DIRECTION))


def self_dot(kind: Kind, params: PellParams, n: int) -> Any:
    """Exact squared norm: Hermitian for complex, plain for gen and dual."""
    v = make_vec(kind, params, n)
    return dot(v, v)


def closed_form_self_dot(kind: Kind, params: PellParams, n: int) -> Any:
    """The printed expression under the square root of each norm formula."""
    p, q = params.p, params.q
    if kind == "gen":
        return (
            p * p * (P(2 * n + 3) + P(n) ** 2)
            + 2 * p * q * (P(2 * n + 2) + P(n) * P(n - 1))
            + q * q * (P(2 * n + 1) + P(n - 1) ** 2)
        )
    if kind == "complex":
        return Complex(7 * (p * p * P(2 * n + 3) + 2 * p * q * P(2 * n + 2) + q * q * P(2 * n + 1)), 0)
    if kind == "dual":
        re = (
            p * p * (P(2 * n + 3) + P(n) ** 2)
            + p * q * (P(2 * n + 2) + 2 * P(n + 1) ** 2 + 2 * P(2 * n))
            + q * q * (P(2 * n + 1) + P(n - 1) ** 2)
        )
        du = 2 * (
            p * p * (P(2 * n + 4) + P(n) * P(n + 1))
            + p * q * (P(2 * n + 3) + 2 * P(n + 1) * P(n + 2))
            + q * q * (P(2 * n + 2) + P(n - 1) * P(n))
        )
        return Dual(re, du)
    raise ValueError(f"unknown vector kind {kind!r}")


def _norm_of(kind: Kind, sq: Any) -> Any:
    if kind == "gen":
        return sq
    if kind == "complex":
        if sq.im != 0:
            raise ValueError(f"Hermitian self-dot {sq} is not real")
        return math.sqrt(sq.re)
    return dual_sqrt(sq)


def norm(kind: Kind, params: PellParams, n: int) -> Any:
    """gen: exact squared norm; complex: float sqrt of the Hermitian self-dot;
    dual: dual square root of the plain self-dot."""
    return _norm_of(kind, self_dot(kind, params, n))


def closed_form_norm(kind: Kind, params: PellParams, n: int) -> Any:
    return _norm_of(kind, closed_form_self_dot(kind, params, n))


def zero_vec(kind: Kind) -> Vec3:
    z = _zero(kind)
    return Vec3(z, z, z)
