"""Exact univariate polynomials over the rationals, plus the homogeneous
two-variable form used to bundle a finite polynomial with a power of the
second variable.

A polynomial is a trimmed tuple of ``fractions.Fraction`` coefficients in
ascending degree: ``()`` is the zero polynomial, so equality is structural
and values are hashable.  All arithmetic is exact.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

Poly = tuple  # tuple[Fraction, ...], ascending degree, no trailing zeros

ZERO: Poly = ()
ONE: Poly = (Fraction(1),)


def poly(coeffs: Iterable) -> Poly:
    """Build a polynomial from ascending-degree coefficients, trimming zeros."""
    out = [Fraction(c) for c in coeffs]
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def poly_degree(p: Poly) -> int:
    """Degree of ``p``; the zero polynomial reports -1."""
    return len(p) - 1


def poly_add(a: Poly, b: Poly) -> Poly:
    out = [Fraction(0)] * max(len(a), len(b))
    for i, c in enumerate(a):
        out[i] += c
    for i, c in enumerate(b):
        out[i] += c
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def poly_neg(a: Poly) -> Poly:
    return tuple(-c for c in a)


def poly_sub(a: Poly, b: Poly) -> Poly:
    return poly_add(a, poly_neg(b))


def poly_scale(a: Poly, c) -> Poly:
    c = Fraction(c)
    if c == 0:
        return ZERO
    return tuple(x * c for x in a)


def poly_mul(a: Poly, b: Poly) -> Poly:
    if not a or not b:
        return ZERO
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca == 0:
            continue
        for j, cb in enumerate(b):
            out[i + j] += ca * cb
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def poly_divmod(a: Poly, b: Poly) -> tuple[Poly, Poly]:
    """Euclidean division ``a = q*b + r`` with ``deg r < deg b``."""
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    if len(a) < len(b):
        return ZERO, a
    rem = list(a)
    quo = [Fraction(0)] * (len(a) - len(b) + 1)
    inv = 1 / b[-1]
    for i in range(len(a) - len(b), -1, -1):
        c = rem[i + len(b) - 1] * inv
        if c == 0:
            continue
        quo[i] = c
        for j, cb in enumerate(b):
            rem[i + j] -= c * cb
    while rem and rem[-1] == 0:
        rem.pop()
    while quo and quo[-1] == 0:
        quo.pop()
    return tuple(quo), tuple(rem)


def poly_mod(a: Poly, b: Poly) -> Poly:
    return poly_divmod(a, b)[1]


def poly_divides(a: Poly, b: Poly) -> bool:
    """Whether ``a`` divides ``b``; zero divides only zero."""
    if not a:
        return not b
    return not poly_mod(b, a)


def poly_monic(a: Poly) -> Poly:
    if not a or a[-1] == 1:
        return a
    inv = 1 / a[-1]
    return tuple(c * inv for c in a)


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd via the Euclidean algorithm; ``gcd(0, 0) = 0``."""
    while b:
        a, b = b, poly_mod(a, b)
    return poly_monic(a)


def poly_lcm(a: Poly, b: Poly) -> Poly:
    """Monic lcm; zero if either argument is zero."""
    if not a or not b:
        return ZERO
    return poly_monic(poly_mul(poly_divmod(a, poly_gcd(a, b))[0], b))


def poly_eval(p: Poly, x) -> Fraction:
    x = Fraction(x)
    acc = Fraction(0)
    for c in reversed(p):
        acc = acc * x + c
    return acc


def poly_from_roots(roots: Iterable) -> Poly:
    """Monic product of ``(s - r)`` over the given roots (with repetition)."""
    out = ONE
    for r in roots:
        out = poly_mul(out, (-Fraction(r), Fraction(1)))
    return out


def linear_multiplicity(p: Poly, lam) -> int:
    """Multiplicity of ``lam`` as a root of ``p`` (0 when not a root)."""
    if not p:
        raise ValueError("multiplicity in the zero polynomial is undefined")
    lam = Fraction(lam)
    factor = (-lam, Fraction(1))
    count = 0
    while True:
        q, r = poly_divmod(p, factor)
        if r:
            return count
        p = q
        count += 1


def _divisors(n: int) -> list[int]:
    n = abs(n)
    out = []
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            out.append(n // d)
        d += 1
    return sorted(set(out))


def rational_roots(p: Poly) -> tuple[dict[Fraction, int], Poly]:
    """All rational roots of ``p`` with multiplicities.

    Returns ``(roots, remainder)`` where ``remainder`` is the monic cofactor
    with no rational root (degree 0 when ``p`` splits over the rationals).
    """
    if not p:
        raise ValueError("roots of the zero polynomial are undefined")
    p = poly_monic(p)
    roots: dict[Fraction, int] = {}
    # strip roots at zero first
    while len(p) > 1 and p[0] == 0:
        roots[Fraction(0)] = roots.get(Fraction(0), 0) + 1
        p = p[1:]
    if len(p) == 1:
        return roots, ONE
    den = 1
    for c in p:
        den = den * c.denominator // math.gcd(den, c.denominator)
    ints = [int(c * den) for c in p]
    candidates = set()
    for num in _divisors(ints[0]):
        for d in _divisors(ints[-1]):
            candidates.add(Fraction(num, d))
            candidates.add(Fraction(-num, d))
    for cand in sorted(candidates):
        while len(p) > 1 and poly_eval(p, cand) == 0:
            p = poly_divmod(p, (-cand, Fraction(1)))[0]
            roots[cand] = roots.get(cand, 0) + 1
    return roots, poly_monic(p)


def format_poly(p: Poly, var: str = "s") -> str:
    """Human-readable rendering, for messages and demos."""
    if not p:
        return "0"
    terms = []
    for i, c in enumerate(p):
        if c == 0:
            continue
        if i == 0:
            terms.append(str(c))
        else:
            power = var if i == 1 else f"{var}^{i}"
            if c == 1:
                terms.append(power)
            elif c == -1:
                terms.append(f"-{power}")
            else:
                terms.append(f"{c}*{power}")
    out = terms[0]
    for t in terms[1:]:
        out += f" - {t[1:]}" if t.startswith("-") else f" + {t}"
    return out


@dataclass(frozen=True)
class HomogPoly:
    """A homogeneous factor ``t^k * (finite part homogenised)``.

    Stored as the exponent ``inf_exp`` of the second variable and a monic
    finite part in the first variable.  ``HomogPoly(0, ())`` is the
    distinguished zero value; total degree is ``inf_exp + deg(finite)``.
    """

    inf_exp: int
    finite: Poly

    def __post_init__(self):
        if self.inf_exp < 0:
            raise ValueError("negative infinite exponent")
        object.__setattr__(self, "finite", poly(self.finite))
        if self.finite:
            if self.finite[-1] != 1:
                raise ValueError("finite part must be monic")
        elif self.inf_exp != 0:
            raise ValueError("the zero value must carry inf_exp == 0")

    @classmethod
    def zero(cls) -> "HomogPoly":
        return cls(0, ZERO)

    @classmethod
    def one(cls) -> "HomogPoly":
        return cls(0, ONE)

    @property
    def is_zero(self) -> bool:
        return not self.finite


def hif_degree(a: HomogPoly) -> int:
    if a.is_zero:
        raise ValueError("degree of the zero homogeneous factor is undefined")
    return a.inf_exp + poly_degree(a.finite)


def hif_divides(a: HomogPoly, b: HomogPoly) -> bool:
    """Divisibility; everything divides the zero value."""
    if b.is_zero:
        return True
    if a.is_zero:
        return False
    return a.inf_exp <= b.inf_exp and poly_divides(a.finite, b.finite)


def hif_gcd(a: HomogPoly, b: HomogPoly) -> HomogPoly:
    if a.is_zero:
        return b
    if b.is_zero:
        return a
    return HomogPoly(min(a.inf_exp, b.inf_exp), poly_gcd(a.finite, b.finite))


def hif_lcm(a: HomogPoly, b: HomogPoly) -> HomogPoly:
    if a.is_zero or b.is_zero:
        return HomogPoly.zero()
    return HomogPoly(max(a.inf_exp, b.inf_exp), poly_lcm(a.finite, b.finite))


def poly_to_strings(p: Poly) -> list[str]:
    return [str(c) for c in p]


def poly_from_strings(items: Sequence[str]) -> Poly:
    return poly(Fraction(s) for s in items)


def hif_to_json(h: HomogPoly) -> dict:
    return {"k": h.inf_exp, "alpha": poly_to_strings(h.finite)}


def hif_from_json(obj: dict) -> HomogPoly:
    return HomogPoly(int(obj["k"]), poly_from_strings(obj["alpha"]))
