"""Dense univariate polynomials over Python integers, in the indeterminate k."""

from __future__ import annotations

from .errors import DivisibilityError


def _trim(coeffs):
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


class IntPoly:
    """Immutable polynomial; ``coeffs[i]`` is the coefficient of ``k**i``.

    The coefficient tuple is always canonical (no trailing zeros), so the
    zero polynomial has ``coeffs == ()``.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        object.__setattr__(self, "coeffs", _trim(int(c) for c in coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("IntPoly is immutable")

    @classmethod
    def constant(cls, c: int) -> IntPoly:
        return cls((c,))

    @classmethod
    def monomial(cls, degree: int, c: int = 1) -> IntPoly:
        return cls((0,) * degree + (c,))

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def __eq__(self, other):
        if isinstance(other, int):
            other = IntPoly.constant(other)
        if not isinstance(other, IntPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"IntPoly({list(self.coeffs)})"

    def __str__(self):
        return to_pretty(self)

    def __add__(self, other):
        return poly_add(self, _coerce(other))

    __radd__ = __add__

    def __sub__(self, other):
        return poly_sub(self, _coerce(other))

    def __rsub__(self, other):
        return poly_sub(_coerce(other), self)

    def __mul__(self, other):
        return poly_mul(self, _coerce(other))

    __rmul__ = __mul__

    def __neg__(self):
        return poly_neg(self)

    def __pow__(self, a):
        return poly_pow(self, a)

    def __call__(self, x):
        return poly_eval(self, x)


def _coerce(x):
    if isinstance(x, IntPoly):
        return x
    if isinstance(x, int):
        return IntPoly.constant(x)
    raise TypeError(f"cannot use {type(x).__name__} as IntPoly")


ZERO = IntPoly()
ONE = IntPoly((1,))
K = IntPoly((0, 1))
K_MINUS_1 = IntPoly((-1, 1))
ONE_MINUS_K = IntPoly((1, -1))


def poly_add(p: IntPoly, q: IntPoly) -> IntPoly:
    a, b = p.coeffs, q.coeffs
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] += c
    return IntPoly(out)


def poly_neg(p: IntPoly) -> IntPoly:
    return IntPoly(-c for c in p.coeffs)


def poly_sub(p: IntPoly, q: IntPoly) -> IntPoly:
    return poly_add(p, poly_neg(q))


def poly_mul(p: IntPoly, q: IntPoly) -> IntPoly:
    a, b = p.coeffs, q.coeffs
    if not a or not b:
        return ZERO
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return IntPoly(out)


def poly_scale(p: IntPoly, c: int) -> IntPoly:
    return IntPoly(c * x for x in p.coeffs)


def poly_pow(p: IntPoly, a: int) -> IntPoly:
    if a < 0:
        raise ValueError("negative exponent")
    result = ONE
    base = p
    while a:
        if a & 1:
            result = poly_mul(result, base)
        a >>= 1
        if a:
            base = poly_mul(base, base)
    return result


def poly_eval(p: IntPoly, x: int) -> int:
    acc = 0
    for c in reversed(p.coeffs):
        acc = acc * x + c
    return acc


def poly_divmod(p: IntPoly, q: IntPoly) -> tuple[IntPoly, IntPoly]:
    """Long division in Z[k].

    Exact over the integers only when every intermediate leading
    coefficient is divisible by the leading coefficient of ``q`` (always
    the case for monic divisors such as powers of k - 1).
    """
    if q.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(p.coeffs)
    dq = q.degree
    lead = q.leading()
    quot = [0] * max(len(rem) - dq, 0)
    for i in range(len(rem) - 1, dq - 1, -1):
        c = rem[i]
        if c == 0:
            continue
        if c % lead:
            break
        f = c // lead
        quot[i - dq] = f
        for j, qc in enumerate(q.coeffs):
            rem[i - dq + j] -= f * qc
    return IntPoly(quot), IntPoly(rem)


def poly_div_exact(p: IntPoly, q: IntPoly) -> IntPoly:
    quot, rem = poly_divmod(p, q)
    if not rem.is_zero():
        raise DivisibilityError(
            f"{to_pretty(p)} is not divisible by {to_pretty(q)}",
            quotient=quot,
            remainder=rem,
        )
    return quot


def to_coeffs(p: IntPoly) -> str:
    return "[" + ", ".join(str(c) for c in p.coeffs) + "]"


def to_pretty(p: IntPoly, var: str = "k") -> str:
    if p.is_zero():
        return "0"
    parts = []
    for i in range(p.degree, -1, -1):
        c = p.coeffs[i]
        if c == 0:
            continue
        mag = abs(c)
        if i == 0:
            body = str(mag)
        else:
            mono = var if i == 1 else f"{var}^{i}"
            body = mono if mag == 1 else f"{mag}*{mono}"
        if not parts:
            parts.append(body if c > 0 else "-" + body)
        else:
            parts.append(("+ " if c > 0 else "- ") + body)
    return " ".join(parts)
