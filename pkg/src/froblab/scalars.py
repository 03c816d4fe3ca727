"""Exact arithmetic in Q and in the cyclotomic fields Q(zeta_p), p prime.

Elements of Q(zeta_p) are stored by their coordinates in the basis
1, z, ..., z^(p-2) of Q[x]/(Phi_p), with Phi_p = 1 + x + ... + x^(p-1).
For p = 2 this is Q itself and z = -1.

Rationals are ``gmpy2.mpq`` values throughout.
"""
from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache
from numbers import Rational as _RationalABC

import gmpy2
from gmpy2 import mpq

__all__ = [
    "Rational",
    "CycContext",
    "CycScalar",
    "FieldMismatchError",
    "ScalarParseError",
    "field_context",
    "to_rational",
    "parse_scalar",
    "format_scalar",
    "f_add",
    "f_mul",
    "f_neg",
    "f_inv",
    "f_eq",
]

Rational = type(mpq())

_ZERO = mpq(0)
_ONE = mpq(1)


class FieldMismatchError(ValueError):
    """Operands live in different cyclotomic fields."""


class ScalarParseError(ValueError):
    pass


def to_rational(x) -> Rational:
    if isinstance(x, Rational):
        return x
    if isinstance(x, (int, Fraction)) or isinstance(x, _RationalABC):
        return mpq(x)
    if isinstance(x, str):
        return mpq(x)
    raise TypeError(f"cannot convert {type(x).__name__} to an exact rational")


# -- coefficient-level helpers (tuples of mpq, length p - 1) -----------------

def reduce_cyclic(c, p):
    """Reduce a coefficient list of length p (mod x^p - 1) to length p - 1 (mod Phi_p)."""
    top = c[p - 1]
    if top:
        return tuple(c[i] - top for i in range(p - 1))
    return tuple(c[: p - 1])


def poly_mul(a, b, p):
    """Product of two coordinate tuples in Q[x]/(Phi_p)."""
    deg = p - 1
    if deg == 1:
        return (a[0] * b[0],)
    acc = [_ZERO] * p
    for i in range(deg):
        ai = a[i]
        if not ai:
            continue
        for j in range(deg):
            bj = b[j]
            if bj:
                k = i + j
                if k >= p:
                    k -= p
                acc[k] += ai * bj
    return reduce_cyclic(acc, p)


def galois_conjugate(a, k, p):
    """Image of ``a`` under the automorphism z -> z^k (k a unit mod p)."""
    acc = [_ZERO] * p
    for i, ai in enumerate(a):
        if ai:
            acc[(i * k) % p] += ai
    return reduce_cyclic(acc, p)


def norm_and_adjugate(a, p):
    """Return (N(a), adj(a)) with a * adj(a) = N(a) in Q."""
    adj = (_ONE,) + (_ZERO,) * (p - 2)
    for k in range(2, p):
        adj = poly_mul(adj, galois_conjugate(a, k, p), p)
    nrm = poly_mul(a, adj, p)
    if any(nrm[1:]):  # pragma: no cover - algebraic identity
        raise ArithmeticError("norm computation left the rationals")
    return nrm[0], adj


# -- field contexts -----------------------------------------------------------

class CycContext:
    """The field Q(zeta_p) for a fixed prime p."""

    __slots__ = ("p", "deg", "_zero", "_one")

    def __init__(self, p: int):
        self.p = p
        self.deg = p - 1
        self._zero = CycScalar(self, (_ZERO,) * self.deg)
        self._one = CycScalar(self, (_ONE,) + (_ZERO,) * (self.deg - 1))

    def __repr__(self):
        return f"CycContext(p={self.p})"

    def __reduce__(self):
        return (field_context, (self.p,))

    def zero(self) -> "CycScalar":
        return self._zero

    def one(self) -> "CycScalar":
        return self._one

    def zeta(self, k: int = 1) -> "CycScalar":
        """The primitive p-th root of unity z, raised to the power k (any integer)."""
        k %= self.p
        acc = [_ZERO] * self.p
        acc[k] = _ONE
        return CycScalar(self, reduce_cyclic(acc, self.p))

    def __call__(self, value) -> "CycScalar":
        """Coerce ints, rationals, scalar text or coefficient sequences."""
        if isinstance(value, CycScalar):
            if value.ctx is not self:
                raise FieldMismatchError(f"scalar from p={value.ctx.p} used in p={self.p}")
            return value
        if isinstance(value, str):
            return parse_scalar(value, self)
        if isinstance(value, (list, tuple)):
            if len(value) != self.deg:
                raise ValueError(f"expected {self.deg} coefficients, got {len(value)}")
            return CycScalar(self, tuple(to_rational(v) for v in value))
        q = to_rational(value)
        return CycScalar(self, (q,) + (_ZERO,) * (self.deg - 1))


@lru_cache(maxsize=None)
def field_context(p: int) -> CycContext:
    """Context for Q(zeta_p).  Rejects p < 2 and composite p."""
    if isinstance(p, bool) or not isinstance(p, int):
        raise TypeError(f"p must be an integer, got {p!r}")
    if p < 2:
        raise ValueError(f"p must be a prime >= 2, got {p}")
    if not gmpy2.is_prime(p):
        raise ValueError(f"p must be prime, got composite {p}")
    return CycContext(p)


# -- scalars ------------------------------------------------------------------

class CycScalar:
    """An immutable element of Q(zeta_p)."""

    __slots__ = ("ctx", "coeffs")

    def __init__(self, ctx: CycContext, coeffs):
        self.ctx = ctx
        self.coeffs = coeffs

    # coercion
    def _other(self, other):
        if isinstance(other, CycScalar):
            if other.ctx is not self.ctx:
                raise FieldMismatchError(
                    f"mixed fields: p={self.ctx.p} and p={other.ctx.p}")
            return other.coeffs
        try:
            q = to_rational(other)
        except TypeError:
            return None
        return (q,) + (_ZERO,) * (self.ctx.deg - 1)

    def __add__(self, other):
        b = self._other(other)
        if b is None:
            return NotImplemented
        return CycScalar(self.ctx, tuple(x + y for x, y in zip(self.coeffs, b)))

    __radd__ = __add__

    def __sub__(self, other):
        b = self._other(other)
        if b is None:
            return NotImplemented
        return CycScalar(self.ctx, tuple(x - y for x, y in zip(self.coeffs, b)))

    def __rsub__(self, other):
        b = self._other(other)
        if b is None:
            return NotImplemented
        return CycScalar(self.ctx, tuple(y - x for x, y in zip(self.coeffs, b)))

    def __neg__(self):
        return CycScalar(self.ctx, tuple(-x for x in self.coeffs))

    def __pos__(self):
        return self

    def __mul__(self, other):
        if isinstance(other, CycScalar):
            b = self._other(other)
            return CycScalar(self.ctx, poly_mul(self.coeffs, b, self.ctx.p))
        try:
            q = to_rational(other)
        except TypeError:
            return NotImplemented
        return CycScalar(self.ctx, tuple(x * q for x in self.coeffs))

    __rmul__ = __mul__

    def inverse(self) -> "CycScalar":
        if not self:
            raise ZeroDivisionError("inverse of zero in Q(zeta_p)")
        p = self.ctx.p
        if p == 2:
            return CycScalar(self.ctx, (1 / self.coeffs[0],))
        nrm, adj = norm_and_adjugate(self.coeffs, p)
        return CycScalar(self.ctx, tuple(c / nrm for c in adj))

    def __truediv__(self, other):
        if isinstance(other, CycScalar):
            return self * other.inverse()
        try:
            q = to_rational(other)
        except TypeError:
            return NotImplemented
        if not q:
            raise ZeroDivisionError("division by zero")
        return CycScalar(self.ctx, tuple(x / q for x in self.coeffs))

    def __rtruediv__(self, other):
        return self.ctx(other) * self.inverse()

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        base = self if k >= 0 else self.inverse()
        k = abs(k)
        acc = self.ctx.one()
        while k:
            if k & 1:
                acc = acc * base
            base = base * base
            k >>= 1
        return acc

    def __eq__(self, other):
        if isinstance(other, CycScalar):
            return self.ctx is other.ctx and self.coeffs == other.coeffs
        try:
            b = self._other(other)
        except FieldMismatchError:
            return False
        if b is None:
            return NotImplemented
        return self.coeffs == b

    def __hash__(self):
        if not any(self.coeffs[1:]):
            return hash(self.coeffs[0])
        return hash((self.ctx.p, self.coeffs))

    def __bool__(self):
        return any(self.coeffs)

    def conjugate(self, k: int = -1) -> "CycScalar":
        """Galois image under z -> z^k; the default is complex conjugation."""
        k %= self.ctx.p
        if k == 0:
            raise ValueError("z -> 1 is not a field automorphism")
        return CycScalar(self.ctx, galois_conjugate(self.coeffs, k, self.ctx.p))

    def norm(self) -> Rational:
        if self.ctx.p == 2:
            return self.coeffs[0]
        return norm_and_adjugate(self.coeffs, self.ctx.p)[0]

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def rational(self) -> Rational:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.coeffs[0]

    def __repr__(self):
        return f"CycScalar(p={self.ctx.p}, {format_scalar(self)!r})"

    def __str__(self):
        return format_scalar(self)


def _check_same(a: CycScalar, b: CycScalar):
    if a.ctx is not b.ctx:
        raise FieldMismatchError(f"mixed fields: p={a.ctx.p} and p={b.ctx.p}")


def f_add(a: CycScalar, b: CycScalar) -> CycScalar:
    _check_same(a, b)
    return a + b


def f_mul(a: CycScalar, b: CycScalar) -> CycScalar:
    _check_same(a, b)
    return a * b


def f_neg(a: CycScalar) -> CycScalar:
    return -a


def f_inv(a: CycScalar) -> CycScalar:
    return a.inverse()


def f_eq(a: CycScalar, b: CycScalar) -> bool:
    _check_same(a, b)
    return a.coeffs == b.coeffs


# -- text form ----------------------------------------------------------------

_TERM = re.compile(
    r"""^(?:
        (?P<c>\d+(?:/\d+)?)(?:\*?(?P<z1>z)(?:\^(?P<e1>\d+))?)?
      | (?P<z2>z)(?:\^(?P<e2>\d+))?
    )$""",
    re.VERBOSE,
)


def parse_scalar(text: str, ctx) -> CycScalar:
    """Parse text such as ``"1/2 - 3*z^1 + z^2"``.

    ``ctx`` is a CycContext or a prime.  Exponents are reduced modulo p and
    z^(p-1) is rewritten through Phi_p, so any exponent is accepted.
    """
    if not isinstance(ctx, CycContext):
        ctx = field_context(ctx)
    if not isinstance(text, str):
        raise ScalarParseError(f"expected text, got {type(text).__name__}")
    s = text.replace(" ", "").replace("\t", "")
    if not s:
        raise ScalarParseError("empty scalar text")
    if s[0] not in "+-":
        s = "+" + s
    parts = re.findall(r"([+-])([^+-]*)", s)
    if "".join(sign + body for sign, body in parts) != s:
        raise ScalarParseError(f"malformed scalar {text!r}")
    p = ctx.p
    acc = [_ZERO] * p
    for sign, body in parts:
        m = _TERM.match(body)
        if not m:
            raise ScalarParseError(f"malformed term {sign + body!r} in {text!r}")
        if m.group("z2"):
            coef, exp = _ONE, int(m.group("e2") or 1)
        else:
            coef = mpq(m.group("c"))
            if m.group("z1"):
                exp = int(m.group("e1") or 1)
            else:
                exp = 0
        if sign == "-":
            coef = -coef
        acc[exp % p] += coef
    return CycScalar(ctx, reduce_cyclic(acc, p))


def _fmt_q(q) -> str:
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def format_scalar(s: CycScalar) -> str:
    """Canonical text form; ``parse_scalar(format_scalar(s), p) == s``."""
    terms = []
    for k, c in enumerate(s.coeffs):
        if not c:
            continue
        if k == 0:
            terms.append((c < 0, _fmt_q(abs(c))))
        else:
            mag = abs(c)
            body = f"z^{k}" if mag == 1 else f"{_fmt_q(mag)}*z^{k}"
            terms.append((c < 0, body))
    if not terms:
        return "0"
    out = ("-" if terms[0][0] else "") + terms[0][1]
    for neg, body in terms[1:]:
        out += (" - " if neg else " + ") + body
    return out
