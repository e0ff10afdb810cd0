"""Ground fields: the rationals and prime fields F_p.

Elements are plain Python objects supporting ``+ - * /``: ``Fraction`` over
Q and :class:`Mod` over F_p.  Generic code never branches on the field; it
coerces inputs through ``field(x)`` and tests for zero with ``x == 0``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import FieldError


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


class Mod:
    """Residue class modulo a prime, stored as its canonical representative."""

    __slots__ = ("v", "p")

    def __init__(self, v: int, p: int):
        self.v = v % p
        self.p = p

    def _other(self, o):
        if isinstance(o, Mod):
            if o.p != self.p:
                raise FieldError(f"mixing F_{self.p} and F_{o.p}")
            return o.v
        if isinstance(o, int):
            return o
        if isinstance(o, Fraction):
            return o.numerator * pow(o.denominator, -1, self.p)
        return NotImplemented

    def __add__(self, o):
        o = self._other(o)
        return NotImplemented if o is NotImplemented else Mod(self.v + o, self.p)

    __radd__ = __add__

    def __sub__(self, o):
        o = self._other(o)
        return NotImplemented if o is NotImplemented else Mod(self.v - o, self.p)

    def __rsub__(self, o):
        o = self._other(o)
        return NotImplemented if o is NotImplemented else Mod(o - self.v, self.p)

    def __mul__(self, o):
        o = self._other(o)
        return NotImplemented if o is NotImplemented else Mod(self.v * o, self.p)

    __rmul__ = __mul__

    def __truediv__(self, o):
        o = self._other(o)
        if o is NotImplemented:
            return o
        if o % self.p == 0:
            raise ZeroDivisionError("division by zero in F_%d" % self.p)
        return Mod(self.v * pow(o, -1, self.p), self.p)

    def __rtruediv__(self, o):
        o = self._other(o)
        if o is NotImplemented:
            return o
        if self.v == 0:
            raise ZeroDivisionError("division by zero in F_%d" % self.p)
        return Mod(o * pow(self.v, -1, self.p), self.p)

    def __neg__(self):
        return Mod(-self.v, self.p)

    def __pos__(self):
        return self

    def __pow__(self, e: int):
        return Mod(pow(self.v, e, self.p), self.p)

    def __eq__(self, o):
        if isinstance(o, Mod):
            return self.p == o.p and self.v == o.v
        if isinstance(o, int):
            return (self.v - o) % self.p == 0
        return NotImplemented

    def __hash__(self):
        return hash((self.v, self.p))

    def __bool__(self):
        return self.v != 0

    def __int__(self):
        return self.v

    def __repr__(self):
        return f"Mod({self.v}, {self.p})"

    def __str__(self):
        return str(self.v)


class Field:
    """Common interface of the two supported fields."""

    characteristic: int

    def __call__(self, x):
        raise NotImplementedError

    @property
    def zero(self):
        return self(0)

    @property
    def one(self):
        return self(1)

    def zeros(self, n: int) -> tuple:
        z = self.zero
        return (z,) * n

    def unit_vector(self, n: int, i: int) -> tuple:
        v = [self.zero] * n
        v[i] = self.one
        return tuple(v)

    def vector(self, xs) -> tuple:
        return tuple(self(x) for x in xs)

    def format(self, x) -> str:
        raise NotImplementedError

    def parse(self, s):
        raise NotImplementedError


@dataclass(frozen=True)
class Rationals(Field):
    characteristic = 0

    def __call__(self, x):
        if isinstance(x, Fraction):
            return x
        if isinstance(x, Mod):
            raise FieldError("cannot coerce an F_p element into Q")
        if isinstance(x, str):
            return self.parse(x)
        if isinstance(x, float):
            raise FieldError("floating-point input is not exact; pass an int, Fraction or 'num/den'")
        return Fraction(x)

    def format(self, x) -> str:
        x = self(x)
        return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"

    def parse(self, s):
        try:
            return Fraction(str(s).strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise FieldError(f"not a rational number: {s!r}") from exc

    def __str__(self):
        return "Q"


@dataclass(frozen=True)
class PrimeField(Field):
    p: int

    def __post_init__(self):
        if not isinstance(self.p, int) or self.p >= 2**31 or not _is_prime(self.p):
            raise FieldError(f"modulus {self.p!r} is not a prime below 2^31")

    @property
    def characteristic(self):
        return self.p

    def __call__(self, x):
        if isinstance(x, Mod):
            if x.p != self.p:
                raise FieldError(f"element of F_{x.p} used in F_{self.p}")
            return x
        if isinstance(x, str):
            return self.parse(x)
        if isinstance(x, Fraction):
            if x.denominator % self.p == 0:
                raise FieldError(f"{x} has no image in F_{self.p}")
            return Mod(x.numerator * pow(x.denominator, -1, self.p), self.p)
        if isinstance(x, bool) or not isinstance(x, int):
            raise FieldError(f"cannot coerce {x!r} into F_{self.p}")
        return Mod(x, self.p)

    def format(self, x) -> str:
        return str(self(x).v)

    def parse(self, s):
        try:
            return self(Fraction(str(s).strip()))
        except (ValueError, ZeroDivisionError) as exc:
            raise FieldError(f"not an element of F_{self.p}: {s!r}") from exc

    def elements(self):
        return [Mod(v, self.p) for v in range(self.p)]

    def __str__(self):
        return f"Fp:{self.p}"


QQ = Rationals()


def parse_field(text: str) -> Field:
    """Parse ``"Q"`` or ``"Fp:<p>"``."""
    text = text.strip()
    if text in ("Q", "QQ"):
        return QQ
    if text.startswith("Fp:"):
        try:
            p = int(text[3:])
        except ValueError as exc:
            raise FieldError(f"bad prime field spec {text!r}") from exc
        return PrimeField(p)
    raise FieldError(f"unknown field {text!r}; expected 'Q' or 'Fp:<p>'")
