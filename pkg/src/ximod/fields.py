"""Exact scalars over the three supported coefficient fields.

A :class:`Field` instance doubles as the value tag: two scalars interoperate
only when they carry the same field object.  Values are kept canonical at all
times (reduced fractions with positive denominator, residues in ``[0, p)``),
so equality of scalars is equality of representations.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DivisionByZero, TagMismatch


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


def _parse_fraction(text: str) -> Fraction:
    # accept the unicode minus sign alongside the ASCII one
    return Fraction(text.strip().replace("−", "-"))


class Field:
    """Abstract coefficient field; concrete fields implement the raw-value ops."""

    kind: str = "?"

    # raw-value protocol -------------------------------------------------
    def canon(self, value):
        raise NotImplementedError

    def raw_add(self, a, b):
        raise NotImplementedError

    def raw_mul(self, a, b):
        raise NotImplementedError

    def raw_neg(self, a):
        raise NotImplementedError

    def raw_inv(self, a):
        raise NotImplementedError

    def raw_is_zero(self, a) -> bool:
        raise NotImplementedError

    def raw_format(self, a) -> str:
        raise NotImplementedError

    def raw_sort_key(self, a):
        raise NotImplementedError

    def parse(self, text: str) -> "Scalar":
        raise NotImplementedError

    # scalar construction -------------------------------------------------
    def scalar(self, value) -> "Scalar":
        return Scalar(self, self.canon(value))

    def zero(self) -> "Scalar":
        return self.from_int(0)

    def one(self) -> "Scalar":
        return self.from_int(1)

    def from_int(self, n: int) -> "Scalar":
        return self.scalar(n)

    @property
    def characteristic(self) -> int:
        return 0

    def describe(self) -> str:
        return self.kind


@dataclass(frozen=True)
class Rationals(Field):
    """The field of rational numbers; values are ``fractions.Fraction``."""

    kind = "q"

    def canon(self, value):
        if isinstance(value, Fraction):
            return value
        if isinstance(value, int):
            return Fraction(value)
        if isinstance(value, str):
            return _parse_fraction(value)
        raise TypeError(f"cannot build a rational from {value!r}")

    def raw_add(self, a, b):
        return a + b

    def raw_mul(self, a, b):
        return a * b

    def raw_neg(self, a):
        return -a

    def raw_inv(self, a):
        if a == 0:
            raise DivisionByZero("inverse of zero")
        return 1 / a

    def raw_is_zero(self, a):
        return a == 0

    def raw_format(self, a):
        return str(a)

    def raw_sort_key(self, a):
        return a

    def parse(self, text):
        return self.scalar(_parse_fraction(text))

    def describe(self):
        return "rationals"


@dataclass(frozen=True)
class GaussianRationals(Field):
    """Rationals adjoined a square root of -1; values are (re, im) pairs."""

    kind = "qi"

    def canon(self, value):
        if isinstance(value, tuple) and len(value) == 2:
            re, im = value
            if isinstance(re, str):
                re = _parse_fraction(re)
            if isinstance(im, str):
                im = _parse_fraction(im)
            return (Fraction(re), Fraction(im))
        if isinstance(value, (int, Fraction)):
            return (Fraction(value), Fraction(0))
        if isinstance(value, str):
            return _parse_gaussian_text(value)
        raise TypeError(f"cannot build a gaussian rational from {value!r}")

    def raw_add(self, a, b):
        return (a[0] + b[0], a[1] + b[1])

    def raw_mul(self, a, b):
        return (a[0] * b[0] - a[1] * b[1], a[0] * b[1] + a[1] * b[0])

    def raw_neg(self, a):
        return (-a[0], -a[1])

    def raw_inv(self, a):
        n = a[0] * a[0] + a[1] * a[1]
        if n == 0:
            raise DivisionByZero("inverse of zero")
        return (a[0] / n, -a[1] / n)

    def raw_is_zero(self, a):
        return a[0] == 0 and a[1] == 0

    def raw_format(self, a):
        re, im = a
        if im == 0:
            return str(re)
        if im == 1:
            im_part = "i"
        elif im == -1:
            im_part = "-i"
        else:
            im_part = f"{im}i"
        if re == 0:
            return im_part
        sep = "+" if not im_part.startswith("-") else ""
        return f"{re}{sep}{im_part}"

    def raw_sort_key(self, a):
        return a

    def parse(self, text):
        return self.scalar(_parse_gaussian_text(text))

    def describe(self):
        return "gaussian rationals"


def _parse_gaussian_text(text: str):
    """Parse compact gaussian literals: "3/4", "i", "-2i", "1/2-3i"."""
    s = text.strip().replace("−", "-").replace(" ", "")
    if not s:
        raise ValueError("empty scalar")
    if not s.endswith(("i", "I")):
        return (_parse_fraction(s), Fraction(0))
    body = s[:-1]
    # find a top-level sign separating the real and imaginary parts
    split = -1
    for k in range(len(body) - 1, 0, -1):
        if body[k] in "+-" and body[k - 1] not in "+-/":
            split = k
            break
    if split == -1:
        re_text, im_text = "", body
    else:
        re_text, im_text = body[:split], body[split:]
    if im_text in ("", "+"):
        im = Fraction(1)
    elif im_text == "-":
        im = Fraction(-1)
    else:
        im = _parse_fraction(im_text)
    re = _parse_fraction(re_text) if re_text else Fraction(0)
    return (re, im)


@dataclass(frozen=True)
class PrimeField(Field):
    """Integers modulo a prime p; values are residues in [0, p)."""

    p: int

    kind = "fp"

    def __post_init__(self):
        if not _is_prime(self.p):
            raise ValueError(f"modulus {self.p} is not prime")

    def canon(self, value):
        if isinstance(value, str):
            value = int(value.strip().replace("−", "-"))
        if isinstance(value, int):
            return value % self.p
        raise TypeError(f"cannot build a mod-{self.p} residue from {value!r}")

    def raw_add(self, a, b):
        return (a + b) % self.p

    def raw_mul(self, a, b):
        return (a * b) % self.p

    def raw_neg(self, a):
        return (-a) % self.p

    def raw_inv(self, a):
        if a == 0:
            raise DivisionByZero("inverse of zero")
        return pow(a, self.p - 2, self.p)

    def raw_is_zero(self, a):
        return a == 0

    def raw_format(self, a):
        return str(a)

    def raw_sort_key(self, a):
        return a

    def parse(self, text):
        return self.scalar(text)

    @property
    def characteristic(self):
        return self.p

    def elements(self):
        """All field elements, in residue order."""
        return [Scalar(self, r) for r in range(self.p)]

    def describe(self):
        return f"integers mod {self.p}"


QQ = Rationals()
QI = GaussianRationals()


class Scalar:
    """An immutable element of one of the supported fields."""

    __slots__ = ("field", "value")

    def __init__(self, field: Field, value):
        # value is trusted to be canonical; use Field.scalar() to canonicalize
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "value", value)

    def __setattr__(self, name, _value):
        raise AttributeError(f"Scalar is immutable; cannot set {name!r}")

    # ------------------------------------------------------------------
    def _check(self, other: "Scalar"):
        if not isinstance(other, Scalar):
            raise TypeError(f"expected a Scalar, got {other!r}")
        if other.field != self.field:
            raise TagMismatch(f"{self.field.describe()} vs {other.field.describe()}")

    def __add__(self, other):
        self._check(other)
        return Scalar(self.field, self.field.raw_add(self.value, other.value))

    def __sub__(self, other):
        self._check(other)
        return Scalar(
            self.field, self.field.raw_add(self.value, self.field.raw_neg(other.value))
        )

    def __mul__(self, other):
        self._check(other)
        return Scalar(self.field, self.field.raw_mul(self.value, other.value))

    def __truediv__(self, other):
        self._check(other)
        return Scalar(
            self.field, self.field.raw_mul(self.value, self.field.raw_inv(other.value))
        )

    def __neg__(self):
        return Scalar(self.field, self.field.raw_neg(self.value))

    def inv(self) -> "Scalar":
        return Scalar(self.field, self.field.raw_inv(self.value))

    def __pow__(self, n: int) -> "Scalar":
        if n < 0:
            return self.inv() ** (-n)
        result = self.field.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if not isinstance(other, Scalar):
            return NotImplemented
        if other.field != self.field:
            raise TagMismatch(f"{self.field.describe()} vs {other.field.describe()}")
        return self.value == other.value

    def __hash__(self):
        return hash((self.field, self.value))

    def __bool__(self):
        return not self.field.raw_is_zero(self.value)

    @property
    def is_zero(self) -> bool:
        return self.field.raw_is_zero(self.value)

    def sort_key(self):
        return self.field.raw_sort_key(self.value)

    def __str__(self):
        return self.field.raw_format(self.value)

    def __repr__(self):
        return f"Scalar({self.field.kind}, {self})"


def field_arithmetic(a: Scalar, b: Scalar | None, op: str):
    """Dispatch a named field operation; the uniform entry point used by the CLI.

    ``op`` is one of add, sub, mul, div, neg, inv, eq.  Unary operations
    ignore ``b``.  Raises TagMismatch for mixed fields and DivisionByZero
    for div/inv by zero.
    """
    if op == "neg":
        return -a
    if op == "inv":
        return a.inv()
    if b is None:
        raise TypeError(f"operation {op!r} needs a second operand")
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    if op == "eq":
        return a == b
    raise ValueError(f"unknown operation {op!r}")


def parse_scalar_text(field: Field, text: str) -> Scalar:
    """Parse a scalar literal in the field's text encoding."""
    return field.parse(text)
