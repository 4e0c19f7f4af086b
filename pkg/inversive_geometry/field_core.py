"""Exact field arithmetic for the fields of characteristic != 2 we support.

Three kinds of field are available:

    Q          the rationals, elements are reduced ``Fraction`` objects
    Fp:p       the prime field F_p for an odd prime p, elements are residues in [0, p)
    Qsqrt:d    the quadratic extension Q(sqrt(d)) for a square-free integer d that
               is not a square, elements are pairs (x, y) meaning x + y*sqrt(d)

Every arithmetic result is stored in canonical form, so equality of elements is
plain structural equality of their values.
"""
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import cached_property
from typing import Iterator, Optional, Union
import logging
import math

import numpy as np
from sympy import factorint, isprime
from sympy.ntheory import sqrt_mod

from inversive_geometry.errors import (
    CharTwo,
    FieldMismatch,
    IsSquare,
    NotPrime,
    NotSquareFree,
    OrderingUnavailable,
)

logger = logging.getLogger(__name__)

DEFAULT_HEIGHT = 10


class FieldKind(Enum):
    RATIONALS = "Q"
    PRIME = "Fp"
    QUADRATIC = "Qsqrt"


def _rational_sqrt(value: Fraction) -> Optional[Fraction]:
    """Nonnegative rational square root of ``value``, or None."""
    if value < 0:
        return None
    num, den = value.numerator, value.denominator
    root_num, root_den = math.isqrt(num), math.isqrt(den)
    if root_num * root_num == num and root_den * root_den == den:
        return Fraction(root_num, root_den)
    return None


@dataclass(frozen=True)
class Field:
    """A field handle. Build it with ``make_field`` or ``parse_field``."""

    kind: FieldKind
    p: Optional[int] = None
    d: Optional[int] = None

    def __post_init__(self):
        if self.kind is FieldKind.PRIME:
            if self.p == 2:
                raise CharTwo("characteristic 2 is not supported")
            if self.p is None or self.p < 2 or not isprime(self.p):
                raise NotPrime("{} is not a prime".format(self.p))
        elif self.kind is FieldKind.QUADRATIC:
            d = self.d
            if d is None or d == 0:
                raise NotSquareFree("d must be a nonzero integer")
            if d > 0 and math.isqrt(d) ** 2 == d:
                raise IsSquare("{} is a square, Q(sqrt({})) is not a field".format(d, d))
            if any(exponent > 1 for exponent in factorint(abs(d)).values()):
                raise NotSquareFree("{} is not square-free".format(d))

    def __str__(self):
        if self.kind is FieldKind.PRIME:
            return "Fp:{}".format(self.p)
        if self.kind is FieldKind.QUADRATIC:
            return "Qsqrt:{}".format(self.d)
        return "Q"

    @property
    def is_finite(self) -> bool:
        return self.kind is FieldKind.PRIME

    @property
    def is_ordered(self) -> bool:
        return self.kind is FieldKind.RATIONALS

    @property
    def characteristic(self) -> int:
        return self.p if self.is_finite else 0

    @cached_property
    def zero(self) -> "FieldElement":
        return self(0)

    @cached_property
    def one(self) -> "FieldElement":
        return self(1)

    def __call__(self, value) -> "FieldElement":
        """Coerce ``value`` (int, Fraction, str, pair or element) into this field."""
        if isinstance(value, FieldElement):
            if value.field != self:
                raise FieldMismatch("{} is not an element of {}".format(value, self))
            return value
        return FieldElement(self, self._canonical(value))

    def elements(self) -> Iterator["FieldElement"]:
        """All elements of a finite field, in increasing residue order."""
        if not self.is_finite:
            raise ValueError("{} is infinite".format(self))
        for residue in range(self.p):
            yield FieldElement(self, residue)

    ####################################
    ##### canonical representation #####
    ####################################

    def _canonical(self, value):
        if self.kind is FieldKind.QUADRATIC:
            if isinstance(value, tuple):
                x, y = value
                return (Fraction(x), Fraction(y))
            if isinstance(value, str):
                return self._parse_quadratic(value)
            return (Fraction(value), Fraction(0))
        if isinstance(value, str):
            value = Fraction(value.strip())
        if self.kind is FieldKind.PRIME:
            value = Fraction(value)
            if value.denominator % self.p == 0:
                raise ZeroDivisionError("denominator divisible by {}".format(self.p))
            return value.numerator * pow(value.denominator, -1, self.p) % self.p
        return Fraction(value)

    @staticmethod
    def _parse_quadratic(text: str):
        # "x", "y r", "x+yr", "x-r": r stands for sqrt(d)
        text = text.replace(" ", "")
        if not text.endswith("r"):
            return (Fraction(text), Fraction(0))
        body = text[:-1].rstrip("*")
        split = max(body.rfind("+"), body.rfind("-"))
        if split > 0:
            x_part, y_part = body[:split], body[split:]
        else:
            x_part, y_part = "", body
        if y_part in ("", "+", "-"):
            y_part += "1"
        return (Fraction(x_part or 0), Fraction(y_part))

    def _format(self, value) -> str:
        if self.kind is FieldKind.QUADRATIC:
            x, y = value
            if y == 0:
                return str(x)
            y_text = "r" if y == 1 else "-r" if y == -1 else "{}r".format(y)
            if x == 0:
                return y_text
            return "{}{}{}".format(x, "" if y_text.startswith("-") else "+", y_text)
        return str(value)

    ##########################
    ##### raw arithmetic #####
    ##########################

    def _add(self, a, b):
        if self.kind is FieldKind.PRIME:
            return (a + b) % self.p
        if self.kind is FieldKind.QUADRATIC:
            return (a[0] + b[0], a[1] + b[1])
        return a + b

    def _neg(self, a):
        if self.kind is FieldKind.PRIME:
            return -a % self.p
        if self.kind is FieldKind.QUADRATIC:
            return (-a[0], -a[1])
        return -a

    def _mul(self, a, b):
        if self.kind is FieldKind.PRIME:
            return a * b % self.p
        if self.kind is FieldKind.QUADRATIC:
            return (a[0] * b[0] + self.d * a[1] * b[1], a[0] * b[1] + a[1] * b[0])
        return a * b

    def _inv(self, a):
        if self.kind is FieldKind.PRIME:
            if a == 0:
                raise ZeroDivisionError("inverse of zero in {}".format(self))
            return pow(a, -1, self.p)
        if self.kind is FieldKind.QUADRATIC:
            norm = a[0] * a[0] - self.d * a[1] * a[1]
            if norm == 0:
                raise ZeroDivisionError("inverse of zero in {}".format(self))
            return (a[0] / norm, -a[1] / norm)
        if a == 0:
            raise ZeroDivisionError("inverse of zero in Q")
        return 1 / a

    def _is_zero(self, a) -> bool:
        if self.kind is FieldKind.QUADRATIC:
            return a[0] == 0 and a[1] == 0
        return a == 0

    ##############################
    ##### squares and orders #####
    ##############################

    def is_square(self, e: "FieldElement") -> bool:
        e = self(e)
        if self.kind is FieldKind.PRIME:
            # Euler criterion
            return e.value == 0 or pow(e.value, (self.p - 1) // 2, self.p) == 1
        return self.sqrt_exact(e) is not None

    def sqrt_exact(self, e: "FieldElement") -> Optional["FieldElement"]:
        """A square root of ``e`` chosen deterministically, or None.

        Q picks the nonnegative root, F_p the least residue, Q(sqrt(d)) the root
        x + y*sqrt(d) with x > 0 (or x = 0 and y > 0).
        """
        e = self(e)
        if self.kind is FieldKind.PRIME:
            if e.value != 0 and pow(e.value, (self.p - 1) // 2, self.p) != 1:
                return None
            roots = sqrt_mod(e.value, self.p, all_roots=True)
            return FieldElement(self, min(roots)) if roots else None
        if self.kind is FieldKind.QUADRATIC:
            root = self._quadratic_sqrt(*e.value)
            return None if root is None else FieldElement(self, root)
        root = _rational_sqrt(e.value)
        return None if root is None else FieldElement(self, root)

    def _quadratic_sqrt(self, x: Fraction, y: Fraction):
        # (a + b r)^2 = x + y r means a^2 + d b^2 = x and 2ab = y; then the norm
        # x^2 - d y^2 is the square of a^2 - d b^2 and a^2 = (x +- n) / 2.
        d = self.d
        if y == 0:
            root = _rational_sqrt(x)
            if root is not None:
                return (root, Fraction(0))
            root = _rational_sqrt(x / d)
            if root is not None:
                return (Fraction(0), root)
            return None
        norm_root = _rational_sqrt(x * x - d * y * y)
        if norm_root is None:
            return None
        for half_trace in ((x + norm_root) / 2, (x - norm_root) / 2):
            a = _rational_sqrt(half_trace)
            if a:
                b = y / (2 * a)
                if a * a + d * b * b == x:
                    return (a, b)
        return None

    def sign(self, e: "FieldElement") -> int:
        if self.kind is not FieldKind.RATIONALS:
            raise OrderingUnavailable("{} carries no ordering".format(self))
        value = self(e).value
        return (value > 0) - (value < 0)

    ####################
    ##### sampling #####
    ####################

    def random_element(self, rng: np.random.Generator, height: int = DEFAULT_HEIGHT):
        """One pseudo-random element; over Q its height is bounded by ``height``."""
        if self.kind is FieldKind.PRIME:
            return FieldElement(self, int(rng.integers(0, self.p)))

        def rational():
            num = int(rng.integers(-height, height + 1))
            den = int(rng.integers(1, height + 1))
            return Fraction(num, den)

        if self.kind is FieldKind.QUADRATIC:
            return FieldElement(self, (rational(), rational()))
        return FieldElement(self, rational())


class FieldElement:
    """Immutable element of a Field, always in canonical form."""

    __slots__ = ("field", "value")

    def __init__(self, field: Field, value):
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "value", value)

    def __setattr__(self, name, value):
        raise AttributeError("FieldElement is immutable")

    def _coerce(self, other) -> Optional["FieldElement"]:
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise FieldMismatch("cannot combine {} and {}".format(self.field, other.field))
            return other
        if isinstance(other, (int, Fraction)):
            return self.field(other)
        return None

    @property
    def is_zero(self) -> bool:
        return self.field._is_zero(self.value)

    def __bool__(self):
        return not self.is_zero

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return FieldElement(self.field, self.field._add(self.value, other.value))

    __radd__ = __add__

    def __neg__(self):
        return FieldElement(self.field, self.field._neg(self.value))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return FieldElement(self.field, self.field._mul(self.value, other.value))

    __rmul__ = __mul__

    def inverse(self) -> "FieldElement":
        return FieldElement(self.field, self.field._inv(self.value))

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, exponent: int):
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result, base = self.field.one, self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, FieldElement) and other.field != self.field:
            return False
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.value == other.value

    def __hash__(self):
        return hash((self.field, self.value))

    def __float__(self):
        if self.field.kind is FieldKind.QUADRATIC:
            x, y = self.value
            if self.field.d < 0 and y != 0:
                raise TypeError("{} is not real".format(self))
            return float(x) + float(y) * math.sqrt(self.field.d)
        if self.field.kind is FieldKind.PRIME:
            raise TypeError("elements of {} have no real value".format(self.field))
        return float(self.value)

    def __str__(self):
        return self.field._format(self.value)

    def __repr__(self):
        return "FieldElement({}, {})".format(self.field, self)


Scalar = Union[FieldElement, int, Fraction]


#############################
##### module operations #####
#############################


def make_field(kind: Union[str, FieldKind], param: Optional[int] = None) -> Field:
    """Build a field from its kind ("Q", "Fp", "Qsqrt") and parameter.

    A full descriptor such as "Fp:7" is accepted in place of ``kind``.
    """
    if isinstance(kind, str) and ":" in kind:
        return parse_field(kind)
    kind = FieldKind(kind)
    if kind is FieldKind.PRIME:
        return Field(kind, p=int(param) if param is not None else None)
    if kind is FieldKind.QUADRATIC:
        if isinstance(param, Fraction):
            if param.denominator != 1:
                raise NotSquareFree("d must be a square-free integer")
            param = param.numerator
        return Field(kind, d=int(param) if param is not None else None)
    return Field(kind)


def parse_field(descriptor: str) -> Field:
    """Parse the CLI field syntax "Q", "Fp:7" or "Qsqrt:5"."""
    name, _, param = descriptor.strip().partition(":")
    try:
        kind = FieldKind(name)
    except ValueError:
        raise ValueError("unknown field descriptor {!r}".format(descriptor))
    if kind is FieldKind.RATIONALS:
        return make_field(kind)
    if not param:
        raise ValueError("field descriptor {!r} needs a parameter".format(descriptor))
    return make_field(kind, int(param))


def is_square(field: Field, e) -> bool:
    return field.is_square(e)


def sqrt_exact(field: Field, e) -> Optional[FieldElement]:
    return field.sqrt_exact(e)


def sign(field: Field, e) -> int:
    return field.sign(e)


def sample_stream(field: Field, seed: int, height: int = DEFAULT_HEIGHT) -> Iterator[FieldElement]:
    """Endless reproducible stream of elements; zero is not excluded."""
    rng = np.random.default_rng(seed)
    while True:
        yield field.random_element(rng, height)


def least_non_square(field: Field) -> FieldElement:
    if not field.is_finite:
        raise ValueError("least_non_square needs a finite field")
    for e in field.elements():
        if not field.is_square(e):
            return e
    raise ValueError("{} has no non-square".format(field))
