"""Exact scalar fields: the rationals (as Fraction) and prime fields Z/p."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from sympy import isprime


@dataclass(frozen=True)
class FieldSpec:
    """p = 0 is Q; otherwise the prime field with p elements."""

    p: int = 0

    def __post_init__(self):
        if self.p != 0 and not isprime(self.p):
            raise ValueError(f"{self.p} is not prime")

    @classmethod
    def parse(cls, text: str) -> "FieldSpec":
        text = text.strip().lower()
        if text in ("q", "qq", "rationals", "0"):
            return cls(0)
        if text.startswith("fp:"):
            return cls(int(text[3:]))
        if text.startswith("f") and text[1:].isdigit():
            return cls(int(text[1:]))
        raise ValueError(f"unknown field {text!r}; use q or fp:<p>")

    @property
    def is_rational(self) -> bool:
        return self.p == 0

    def __str__(self) -> str:
        return "q" if self.p == 0 else f"fp:{self.p}"

    def elements(self) -> list:
        """All elements of a prime field."""
        if self.p == 0:
            raise ValueError("Q is infinite")
        return list(range(self.p))

    def __call__(self, x) -> object:
        """Coerce an int or Fraction into the field."""
        if self.p == 0:
            return Fraction(x)
        if isinstance(x, Fraction):
            num, den = x.numerator % self.p, x.denominator % self.p
            if den == 0:
                raise ZeroDivisionError(f"{x} has no image in F_{self.p}")
            return num * pow(den, -1, self.p) % self.p
        return int(x) % self.p

    def zero(self):
        return self(0)

    def one(self):
        return self(1)

    def add(self, x, y):
        return x + y if self.p == 0 else (x + y) % self.p

    def sub(self, x, y):
        return x - y if self.p == 0 else (x - y) % self.p

    def mul(self, x, y):
        return x * y if self.p == 0 else (x * y) % self.p

    def neg(self, x):
        return -x if self.p == 0 else (-x) % self.p

    def inv(self, x):
        if not x:
            raise ZeroDivisionError("inverse of zero")
        return 1 / Fraction(x) if self.p == 0 else pow(x, -1, self.p)

    def to_str(self, x) -> str:
        return str(x)


QQ = FieldSpec(0)
