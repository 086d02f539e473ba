"""Exact coefficient rings: the integers, the rationals, and prime fields.

Scalars are plain Python objects: ``int`` for Z and F_p (residues kept in
``range(0, p)``), ``fractions.Fraction`` for Q.  A :class:`RingSpec` bundles
the arithmetic so generic code (matrices, structure constants) never needs
to know which ring it is working over.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

Scalar = Union[int, Fraction]


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


@dataclass(frozen=True)
class RingSpec:
    """One of Z, Q, or F_p (p prime, p <= 2**31)."""

    kind: str  # "Z" | "Q" | "Fp"
    p: int | None = None

    def __post_init__(self):
        if self.kind not in ("Z", "Q", "Fp"):
            raise ValueError(f"unknown ring kind {self.kind!r}")
        if self.kind == "Fp":
            if self.p is None or not _is_prime(self.p) or self.p > 2**31:
                raise ValueError(f"F_p requires a prime p <= 2**31, got {self.p}")
        elif self.p is not None:
            raise ValueError(f"{self.kind} takes no modulus")

    # -- element arithmetic ------------------------------------------------

    @property
    def zero(self) -> Scalar:
        return Fraction(0) if self.kind == "Q" else 0

    @property
    def one(self) -> Scalar:
        return Fraction(1) if self.kind == "Q" else 1

    @property
    def is_field(self) -> bool:
        return self.kind in ("Q", "Fp")

    def normalize(self, x) -> Scalar:
        """Coerce an int/Fraction/decimal-or-'n/d' string into this ring."""
        if isinstance(x, str):
            x = Fraction(x) if "/" in x else int(x)
        if self.kind == "Z":
            if isinstance(x, Fraction):
                if x.denominator != 1:
                    raise ValueError(f"{x} is not an integer")
                x = x.numerator
            return int(x)
        if self.kind == "Q":
            return Fraction(x)
        if isinstance(x, Fraction):
            return self.normalize(x.numerator) * self.inv(self.normalize(x.denominator)) % self.p
        return int(x) % self.p

    def add(self, a: Scalar, b: Scalar) -> Scalar:
        s = a + b
        return s % self.p if self.kind == "Fp" else s

    def sub(self, a: Scalar, b: Scalar) -> Scalar:
        s = a - b
        return s % self.p if self.kind == "Fp" else s

    def mul(self, a: Scalar, b: Scalar) -> Scalar:
        s = a * b
        return s % self.p if self.kind == "Fp" else s

    def neg(self, a: Scalar) -> Scalar:
        return -a % self.p if self.kind == "Fp" else -a

    def is_unit(self, a: Scalar) -> bool:
        if self.kind == "Z":
            return a in (1, -1)
        return a != self.zero

    def inv(self, a: Scalar) -> Scalar:
        if not self.is_unit(a):
            raise ZeroDivisionError(f"{a} is not a unit in {self}")
        if self.kind == "Z":
            return a
        if self.kind == "Q":
            return Fraction(1) / a
        return pow(a, -1, self.p)

    def div(self, a: Scalar, b: Scalar) -> Scalar:
        """Exact division; raises if b does not divide a in this ring."""
        if self.kind == "Z":
            if b == 0 or a % b != 0:
                raise ZeroDivisionError(f"{b} does not divide {a} in Z")
            return a // b
        return self.mul(a, self.inv(b))

    def elements(self):
        """All elements (prime fields only)."""
        if self.kind != "Fp":
            raise ValueError("only prime fields are enumerable")
        return range(self.p)

    # -- text forms --------------------------------------------------------

    def format_scalar(self, a: Scalar) -> str:
        if self.kind == "Q" and isinstance(a, Fraction) and a.denominator != 1:
            return f"{a.numerator}/{a.denominator}"
        return str(int(a) if not isinstance(a, Fraction) else a.numerator)

    def to_json(self) -> dict:
        d = {"kind": self.kind}
        if self.p is not None:
            d["p"] = self.p
        return d

    @classmethod
    def from_json(cls, d: dict) -> "RingSpec":
        return cls(d["kind"], d.get("p"))

    def __str__(self):
        return {"Z": "Z", "Q": "Q"}.get(self.kind, f"F_{self.p}")


ZZ = RingSpec("Z")
QQ = RingSpec("Q")


def GF(p: int) -> RingSpec:
    return RingSpec("Fp", p)
