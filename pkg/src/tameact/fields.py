"""Exact base fields: Q, F_p and F_p[t]/(f).

Scalars are plain Python values in canonical form so that equality is
structural: Fraction for Q, int in [0, p) for F_p, and a tuple of ints of
length deg(f) (coefficients, lowest degree first) for F_p[t]/(f).
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

Scalar = Union[Fraction, int, tuple]

MAX_EXTENSION_DEGREE = 8


class FieldError(ValueError):
    pass


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def _poly_trim(c: list) -> list:
    while c and c[-1] == 0:
        c.pop()
    return c


def _poly_divmod_fp(num: list, den: list, p: int) -> tuple[list, list]:
    """Division with remainder in F_p[t]; den need not be monic."""
    num = [x % p for x in num]
    den = _poly_trim([x % p for x in den])
    if not den:
        raise ZeroDivisionError("polynomial division by zero")
    inv_lead = pow(den[-1], p - 2, p) if den[-1] != 1 else 1
    quot = [0] * max(len(num) - len(den) + 1, 0)
    rem = list(num)
    for shift in range(len(num) - len(den), -1, -1):
        coeff = (rem[shift + len(den) - 1] * inv_lead) % p
        if coeff:
            quot[shift] = coeff
            for i, d in enumerate(den):
                rem[shift + i] = (rem[shift + i] - coeff * d) % p
    return _poly_trim(quot), _poly_trim(rem)


def _poly_sub_fp(a: list, b: list, p: int) -> list:
    n = max(len(a), len(b))
    a = a + [0] * (n - len(a))
    b = b + [0] * (n - len(b))
    return _poly_trim([(x - y) % p for x, y in zip(a, b)])


def _poly_mul_fp(a: list, b: list, p: int) -> list:
    out = [0] * (len(a) + len(b) - 1) if a and b else []
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            out[i + j] = (out[i + j] + x * y) % p
    return _poly_trim(out)


def _monic_polys_fp(degree: int, p: int):
    """All monic polynomials of the given degree over F_p (low-first coeffs)."""
    def rec(i: int, acc: list):
        if i == degree:
            yield acc + [1]
            return
        for c in range(p):
            yield from rec(i + 1, acc + [c])
    yield from rec(0, [])


def _is_irreducible_fp(f: list, p: int) -> bool:
    """Exhaustive trial division by all monic factors up to degree deg(f)/2."""
    deg = len(f) - 1
    if deg < 1:
        return False
    for d in range(1, deg // 2 + 1):
        for g in _monic_polys_fp(d, p):
            _, rem = _poly_divmod_fp(f, g, p)
            if not rem:
                return False
    return True


@dataclass(frozen=True)
class FieldSpec:
    """One of Q, F_p, or F_p[t]/(f) with f monic irreducible, deg(f) <= 8.

    kind is "Q", "Fp" or "Fq"; modulus stores the coefficients of f
    (lowest degree first, including the leading 1) for the "Fq" kind.
    """

    kind: str
    p: int = 0
    modulus: tuple = ()

    def __post_init__(self):
        if self.kind == "Q":
            if self.p or self.modulus:
                raise FieldError("rationals take no parameters")
        elif self.kind == "Fp":
            if not _is_prime(self.p):
                raise FieldError(f"{self.p} is not prime")
            if self.modulus:
                raise FieldError("prime field takes no modulus")
        elif self.kind == "Fq":
            if not _is_prime(self.p):
                raise FieldError(f"{self.p} is not prime")
            f = list(self.modulus)
            deg = len(f) - 1
            if deg < 1 or f[-1] % self.p != 1:
                raise FieldError("modulus must be monic of degree >= 1")
            if deg > MAX_EXTENSION_DEGREE:
                raise FieldError(f"extension degree {deg} exceeds {MAX_EXTENSION_DEGREE}")
            if any(c != c % self.p for c in f):
                raise FieldError("modulus coefficients must be reduced mod p")
            if not _is_irreducible_fp(f, self.p):
                raise FieldError("modulus is reducible over F_p")
        else:
            raise FieldError(f"unknown field kind {self.kind!r}")

    # -- constructors ------------------------------------------------------

    @staticmethod
    def rationals() -> "FieldSpec":
        return FieldSpec("Q")

    @staticmethod
    def prime(p: int) -> "FieldSpec":
        return FieldSpec("Fp", p)

    @staticmethod
    def extension(p: int, modulus) -> "FieldSpec":
        return FieldSpec("Fq", p, tuple(c % p for c in modulus))

    # -- basic data --------------------------------------------------------

    @property
    def characteristic(self) -> int:
        return 0 if self.kind == "Q" else self.p

    @property
    def degree(self) -> int:
        """Degree over the prime field (1 for Q and F_p)."""
        return len(self.modulus) - 1 if self.kind == "Fq" else 1

    def zero(self) -> Scalar:
        if self.kind == "Q":
            return Fraction(0)
        if self.kind == "Fp":
            return 0
        return (0,) * self.degree

    def one(self) -> Scalar:
        return self.from_int(1)

    def from_int(self, n: int) -> Scalar:
        if self.kind == "Q":
            return Fraction(n)
        if self.kind == "Fp":
            return n % self.p
        return tuple([n % self.p] + [0] * (self.degree - 1))

    def generator(self) -> Scalar:
        """The class of t in F_p[t]/(f); raises for Q and F_p."""
        if self.kind != "Fq":
            raise FieldError("no generator outside extension fields")
        return tuple([0, 1] + [0] * (self.degree - 2))

    # -- element arithmetic ------------------------------------------------

    def check(self, x: Scalar) -> Scalar:
        if self.kind == "Q":
            if not isinstance(x, Fraction):
                raise FieldError(f"expected Fraction, got {x!r}")
        elif self.kind == "Fp":
            if not isinstance(x, int) or not 0 <= x < self.p:
                raise FieldError(f"expected reduced int mod {self.p}, got {x!r}")
        else:
            if not isinstance(x, tuple) or len(x) != self.degree:
                raise FieldError(f"expected {self.degree}-tuple, got {x!r}")
        return x

    def add(self, x: Scalar, y: Scalar) -> Scalar:
        if self.kind == "Fq":
            return tuple((a + b) % self.p for a, b in zip(x, y))
        if self.kind == "Fp":
            return (x + y) % self.p
        return x + y

    def sub(self, x: Scalar, y: Scalar) -> Scalar:
        if self.kind == "Fq":
            return tuple((a - b) % self.p for a, b in zip(x, y))
        if self.kind == "Fp":
            return (x - y) % self.p
        return x - y

    def neg(self, x: Scalar) -> Scalar:
        return self.sub(self.zero(), x)

    def mul(self, x: Scalar, y: Scalar) -> Scalar:
        if self.kind == "Fq":
            prod = _poly_mul_fp(list(x), list(y), self.p)
            _, rem = _poly_divmod_fp(prod, list(self.modulus), self.p)
            rem = rem + [0] * (self.degree - len(rem))
            return tuple(rem)
        if self.kind == "Fp":
            return (x * y) % self.p
        return x * y

    def inv(self, x: Scalar) -> Scalar:
        if self.is_zero(x):
            raise ZeroDivisionError("inverse of zero")
        if self.kind == "Q":
            return 1 / x
        if self.kind == "Fp":
            return pow(x, self.p - 2, self.p)
        # extended Euclid in F_p[t]
        p = self.p
        r0, r1 = list(self.modulus), _poly_trim(list(x))
        s0, s1 = [], [1]
        while r1:
            q, r = _poly_divmod_fp(r0, r1, p)
            s_next = _poly_sub_fp(s0, _poly_mul_fp(q, s1, p), p)
            r0, r1 = r1, r
            s0, s1 = s1, s_next
        # r0 is the gcd, a nonzero constant since the modulus is irreducible
        c_inv = pow(r0[0], p - 2, p)
        out = [(c_inv * c) % p for c in s0]
        out = out + [0] * (self.degree - len(out))
        return tuple(out[: self.degree])

    def div(self, x: Scalar, y: Scalar) -> Scalar:
        return self.mul(x, self.inv(y))

    def is_zero(self, x: Scalar) -> bool:
        return x == self.zero()

    def is_one(self, x: Scalar) -> bool:
        return x == self.one()

    # -- embeddings and serialization ---------------------------------------

    def embeds_into(self, other: "FieldSpec") -> bool:
        if self == other:
            return True
        if self.kind == "Fp" and other.kind == "Fq" and self.p == other.p:
            return True
        return False

    def embed(self, x: Scalar, other: "FieldSpec") -> Scalar:
        """Image of x under the canonical embedding into other."""
        if self == other:
            return x
        if not self.embeds_into(other):
            raise FieldError(f"no embedding of {self} into {other}")
        return tuple([x] + [0] * (other.degree - 1))

    def to_json(self, x: Scalar):
        if self.kind == "Q":
            return f"{x.numerator}/{x.denominator}"
        if self.kind == "Fp":
            return str(x)
        return [str(c) for c in x]

    def from_json(self, data) -> Scalar:
        if self.kind == "Q":
            num, _, den = str(data).partition("/")
            return Fraction(int(num), int(den) if den else 1)
        if self.kind == "Fp":
            return int(data) % self.p
        coeffs = [int(c) % self.p for c in data]
        if len(coeffs) != self.degree:
            raise FieldError(f"expected {self.degree} coefficients")
        return tuple(coeffs)

    def spec_to_json(self):
        if self.kind == "Q":
            return {"kind": "rationals"}
        if self.kind == "Fp":
            return {"kind": "prime", "p": self.p}
        return {"kind": "extension", "p": self.p, "modulus": list(self.modulus)}

    @staticmethod
    def spec_from_json(data) -> "FieldSpec":
        kind = data["kind"]
        if kind == "rationals":
            return FieldSpec.rationals()
        if kind == "prime":
            return FieldSpec.prime(data["p"])
        if kind == "extension":
            return FieldSpec.extension(data["p"], data["modulus"])
        raise FieldError(f"unknown field kind {kind!r}")

    def __str__(self):
        if self.kind == "Q":
            return "Q"
        if self.kind == "Fp":
            return f"F{self.p}"
        return f"F{self.p}^{self.degree}"


QQ = FieldSpec.rationals()


def GF(p: int, modulus=None) -> FieldSpec:
    return FieldSpec.prime(p) if modulus is None else FieldSpec.extension(p, modulus)
