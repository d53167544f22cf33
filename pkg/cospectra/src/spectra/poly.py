"""Integer polynomials: exact division, primitive gcd, Yun decomposition, Sturm counts.

Coefficients are Python ints, index = power. Nothing here touches floating point.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce

Endpoint = int | Fraction


@dataclass(frozen=True)
class ExactPoly:
    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        c = list(self.coeffs)
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(int(x) for x in c))

    @classmethod
    def of(cls, *coeffs: int) -> ExactPoly:
        """Coefficients from the constant term upward."""
        return cls(tuple(coeffs))

    @classmethod
    def monomial(cls, k: int, c: int = 1) -> ExactPoly:
        return cls((0,) * k + (c,))

    @classmethod
    def vanishing_at(cls, root: Endpoint) -> ExactPoly:
        """Primitive linear polynomial with the given rational root."""
        r = Fraction(root)
        return cls((-r.numerator, r.denominator))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return self.leading == 1

    def __add__(self, other: ExactPoly) -> ExactPoly:
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return ExactPoly(tuple(x + (b[i] if i < len(b) else 0) for i, x in enumerate(a)))

    def __neg__(self) -> ExactPoly:
        return ExactPoly(tuple(-x for x in self.coeffs))

    def __sub__(self, other: ExactPoly) -> ExactPoly:
        return self + (-other)

    def __mul__(self, other: ExactPoly) -> ExactPoly:
        if self.is_zero() or other.is_zero():
            return ExactPoly(())
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, x in enumerate(self.coeffs):
            if x:
                for j, y in enumerate(other.coeffs):
                    out[i + j] += x * y
        return ExactPoly(tuple(out))

    def __pow__(self, k: int) -> ExactPoly:
        out = ExactPoly((1,))
        for _ in range(k):
            out = out * self
        return out

    def derivative(self) -> ExactPoly:
        return ExactPoly(tuple(k * c for k, c in enumerate(self.coeffs) if k))

    def content(self) -> int:
        return reduce(math.gcd, self.coeffs, 0)

    def reduced(self) -> ExactPoly:
        """Divide by the (positive) content; signs are kept."""
        g = self.content()
        if g <= 1:
            return self
        return ExactPoly(tuple(x // g for x in self.coeffs))

    def primitive(self) -> ExactPoly:
        """Content removed and leading coefficient made positive."""
        p = self.reduced()
        return -p if p.leading < 0 else p

    def __call__(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def sign_at(self, x: Endpoint) -> int:
        if isinstance(x, int):
            v = self(x)
        else:
            num, den = x.numerator, x.denominator
            d = self.degree
            # den^d * p(num/den), den > 0 so the sign is unchanged
            v = sum(c * num**k * den ** (d - k) for k, c in enumerate(self.coeffs))
        return (v > 0) - (v < 0)

    def format(self, var: str = "x") -> str:
        if not self.coeffs:
            return "0"
        terms: list[str] = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                power = var if k == 1 else f"{var}^{k}"
                body = power if mag == 1 else f"{mag}{power}"
            if not terms:
                terms.append(body if c > 0 else f"-{body}")
            else:
                terms.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(terms)

    def __str__(self) -> str:
        return self.format()

    def to_json(self) -> list[str]:
        return [str(c) for c in self.coeffs]


ONE = ExactPoly((1,))
TRIVIAL_ROOTS = (0, -1)


def pseudo_divmod(a: ExactPoly, b: ExactPoly) -> tuple[ExactPoly, ExactPoly]:
    """lc(b)^(deg a - deg b + 1) * a = q * b + r with deg r < deg b."""
    if b.is_zero():
        raise ZeroDivisionError("pseudo-division by the zero polynomial")
    if a.degree < b.degree:
        return ExactPoly(()), a
    lc = b.leading
    delta = a.degree - b.degree
    r = list(a.coeffs)
    q = [0] * (delta + 1)
    for k in range(delta, -1, -1):
        top = r[k + b.degree] if k + b.degree < len(r) else 0
        q = [x * lc for x in q]
        q[k] += top
        r = [x * lc for x in r]
        for j, bc in enumerate(b.coeffs):
            r[k + j] -= top * bc
    return ExactPoly(tuple(q)), ExactPoly(tuple(r))


def exact_div(a: ExactPoly, b: ExactPoly) -> ExactPoly:
    """a / b over the integers; raises ArithmeticError if b does not divide a."""
    if b.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    r = list(a.coeffs)
    q = [0] * max(a.degree - b.degree + 1, 0)
    lc = b.leading
    for k in range(len(q) - 1, -1, -1):
        top = r[k + b.degree]
        if top % lc:
            raise ArithmeticError(f"{b} does not divide {a} over the integers")
        c = top // lc
        q[k] = c
        if c:
            for j, bc in enumerate(b.coeffs):
                r[k + j] -= c * bc
    if any(r):
        raise ArithmeticError(f"{b} does not divide {a}")
    return ExactPoly(tuple(q))


def poly_gcd(a: ExactPoly, b: ExactPoly) -> ExactPoly:
    """Primitive gcd with positive leading coefficient (primitive remainder sequence)."""
    a, b = a.primitive(), b.primitive()
    if a.degree < b.degree:
        a, b = b, a
    while not b.is_zero():
        _, r = pseudo_divmod(a, b)
        a, b = b, r.primitive()
    if a.is_zero():
        return ONE
    return a if a.degree > 0 else ONE


def root_multiplicity(p: ExactPoly, root: Endpoint) -> int:
    if p.is_zero():
        raise ValueError("every value is a root of the zero polynomial")
    lin = ExactPoly.vanishing_at(root)
    k = 0
    while p.sign_at(root) == 0:
        p = exact_div(p, lin)
        k += 1
    return k


# ---------------------------------------------------------------------------
# Square-free decomposition
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class FactorRecord:
    factor: ExactPoly
    multiplicity: int


@dataclass(frozen=True)
class MultiplicitySpectrum:
    records: tuple[FactorRecord, ...]
    mult_zero: int
    mult_minus_one: int

    def product(self) -> ExactPoly:
        out = ONE
        for rec in self.records:
            out = out * rec.factor**rec.multiplicity
        return out

    def multiplicity_of(self, root: Endpoint) -> int:
        for rec in self.records:
            if rec.factor.sign_at(root) == 0:
                return rec.multiplicity
        return 0

    def nontrivial(self) -> tuple[FactorRecord, ...]:
        """Records with the roots 0 and -1 divided out; empty factors dropped."""
        out: list[FactorRecord] = []
        for rec in self.records:
            f = rec.factor
            for root in TRIVIAL_ROOTS:
                if f.sign_at(root) == 0:
                    f = exact_div(f, ExactPoly.vanishing_at(root))
            if f.degree > 0:
                out.append(FactorRecord(f, rec.multiplicity))
        return tuple(out)

    def max_multiplicity(self) -> int:
        return max((rec.multiplicity for rec in self.records), default=0)

    def max_nontrivial_multiplicity(self) -> int:
        return max((rec.multiplicity for rec in self.nontrivial()), default=0)

    def to_json(self) -> dict[str, object]:
        return {
            "factors": [
                {"factor": rec.factor.format(), "coeffs": rec.factor.to_json(), "multiplicity": rec.multiplicity}
                for rec in self.records
            ],
            "mult_zero": self.mult_zero,
            "mult_minus_one": self.mult_minus_one,
        }


def yun(p: ExactPoly) -> list[FactorRecord]:
    """p = prod f_i^i over Z for primitive p; only factors of positive degree are kept."""
    p = p.primitive()
    if p.degree <= 0:
        return []
    dp = p.derivative()
    a = poly_gcd(p, dp)
    b = exact_div(p, a)
    c = exact_div(dp, a)
    d = c - b.derivative()
    out: list[FactorRecord] = []
    i = 1
    while b.degree > 0:
        a = poly_gcd(b, d)
        if a.degree > 0:
            out.append(FactorRecord(a, i))
        b = exact_div(b, a)
        c = exact_div(d, a)
        d = c - b.derivative()
        i += 1
    return out


def square_free_decomposition(p: ExactPoly) -> MultiplicitySpectrum:
    if p.is_zero():
        raise ValueError("square-free decomposition of the zero polynomial")
    if not p.is_monic():
        raise ValueError(f"expected a monic polynomial, got leading coefficient {p.leading}")
    mult_zero = next(k for k, c in enumerate(p.coeffs) if c)
    return MultiplicitySpectrum(
        records=tuple(yun(p)),
        mult_zero=mult_zero,
        mult_minus_one=root_multiplicity(p, -1),
    )


# ---------------------------------------------------------------------------
# Sturm sequences
# ---------------------------------------------------------------------------


def sturm_chain(f: ExactPoly) -> list[ExactPoly]:
    """Sturm chain with sign-corrected pseudo-remainders, each reduced by its content."""
    chain = [f.reduced(), f.derivative().reduced()]
    while chain[-1].degree > 0:
        a, b = chain[-2], chain[-1]
        _, r = pseudo_divmod(a, b)
        # lc(b)^(delta+1) may be negative; flip so r is a positive multiple of rem(a, b)
        if b.leading < 0 and (a.degree - b.degree + 1) % 2:
            r = -r
        r = (-r).reduced()
        if r.is_zero():
            break
        chain.append(r)
    return chain


def sign_variations(chain: list[ExactPoly], x: Endpoint) -> int:
    signs = [s for s in (p.sign_at(x) for p in chain) if s]
    return sum(1 for s, t in zip(signs, signs[1:], strict=False) if s != t)


def count_distinct_roots(f: ExactPoly, a: Endpoint, b: Endpoint) -> int:
    """Distinct real roots of f strictly inside (a, b)."""
    if not a < b:
        raise ValueError(f"empty interval ({a}, {b})")
    if f.is_zero():
        raise ValueError("the zero polynomial has infinitely many roots")
    for end in (a, b):
        lin = ExactPoly.vanishing_at(end)
        while f.degree > 0 and f.sign_at(end) == 0:
            f = exact_div(f, lin)
    if f.degree <= 0:
        return 0
    chain = sturm_chain(f)
    return sign_variations(chain, a) - sign_variations(chain, b)


def count_roots_open_interval(spectrum: MultiplicitySpectrum, a: Endpoint, b: Endpoint) -> int:
    return sum(rec.multiplicity * count_distinct_roots(rec.factor, a, b) for rec in spectrum.records)
