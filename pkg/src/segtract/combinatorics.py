"""Counting restricted integer compositions with rational generating functions.

Coefficients are exact integers.  Floating point only enters in root
isolation and in reporting growth ratios.
"""

from __future__ import annotations

import math
from collections.abc import Iterable, Iterator
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from typing import Literal

from .core import UNCONSTRAINED, BracketingError, DomainError, SegmentBounds

GFKind = Literal["unbounded", "lower", "upper", "double"]


def _trim(coeffs: Iterable) -> tuple:
    cs = list(coeffs)
    while cs and cs[-1] == 0:
        cs.pop()
    return tuple(cs)


@dataclass(frozen=True)
class IntPolynomial:
    """Polynomial with integer coefficients; ``coeffs[k]`` multiplies ``x**k``."""

    coeffs: tuple[int, ...]

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = _trim(coeffs)
        if any(not isinstance(c, int) for c in cs):
            raise TypeError("IntPolynomial coefficients must be integers")
        object.__setattr__(self, "coeffs", cs)

    @classmethod
    def monomial(cls, k: int, c: int = 1) -> IntPolynomial:
        return cls([0] * k + [c])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __add__(self, other: IntPolynomial) -> IntPolynomial:
        size = max(len(self.coeffs), len(other.coeffs))
        return IntPolynomial(self[k] + other[k] for k in range(size))

    def __sub__(self, other: IntPolynomial) -> IntPolynomial:
        return self + (-other)

    def __neg__(self) -> IntPolynomial:
        return IntPolynomial(-c for c in self.coeffs)

    def __mul__(self, other: IntPolynomial) -> IntPolynomial:
        if self.is_zero() or other.is_zero():
            return IntPolynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPolynomial(out)

    def __call__(self, x):
        acc = 0 * x
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def content(self) -> int:
        return reduce(math.gcd, self.coeffs, 0)

    def primitive(self) -> IntPolynomial:
        """Divide out the content; the leading coefficient is made positive."""
        if self.is_zero():
            return self
        g = self.content()
        if self.coeffs[-1] < 0:
            g = -g
        return IntPolynomial(c // g for c in self.coeffs)

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        terms = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            mag = abs(c)
            body = {0: f"{mag}", 1: "x" if mag == 1 else f"{mag}*x"}.get(k, f"x^{k}" if mag == 1 else f"{mag}*x^{k}")
            terms.append(("- " if c < 0 else "+ ") + body)
        text = " ".join(terms)
        return text[2:] if text.startswith("+ ") else "-" + text[2:]


def _qdivmod(a: list[Fraction], b: list[Fraction]) -> tuple[list[Fraction], list[Fraction]]:
    a = list(a)
    quot = [Fraction(0)] * max(len(a) - len(b) + 1, 1)
    while len(a) >= len(b) and any(a):
        shift = len(a) - len(b)
        factor = a[-1] / b[-1]
        quot[shift] = factor
        for k, c in enumerate(b):
            a[k + shift] -= factor * c
        a = list(_trim(a))
    return quot, a


def poly_gcd(p: IntPolynomial, q: IntPolynomial) -> IntPolynomial:
    """Greatest common divisor as a primitive integer polynomial."""
    a = [Fraction(c) for c in p.coeffs]
    b = [Fraction(c) for c in q.coeffs]
    while b:
        _, r = _qdivmod(a, b)
        a, b = b, r
    if not a:
        return IntPolynomial()
    den = reduce(lambda x, y: x * y // math.gcd(x, y), (c.denominator for c in a), 1)
    return IntPolynomial(int(c * den) for c in a).primitive()


def exact_div(p: IntPolynomial, d: IntPolynomial) -> IntPolynomial:
    quot, rem = _qdivmod([Fraction(c) for c in p.coeffs], [Fraction(c) for c in d.coeffs])
    if rem or any(c.denominator != 1 for c in quot):
        raise DomainError(f"{d} does not divide {p} over the integers")
    return IntPolynomial(int(c) for c in quot)


@dataclass(frozen=True)
class RationalGF:
    numerator: IntPolynomial
    denominator: IntPolynomial

    def __post_init__(self):
        if self.denominator[0] == 0:
            raise DomainError("denominator must have a nonzero constant term")

    def __str__(self) -> str:
        return f"({self.numerator}) / ({self.denominator})"


def classify_bounds(bounds: SegmentBounds) -> GFKind:
    a, b = bounds.min_len, bounds.max_len
    if b is None:
        return "unbounded" if a == 1 else "lower"
    if a == 1:
        if b < 2:
            raise DomainError("upper-bounded parts need max_len > 1")
        return "upper"
    if a < b:
        return "double"
    raise DomainError(f"no generating function for bounds [{a}, {b}]; need min_len < max_len")


def gf_for_bounds(bounds: SegmentBounds = UNCONSTRAINED, kind: GFKind | None = None) -> RationalGF:
    """Closed-form generating function counting compositions with parts in ``bounds``.

    ``kind`` defaults to the one implied by ``bounds``.  The forms are
    ``x/(1-2x)``, ``x^a/(1-x-x^a)``, ``(1-x)/(1-2x+x^(b+1))`` and
    ``(x^a-x^(b+1))/(1-x-x^a+x^(b+1))``, unreduced.
    """
    kind = kind or classify_bounds(bounds)
    a, b = bounds.min_len, bounds.max_len
    one, x = IntPolynomial([1]), IntPolynomial([0, 1])
    mono = IntPolynomial.monomial
    if kind == "unbounded":
        return RationalGF(x, IntPolynomial([1, -2]))
    if kind == "lower":
        if a <= 1:
            raise DomainError(f"lower-bounded parts need min_len > 1, got {a}")
        return RationalGF(mono(a), one - x - mono(a))
    if kind == "upper":
        if b is None or b <= 1:
            raise DomainError(f"upper-bounded parts need max_len > 1, got {b}")
        return RationalGF(one - x, one - mono(1, 2) + mono(b + 1))
    if kind == "double":
        if b is None or not 1 < a < b:
            raise DomainError(f"doubly-bounded parts need 1 < min_len < max_len, got [{a}, {b}]")
        return RationalGF(mono(a) - mono(b + 1), one - x - mono(a) + mono(b + 1))
    raise DomainError(f"unknown generating-function kind {kind!r}")


def reduce_common_factors(gf: RationalGF) -> RationalGF:
    num, den = gf.numerator, gf.denominator
    if num.is_zero():
        return RationalGF(num, IntPolynomial([1]))
    g = poly_gcd(num, den)
    if g.degree > 0:
        num, den = exact_div(num, g), exact_div(den, g)
    c = math.gcd(num.content(), den.content())
    if den[0] < 0:
        c = -c
    return RationalGF(IntPolynomial(v // c for v in num.coeffs), IntPolynomial(v // c for v in den.coeffs))


def coefficients(gf: RationalGF, n_max: int) -> list[int]:
    """Series coefficients ``s_0..s_n_max`` from ``d_0 s_n = p_n - sum_k d_k s_(n-k)``."""
    d = gf.denominator.coeffs
    d0 = d[0]
    out: list[int] = []
    for n in range(n_max + 1):
        acc = gf.numerator[n]
        for k in range(1, min(len(d), n + 1)):
            if d[k]:
                acc -= d[k] * out[n - k]
        value, rem = divmod(acc, d0)
        if rem:
            raise DomainError(f"coefficient {n} is not an integer")
        out.append(value)
    return out


def series_by_long_division(gf: RationalGF, n_max: int) -> list[Fraction]:
    """Series coefficients by dividing numerator by denominator in increasing powers."""
    den = [Fraction(c) for c in gf.denominator.coeffs]
    rem = [Fraction(gf.numerator[k]) for k in range(n_max + 1)]
    out = []
    for n in range(n_max + 1):
        c = rem[n] / den[0]
        out.append(c)
        if c:
            for k, dk in enumerate(den):
                if n + k > n_max:
                    break
                rem[n + k] -= c * dk
    return out


def compositions(n: int, bounds: SegmentBounds = UNCONSTRAINED) -> Iterator[tuple[int, ...]]:
    """Ordered tuples of parts in ``bounds`` summing to ``n``, generated part by part."""
    lo = bounds.min_len
    hi = n if bounds.max_len is None else bounds.max_len
    if n == 0:
        yield ()
        return
    for first in range(lo, min(hi, n) + 1):
        for rest in compositions(n - first, bounds):
            yield (first,) + rest


@dataclass(frozen=True)
class RootBracket:
    alpha: float
    lo: float
    hi: float
    residual: float
    iterations: int


def _sign(v) -> int:
    return (v > 0) - (v < 0)


def smallest_root(q: IntPolynomial, bracket: tuple[float, float] = (0.0, 1.0), tol: float = 1e-12, max_iter: int = 200) -> RootBracket:
    """Bisect a sign change of ``q`` inside ``bracket``.

    Signs are evaluated in exact rational arithmetic at the (binary) float
    midpoints, so the bracket never collapses onto the wrong side.
    """
    lo, hi = float(bracket[0]), float(bracket[1])
    f_lo, f_hi = _sign(q(Fraction(lo))), _sign(q(Fraction(hi)))
    if f_lo == 0:
        return RootBracket(lo, lo, lo, 0.0, 0)
    if f_hi == 0:
        return RootBracket(hi, hi, hi, 0.0, 0)
    if f_lo == f_hi:
        raise BracketingError(f"{q} has no sign change on [{lo}, {hi}]")
    it = 0
    while hi - lo > tol and it < max_iter:
        it += 1
        mid = (lo + hi) / 2
        if mid in (lo, hi):
            break
        f_mid = _sign(q(Fraction(mid)))
        if f_mid == 0:
            return RootBracket(mid, mid, mid, 0.0, it)
        if f_mid == f_lo:
            lo = mid
        else:
            hi = mid
    alpha = (lo + hi) / 2
    return RootBracket(alpha, lo, hi, float(q(Fraction(alpha))), it)


@dataclass(frozen=True)
class GrowthEstimate:
    alpha: float
    alpha_err: float
    A: float
    A_err: float
    residual: float
    denominator: IntPolynomial


def growth_factor(gf: RationalGF, bracket: tuple[float, float] = (0.0, 1.0)) -> GrowthEstimate:
    """Exponential growth rate ``A = 1/alpha`` of the coefficients of ``gf``.

    ``gf`` is first reduced so that a factor shared with the numerator cannot
    masquerade as the dominant singularity.  Only real roots inside
    ``bracket`` are searched.
    """
    reduced = reduce_common_factors(gf)
    root = smallest_root(reduced.denominator, bracket)
    alpha = root.alpha
    A = 1.0 / alpha
    alpha_err = max(alpha - root.lo, root.hi - alpha)
    A_err = max(1.0 / root.lo - A if root.lo > 0 else math.inf, A - 1.0 / root.hi)
    return GrowthEstimate(alpha, alpha_err, A, A_err, root.residual, reduced.denominator)


# Brackets guaranteed by the intermediate-value arguments for each family.
BRACKETS: dict[str, tuple[float, float]] = {
    "unbounded": (0.0, 1.0),
    "lower": (0.0, 1.0),
    "upper": (0.0, 0.75),
    "double": (0.0, 1.0),
}


def growth_for_bounds(bounds: SegmentBounds) -> GrowthEstimate:
    kind = classify_bounds(bounds)
    return growth_factor(gf_for_bounds(bounds, kind), BRACKETS[kind])


def empirical_growth(counts: list[int]) -> float:
    """Ratio ``s_N / s_(N-1)`` of the last two counts, as a float."""
    tail = 0
    for c in reversed(counts):
        if c == 0:
            break
        tail += 1
    if tail < 10:
        raise DomainError(f"need at least 10 trailing nonzero counts, got {tail}")
    return float(Fraction(counts[-1], counts[-2]))


def count_compositions(n: int, bounds: SegmentBounds = UNCONSTRAINED) -> int:
    """Number of compositions of ``n`` with parts in ``bounds``, via the generating function."""
    return coefficients(gf_for_bounds(bounds), n)[n]
