"""Exact rational Hilbert-series arithmetic.

Everything here is integer-exact: numerators are integer polynomials in t and
denominators are powers of (1 - t).  Series are kept canonical, meaning the
numerator is not divisible by (1 - t), so equal values compare equal even when
they were produced at different denominator exponents.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from .errors import NotPLinearShape, TooManyGenerators
from .ideal import MonomialIdeal
from .limits import DEFAULT_LIMITS, Limits


@dataclass(frozen=True)
class IntPolynomial:
    """Integer polynomial; coeffs[k] is the coefficient of t^k, trailing zeros trimmed."""

    coeffs: tuple[int, ...]

    @staticmethod
    def of(coeffs) -> "IntPolynomial":
        coeffs = list(coeffs)
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        return IntPolynomial(tuple(coeffs))

    @staticmethod
    def monomial(k: int, c: int = 1) -> "IntPolynomial":
        return IntPolynomial.of([0] * k + [c])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, k: int) -> int:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return 0

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        n = max(len(self.coeffs), len(other.coeffs))
        return IntPolynomial.of(
            self.coefficient(k) + other.coefficient(k) for k in range(n)
        )

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        n = max(len(self.coeffs), len(other.coeffs))
        return IntPolynomial.of(
            self.coefficient(k) - other.coefficient(k) for k in range(n)
        )

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial(tuple(-c for c in self.coeffs))

    def __mul__(self, other: "IntPolynomial") -> "IntPolynomial":
        if self.is_zero or other.is_zero:
            return ZERO
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return IntPolynomial.of(out)

    def scale(self, c: int) -> "IntPolynomial":
        return IntPolynomial.of(c * a for a in self.coeffs)

    def shift(self, k: int) -> "IntPolynomial":
        """Multiply by t^k."""
        if self.is_zero:
            return self
        return IntPolynomial((0,) * k + self.coeffs)

    def __pow__(self, n: int) -> "IntPolynomial":
        result = ONE
        for _ in range(n):
            result = result * self
        return result

    def __call__(self, x: int) -> int:
        value = 0
        for c in reversed(self.coeffs):
            value = value * x + c
        return value

    def substitute_one_minus_t(self) -> "IntPolynomial":
        """The polynomial P(1 - t)."""
        result = ZERO
        for c in reversed(self.coeffs):
            result = result * ONE_MINUS_T + IntPolynomial.of([c])
        return result

    def divide_by_one_minus_t(self) -> "IntPolynomial | None":
        """Exact quotient by (1 - t), or None when (1 - t) does not divide."""
        if self.is_zero:
            return self
        if self(1) != 0:
            return None
        out = []
        running = 0
        for c in self.coeffs[:-1]:
            running += c
            out.append(running)
        return IntPolynomial.of(out)

    def divisible_by_t_power(self, k: int) -> bool:
        return all(self.coefficient(i) == 0 for i in range(k))

    def shift_down(self, k: int) -> "IntPolynomial":
        """Exact division by t^k."""
        if not self.divisible_by_t_power(k):
            raise ValueError(f"not divisible by t^{k}")
        return IntPolynomial.of(self.coeffs[k:])

    def pretty(self, var: str = "t") -> str:
        if self.is_zero:
            return "0"
        parts = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mag = abs(c)
            if k == 0:
                term = str(mag)
            else:
                power = var if k == 1 else f"{var}^{k}"
                term = power if mag == 1 else f"{mag}{power}"
            sign = "-" if c < 0 else "+"
            if not parts:
                parts.append(term if c > 0 else f"-{term}")
            else:
                parts.append(f"{sign}{term}")
        return "".join(parts)


ZERO = IntPolynomial(())
ONE = IntPolynomial((1,))
ONE_MINUS_T = IntPolynomial((1, -1))


@dataclass(frozen=True)
class RationalSeries:
    """numerator / (1 - t)^denom_exponent, stored in canonical form."""

    numerator: IntPolynomial
    denom_exponent: int

    def __post_init__(self):
        num, d = self.numerator, self.denom_exponent
        if num.is_zero:
            d = 0
        while not num.is_zero:
            quotient = num.divide_by_one_minus_t()
            if quotient is None:
                break
            num, d = quotient, d - 1
        object.__setattr__(self, "numerator", num)
        object.__setattr__(self, "denom_exponent", d)

    def taylor(self, degree: int) -> tuple[int, ...]:
        """Series coefficients of t^0 .. t^degree."""
        num, d = self.numerator, self.denom_exponent
        if d < 0:
            num, d = num * ONE_MINUS_T ** (-d), 0
        out = []
        for k in range(degree + 1):
            total = 0
            for i in range(min(k, num.degree) + 1):
                c = num.coefficient(i)
                if c:
                    total += c * (math.comb(d - 1 + k - i, k - i) if d > 0 else (k == i))
            out.append(total)
        return tuple(out)

    def pretty(self) -> str:
        num = self.numerator.pretty()
        if self.denom_exponent == 0:
            return num
        denom = "(1-t)" if self.denom_exponent == 1 else f"(1-t)^{self.denom_exponent}"
        return f"({num})/{denom}"

    def to_json(self) -> dict:
        return {
            "numerator": list(self.numerator.coeffs),
            "denom_exponent": self.denom_exponent,
        }


def h_poly(c: int, p: int) -> IntPolynomial:
    """Degree p-1 polynomial whose t^i coefficient is C(c+i-1, i)."""
    if c < 1 or p < 1:
        raise ValueError("c and p must be positive")
    return IntPolynomial.of(math.comb(c + i - 1, i) for i in range(p))


def duality_identity_check(c: int, p: int) -> bool:
    """Exact check of 1 - h(c,p)(1-t) t^c == h(p,c)(t) (1-t)^p and the mod-t^p congruence."""
    lhs = ONE - h_poly(c, p).substitute_one_minus_t().shift(c)
    rhs = h_poly(p, c) * ONE_MINUS_T**p
    congruence = (h_poly(c, p) * ONE_MINUS_T**c - ONE).divisible_by_t_power(p)
    return lhs == rhs and congruence


def deviation_poly(sigma) -> IntPolynomial:
    """sum_i sigma_i (1-t)^(i-1) for sigma = (sigma_1, sigma_2, ...)."""
    total = ZERO
    for i, s in enumerate(sigma, start=1):
        total = total + (ONE_MINUS_T ** (i - 1)).scale(s)
    return total


def hilbert_series_linear(c: int, p: int, sigma, d: int) -> RationalSeries:
    """Series of a quotient with resolution linear in degree p, height c,
    diagonal deviations sigma (sigma_i counts diagonal c+i), dimension d."""
    sigma = tuple(sigma)
    if d < len(sigma):
        raise ValueError("denominator exponent smaller than deviation length")
    numerator = h_poly(c, p) - deviation_poly(sigma).shift(p)
    return RationalSeries(numerator, d)


def hilbert_series_monomial(
    ideal: MonomialIdeal, limits: Limits = DEFAULT_LIMITS
) -> RationalSeries:
    """Series of S/I computed from the generators alone.

    Uses inclusion-exclusion over generator subsets when the generating set is
    small, and an exact colon-splitting recursion otherwise.
    """
    gens = ideal.generators
    variables = ideal.ambient
    exp_vectors = tuple(
        tuple(g.exponent(v) for v in variables) for g in gens
    )
    if len(gens) <= limits.inclusion_exclusion_max_generators:
        num = _numerator_inclusion_exclusion(exp_vectors)
    elif len(gens) <= limits.series_recursion_max_generators:
        num = _numerator_splitting(frozenset(exp_vectors))
    else:
        raise TooManyGenerators(
            f"{len(gens)} generators exceed both series strategies"
        )
    return RationalSeries(IntPolynomial.of(num.get(k, 0) for k in range(max(num) + 1)), len(variables))


def _numerator_inclusion_exclusion(exp_vectors) -> dict[int, int]:
    acc: dict[int, int] = {}

    def rec(i: int, current: tuple[int, ...], sign: int):
        if i == len(exp_vectors):
            d = sum(current)
            acc[d] = acc.get(d, 0) + sign
            return
        rec(i + 1, current, sign)
        rec(i + 1, tuple(map(max, current, exp_vectors[i])), -sign)

    width = len(exp_vectors[0]) if exp_vectors else 0
    rec(0, (0,) * width, 1)
    return acc


@lru_cache(maxsize=100_000)
def _numerator_splitting(exp_vectors: frozenset[tuple[int, ...]]) -> dict[int, int]:
    """Numerator of S/I over (1-t)^n via the exact sequence splitting off one generator."""
    if not exp_vectors:
        return {0: 1}
    pivot = max(exp_vectors)
    rest = _minimalize(exp_vectors - {pivot})
    colon = _minimalize(
        frozenset(
            tuple(max(g - m, 0) for g, m in zip(gen, pivot)) for gen in rest
        )
    )
    out = dict(_numerator_splitting(rest))
    shift = sum(pivot)
    for d, c in _numerator_splitting(colon).items():
        out[d + shift] = out.get(d + shift, 0) - c
    return out


def _minimalize(exp_vectors: frozenset[tuple[int, ...]]) -> frozenset[tuple[int, ...]]:
    return frozenset(
        g
        for g in exp_vectors
        if not any(h != g and all(a <= b for a, b in zip(h, g)) for h in exp_vectors)
    )


def extract_s_vector(series: RationalSeries, c: int, p: int) -> tuple[int, ...]:
    """Invert hilbert_series_linear: recover the diagonal deviations.

    The canonical numerator must agree with h(c,p) below degree p; the excess,
    shifted down by t^p, is rewritten in the basis (1-t)^(i-1) and must have
    nonnegative coefficients.
    """
    excess = h_poly(c, p) - series.numerator
    if not excess.divisible_by_t_power(p):
        raise NotPLinearShape(
            f"numerator does not match the height-{c} degree-{p} shape below degree {p}"
        )
    rewritten = excess.shift_down(p).substitute_one_minus_t()
    sigma = rewritten.coeffs
    if any(s < 0 for s in sigma):
        raise NotPLinearShape("negative diagonal count under the basis change")
    return tuple(sigma)


def dual_series(c: int, p: int, sigma, n: int) -> tuple[RationalSeries, RationalSeries]:
    """The series of S/I and of S/I* for a squarefree I with p-linear resolution,
    height c, diagonal deviations sigma, in an ambient ring of dimension n."""
    sigma = tuple(sigma)
    primal = hilbert_series_linear(c, p, sigma, n - c)
    dual_num = h_poly(p, c) + IntPolynomial.of(sigma).shift(c)
    return primal, RationalSeries(dual_num, n - p)


def betti_polynomial_relation_holds(c: int, p: int, sigma, n: int) -> bool:
    """B_{S/J}(t) == 1 - B_{S/I}(1-t) after clearing denominators to exponent n."""
    sigma = tuple(sigma)
    primal_num = h_poly(c, p) - deviation_poly(sigma).shift(p)
    dual_num = h_poly(p, c) + IntPolynomial.of(sigma).shift(c)
    one_minus_primal_b = primal_num * ONE_MINUS_T**c
    one_minus_dual_b = dual_num * ONE_MINUS_T**p
    dual_b = ONE - one_minus_dual_b
    primal_b_at_one_minus_t = (ONE - one_minus_primal_b).substitute_one_minus_t()
    return dual_b == ONE - primal_b_at_one_minus_t


def h_vector(series: RationalSeries) -> tuple[int, ...]:
    """Coefficients of the canonical numerator."""
    return series.numerator.coeffs
