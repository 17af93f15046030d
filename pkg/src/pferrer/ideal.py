"""Monomial ideals over grouped variables.

Variables come in groups 1..p; the canonical order is descending group, then
ascending index, which fixes the printed form of every monomial and ideal.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple

from .diagram import Box, PFerrerPartition, boxes
from .errors import DepthOne, NotSquarefree, SizeLimitExceeded
from .limits import DEFAULT_LIMITS, Limits


class Variable(NamedTuple):
    group: int
    index: int

    def __str__(self):
        return f"x{self.group}_{self.index}"


def variable_key(v: Variable) -> tuple[int, int]:
    return (-v.group, v.index)


@dataclass(frozen=True)
class Monomial:
    """Exponent map stored as factors sorted in canonical variable order."""

    factors: tuple[tuple[Variable, int], ...]

    @staticmethod
    def of(exponents: dict[Variable, int]) -> "Monomial":
        items = [(v, e) for v, e in exponents.items() if e != 0]
        if any(e < 0 for _, e in items):
            raise ValueError("negative exponent")
        return Monomial(tuple(sorted(items, key=lambda it: variable_key(it[0]))))

    @property
    def degree(self) -> int:
        return sum(e for _, e in self.factors)

    @property
    def support(self) -> tuple[Variable, ...]:
        return tuple(v for v, _ in self.factors)

    @property
    def is_squarefree(self) -> bool:
        return all(e == 1 for _, e in self.factors)

    def exponent(self, v: Variable) -> int:
        return dict(self.factors).get(v, 0)

    def divides(self, other: "Monomial") -> bool:
        exps = dict(other.factors)
        return all(exps.get(v, 0) >= e for v, e in self.factors)

    def lcm(self, other: "Monomial") -> "Monomial":
        exps = dict(self.factors)
        for v, e in other.factors:
            exps[v] = max(exps.get(v, 0), e)
        return Monomial.of(exps)

    def gcd(self, other: "Monomial") -> "Monomial":
        other_exps = dict(other.factors)
        return Monomial.of({v: min(e, other_exps.get(v, 0)) for v, e in self.factors})

    def colon(self, other: "Monomial") -> "Monomial":
        """self / gcd(self, other)."""
        other_exps = dict(other.factors)
        return Monomial.of({v: e - min(e, other_exps.get(v, 0)) for v, e in self.factors})

    def __str__(self):
        if not self.factors:
            return "1"
        return "*".join(f"{v}" if e == 1 else f"{v}^{e}" for v, e in self.factors)


MONOMIAL_ONE = Monomial(())


def monomial_key(m: Monomial):
    return tuple((variable_key(v), e) for v, e in m.factors)


def box_monomial(box: Box) -> Monomial:
    """The squarefree monomial of a box: one variable per coordinate group."""
    return Monomial.of({Variable(k, a): 1 for k, a in enumerate(box, start=1)})


@dataclass(frozen=True)
class MonomialIdeal:
    """Finite antichain of monomials plus the ambient variable set."""

    generators: tuple[Monomial, ...]
    ambient: tuple[Variable, ...]

    @staticmethod
    def make(gens: Iterable[Monomial], ambient: Iterable[Variable] | None = None) -> "MonomialIdeal":
        unique = set(gens)
        minimal = [
            g for g in unique if not any(h != g and h.divides(g) for h in unique)
        ]
        minimal.sort(key=monomial_key)
        support = {v for g in minimal for v in g.support}
        if ambient is not None:
            support |= set(ambient)
        return MonomialIdeal(tuple(minimal), tuple(sorted(support, key=variable_key)))

    @property
    def is_squarefree(self) -> bool:
        return all(g.is_squarefree for g in self.generators)

    @property
    def nvars(self) -> int:
        return len(self.ambient)

    def contains(self, m: Monomial) -> bool:
        return any(g.divides(m) for g in self.generators)

    def __str__(self):
        return "(" + ", ".join(str(g) for g in self.generators) + ")"


def ferrer_ideal(part: PFerrerPartition) -> MonomialIdeal:
    """One squarefree degree-p generator per box of the diagram."""
    return MonomialIdeal.make(box_monomial(b) for b in boxes(part))


class IntersectionComponent(NamedTuple):
    linear: tuple[Variable, ...]
    tail: MonomialIdeal

    def ideal(self) -> MonomialIdeal:
        gens = [Monomial.of({v: 1}) for v in self.linear]
        gens.extend(self.tail.generators)
        return MonomialIdeal.make(gens)


def equal_runs(part: PFerrerPartition) -> tuple[tuple[int, int], ...]:
    """Maximal runs of equal consecutive children, as 1-based (start, end) pairs."""
    runs = []
    start = 0
    children = part.children
    for i in range(1, len(children) + 1):
        if i == len(children) or children[i] != children[start]:
            runs.append((start + 1, i))
            start = i
    return tuple(runs)


def intersection_decomposition(part: PFerrerPartition) -> tuple[IntersectionComponent, ...]:
    """Write the diagram ideal as an intersection of linear-plus-tail components.

    With runs r = 1..R of equal children (run r ending at child delta_r), the
    components are Q_1, ..., Q_{R+1}: Q_j is generated by the last-group
    variables of runs 1..R+1-j together with the ideal of run (R+2-j)'s child
    (no tail for j = 1, no linear part for j = R+1).
    """
    if part.depth == 1:
        raise DepthOne("the decomposition is trivial in depth 1")
    runs = equal_runs(part)
    p = part.depth
    run_vars = [
        tuple(Variable(p, i) for i in range(start, end + 1)) for start, end in runs
    ]
    run_tails = [ferrer_ideal(part.children[end - 1]) for _, end in runs]
    components = []
    total = len(runs) + 1
    for j in range(1, total + 1):
        linear = tuple(v for vars_ in run_vars[: total - j] for v in vars_)
        tail = run_tails[total - j] if j >= 2 else MonomialIdeal.make([])
        components.append(IntersectionComponent(linear, tail))
    return tuple(components)


def minimal_primes(
    ideal: MonomialIdeal, limits: Limits = DEFAULT_LIMITS
) -> frozenset[frozenset[Variable]]:
    """Inclusion-minimal variable sets meeting the support of every generator."""
    if not ideal.is_squarefree:
        raise NotSquarefree("minimal primes require a squarefree ideal")
    variables = ideal.ambient
    if len(variables) > limits.hitting_set_max_variables:
        raise SizeLimitExceeded(
            f"{len(variables)} variables exceed hitting-set limit "
            f"{limits.hitting_set_max_variables}"
        )
    position = {v: i for i, v in enumerate(variables)}
    masks = []
    for g in ideal.generators:
        mask = 0
        for v in g.support:
            mask |= 1 << position[v]
        masks.append(mask)
    covers = _minimal_covers(tuple(sorted(set(masks))), {})
    covers = [
        c for c in covers if not any(d != c and d & c == d for d in covers)
    ]
    return frozenset(
        frozenset(variables[i] for i in range(len(variables)) if (c >> i) & 1)
        for c in covers
    )


def _minimal_covers(masks: tuple[int, ...], memo: dict) -> list[int]:
    """All minimal hitting sets of the bitmask family, plus possibly redundant ones."""
    if not masks:
        return [0]
    if masks in memo:
        return memo[masks]
    pivot = min(masks, key=lambda m: m.bit_count())
    found = set()
    v = 0
    rest_bits = pivot
    while rest_bits:
        if rest_bits & 1:
            bit = 1 << v
            remaining = tuple(m for m in masks if not (m & bit))
            for cover in _minimal_covers(remaining, memo):
                found.add(cover | bit)
        rest_bits >>= 1
        v += 1
    result = [c for c in found if not any(d != c and d & c == d for d in found)]
    memo[masks] = result
    return result


def colon_by_monomial(ideal: MonomialIdeal, m: Monomial) -> MonomialIdeal:
    """The colon ideal (I : m), generated by g / gcd(g, m)."""
    return MonomialIdeal.make((g.colon(m) for g in ideal.generators), ambient=ideal.ambient)


def alexander_dual(ideal: MonomialIdeal, limits: Limits = DEFAULT_LIMITS) -> MonomialIdeal:
    """Squarefree dual: one generator per minimal prime; an involution."""
    if not ideal.is_squarefree:
        raise NotSquarefree("Alexander duality requires a squarefree ideal")
    primes = minimal_primes(ideal, limits)
    gens = [Monomial.of({v: 1 for v in prime}) for prime in primes]
    return MonomialIdeal.make(gens, ambient=ideal.ambient)
