"""Closed-form homological invariants of diagram ideals.

The Betti formula is implemented in a diagonal-indexed form that does not
mention the ambient variable count: the two ambient-dependent pieces of the
textbook-style expression cancel once the deviation counts are indexed by
diagonal, which keeps the numbers independent of unused variables.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations
from typing import NamedTuple

from .diagram import (
    Box,
    DiagonalProfile,
    PFerrerPartition,
    boxes,
    diagonal_index,
    diagonal_profile,
    remove_last_diagonal_box,
)
from .errors import CertificateFailure
from .ideal import Monomial, box_monomial, ferrer_ideal


def betti_cm(c: int, p: int, j: int) -> int:
    """Betti numbers of a Cohen-Macaulay quotient with p-linear resolution and
    codimension c: C(c+p-1, j+p-1) * C(j+p-2, p-1).  Zero beyond j = c."""
    if j < 0:
        raise ValueError("j must be nonnegative")
    if j == 0:
        return 1
    return math.comb(c + p - 1, j + p - 1) * math.comb(j + p - 2, p - 1)


@dataclass(frozen=True)
class BettiTable:
    """Total Betti numbers of the quotient ring: betti[j-1] is beta_j."""

    betti: tuple[int, ...]
    generation_degree: int
    linear: bool = True

    @property
    def projdim(self) -> int:
        return len(self.betti)

    def beta(self, j: int) -> int:
        if j == 0:
            return 1
        if 1 <= j <= len(self.betti):
            return self.betti[j - 1]
        return 0

    def to_json(self) -> dict:
        return {str(j): b for j, b in enumerate(self.betti, start=1)}


def betti_from_profile(profile: DiagonalProfile, j: int) -> int:
    c, p = profile.df, profile.depth
    extra = sum(
        profile.count(k) * math.comb(k - 1, j - 1)
        for k in range(c + 1, profile.delta + 1)
    )
    return betti_cm(c, p, j) + extra


def betti_table(part: PFerrerPartition) -> BettiTable:
    """Total Betti numbers beta_1..beta_projdim of the quotient by the diagram ideal."""
    profile = diagonal_profile(part)
    return BettiTable(
        tuple(betti_from_profile(profile, j) for j in range(1, profile.delta + 1)),
        generation_degree=part.depth,
    )


def betti_ambient_indexed(profile: DiagonalProfile, n: int, j: int) -> int:
    """The same number computed through the ambient-indexed deviation sum
    s_i = (count of diagonal c + d - i) with d = n - c; kept for cross-checking
    the reindexing identity."""
    c, p = profile.df, profile.depth
    d = n - c
    total = betti_cm(c, p, j)
    for i in range(d):
        s_i = profile.count(c + d - i)
        total += s_i * math.comb(n - i - 1, j - 1)
    return total


class MappingConeStep(NamedTuple):
    phi: PFerrerPartition
    phi_prime: PFerrerPartition
    removed: Box
    delta: int
    table: BettiTable
    table_prime: BettiTable
    recurrence_holds: bool


def mapping_cone_step(part: PFerrerPartition) -> MappingConeStep:
    """Remove one last-diagonal box and check
    beta_j(Phi) = beta_j(Phi') + C(delta(Phi)-1, j-1) for every j."""
    smaller, removed = remove_last_diagonal_box(part)
    table = betti_table(part)
    table_prime = betti_table(smaller)
    delta = table.projdim
    holds = all(
        table.beta(j) == table_prime.beta(j) + math.comb(delta - 1, j - 1)
        for j in range(1, delta + 1)
    )
    return MappingConeStep(part, smaller, removed, delta, table, table_prime, holds)


def regularity(part: PFerrerPartition) -> tuple[int, int]:
    """(regularity of the ideal, regularity of the quotient) = (p, p-1)."""
    return part.depth, part.depth - 1


@dataclass(frozen=True)
class HomologicalSummary:
    n: int
    height: int
    dim: int
    depth: int
    projdim: int
    ara: int

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "height": self.height,
            "dim": self.dim,
            "depth": self.depth,
            "projdim": self.projdim,
            "ara": self.ara,
        }


def homological_summary(part: PFerrerPartition) -> HomologicalSummary:
    profile = diagonal_profile(part)
    n = len(ferrer_ideal(part).ambient)
    c = profile.df
    delta = profile.delta
    return HomologicalSummary(
        n=n, height=c, dim=n - c, depth=n - delta, projdim=delta, ara=delta
    )


class AraWitness(NamedTuple):
    first: Monomial
    second: Monomial
    witness_class: int
    witness: Monomial


@dataclass(frozen=True)
class AraCertificate:
    """Diagonal classes K_1..K_delta plus, for each unordered pair inside a
    class, a strictly earlier class member dividing the product of the pair.
    This is the classical sufficient condition for the diagonal sums to cut
    out the ideal up to radical."""

    classes: tuple[tuple[Monomial, ...], ...]
    witnesses: tuple[AraWitness, ...]

    @property
    def ara(self) -> int:
        return len(self.classes)


def ara_certificate(part: PFerrerPartition) -> AraCertificate:
    profile = diagonal_profile(part)
    by_diagonal: dict[int, list[Box]] = {k: [] for k in range(1, profile.delta + 1)}
    for box in boxes(part):
        by_diagonal[diagonal_index(box)].append(box)
    classes = tuple(
        tuple(box_monomial(b) for b in sorted(by_diagonal[k]))
        for k in range(1, profile.delta + 1)
    )
    witnesses = []
    for k in range(1, profile.delta + 1):
        for first, second in combinations(sorted(by_diagonal[k]), 2):
            witness_box = _lowered_box(first, second)
            witness_diag = diagonal_index(witness_box)
            witness = box_monomial(witness_box)
            product = box_monomial(first).lcm(box_monomial(second))
            if witness_diag >= k or not witness.divides(product):
                raise CertificateFailure(
                    f"no earlier-class divisor for pair {first}, {second}"
                )
            witnesses.append(
                AraWitness(box_monomial(first), box_monomial(second), witness_diag, witness)
            )
    return AraCertificate(classes, tuple(witnesses))


def _lowered_box(a: Box, b: Box) -> Box:
    """Replace, at the first position where a and b differ, the larger
    coordinate by the smaller; the result stays in the diagram by closure."""
    for i, (x, y) in enumerate(zip(a, b)):
        if x != y:
            source = a if x > y else b
            return source[:i] + (min(x, y),) + source[i + 1 :]
    raise ValueError("boxes are equal")


def betti_bounds_check(table: BettiTable, c: int, n: int, depth: int) -> bool:
    """betti_cm(c,p,j) <= beta_j <= betti_cm(n-depth,p,j) for every j."""
    p = table.generation_degree
    upper_c = n - depth
    return all(
        betti_cm(c, p, j) <= table.beta(j) <= betti_cm(upper_c, p, j)
        for j in range(1, max(table.projdim, upper_c) + 1)
    )


def scaled_resolution_type(
    degrees, betti, alpha: int
) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Substituting every variable by its alpha-th power multiplies the pure
    type by alpha and leaves the Betti numbers unchanged."""
    degrees = tuple(degrees)
    betti = tuple(betti)
    if alpha < 1:
        raise ValueError("alpha must be positive")
    if any(a >= b for a, b in zip(degrees, degrees[1:])):
        raise ValueError("degrees must be strictly increasing")
    return tuple(a * alpha for a in degrees), betti


@dataclass(frozen=True)
class PureCodim2:
    beta1: int
    beta2: int
    c: int | None
    alpha: int | None


def pure_codim2_betti(a1: int, a2: int, beta0: int) -> PureCodim2 | None:
    """Betti numbers forced on a codimension-2 Cohen-Macaulay module with pure
    type (0, a1, a2): beta1 = a2 beta0/(a2-a1), beta2 = a1 beta0/(a2-a1).
    Returns None when those quotients are not integers."""
    if not 0 < a1 < a2:
        raise ValueError("need 0 < a1 < a2")
    gap = a2 - a1
    if (a2 * beta0) % gap or (a1 * beta0) % gap:
        return None
    c = alpha = None
    if a1 % gap == 0:
        alpha = gap
        c = a1 // gap
    return PureCodim2(a2 * beta0 // gap, a1 * beta0 // gap, c, alpha)
