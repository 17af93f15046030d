"""Definition-level verification tools for monomial ideals.

Graded Betti numbers are computed from scratch: for every multidegree in the
lcm lattice of the generators, the homology of the corresponding upper Koszul
simplicial complex is computed by exact rank of boundary matrices.  Nothing
here knows about diagrams or closed formulas, so agreement with the formula
modules is a genuine two-route check.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass

from .errors import SizeLimitExceeded
from .ideal import MonomialIdeal
from .limits import DEFAULT_LIMITS, Limits


def _submask_faces(maximal: list[int]) -> set[int]:
    faces: set[int] = set()
    for top in maximal:
        sub = top
        while True:
            faces.add(sub)
            if sub == 0:
                break
            sub = (sub - 1) & top
    return faces


def _bits(mask: int) -> list[int]:
    out = []
    v = 0
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return out


def _collapse_free_pairs(faces: set[int], vertex_count: int) -> set[int]:
    """Remove free pairs (f, g) where g is the only face properly containing f.

    Each removal is an elementary collapse, so the homotopy type is preserved;
    collapsing a lone point down to the void complex is harmless here because
    both have vanishing reduced homology.
    """
    bits = [1 << v for v in range(vertex_count)]
    queue = deque(faces)
    while queue:
        f = queue.popleft()
        if f not in faces:
            continue
        coface = None
        extra = False
        for b in bits:
            if not (f & b) and (f | b) in faces:
                if coface is not None:
                    extra = True
                    break
                coface = f | b
        if extra or coface is None:
            continue
        faces.discard(f)
        faces.discard(coface)
        for removed in (f, coface):
            for b in bits:
                if removed & b:
                    sub = removed & ~b
                    if sub in faces:
                        queue.append(sub)
    return faces


def _rank(columns, modulus: int | None) -> int:
    """Rank of a sparse matrix given as columns {row: value}; exact over the
    rationals when modulus is None, else over the prime field.

    Pivot columns are kept with their minimal row as pivot, so reducing a
    column strictly increases its minimal row and terminates.  Over the
    rationals the arithmetic stays in the integers: unit pivots subtract
    directly and non-unit pivots use cross-multiplication followed by a gcd
    renormalization of the column.
    """
    pivots: dict[int, dict[int, int]] = {}
    rank = 0
    for raw in sorted(columns, key=len):
        col = dict(raw)
        if modulus is not None:
            col = {r: v % modulus for r, v in col.items() if v % modulus}
        while col:
            row = min(col)
            lead = col[row]
            pivot = pivots.get(row)
            if pivot is None:
                if modulus is None:
                    if lead < 0:
                        col = {r: -v for r, v in col.items()}
                else:
                    inv = pow(lead, modulus - 2, modulus)
                    col = {r: (v * inv) % modulus for r, v in col.items()}
                pivots[row] = col
                rank += 1
                break
            factor = col.pop(row)
            if modulus is not None:
                for r, v in pivot.items():
                    if r == row:
                        continue
                    new = (col.get(r, 0) - factor * v) % modulus
                    if new:
                        col[r] = new
                    else:
                        col.pop(r, None)
                continue
            pv = pivot[row]
            if pv == 1:
                for r, v in pivot.items():
                    if r == row:
                        continue
                    new = col.get(r, 0) - factor * v
                    if new:
                        col[r] = new
                    else:
                        col.pop(r, None)
            else:
                scaled = {r: v * pv for r, v in col.items()}
                for r, v in pivot.items():
                    if r == row:
                        continue
                    new = scaled.get(r, 0) - factor * v
                    if new:
                        scaled[r] = new
                    else:
                        scaled.pop(r, None)
                if scaled:
                    g = 0
                    for v in scaled.values():
                        g = math.gcd(g, v)
                    col = {r: v // g for r, v in scaled.items()}
                else:
                    col = {}
    return rank


def _boundary_columns(sources: list[int], target_index: dict[int, int]):
    for face in sources:
        col = {}
        for position, v in enumerate(_bits(face)):
            row = target_index[face & ~(1 << v)]
            col[row] = 1 if position % 2 == 0 else -1
        yield col


def _homology_of_faces(faces: set[int], modulus: int | None) -> dict[int, int]:
    """Reduced homology ranks by dimension of a complex given by all its faces
    as bitmasks (the empty face included when the complex is nonvoid)."""
    if not faces:
        return {}
    by_size: dict[int, list[int]] = {}
    for f in faces:
        by_size.setdefault(f.bit_count(), []).append(f)
    top = max(by_size)
    boundary_rank = {}
    for size in range(1, top + 1):
        sources = by_size.get(size, [])
        targets = by_size.get(size - 1, [])
        index = {mask: i for i, mask in enumerate(sorted(targets))}
        boundary_rank[size] = _rank(_boundary_columns(sorted(sources), index), modulus)
    ranks = {}
    for size in range(top + 1):
        h = (
            len(by_size.get(size, []))
            - boundary_rank.get(size, 0)
            - boundary_rank.get(size + 1, 0)
        )
        if h:
            ranks[size - 1] = h
    return ranks


@dataclass(frozen=True)
class SimplicialComplex:
    """Abstract complex on integer vertices, stored by maximal faces.

    The void complex (no faces at all) and the empty complex (only the empty
    face) are distinguished: the latter has reduced homology in dimension -1.
    """

    nvertices: int
    maximal: tuple[int, ...]

    @staticmethod
    def from_maximal_faces(nvertices: int, faces) -> "SimplicialComplex":
        masks = set()
        for face in faces:
            mask = 0
            for v in face:
                mask |= 1 << v
            masks.add(mask)
        maximal = tuple(
            sorted(m for m in masks if not any(o != m and o & m == m for o in masks))
        )
        return SimplicialComplex(nvertices, maximal)

    @property
    def is_void(self) -> bool:
        return not self.maximal

    def faces(self) -> set[int]:
        return _submask_faces(list(self.maximal))

    def euler_characteristic(self) -> int:
        """Reduced Euler characteristic (the empty face counts negatively)."""
        return sum((-1) ** (f.bit_count() - 1) for f in self.faces())

    def reduced_homology_ranks(self, modulus: int | None = None) -> dict[int, int]:
        return _homology_of_faces(self.faces(), modulus)


def _strong_collapse(
    vertices: frozenset, sets: tuple[frozenset, ...]
) -> tuple[frozenset, tuple[frozenset, ...]] | None:
    """Iteratively delete dominated vertices; None means the complex became
    visibly contractible (a cone or a full simplex), so all reduced homology
    vanishes.  Deleting a vertex whose maximal-face incidences are covered by
    another vertex preserves the homotopy type.
    """
    sets = tuple(set(s) for s in sets)
    vertices = set(vertices)
    while True:
        sets = [s for s in sets if not any(o is not s and o < s for o in sets)]
        unique = []
        for s in sets:
            if s not in unique:
                unique.append(s)
        sets = unique
        if any(not s for s in sets):
            return None
        covered = set().union(*sets) if sets else set()
        if covered != vertices:
            return None
        incidence = {
            v: frozenset(i for i, s in enumerate(sets) if v in s) for v in vertices
        }
        dominated = None
        for v in sorted(vertices, reverse=True):
            for u in sorted(vertices):
                if u != v and incidence[u] <= incidence[v]:
                    dominated = v
                    break
            if dominated is not None:
                break
        if dominated is None:
            return frozenset(vertices), tuple(frozenset(s) for s in sets)
        vertices.discard(dominated)
        for s in sets:
            s.discard(dominated)


def _avoidance_homology(
    vertices: frozenset, sets: tuple[frozenset, ...], modulus: int | None
) -> dict[int, int]:
    """Homology of the complex whose faces are the subsets of ``vertices``
    disjoint from at least one of the given sets."""
    core = _strong_collapse(vertices, sets)
    if core is None:
        return {}
    core_vertices, core_sets = core
    order = {v: i for i, v in enumerate(sorted(core_vertices))}
    full = (1 << len(order)) - 1
    maximal = []
    for s in core_sets:
        mask = full
        for v in s:
            mask &= ~(1 << order[v])
        maximal.append(mask)
    faces = _collapse_free_pairs(_submask_faces(maximal), len(order))
    return _homology_of_faces(faces, modulus)


@dataclass(frozen=True)
class GradedBettiTable:
    """Entries (homological index of the quotient, internal degree, value)."""

    entries: tuple[tuple[int, int, int], ...]

    @staticmethod
    def of(data: dict[tuple[int, int], int]) -> "GradedBettiTable":
        return GradedBettiTable(
            tuple((j, a, v) for (j, a), v in sorted(data.items()) if v)
        )

    def beta(self, j: int, a: int | None = None) -> int:
        if a is None:
            return sum(v for jj, _, v in self.entries if jj == j)
        return sum(v for jj, aa, v in self.entries if jj == j and aa == a)

    @property
    def projdim(self) -> int:
        return max((j for j, _, _ in self.entries), default=0)

    def totals(self) -> tuple[int, ...]:
        return tuple(self.beta(j) for j in range(1, self.projdim + 1))

    def degrees(self, j: int) -> set[int]:
        return {a for jj, a, _ in self.entries if jj == j}

    def is_linear(self, p: int) -> bool:
        """All entries sit in internal degree j + p - 1."""
        return all(a == j + p - 1 for j, a, _ in self.entries)

    def to_json(self) -> list[dict]:
        return [{"j": j, "degree": a, "beta": v} for j, a, v in self.entries]


def _lcm_lattice(gen_vectors: list[tuple[int, ...]]) -> set[tuple[int, ...]]:
    lattice = set(gen_vectors)
    frontier = list(lattice)
    while frontier:
        fresh = []
        for x in frontier:
            for g in gen_vectors:
                y = tuple(map(max, x, g))
                if y not in lattice:
                    lattice.add(y)
                    fresh.append(y)
        frontier = fresh
    return lattice


def graded_betti_brute(
    ideal: MonomialIdeal,
    limits: Limits = DEFAULT_LIMITS,
    modulus: int | None = None,
) -> GradedBettiTable:
    """Graded Betti numbers of S/I by upper Koszul homology over the lcm lattice.

    For a multidegree alpha, faces are the subsets S of supp(alpha) with
    x^alpha / x^S still in I, and beta_{j, alpha}(S/I) is the reduced homology
    rank of that complex in dimension j - 2.  Results for multidegrees with
    the same generator pattern (up to order-preserving relabeling inside each
    variable group) are computed once.
    """
    variables = ideal.ambient
    if len(variables) > limits.oracle_max_variables:
        raise SizeLimitExceeded(
            f"{len(variables)} variables exceed oracle limit {limits.oracle_max_variables}"
        )
    if len(ideal.generators) > limits.oracle_max_generators:
        raise SizeLimitExceeded(
            f"{len(ideal.generators)} generators exceed oracle limit "
            f"{limits.oracle_max_generators}"
        )
    gen_vectors = [
        tuple(g.exponent(v) for v in variables) for g in ideal.generators
    ]
    if not gen_vectors:
        return GradedBettiTable(())
    entries: dict[tuple[int, int], int] = {}
    memo: dict = {}
    for alpha in _lcm_lattice(gen_vectors):
        support = frozenset(i for i, e in enumerate(alpha) if e)
        critical = []
        for g in gen_vectors:
            if all(ge <= ae for ge, ae in zip(g, alpha)):
                critical.append(frozenset(v for v in support if g[v] == alpha[v]))
        if any(not u for u in critical):
            continue  # some generator avoids the support entirely: full simplex
        if frozenset().union(*critical) != support:
            continue  # an untouched vertex cones the complex off
        key = _pattern_key(support, critical, variables)
        if key in memo:
            ranks = memo[key]
        else:
            ranks = _avoidance_homology(support, tuple(critical), modulus)
            memo[key] = ranks
        degree = sum(alpha)
        for dim, value in ranks.items():
            j = dim + 2
            entries[(j, degree)] = entries.get((j, degree), 0) + value
    return GradedBettiTable.of(entries)


def _pattern_key(support, critical, variables):
    groups: dict[int, list[int]] = {}
    for v in support:
        groups.setdefault(variables[v].group, []).append(v)
    rank = {}
    for group, members in groups.items():
        for r, v in enumerate(sorted(members, key=lambda i: variables[i].index)):
            rank[v] = (group, r)
    return frozenset(frozenset(rank[v] for v in u) for u in critical)


def hilbert_function_truncated(
    ideal: MonomialIdeal, max_degree: int, limits: Limits = DEFAULT_LIMITS
) -> tuple[int, ...]:
    """Dimensions of (S/I)_d for d = 0..max_degree, by counting the monomials
    in the ambient variables divisible by no generator."""
    if max_degree > limits.truncation_max_degree:
        raise SizeLimitExceeded(
            f"degree {max_degree} exceeds truncation limit {limits.truncation_max_degree}"
        )
    variables = ideal.ambient
    n = len(variables)
    gens = [tuple(g.exponent(v) for v in variables) for g in ideal.generators]
    if any(sum(g) == 0 for g in gens):
        return (0,) * (max_degree + 1)
    all_active = (1 << len(gens)) - 1
    # stay_mask[i][e]: generators whose exponent on variable i is at most e
    stay_mask = [
        [
            sum(1 << k for k, g in enumerate(gens) if g[i] <= e)
            for e in range(max_degree + 1)
        ]
        for i in range(n)
    ]
    memo: dict = {}

    def free_counts(i: int, budget: int) -> tuple[int, ...]:
        remaining = n - i
        if remaining == 0:
            return (1,) + (0,) * budget
        return tuple(
            math.comb(s + remaining - 1, remaining - 1) for s in range(budget + 1)
        )

    def count(i: int, budget: int, active: int) -> tuple[int, ...]:
        if active == 0:
            return free_counts(i, budget)
        if i == n:
            return (0,) * (budget + 1)
        key = (i, budget, active)
        cached = memo.get(key)
        if cached is not None:
            return cached
        total = [0] * (budget + 1)
        for e in range(budget + 1):
            sub = count(i + 1, budget - e, active & stay_mask[i][e])
            for s, value in enumerate(sub):
                total[e + s] += value
        result = tuple(total)
        memo[key] = result
        return result

    return count(0, max_degree, all_active)


def intersect_monomial(a: MonomialIdeal, b: MonomialIdeal) -> MonomialIdeal:
    """Intersection via pairwise lcms, minimalized."""
    gens = [g.lcm(h) for g in a.generators for h in b.generators]
    return MonomialIdeal.make(gens, ambient=tuple(set(a.ambient) | set(b.ambient)))
