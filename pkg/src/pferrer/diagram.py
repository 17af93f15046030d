"""Recursive staircase partitions in p dimensions.

A depth-1 partition is a positive integer lambda and stands for the interval
of boxes (1),...,(lambda).  A depth-p partition is a weakly decreasing
sequence of depth-(p-1) partitions; its boxes are the boxes of the i-th child
with the slice index i appended as the last coordinate.  Box sets are always
downward closed in (N*)^p.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from .errors import (
    DepthMismatch,
    NonPositiveLeaf,
    NonUniformDepth,
    NotDecreasing,
    SingletonDiagram,
    SizeLimitExceeded,
)
from .limits import DEFAULT_LIMITS, Limits

Box = tuple[int, ...]

LESS = "less"
EQUAL = "equal"
GREATER = "greater"
INCOMPARABLE = "incomparable"


@dataclass(frozen=True)
class PFerrerPartition:
    """Immutable partition tree; ``value`` is set on leaves, ``children`` on nodes."""

    depth: int
    value: int | None = None
    children: tuple["PFerrerPartition", ...] = ()

    @staticmethod
    def leaf(value: int) -> "PFerrerPartition":
        return PFerrerPartition(depth=1, value=value)

    @staticmethod
    def node(children) -> "PFerrerPartition":
        children = tuple(children)
        return PFerrerPartition(depth=children[0].depth + 1, children=children)

    @property
    def is_leaf(self) -> bool:
        return self.depth == 1

    def to_tree(self):
        """Nested int/list form matching the JSON input format."""
        if self.is_leaf:
            return self.value
        return [child.to_tree() for child in self.children]

    def __str__(self):
        return str(self.to_tree())


def validate(tree, limits: Limits = DEFAULT_LIMITS) -> PFerrerPartition:
    """Check a raw nested integer tree and wrap it; never reorders the input.

    Errors carry the JSON-path of the offending node, e.g. "$[1][0]".
    """
    part = _build(tree, "$")
    _check_decreasing(part, "$")
    if part.depth > limits.max_depth:
        raise SizeLimitExceeded(f"depth {part.depth} exceeds limit {limits.max_depth}")
    count = box_count(part)
    if count > limits.max_boxes:
        raise SizeLimitExceeded(f"{count} boxes exceed limit {limits.max_boxes}")
    return part


def _build(tree, path: str) -> PFerrerPartition:
    if isinstance(tree, bool):
        raise NonUniformDepth("expected integer or list, got bool", path)
    if isinstance(tree, int):
        if tree < 1:
            raise NonPositiveLeaf(f"leaf value {tree} is not positive", path)
        return PFerrerPartition.leaf(tree)
    if isinstance(tree, (list, tuple)):
        if not tree:
            raise NonUniformDepth("empty sequence", path)
        children = [_build(sub, f"{path}[{i}]") for i, sub in enumerate(tree)]
        depths = {child.depth for child in children}
        if len(depths) != 1:
            raise NonUniformDepth("children have mixed depths", path)
        return PFerrerPartition.node(children)
    raise NonUniformDepth(f"expected integer or list, got {type(tree).__name__}", path)


def _check_decreasing(part: PFerrerPartition, path: str) -> None:
    if part.is_leaf:
        return
    for i, child in enumerate(part.children):
        _check_decreasing(child, f"{path}[{i}]")
    for i in range(len(part.children) - 1):
        if not _ge(part.children[i], part.children[i + 1]):
            raise NotDecreasing(
                f"child {i + 1} is not dominated by child {i}", f"{path}[{i + 1}]"
            )


def _ge(a: PFerrerPartition, b: PFerrerPartition) -> bool:
    """Recursive dominance order: a >= b."""
    if a.is_leaf:
        return a.value >= b.value
    if len(a.children) < len(b.children):
        return False
    return all(_ge(a.children[i], b.children[i]) for i in range(len(b.children)))


def compare(a: PFerrerPartition, b: PFerrerPartition) -> str:
    """One of "less", "equal", "greater", "incomparable"; agrees with box containment."""
    if a.depth != b.depth:
        raise DepthMismatch(f"depths {a.depth} and {b.depth} differ")
    ge, le = _ge(a, b), _ge(b, a)
    if ge and le:
        return EQUAL
    if ge:
        return GREATER
    if le:
        return LESS
    return INCOMPARABLE


@lru_cache(maxsize=None)
def box_count(part: PFerrerPartition) -> int:
    if part.is_leaf:
        return part.value
    return sum(box_count(child) for child in part.children)


@lru_cache(maxsize=None)
def boxes(part: PFerrerPartition) -> frozenset[Box]:
    """The finite downward-closed subset of (N*)^p encoded by the partition."""
    if part.is_leaf:
        return frozenset((i,) for i in range(1, part.value + 1))
    out = set()
    for i, child in enumerate(part.children, start=1):
        for eta in boxes(child):
            out.add(eta + (i,))
    return frozenset(out)


def diagonal_index(box: Box) -> int:
    """Diagonal of a box: sum of coordinates minus p plus 1."""
    return sum(box) - len(box) + 1


def full_diagonal_size(k: int, p: int) -> int:
    """Number of boxes in the k-th diagonal of the whole ambient space (N*)^p."""
    return math.comb(k + p - 2, p - 1)


@dataclass(frozen=True)
class DiagonalProfile:
    """Diagonal census: counts[k-1] boxes lie in diagonal k."""

    counts: tuple[int, ...]
    depth: int

    @property
    def delta(self) -> int:
        """Index of the last nonempty diagonal."""
        return len(self.counts)

    @property
    def df(self) -> int:
        """Number of leading diagonals that are completely filled."""
        k = 0
        while k < len(self.counts) and self.counts[k] == full_diagonal_size(k + 1, self.depth):
            k += 1
        return k

    def count(self, k: int) -> int:
        if 1 <= k <= len(self.counts):
            return self.counts[k - 1]
        return 0


def diagonal_profile(part: PFerrerPartition) -> DiagonalProfile:
    tally: dict[int, int] = {}
    for box in boxes(part):
        k = diagonal_index(box)
        tally[k] = tally.get(k, 0) + 1
    delta = max(tally)
    return DiagonalProfile(tuple(tally.get(k, 0) for k in range(1, delta + 1)), part.depth)


def full_diagram(p: int, c: int, limits: Limits = DEFAULT_LIMITS) -> PFerrerPartition:
    """The diagram holding every box of (N*)^p with diagonal index at most c."""
    if p < 1 or c < 1:
        raise ValueError("p and c must be positive")
    if p > limits.max_depth:
        raise SizeLimitExceeded(f"depth {p} exceeds limit {limits.max_depth}")
    total = math.comb(c + p - 1, p)
    if total > limits.max_boxes:
        raise SizeLimitExceeded(f"{total} boxes exceed limit {limits.max_boxes}")
    return _full(p, c)


def _full(p: int, c: int) -> PFerrerPartition:
    if p == 1:
        return PFerrerPartition.leaf(c)
    return PFerrerPartition.node(_full(p - 1, c - i) for i in range(c))


def partition_from_boxes(box_set, depth: int) -> PFerrerPartition:
    """Rebuild the partition tree of a nonempty downward-closed box set."""
    box_set = set(box_set)
    if not box_set:
        raise ValueError("empty box set")
    if depth == 1:
        return PFerrerPartition.leaf(max(b[0] for b in box_set))
    slices: dict[int, set[Box]] = {}
    for box in box_set:
        slices.setdefault(box[-1], set()).add(box[:-1])
    m = max(slices)
    if sorted(slices) != list(range(1, m + 1)):
        raise ValueError("box set is not downward closed in the last coordinate")
    return PFerrerPartition.node(
        partition_from_boxes(slices[i], depth - 1) for i in range(1, m + 1)
    )


def remove_last_diagonal_box(part: PFerrerPartition) -> tuple[PFerrerPartition, Box]:
    """Drop one box from the last diagonal, returning the smaller diagram and the box.

    Ties are broken by taking the lexicographically largest box under
    (alpha_1, ..., alpha_p).  Any last-diagonal box is componentwise maximal,
    so the remaining set is still downward closed.
    """
    all_boxes = boxes(part)
    if len(all_boxes) < 2:
        raise SingletonDiagram("cannot remove the only box")
    delta = diagonal_profile(part).delta
    removed = max(b for b in all_boxes if diagonal_index(b) == delta)
    rest = set(all_boxes)
    rest.remove(removed)
    return partition_from_boxes(rest, part.depth), removed
