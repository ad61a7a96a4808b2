"""Colored partitions over the eight-color mode alphabet.

A part is a pair ``(color, degree)`` standing for the mode X_color(degree).
Parts are ordered by degree first and, at equal degree, by *descending*
color index (X1 is the greatest color, X8 the least).  A colored partition
is a multiset of parts, stored as a tuple sorted in that part order.

The module also owns the strict total order on partitions used everywhere
for leading terms, the forbidden-factor set (54 quadratic families plus
two cubic families per degree), the difference-condition enumeration of
the spanning ideal, and the embedding counts behind the coloring totals.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import total_ordering

from .algebra import COLORS, WEIGHT, Weight

Part = tuple[int, int]  # (color, degree)


def part_key(p: Part) -> tuple[int, int]:
    return (p[1], -p[0])


def sort_parts(parts) -> tuple[Part, ...]:
    return tuple(sorted(parts, key=part_key))


def parts_degree(parts: tuple[Part, ...]) -> int:
    return sum(d for _, d in parts)


def parts_weight(parts: tuple[Part, ...]) -> Weight:
    a1 = sum(WEIGHT[c].a1 for c, _ in parts)
    a2 = sum(WEIGHT[c].a2 for c, _ in parts)
    return Weight(a1, a2)


def parts_shape(parts: tuple[Part, ...]) -> tuple[int, ...]:
    return tuple(d for _, d in parts)


def shape_compare(s: tuple[int, ...], t: tuple[int, ...]) -> int:
    """Order on plain partitions: longer < ; then smaller total < ; then the
    positional scan from the top part downward, smaller degree first."""
    if s == t:
        return 0
    if len(s) != len(t):
        return -1 if len(s) > len(t) else 1
    ds, dt = sum(s), sum(t)
    if ds != dt:
        return -1 if ds < dt else 1
    for a, b in zip(reversed(s), reversed(t)):
        if a != b:
            return -1 if a < b else 1
    return 0


def parts_compare(p: tuple[Part, ...], q: tuple[Part, ...]) -> int:
    if p == q:
        return 0
    c = shape_compare(parts_shape(p), parts_shape(q))
    if c:
        return c
    # equal shapes: reverse positional scan on colors, greater index first
    for (ca, _), (cb, _) in zip(reversed(p), reversed(q)):
        if ca != cb:
            return -1 if ca > cb else 1
    return 0


@total_ordering
class ColoredPartition:
    """Immutable multiset of modes; ``<`` is the strict monomial order."""

    __slots__ = ("parts",)

    def __init__(self, parts=()):
        object.__setattr__(self, "parts", sort_parts(parts))

    def __setattr__(self, *_):
        raise AttributeError("ColoredPartition is immutable")

    # -- basic structure ---------------------------------------------------

    @property
    def degree(self) -> int:
        return parts_degree(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    def weight(self) -> Weight:
        return parts_weight(self.parts)

    def shape(self) -> tuple[int, ...]:
        return parts_shape(self.parts)

    def multiplicities(self) -> dict[Part, int]:
        out: dict[Part, int] = {}
        for p in self.parts:
            out[p] = out.get(p, 0) + 1
        return out

    def translate(self, t: int) -> "ColoredPartition":
        return ColoredPartition((c, d + t) for c, d in self.parts)

    # -- monoid / lattice ops ---------------------------------------------

    def __mul__(self, other: "ColoredPartition") -> "ColoredPartition":
        return ColoredPartition(self.parts + other.parts)

    def union(self, other: "ColoredPartition") -> "ColoredPartition":
        mine, theirs = self.multiplicities(), other.multiplicities()
        keys = set(mine) | set(theirs)
        parts = []
        for k in keys:
            parts.extend([k] * max(mine.get(k, 0), theirs.get(k, 0)))
        return ColoredPartition(parts)

    def intersection(self, other: "ColoredPartition") -> "ColoredPartition":
        mine, theirs = self.multiplicities(), other.multiplicities()
        parts = []
        for k in set(mine) & set(theirs):
            parts.extend([k] * min(mine[k], theirs[k]))
        return ColoredPartition(parts)

    def contains(self, other: "ColoredPartition") -> bool:
        mine, theirs = self.multiplicities(), other.multiplicities()
        return all(mine.get(k, 0) >= m for k, m in theirs.items())

    def quotient(self, other: "ColoredPartition") -> "ColoredPartition":
        if not self.contains(other):
            raise ValueError(f"{other} is not contained in {self}")
        mine = self.multiplicities()
        for k, m in other.multiplicities().items():
            mine[k] -= m
        parts = []
        for k, m in mine.items():
            parts.extend([k] * m)
        return ColoredPartition(parts)

    # -- order / identity ----------------------------------------------------

    def __eq__(self, other) -> bool:
        return isinstance(other, ColoredPartition) and self.parts == other.parts

    def __hash__(self) -> int:
        return hash(self.parts)

    def __lt__(self, other: "ColoredPartition") -> bool:
        return parts_compare(self.parts, other.parts) < 0

    def __repr__(self) -> str:
        return f"ColoredPartition({format_partition(self)!r})"


EMPTY = ColoredPartition()


def compare(p: ColoredPartition, q: ColoredPartition) -> int:
    return parts_compare(p.parts, q.parts)


# --- plain-text format ------------------------------------------------------
#
# One partition per line, parts as color:degree, e.g. "3:-2 4:-1 1:-1".
# The empty partition is written as "-".


def format_partition(p: ColoredPartition) -> str:
    if not p.parts:
        return "-"
    return " ".join(f"{c}:{d}" for c, d in p.parts)


def parse_partition(text: str) -> ColoredPartition:
    text = text.strip()
    if not text or text == "-":
        return EMPTY
    parts = []
    for token in text.split():
        c, d = token.split(":")
        parts.append((int(c), int(d)))
    return ColoredPartition(parts)


# --- the forbidden-factor set ------------------------------------------------
#
# Two 27-element color lists, one for equal-degree pairs X_a(j)X_b(j) and one
# for adjacent-degree pairs X_a(j-1)X_b(j), plus two cubic families.

SAME_DEGREE_COLOR_PAIRS: tuple[tuple[int, int], ...] = (
    (1, 1), (2, 1), (2, 2), (3, 1), (3, 2), (3, 3), (4, 2), (4, 3), (4, 4),
    (5, 1), (5, 2), (5, 3), (5, 4), (5, 5), (6, 2), (6, 4), (6, 5), (6, 6),
    (7, 3), (7, 4), (7, 5), (7, 6), (7, 7), (8, 5), (8, 6), (8, 7), (8, 8),
)

ADJACENT_COLOR_PAIRS: tuple[tuple[int, int], ...] = (
    (1, 1), (1, 2), (1, 3), (1, 4), (1, 5), (1, 6), (1, 7), (1, 8),
    (2, 2), (2, 4), (2, 6), (2, 7), (2, 8),
    (3, 3), (3, 5), (3, 6), (3, 7), (3, 8),
    (4, 7), (4, 8),
    (5, 6), (5, 8),
    (6, 6), (6, 8),
    (7, 7), (7, 8),
    (8, 8),
)

QUAD_SAME = "quad_same"
QUAD_ADJACENT = "quad_adjacent"
CUBIC_A = "cubic_a"
CUBIC_B = "cubic_b"


@dataclass(frozen=True, order=True)
class RelationLabel:
    """A forbidden factor: quadratic color pair or one of the two cubics,
    anchored at degree j.  Quadratic kinds carry their color pair; the cubic
    color patterns are fixed."""

    kind: str
    colors: tuple[int, ...]
    j: int

    def partition(self) -> ColoredPartition:
        j = self.j
        if self.kind == QUAD_SAME:
            c1, c2 = self.colors
            return ColoredPartition(((c1, j), (c2, j)))
        if self.kind == QUAD_ADJACENT:
            c1, c2 = self.colors
            return ColoredPartition(((c1, j - 1), (c2, j)))
        if self.kind == CUBIC_A:
            return ColoredPartition(((3, j - 1), (4, j), (1, j)))
        if self.kind == CUBIC_B:
            return ColoredPartition(((8, j - 1), (4, j - 1), (6, j)))
        raise ValueError(f"unknown kind {self.kind}")

    def degree(self) -> int:
        return self.partition().degree

    def is_cubic(self) -> bool:
        return self.kind in (CUBIC_A, CUBIC_B)

    def translate(self, t: int) -> "RelationLabel":
        return RelationLabel(self.kind, self.colors, self.j + t)


def quad_same_label(c1: int, c2: int, j: int) -> RelationLabel:
    return RelationLabel(QUAD_SAME, (c1, c2), j)


def quad_adjacent_label(c1: int, c2: int, j: int) -> RelationLabel:
    return RelationLabel(QUAD_ADJACENT, (c1, c2), j)


def cubic_a_label(j: int) -> RelationLabel:
    return RelationLabel(CUBIC_A, (), j)


def cubic_b_label(j: int) -> RelationLabel:
    return RelationLabel(CUBIC_B, (), j)


def relation_set(j_min: int, j_max: int) -> list[RelationLabel]:
    """All forbidden factors anchored at j_min <= j <= j_max (56 per j)."""
    if j_min > j_max:
        raise ValueError("empty anchor range")
    out = []
    for j in range(j_min, j_max + 1):
        out.extend(quad_same_label(c1, c2, j) for c1, c2 in SAME_DEGREE_COLOR_PAIRS)
        out.extend(quad_adjacent_label(c1, c2, j) for c1, c2 in ADJACENT_COLOR_PAIRS)
        out.append(cubic_a_label(j))
        out.append(cubic_b_label(j))
    return out


def quadratic_leading_labels(n: int) -> list[RelationLabel]:
    """The 27 quadratic leading-term labels whose partitions have degree n,
    taken from the equal-degree list for even n and the adjacent-degree
    list for odd n."""
    if n % 2 == 0:
        j = n // 2
        return [quad_same_label(c1, c2, j) for c1, c2 in SAME_DEGREE_COLOR_PAIRS]
    j = (n + 1) // 2
    return [quad_adjacent_label(c1, c2, j) for c1, c2 in ADJACENT_COLOR_PAIRS]


def _label_divides(label: RelationLabel, mult: dict[Part, int]) -> bool:
    for part, m in label.partition().multiplicities().items():
        if mult.get(part, 0) < m:
            return False
    return True


def quadratic_embeddings(p: ColoredPartition) -> list[RelationLabel]:
    """All quadratic leading-term labels whose partition divides p."""
    mult = p.multiplicities()
    degrees = sorted({d for _, d in p.parts})
    found = []
    for j in degrees:
        for c1, c2 in SAME_DEGREE_COLOR_PAIRS:
            lab = quad_same_label(c1, c2, j)
            if _label_divides(lab, mult):
                found.append(lab)
    for j in degrees:
        for c1, c2 in ADJACENT_COLOR_PAIRS:
            lab = quad_adjacent_label(c1, c2, j + 1)
            if _label_divides(lab, mult):
                found.append(lab)
    return found


def cubic_embeddings(p: ColoredPartition) -> list[RelationLabel]:
    mult = p.multiplicities()
    degrees = sorted({d for _, d in p.parts})
    found = []
    for j in degrees:
        for make in (cubic_a_label, cubic_b_label):
            for anchor in (j, j + 1):
                lab = make(anchor)
                if _label_divides(lab, mult) and lab not in found:
                    found.append(lab)
    return found


def embeddings(p: ColoredPartition, include_cubics: bool = True):
    """The embedded forbidden factors of p and the excess count
    max(#embeddings - 1, 0)."""
    found = quadratic_embeddings(p)
    if include_cubics:
        found.extend(cubic_embeddings(p))
    n = max(len(found) - 1, 0)
    return found, n


def embedding_excess(p: ColoredPartition) -> int:
    """Quadratic-only excess count used by the coloring totals."""
    return max(len(quadratic_embeddings(p)) - 1, 0)


def satisfies_difference_conditions(p: ColoredPartition) -> bool:
    """True iff no forbidden factor divides p as a multiset."""
    if any(d >= 0 for _, d in p.parts):
        raise ValueError("difference conditions apply to strictly negative modes")
    mult = p.multiplicities()
    by_degree: dict[int, list[int]] = {}
    for c, d in p.parts:
        by_degree.setdefault(d, []).append(c)
    for d, colors in by_degree.items():
        colorset = set(colors)
        for c1, c2 in SAME_DEGREE_COLOR_PAIRS:
            if c1 == c2:
                if mult.get((c1, d), 0) >= 2:
                    return False
            elif c1 in colorset and c2 in colorset:
                return False
        upper = by_degree.get(d + 1)
        if upper:
            upperset = set(upper)
            for c1, c2 in ADJACENT_COLOR_PAIRS:
                if c1 in colorset and c2 in upperset:
                    return False
            if 3 in colorset and 4 in upperset and 1 in upperset:
                return False
            if 8 in colorset and 4 in colorset and 6 in upperset:
                return False
    return True


# --- enumeration of the spanning ideal ---------------------------------------
#
# Subsets of colors sharing one degree are constrained by the equal-degree
# list alone (repeats are excluded by its diagonal), so the per-degree states
# are the independent sets of the 19-edge conflict graph.  Consecutive
# degrees are coupled by the adjacent list and the two cubic patterns.

_SAME_EDGES = frozenset(
    (c1, c2) for c1, c2 in SAME_DEGREE_COLOR_PAIRS if c1 != c2
)


def _independent_color_sets() -> tuple[frozenset[int], ...]:
    out = []
    for r in range(0, 9):
        for combo in itertools.combinations(COLORS, r):
            s = frozenset(combo)
            if all(
                (max(a, b), min(a, b)) not in _SAME_EDGES
                for a, b in itertools.combinations(combo, 2)
            ):
                out.append(s)
    return tuple(out)


INDEPENDENT_COLOR_SETS = _independent_color_sets()


def compatible_layers(deeper: frozenset[int], shallower: frozenset[int]) -> bool:
    """May colors `deeper` sit at degree j-1 below colors `shallower` at j?"""
    for c1, c2 in ADJACENT_COLOR_PAIRS:
        if c1 in deeper and c2 in shallower:
            return False
    if 3 in deeper and 4 in shallower and 1 in shallower:
        return False
    if 8 in deeper and 4 in deeper and 6 in shallower:
        return False
    return True


def enumerate_ideal(n: int, weight: Weight | None = None) -> list[ColoredPartition]:
    """All difference-condition partitions of total degree -n, sorted."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    results: list[ColoredPartition] = []
    layers = INDEPENDENT_COLOR_SETS

    def rec(depth: int, budget: int, shallower: frozenset[int], acc: list[Part]):
        if budget == 0:
            p = ColoredPartition(acc)
            if weight is None or p.weight() == weight:
                results.append(p)
            return
        if depth > budget:
            return
        for layer in layers:
            cost = depth * len(layer)
            if cost > budget:
                continue
            if not layer and budget > 0 and depth > budget:
                continue
            if not compatible_layers(layer, shallower):
                continue
            rec(
                depth + 1,
                budget - cost,
                layer,
                acc + [(c, -depth) for c in layer],
            )

    rec(1, n, frozenset(), [])
    results.sort()
    return results


# --- candidate enumeration below a bound -------------------------------------


def _shapes_at_most(top_shape: tuple[int, ...], length: int, degree: int):
    """Nondecreasing degree tuples of the given length and total that are
    <= top_shape in the shape order."""
    cap = top_shape[-1]
    out = []

    def rec(slots: int, remaining: int, current_cap: int, acc: list[int]):
        if slots == 0:
            if remaining == 0:
                shape = tuple(reversed(acc))
                if shape_compare(shape, top_shape) <= 0:
                    out.append(shape)
            return
        lo = -(-remaining // slots)  # ceil division
        for d in range(current_cap, lo - 1, -1):
            rec(slots - 1, remaining - d, d, acc + [d])

    rec(length, degree, cap, [])
    return out


def colorings_of_shape(shape: tuple[int, ...]):
    """All colored partitions with the given (sorted) degree shape."""
    runs: list[tuple[int, int]] = []
    for d in shape:
        if runs and runs[-1][0] == d:
            runs[-1] = (d, runs[-1][1] + 1)
        else:
            runs.append((d, 1))
    choices = []
    for d, k in runs:
        choices.append(
            [
                tuple((c, d) for c in combo)
                for combo in itertools.combinations_with_replacement(
                    sorted(COLORS, reverse=True), k
                )
            ]
        )
    for picks in itertools.product(*choices):
        parts: tuple[Part, ...] = ()
        for block in picks:
            parts = parts + block
        yield ColoredPartition(parts)


def partitions_at_most(
    bound: ColoredPartition, length: int, degree: int
) -> list[ColoredPartition]:
    """All partitions q with ell(q) = length, |q| = degree and q <= bound.
    Requires ell(bound) = length (shorter partitions are strictly greater,
    longer ones strictly smaller and unbounded)."""
    if bound.length != length:
        raise ValueError("bound must have the requested length")
    out = []
    top_shape = bound.shape()
    for shape in _shapes_at_most(top_shape, length, degree):
        strictly_lower = shape_compare(shape, top_shape) < 0
        for q in colorings_of_shape(shape):
            if strictly_lower or compare(q, bound) <= 0:
                out.append(q)
    return out


# --- coloring totals over shape classes --------------------------------------

SHAPE_CLASSES = ("j^3", "(j-1)j(j+1)", "(j-1)j^2", "(j-1)^2j")


def shape_of_class(shape_class: str, j: int) -> tuple[int, ...]:
    if shape_class == "j^3":
        return (j, j, j)
    if shape_class == "(j-1)j(j+1)":
        return (j - 1, j, j + 1)
    if shape_class == "(j-1)j^2":
        return (j - 1, j, j)
    if shape_class == "(j-1)^2j":
        return (j - 1, j - 1, j)
    raise ValueError(f"unknown shape class {shape_class!r}")


def shape_class_embedding_total(shape_class: str, j: int = -3) -> int:
    """Sum of the quadratic-only excess counts over all colorings of the
    shape; independent of j."""
    shape = shape_of_class(shape_class, j)
    return sum(embedding_excess(p) for p in colorings_of_shape(shape))


EXCEPTIONAL_CASES = {
    "a": (Weight(1, 2), "(j-1)j^2"),
    "b": (Weight(-1, -2), "(j-1)^2j"),
}


def exceptional_class(weight: Weight, shape_class: str, j: int = -1):
    """The length-3 partitions of the given weight and shape, with the sum
    of their quadratic-only excess counts.  Only the two exceptional
    weight/shape combinations are supported."""
    if (weight, shape_class) not in EXCEPTIONAL_CASES.values():
        raise ValueError(
            "supported cases: weight alpha1+2alpha2 with shape (j-1)j^2, "
            "or its negative with shape (j-1)^2j"
        )
    shape = shape_of_class(shape_class, j)
    found = sorted(p for p in colorings_of_shape(shape) if p.weight() == weight)
    total = sum(embedding_excess(p) for p in found)
    return found, total


# --- overlap catalogue of the cubic families ---------------------------------


def overlap_catalogue(j: int) -> list[tuple[ColoredPartition, ColoredPartition]]:
    """All pairs (pi, rho1) with rho1 a forbidden factor, rho2 one of the two
    cubics anchored at j, pi = rho1 union rho2, rho1 and rho2 intersecting,
    and ell(pi) >= 4.  When rho1 is itself cubic the pair is recorded once,
    marked at its first-kind instance."""
    anchors = [cubic_a_label(j), cubic_b_label(j)]
    seen: set[tuple[tuple[Part, ...], tuple[Part, ...]]] = set()
    out = []
    for rho2 in anchors:
        p2 = rho2.partition()
        for t in range(j - 3, j + 4):
            for rho1 in relation_set(t, t):
                if rho1 == rho2:
                    continue
                if rho1.kind == CUBIC_B:
                    continue  # mirror of a first-kind marking
                p1 = rho1.partition()
                if p1.intersection(p2).length == 0:
                    continue
                pi = p1.union(p2)
                if pi.length < 4:
                    continue
                key = (pi.parts, p1.parts)
                if key not in seen:
                    seen.add(key)
                    out.append((pi, p1))
    out.sort(key=lambda pair: (pair[0], pair[1]))
    return out
