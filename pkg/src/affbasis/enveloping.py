"""Truncated exact computation in the level-one enveloping algebra.

Elements are finite rational combinations of normal-ordered monomials: a
monomial is a mode word sorted in the part order, which automatically puts
creation modes (degree < 0) to the left of annihilation modes (degree >= 0).
Infinite sums from the completed algebra are represented through windows: a
window certifies that every monomial whose annihilation degree total is at
most the bound carries its exact coefficient, while heavier monomials may
be absent.  Since a monomial of annihilation weight s kills every vector of
depth < s in the induced module, a window of bound D determines the action
on the graded piece down to depth D exactly.

Straightening uses the level-one commutator: swapping X_a(m) past X_b(n)
emits [X_a, X_b](m+n) plus the central term m * delta_{m+n,0} * <X_a, X_b>.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .algebra import BRACKET, FORM, LieElement, Weight
from .partitions import (
    ColoredPartition,
    Part,
    parts_compare,
    parts_degree,
    parts_weight,
    part_key,
    partitions_at_most,
    sort_parts,
)


class WindowError(RuntimeError):
    """The requested computation exceeds the certified truncation window."""


@dataclass(frozen=True)
class Window:
    """Truncation descriptor.  `annihilation_bound` is the certified exact
    region; `min_total_degree`, when set, additionally drops monomials of
    smaller total degree at admission time."""

    annihilation_bound: int
    min_total_degree: int | None = None

    def admits(self, parts: tuple[Part, ...]) -> bool:
        if annihilation_weight(parts) > self.annihilation_bound:
            return False
        if self.min_total_degree is not None and parts_degree(parts) < self.min_total_degree:
            return False
        return True

    def narrowed(self, bound: int) -> "Window":
        return Window(min(self.annihilation_bound, bound), self.min_total_degree)


def annihilation_weight(parts: tuple[Part, ...]) -> int:
    return sum(d for _, d in parts if d > 0)


def creation_part(parts: tuple[Part, ...]) -> tuple[Part, ...]:
    return tuple(p for p in parts if p[1] < 0)


def annihilation_part(parts: tuple[Part, ...]) -> tuple[Part, ...]:
    return tuple(p for p in parts if p[1] >= 0)


# --- straightening ------------------------------------------------------------


def _rewrite_once(word: tuple[Part, ...], i: int):
    """Terms replacing `word` when positions i, i+1 are transposed."""
    (a, m), (b, n) = word[i], word[i + 1]
    yield word[:i] + ((b, n), (a, m)) + word[i + 2 :], 1
    for color, coef in BRACKET[(a, b)]:
        yield word[:i] + ((color, m + n),) + word[i + 2 :], coef
    if m + n == 0:
        f = FORM[(a, b)]
        if f:
            yield word[:i] + word[i + 2 :], m * f


def straighten_word(word, rng: random.Random | None = None) -> dict[tuple[Part, ...], int]:
    """Expand a mode word over sorted monomials; exact, integer output.
    The optional rng picks which inversion to rewrite first, for
    confluence testing; the result must not depend on it."""
    out: dict[tuple[Part, ...], int] = {}
    stack: list[tuple[tuple[Part, ...], int]] = [(tuple(word), 1)]
    while stack:
        w, c = stack.pop()
        inversions = [
            i
            for i in range(len(w) - 1)
            if part_key(w[i]) > part_key(w[i + 1])
        ]
        if not inversions:
            out[w] = out.get(w, 0) + c
            continue
        i = inversions[0] if rng is None else rng.choice(inversions)
        for term, coef in _rewrite_once(w, i):
            stack.append((term, c * coef))
    return {w: c for w, c in out.items() if c}


# --- windowed elements ---------------------------------------------------------


class EnvElement:
    """Finite exact combination of sorted monomials inside a window."""

    __slots__ = ("terms", "window")

    def __init__(self, terms: dict[tuple[Part, ...], Fraction], window: Window):
        cleaned = {}
        for parts, coef in terms.items():
            coef = Fraction(coef)
            if coef and window.admits(parts):
                cleaned[parts] = coef
        self.terms = cleaned
        self.window = window

    @classmethod
    def zero(cls, window: Window) -> "EnvElement":
        return cls({}, window)

    @classmethod
    def from_word(cls, word, window: Window, coefficient=1) -> "EnvElement":
        expanded = straighten_word(word)
        return cls(
            {w: Fraction(coefficient) * c for w, c in expanded.items()}, window
        )

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "EnvElement") -> "EnvElement":
        if self.window != other.window:
            raise WindowError("cannot combine elements with different windows")
        out = dict(self.terms)
        for w, c in other.terms.items():
            out[w] = out.get(w, Fraction(0)) + c
        return EnvElement(out, self.window)

    def __sub__(self, other: "EnvElement") -> "EnvElement":
        return self + other.scale(-1)

    def scale(self, s) -> "EnvElement":
        s = Fraction(s)
        if not s:
            return EnvElement.zero(self.window)
        return EnvElement({w: s * c for w, c in self.terms.items()}, self.window)

    def narrowed(self, bound: int) -> "EnvElement":
        return EnvElement(self.terms, self.window.narrowed(bound))

    def coefficient(self, parts) -> Fraction:
        key = sort_parts(parts)
        if not self.window.admits(key):
            raise WindowError(f"monomial {key} lies outside the window")
        return self.terms.get(key, Fraction(0))

    def total_degree(self) -> int | None:
        degs = {parts_degree(w) for w in self.terms}
        if len(degs) == 1:
            return degs.pop()
        return None

    def weight(self) -> Weight | None:
        weights = {parts_weight(w).key() for w in self.terms}
        if len(weights) == 1:
            a1, a2 = weights.pop()
            return Weight(a1, a2)
        return None

    def max_length(self) -> int:
        return max((len(w) for w in self.terms), default=0)

    # -- products with single modes ------------------------------------------

    def mul_mode_left(self, mode: Part) -> "EnvElement":
        """X_mode * self.  Multiplying by a creation mode keeps the window;
        an annihilation mode costs its degree in certified bound."""
        color, degree = mode
        new_bound = self.window.annihilation_bound - max(degree, 0)
        window = Window(new_bound, self.window.min_total_degree)
        out: dict[tuple[Part, ...], Fraction] = {}
        for w, c in self.terms.items():
            for term, coef in straighten_word((mode,) + w).items():
                if coef:
                    out[term] = out.get(term, Fraction(0)) + c * coef
        return EnvElement(out, window)

    def mul_mode_right(self, mode: Part) -> "EnvElement":
        """self * X_mode.  Multiplying by an annihilation mode keeps (indeed
        extends) the window; a creation mode costs its absolute degree."""
        color, degree = mode
        # an annihilation mode shifts every term's weight up by its degree,
        # so the certified region moves with it; a creation mode can merge
        # into the annihilation side and costs its absolute degree.
        window = Window(
            self.window.annihilation_bound + degree, self.window.min_total_degree
        )
        out: dict[tuple[Part, ...], Fraction] = {}
        for w, c in self.terms.items():
            for term, coef in straighten_word(w + (mode,)).items():
                if coef:
                    out[term] = out.get(term, Fraction(0)) + c * coef
        return EnvElement(out, window)

    def adjoint_mode(self, x: int | LieElement, k: int) -> "EnvElement":
        """Commutator [x(k), self], applied termwise and re-straightened.
        Shifting by k costs |k| of the certified bound."""
        if isinstance(x, LieElement):
            pieces = list(x.items())
        else:
            pieces = [(x, Fraction(1))]
        window = Window(
            self.window.annihilation_bound - abs(k), self.window.min_total_degree
        )
        out: dict[tuple[Part, ...], Fraction] = {}

        def accumulate(word, coef):
            for term, c2 in straighten_word(word).items():
                if c2:
                    out[term] = out.get(term, Fraction(0)) + coef * c2

        for w, c in self.terms.items():
            for idx, (b, d) in enumerate(w):
                for xc, xv in pieces:
                    for color, coef in BRACKET[(xc, b)]:
                        accumulate(
                            w[:idx] + ((color, d + k),) + w[idx + 1 :],
                            c * xv * coef,
                        )
                    if k + d == 0:
                        f = FORM[(xc, b)]
                        if f:
                            accumulate(w[:idx] + w[idx + 1 :], c * xv * k * f)
        return EnvElement(out, window)

    # -- leading terms ----------------------------------------------------------

    def leading_term(self, max_length: int | None = None) -> ColoredPartition:
        """The minimal monomial, certified: every candidate partition at or
        below it (same degree, bounded length) must lie in the window."""
        if not self.terms:
            raise ValueError("zero element has no leading term")
        degree = self.total_degree()
        if degree is None:
            raise ValueError("leading terms are defined for homogeneous elements")
        best = min(self.terms, key=_PartsOrder)
        limit = max_length if max_length is not None else self.max_length()
        if len(best) < limit:
            raise WindowError(
                "window minimum is shorter than the possible maximal length; "
                "longer monomials may hide outside the window"
            )
        bound = ColoredPartition(best)
        for candidate in partitions_at_most(bound, len(best), degree):
            if not self.window.admits(candidate.parts):
                raise WindowError(
                    f"candidate {candidate} below the minimum is outside the window"
                )
        return bound

    def sorted_terms(self) -> list[tuple[ColoredPartition, Fraction]]:
        items = sorted(self.terms.items(), key=lambda kv: _PartsOrder(kv[0]))
        return [(ColoredPartition(w), c) for w, c in items]

    def __repr__(self) -> str:
        return f"EnvElement({len(self.terms)} terms, window={self.window})"


class _PartsOrder:
    __slots__ = ("parts",)

    def __init__(self, parts):
        self.parts = parts

    def __lt__(self, other):
        return parts_compare(self.parts, other.parts) < 0


def straighten(word, window: Window, rng: random.Random | None = None) -> EnvElement:
    """Normal-order a finite mode word; exact, then admission-filtered."""
    expanded = straighten_word(word, rng=rng)
    return EnvElement({w: Fraction(c) for w, c in expanded.items()}, window)


def adjoint_action(x: LieElement, e: EnvElement) -> EnvElement:
    """Zero-mode adjoint action ad(x(0)); window-preserving."""
    return e.adjoint_mode(x, 0)


# --- the induced vacuum module -------------------------------------------------
#
# Vectors are exact combinations of strictly-negative partitions acting on the
# vacuum.  A single mode acts by commuting into sorted position; the pure
# integer kernel below is memoized globally.

_MODE_CACHE: dict[tuple[Part, tuple[Part, ...]], tuple[tuple[tuple[Part, ...], int], ...]] = {}


def mode_on_partition(mode: Part, parts: tuple[Part, ...]):
    """X_mode applied to the basis vector u(parts) . vacuum, as a tuple of
    (partition, integer coefficient) pairs."""
    key = (mode, parts)
    hit = _MODE_CACHE.get(key)
    if hit is not None:
        return hit
    out: dict[tuple[Part, ...], int] = {}
    stack: list[tuple[tuple[Part, ...], int]] = [((mode,) + parts, 1)]
    while stack:
        w, c = stack.pop()
        if w and w[-1][1] >= 0:
            continue  # the rightmost mode annihilates the vacuum
        idx = -1
        for i in range(len(w) - 1):
            if part_key(w[i]) > part_key(w[i + 1]):
                idx = i
                break
        if idx < 0:
            out[w] = out.get(w, 0) + c
            continue
        for term, coef in _rewrite_once(w, idx):
            stack.append((term, c * coef))
    result = tuple((w, c) for w, c in out.items() if c)
    _MODE_CACHE[key] = result
    return result


def clear_action_cache() -> None:
    _MODE_CACHE.clear()


class VermaVector:
    """Exact vector in the induced vacuum module, indexed by strictly
    negative partitions."""

    __slots__ = ("coords",)

    def __init__(self, coords: dict[tuple[Part, ...], Fraction] | None = None):
        cleaned = {}
        for parts, c in (coords or {}).items():
            c = Fraction(c)
            if c:
                cleaned[parts] = c
        self.coords = cleaned

    @classmethod
    def vacuum(cls) -> "VermaVector":
        return cls({(): Fraction(1)})

    @classmethod
    def basis(cls, p: ColoredPartition) -> "VermaVector":
        return cls({p.parts: Fraction(1)})

    def is_zero(self) -> bool:
        return not self.coords

    def __add__(self, other: "VermaVector") -> "VermaVector":
        out = dict(self.coords)
        for k, v in other.coords.items():
            out[k] = out.get(k, Fraction(0)) + v
        return VermaVector(out)

    def __sub__(self, other: "VermaVector") -> "VermaVector":
        return self + other.scale(-1)

    def scale(self, s) -> "VermaVector":
        s = Fraction(s)
        return VermaVector({k: s * v for k, v in self.coords.items()})

    def __eq__(self, other) -> bool:
        return isinstance(other, VermaVector) and self.coords == other.coords

    def max_depth(self) -> int:
        return max((-parts_degree(k) for k in self.coords), default=0)

    def items(self):
        return [(ColoredPartition(k), v) for k, v in self.coords.items()]

    def __repr__(self) -> str:
        return f"VermaVector({len(self.coords)} coordinates)"


def apply_mode(mode: Part, v: VermaVector) -> VermaVector:
    out: dict[tuple[Part, ...], Fraction] = {}
    for parts, c in v.coords.items():
        for w, coef in mode_on_partition(mode, parts):
            out[w] = out.get(w, Fraction(0)) + c * coef
    return VermaVector(out)


def apply_word(word, v: VermaVector) -> VermaVector:
    for mode in reversed(tuple(word)):
        v = apply_mode(mode, v)
    return v


def act(e, v: VermaVector) -> VermaVector:
    """Apply an element to a module vector.  Accepts an EnvElement, a single
    mode or a mode word; EnvElements must be windowed at least as deep as
    the vector."""
    if isinstance(e, tuple) and e and isinstance(e[0], int):
        return apply_mode(e, v)
    if isinstance(e, (list, tuple)):
        return apply_word(e, v)
    if isinstance(e, EnvElement):
        depth = v.max_depth()
        if e.window.annihilation_bound < depth:
            raise WindowError(
                f"window bound {e.window.annihilation_bound} is too shallow "
                f"for a vector of depth {depth}"
            )
        out = VermaVector()
        for parts, c in e.terms.items():
            out = out + apply_word(parts, v).scale(c)
        return out
    raise TypeError(f"cannot act with {type(e).__name__}")


def graded_basis(n: int, weight: Weight | None = None) -> list[ColoredPartition]:
    """All strictly-negative colored partitions of total degree -n, the
    monomial basis of the induced module at depth n."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    import itertools

    results: list[ColoredPartition] = []
    colors_desc = tuple(range(8, 0, -1))

    def rec(depth: int, budget: int, acc: list[Part]):
        if budget == 0:
            p = ColoredPartition(acc)
            if weight is None or p.weight() == weight:
                results.append(p)
            return
        if depth > budget:
            return
        for count in range(0, budget // depth + 1):
            if count == 0:
                rec(depth + 1, budget, acc)
                continue
            for combo in itertools.combinations_with_replacement(colors_desc, count):
                rec(
                    depth + 1,
                    budget - count * depth,
                    acc + [(c, -depth) for c in combo],
                )

    rec(1, n, [])
    results.sort()
    return results
