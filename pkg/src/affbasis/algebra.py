"""Exact arithmetic for sl(3) over the ordered eight-element basis.

The basis vectors X1..X8 are realized once as traceless 3x3 integer
matrices and every structure constant used anywhere in the package
(bracket table, trace form, root-space weights) is generated from that
realization at import time.  Nothing is transcribed by hand, so the
Jacobi identity and form invariance certify the tables themselves.

Color indices follow the fixed ordering X1 > X2 > ... > X8, i.e. a
*smaller* index is *greater* in the color order.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

COLORS = (1, 2, 3, 4, 5, 6, 7, 8)


@dataclass(frozen=True)
class Weight:
    """h-weight written in the simple-root basis (a1*alpha1 + a2*alpha2)."""

    a1: int
    a2: int

    def __add__(self, other: "Weight") -> "Weight":
        return Weight(self.a1 + other.a1, self.a2 + other.a2)

    def __neg__(self) -> "Weight":
        return Weight(-self.a1, -self.a2)

    def is_zero(self) -> bool:
        return self.a1 == 0 and self.a2 == 0

    def key(self) -> tuple[int, int]:
        return (self.a1, self.a2)


ZERO_WEIGHT = Weight(0, 0)


# --- defining 3x3 realization -------------------------------------------
#
# Matrices are 9-tuples in row-major order, exact integers throughout.


def _unit(i: int, j: int) -> tuple[int, ...]:
    return tuple(1 if (r, c) == (i, j) else 0 for r in range(3) for c in range(3))


def _mul(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(
        sum(a[3 * r + k] * b[3 * k + c] for k in range(3))
        for r in range(3)
        for c in range(3)
    )


def _sub(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(x - y for x, y in zip(a, b))


def _commutator(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    return _sub(_mul(a, b), _mul(b, a))


def _trace(a: tuple[int, ...]) -> int:
    return a[0] + a[4] + a[8]


_E1, _E2 = _unit(0, 1), _unit(1, 2)
_F1, _F2 = _unit(1, 0), _unit(2, 1)
_H1 = _sub(_unit(0, 0), _unit(1, 1))
_H2 = _sub(_unit(1, 1), _unit(2, 2))

_MATRIX = {
    1: _commutator(_E1, _E2),
    2: _E1,
    3: _E2,
    4: _H1,
    5: _H2,
    6: _F2,
    7: _F1,
    8: _commutator(_F2, _F1),
}


def _decompose(m: tuple[int, ...]) -> tuple[tuple[int, int], ...]:
    """Write a traceless 3x3 integer matrix over the X-basis."""
    coeffs = {}
    off = {(0, 2): 1, (0, 1): 2, (1, 2): 3, (2, 1): 6, (1, 0): 7, (2, 0): 8}
    for (r, c), color in off.items():
        v = m[3 * r + c]
        if v:
            coeffs[color] = v
    # diagonal part diag(d0,d1,d2) with d0+d1+d2 = 0 is d0*H1 - d2*H2
    d0, d2 = m[0], m[8]
    if d0:
        coeffs[4] = d0
    if d2:
        coeffs[5] = -d2
    check = [0] * 9
    for color, v in coeffs.items():
        check = [x + v * y for x, y in zip(check, _MATRIX[color])]
    if tuple(check) != m:
        raise AssertionError("matrix does not lie in the span of the basis")
    return tuple(sorted(coeffs.items()))


# BRACKET[(a, b)] lists (color, coefficient) pairs of [X_a, X_b];
# FORM[(a, b)] is the trace form tr(X_a X_b).
BRACKET: dict[tuple[int, int], tuple[tuple[int, int], ...]] = {}
FORM: dict[tuple[int, int], int] = {}
for _a in COLORS:
    for _b in COLORS:
        BRACKET[(_a, _b)] = _decompose(_commutator(_MATRIX[_a], _MATRIX[_b]))
        FORM[(_a, _b)] = _trace(_mul(_MATRIX[_a], _MATRIX[_b]))

WEIGHT: dict[int, Weight] = {
    1: Weight(1, 1),
    2: Weight(1, 0),
    3: Weight(0, 1),
    4: Weight(0, 0),
    5: Weight(0, 0),
    6: Weight(0, -1),
    7: Weight(-1, 0),
    8: Weight(-1, -1),
}

# Chevalley generators by color index.
E1_COLOR, E2_COLOR, H1_COLOR, H2_COLOR, F2_COLOR, F1_COLOR = 2, 3, 4, 5, 6, 7


def color_weight(color: int) -> Weight:
    return WEIGHT[color]


@dataclass(frozen=True)
class LieElement:
    """Exact rational vector over the eight-element basis."""

    coeffs: tuple[Fraction, ...]  # position k holds the coefficient of X_{k+1}

    @staticmethod
    def zero() -> "LieElement":
        return LieElement((Fraction(0),) * 8)

    @staticmethod
    def basis(color: int) -> "LieElement":
        return LieElement(
            tuple(Fraction(1 if c == color else 0) for c in COLORS)
        )

    def __add__(self, other: "LieElement") -> "LieElement":
        return LieElement(tuple(x + y for x, y in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "LieElement") -> "LieElement":
        return LieElement(tuple(x - y for x, y in zip(self.coeffs, other.coeffs)))

    def scale(self, s) -> "LieElement":
        s = Fraction(s)
        return LieElement(tuple(s * x for x in self.coeffs))

    def is_zero(self) -> bool:
        return all(x == 0 for x in self.coeffs)

    def items(self):
        for c, v in zip(COLORS, self.coeffs):
            if v:
                yield c, v

    def coefficient(self, color: int) -> Fraction:
        return self.coeffs[color - 1]


def basis_element(color: int) -> LieElement:
    return LieElement.basis(color)


def bracket(x: LieElement, y: LieElement) -> LieElement:
    acc = [Fraction(0)] * 8
    for a, xa in x.items():
        for b, yb in y.items():
            for color, coef in BRACKET[(a, b)]:
                acc[color - 1] += xa * yb * coef
    return LieElement(tuple(acc))


def invariant_form(x: LieElement, y: LieElement) -> Fraction:
    total = Fraction(0)
    for a, xa in x.items():
        for b, yb in y.items():
            f = FORM[(a, b)]
            if f:
                total += xa * yb * f
    return total


def weight_of(x: LieElement) -> Weight | None:
    """Common weight of the nonzero components, or None if mixed."""
    found = None
    for c, _ in x.items():
        w = WEIGHT[c]
        if found is None:
            found = w
        elif found != w:
            return None
    return found if found is not None else ZERO_WEIGHT
