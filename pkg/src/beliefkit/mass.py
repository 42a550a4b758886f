"""Mass functions and the belief/plausibility functionals derived from them.

All probability values are exact rationals (:class:`fractions.Fraction`);
floats are rejected so golden values never pick up rounding noise.  A
:class:`MassFunction` stores only its focal elements (subsets with strictly
positive mass), validates normalization at construction, and never assigns
mass to the empty set.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Mapping

from .errors import (
    FrameMismatch,
    MassNotNormalized,
    MassOnEmptySet,
    NegativeMass,
    NotABeliefFunction,
)
from .frames import Frame, SubsetMask

ONE = Fraction(1)
ZERO = Fraction(0)

_RATIONAL_RE = re.compile(r"^(-?\d+)(?:/(\d+))?$")


def parse_rational(text: str) -> Fraction:
    """Parse the exact text forms ``p/q`` and integer shorthand ``p``."""
    match = _RATIONAL_RE.match(text)
    if match is None:
        raise ValueError(f"not a rational literal: {text!r}")
    numerator = int(match.group(1))
    denominator = int(match.group(2)) if match.group(2) else 1
    if denominator == 0:
        raise ValueError(f"zero denominator: {text!r}")
    return Fraction(numerator, denominator)


def format_rational(value: Fraction) -> str:
    """Render a rational as ``p/q``, or ``p`` when the denominator is 1."""
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def exact(value: object) -> Fraction:
    """Coerce ints, Fractions, and rational literals; reject floats."""
    if isinstance(value, float):
        raise TypeError(f"probability values must be exact rationals, got float {value!r}")
    if isinstance(value, str):
        return parse_rational(value)
    return Fraction(value)


class MassFunction:
    """A basic probability assignment over subsets of one frame.

    Construction merges duplicate subsets by addition, drops zero entries,
    and enforces the invariants: every stored mass is positive, the masses
    sum exactly to 1, and the empty set carries no mass.
    """

    __slots__ = ("_frame", "_focal")

    def __init__(self, frame: Frame, entries: Iterable[tuple[SubsetMask, object]]):
        merged: dict[SubsetMask, Fraction] = {}
        for mask, value in entries:
            if mask.frame != frame:
                raise FrameMismatch(f"focal set {mask} does not belong to the frame")
            value = exact(value)
            if value < 0:
                raise NegativeMass(f"mass of {mask} is negative: {format_rational(value)}")
            merged[mask] = merged.get(mask, ZERO) + value
        focal = {mask: v for mask, v in merged.items() if v != 0}
        if frame.empty() in focal:
            raise MassOnEmptySet(
                f"the empty set carries mass {format_rational(focal[frame.empty()])}"
            )
        total = sum(focal.values(), ZERO)
        if total != 1:
            raise MassNotNormalized(f"masses sum to {format_rational(total)}, expected 1")
        self._frame = frame
        self._focal = dict(sorted(focal.items(), key=lambda item: item[0].bits))

    @classmethod
    def vacuous(cls, frame: Frame) -> MassFunction:
        """Total ignorance: all mass on the full frame."""
        return cls(frame, [(frame.full(), ONE)])

    @classmethod
    def from_belief(cls, frame: Frame, belief: Mapping[SubsetMask, object]) -> MassFunction:
        """Invert a dense belief table back into a mass function.

        `belief` must assign a value to every one of the ``2^size`` subsets
        of the frame.  The inversion is the alternating-sign sum
        ``m(A) = sum over B below A of (-1)^|A minus B| * Bel(B)``, computed
        here as an in-place transform over the bit lattice.  Raises
        NotABeliefFunction when the table is not dense, Bel(full) != 1,
        Bel(empty) != 0, or any inverted mass is negative.
        """
        size = frame.size
        table = [ZERO] * (1 << size)
        seen = 0
        for mask, value in belief.items():
            if mask.frame != frame:
                raise FrameMismatch(f"belief table key {mask} does not belong to the frame")
            table[mask.bits] = exact(value)
            seen += 1
        if seen != 1 << size:
            raise NotABeliefFunction(
                f"belief table must cover all {1 << size} subsets, got {seen}"
            )
        if table[-1] != 1:
            raise NotABeliefFunction(
                f"Bel of the full frame is {format_rational(table[-1])}, expected 1"
            )
        for i in range(size):
            bit = 1 << i
            for x in range(1 << size):
                if x & bit:
                    table[x] -= table[x ^ bit]
        if table[0] != 0:
            raise NotABeliefFunction(
                f"inversion puts mass {format_rational(table[0])} on the empty set"
            )
        entries = []
        for bits, value in enumerate(table):
            if value < 0:
                raise NotABeliefFunction(
                    f"inversion yields negative mass {format_rational(value)} "
                    f"on {SubsetMask(frame, bits)}"
                )
            if value > 0:
                entries.append((SubsetMask(frame, bits), value))
        return cls(frame, entries)

    @property
    def frame(self) -> Frame:
        return self._frame

    def focal(self) -> tuple[tuple[SubsetMask, Fraction], ...]:
        """Focal elements with their masses, in ascending bitmask order."""
        return tuple(self._focal.items())

    def __getitem__(self, mask: SubsetMask) -> Fraction:
        if mask.frame != self._frame:
            raise FrameMismatch(f"{mask} does not belong to the frame")
        return self._focal.get(mask, ZERO)

    def belief(self, mask: SubsetMask) -> Fraction:
        """Total mass of focal elements contained in `mask`."""
        if mask.frame != self._frame:
            raise FrameMismatch(f"{mask} does not belong to the frame")
        return sum(
            (v for focal, v in self._focal.items() if focal.bits & ~mask.bits == 0),
            ZERO,
        )

    def plausibility(self, mask: SubsetMask) -> Fraction:
        """Mass not committed against `mask`: 1 - Bel(complement)."""
        return ONE - self.belief(mask.complement())

    def is_bayesian(self) -> bool:
        """True iff every focal element is a singleton."""
        return all(len(mask) == 1 for mask in self._focal)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MassFunction):
            return NotImplemented
        return self._frame == other._frame and self._focal == other._focal

    def __hash__(self) -> int:
        return hash((self._frame, tuple(self._focal.items())))

    def __repr__(self) -> str:
        body = "; ".join(f"m({mask}) = {format_rational(v)}" for mask, v in self._focal.items())
        return f"MassFunction<{body}>"
