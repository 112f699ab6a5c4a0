"""Spectra of rank-2 bundles as multiplicity vectors.

A spectrum is the bundle ``H = sum_j O(j)^{m_j}`` on ``P^1``, stored as the
finite map ``j -> m_j``.  It computes ``h^1(Z, E(l)) = h^0(H(l))`` for
``l <= 0`` and ``h^2(Z, E(l)) = h^1(H(l))`` for ``l >= -1``.

The admissibility filters here (connectedness, degree bounds, symmetry) are
necessary conditions only.  Connectedness additionally presumes that
``|K_S^-1|`` is ample on a generic ``S``, which cannot be checked from
numerical data, so every filter is opt-in.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Iterable, Mapping

from ._partitions import bounded_partitions
from .errors import InvalidRank, InvalidSpectrum, TwistOutOfRange, UnboundedEnumeration

__all__ = [
    "Spectrum",
    "SpectrumConstraints",
    "connectedness_check",
    "symmetry_check",
    "mirror",
    "bounds",
    "support_window",
    "enumerate_spectra",
    "h1_value",
    "h2_value",
    "partial_sum_f",
    "vanishing_thresholds",
    "cohomology_table",
]


@dataclass(frozen=True)
class Spectrum:
    """Multiplicities ``m_j >= 1`` keyed by ``j``, kept sorted by descending ``j``."""

    items: tuple[tuple[int, int], ...] = ()

    def __post_init__(self) -> None:
        seen = set()
        for j, m in self.items:
            if isinstance(j, bool) or not isinstance(j, int):
                raise InvalidSpectrum(f"degree {j!r} is not an integer")
            if isinstance(m, bool) or not isinstance(m, int) or m < 1:
                raise InvalidSpectrum(f"multiplicity of O({j}) must be a positive integer, got {m!r}")
            if j in seen:
                raise InvalidSpectrum(f"degree {j} listed twice")
            seen.add(j)
        object.__setattr__(self, "items", tuple(sorted(self.items, reverse=True)))

    @classmethod
    def from_mapping(cls, mapping: Mapping[Any, int]) -> "Spectrum":
        """Build from ``{j: m_j}``; zero multiplicities are dropped, keys may be strings."""
        items = []
        for key, m in mapping.items():
            try:
                j = int(key)
            except (TypeError, ValueError):
                raise InvalidSpectrum(f"degree {key!r} is not an integer") from None
            if isinstance(m, bool) or not isinstance(m, int) or m < 0:
                raise InvalidSpectrum(f"multiplicity of O({key}) must be a non-negative integer")
            if m:
                items.append((j, m))
        return cls(tuple(items))

    @classmethod
    def from_parts(cls, parts: Iterable[int]) -> "Spectrum":
        """Build from the list of summand degrees, repetition giving multiplicity."""
        counts: dict[int, int] = {}
        for j in parts:
            counts[j] = counts.get(j, 0) + 1
        return cls(tuple(counts.items()))

    @property
    def multiplicities(self) -> dict[int, int]:
        return dict(self.items)

    def m(self, j: int) -> int:
        return self.multiplicities.get(j, 0)

    @property
    def parts(self) -> tuple[int, ...]:
        return tuple(j for j, m in self.items for _ in range(m))

    @property
    def r(self) -> int:
        return sum(m for _, m in self.items)

    @property
    def d(self) -> int:
        return sum(j * m for j, m in self.items)

    @property
    def a(self) -> int | None:
        return self.items[-1][0] if self.items else None

    @property
    def b(self) -> int | None:
        return self.items[0][0] if self.items else None

    def __bool__(self) -> bool:
        return bool(self.items)

    def to_dict(self) -> dict[str, Any]:
        return {
            "multiplicities": {str(j): m for j, m in self.items},
            "a": self.a,
            "b": self.b,
            "r": self.r,
            "d": self.d,
        }

    @classmethod
    def from_dict(cls, data: Mapping[str, Any]) -> "Spectrum":
        """Accept either a serialized spectrum or a bare ``{"j": m_j}`` map."""
        if "multiplicities" in data:
            spec = cls.from_mapping(data["multiplicities"])
            for key in ("r", "d", "a", "b"):
                if key in data and data[key] != getattr(spec, key):
                    raise InvalidSpectrum(
                        f"derived field {key}={data[key]!r} disagrees with multiplicities"
                    )
            return spec
        return cls.from_mapping(data)

    def __str__(self) -> str:
        if not self.items:
            return "0"
        return " + ".join(f"O({j})" + (f"^{m}" if m > 1 else "") for j, m in self.items)


@dataclass(frozen=True)
class SpectrumConstraints:
    connected: bool = False
    symmetric: bool = False
    bounds: bool = False


def connectedness_check(s: Spectrum) -> bool:
    """No gaps in the support above 1 or below -2."""
    if not s:
        return True
    mult = s.multiplicities
    a, b = s.a, s.b
    upper = b <= 1 or all(mult.get(j, 0) > 0 for j in range(1, b))
    lower = a >= -2 or all(mult.get(j, 0) > 0 for j in range(a + 1, -1))
    return upper and lower


def mirror(s: Spectrum) -> Spectrum:
    """Reflect the support through -1/2, ``j -> -1 - j``."""
    return Spectrum(tuple((-1 - j, m) for j, m in s.items))


def symmetry_check(s: Spectrum) -> bool:
    """``m_j = m_{-1-j}`` for all ``j``."""
    return mirror(s) == s


def bounds(r: int, d: int) -> tuple[Fraction, Fraction]:
    """Lower bound on ``a`` and upper bound on ``b`` for a connected spectrum of rank ``r``, degree ``d``."""
    if r < 1:
        raise InvalidRank(f"bounds need r >= 1, got {r}")
    center = Fraction(d - 1, r + 2)
    half = Fraction(r + 1, 2)
    return center - half, center + half


def support_window(r: int, d: int, c: SpectrumConstraints) -> tuple[int, int] | None:
    """Smallest integer window implied by the constraints, or None if unbounded."""
    if r < 1:
        return None
    if c.bounds:
        a_min, b_max = bounds(r, d)
        return math.ceil(a_min), math.floor(b_max)
    if c.connected:
        # a chain 1..b uses b parts and a chain a..-2 uses -1-a parts
        return -r - 1, r
    return None


def _passes(s: Spectrum, c: SpectrumConstraints) -> bool:
    if c.connected and not connectedness_check(s):
        return False
    if c.symmetric and not symmetry_check(s):
        return False
    if c.bounds and s:
        a_min, b_max = bounds(s.r, s.d)
        if s.a < a_min or s.b > b_max:
            return False
    return True


def enumerate_spectra(
    r: int,
    d: int,
    c: SpectrumConstraints = SpectrumConstraints(),
    window: tuple[int, int] | None = None,
) -> list[Spectrum]:
    """All spectra of rank ``r`` and degree ``d`` meeting ``c``.

    ``window`` further restricts the support; it is required when the
    constraints alone leave the support unbounded.  Output is in descending
    lexicographic order of the sorted summand degrees.
    """
    if r < 0:
        raise InvalidRank(f"r must be non-negative, got {r}")
    if r == 0:
        return [Spectrum()] if d == 0 else []
    implied = support_window(r, d, c)
    if implied is None and window is None:
        raise UnboundedEnumeration(
            "without the connected or bounds constraint a support window is required"
        )
    lo, hi = window if implied is None else implied
    if window is not None and implied is not None:
        lo, hi = max(lo, window[0]), min(hi, window[1])
    out = []
    for parts in bounded_partitions(r, d, lo, hi):
        s = Spectrum.from_parts(parts)
        if _passes(s, c):
            out.append(s)
    return out


def h1_value(s: Spectrum, l: int) -> int:
    """``h^1(Z, E(l)) = h^0(H(l))`` for ``l <= 0``."""
    if l > 0:
        raise TwistOutOfRange(f"h1 is determined by the spectrum only for l <= 0, got {l}")
    return sum(m * max(0, j + l + 1) for j, m in s.items)


def h2_value(s: Spectrum, l: int) -> int:
    """``h^2(Z, E(l)) = h^1(H(l))`` for ``l >= -1``."""
    if l < -1:
        raise TwistOutOfRange(f"h2 is determined by the spectrum only for l >= -1, got {l}")
    return sum(m * max(0, -(j + l + 1)) for j, m in s.items)


def partial_sum_f(s: Spectrum, l: int) -> int:
    """``f(l) = sum of m_j over j <= l``."""
    return sum(m for j, m in s.items if j <= l)


def vanishing_thresholds(r: int, d: int) -> tuple[int, int]:
    """Thresholds ``(t1, t2)`` valid for every spectrum obeying the degree bounds.

    ``h^1(E(-l)) = 0`` for all ``l >= t1`` and ``h^2(E(l)) = 0`` for all
    ``l >= t2``.  For ``r = 0`` both groups vanish on their whole range and
    ``(0, -1)`` is returned.
    """
    if r < 0:
        raise InvalidRank(f"r must be non-negative, got {r}")
    if r == 0:
        return 0, -1
    a_min, b_max = bounds(r, d)
    # O(j)(-l) has no sections once l > j; O(j)(l) has no H^1 once j + l >= -1.
    t1 = max(0, math.floor(b_max) + 1)
    t2 = max(-1, -math.ceil(a_min) - 1)
    return t1, t2


@dataclass(frozen=True)
class CohomologyRow:
    l: int
    h1: int | None
    h2: int | None


def cohomology_table(s: Spectrum, lmin: int, lmax: int) -> list[CohomologyRow]:
    """Rows ``l, h1, h2`` for ``lmin <= l <= lmax``; a value is None outside its range of validity."""
    rows = []
    for l in range(lmin, lmax + 1):
        rows.append(
            CohomologyRow(
                l=l,
                h1=h1_value(s, l) if l <= 0 else None,
                h2=h2_value(s, l) if l >= -1 else None,
            )
        )
    return rows
