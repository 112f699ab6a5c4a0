"""Family invariant ``d(W)`` and Grauert-Mulich restriction constraints.

``d(W)`` bounds the gaps between consecutive slopes of the HN filtration of a
semistable sheaf restricted to a generic curve of the family ``W``.  It is
known in closed form for two kinds of families:

* rational curves with globally generated normal bundle ``sum O(a_i)``,
  where the evaluation kernel is ``sum O(-1)^{a_i}`` and ``d(W) = 1``;
* base curves of pencils in ``|L|`` (elliptic), where the evaluation kernel
  on ``C`` is stable of slope ``-n/(n-1)`` with ``n = dim|L| - 1``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Iterable, Mapping, Sequence

from ._partitions import bounded_partitions
from .errors import (
    DegreeTooSmall,
    InvalidRank,
    NotGloballyGenerated,
    NotSorted,
    PencilTooSmall,
    TrivialNormalBundle,
    UnknownFamilyKind,
)
from .rational import as_rational

__all__ = [
    "CurveFamily",
    "SplittingType",
    "EllipticRestriction",
    "KernelSlope",
    "d_rational",
    "d_elliptic",
    "kernel_slope",
    "gm_gap_ok",
    "has_consecutive_support",
    "splitting_types_rational",
    "restriction_types_elliptic",
]


def d_rational(normal_degrees: Sequence[int]) -> Fraction:
    """``d(W)`` for a complete family of rational curves with normal bundle ``sum O(a_i)``."""
    degrees = list(normal_degrees)
    if any(a < 0 for a in degrees):
        raise NotGloballyGenerated(f"normal bundle degrees {degrees} include a negative summand")
    if not any(degrees):
        raise TrivialNormalBundle("normal bundle is trivial; evaluation kernel is zero")
    # kernel of O^{a+1} -> O(a) on P^1 is O(-1)^a, so the minimal slope is -1
    kernel = [-1 for a in degrees for _ in range(a)]
    return -Fraction(min(kernel))


@dataclass(frozen=True)
class KernelSlope:
    rank: int
    degree: int
    slope: Fraction


def kernel_slope(n: int) -> KernelSlope:
    """Evaluation kernel ``ker(O_C (x) H^0(L) -> L)`` for ``deg L = n`` on an elliptic curve."""
    if n < 2:
        raise DegreeTooSmall(f"need deg L >= 2, got {n}")
    # h0(L) = n on an elliptic curve, so the kernel has rank n - 1 and degree -n
    return KernelSlope(rank=n - 1, degree=-n, slope=Fraction(-n, n - 1))


def d_elliptic(dim_L: int) -> Fraction:
    """``d(W) = (dim|L| - 1) / (dim|L| - 2)`` for base curves of pencils in ``|L|``."""
    if dim_L < 3:
        raise PencilTooSmall(f"dim|L| = {dim_L} must be at least 3")
    return Fraction(dim_L - 1, dim_L - 2)


def gm_gap_ok(slope_profile: Sequence[Fraction | int], dW: Fraction | int) -> bool:
    profile = [as_rational(x) for x in slope_profile]
    dW = as_rational(dW)
    if any(x < y for x, y in zip(profile, profile[1:])):
        raise NotSorted(f"slope profile {[str(x) for x in profile]} is not weakly decreasing")
    return all(x - y <= dW for x, y in zip(profile, profile[1:]))


def has_consecutive_support(degrees: Iterable[int]) -> bool:
    values = set(degrees)
    return not values or len(values) == max(values) - min(values) + 1


@dataclass(frozen=True)
class SplittingType:
    degrees: tuple[int, ...]

    def __post_init__(self) -> None:
        if any(x < y for x, y in zip(self.degrees, self.degrees[1:])):
            raise NotSorted(f"splitting type {self.degrees} is not weakly decreasing")

    @property
    def rank(self) -> int:
        return len(self.degrees)

    @property
    def total_degree(self) -> int:
        return sum(self.degrees)


def splitting_window(rank: int, total_degree: int) -> tuple[int, int]:
    return total_degree // rank - rank, -(-total_degree // rank) + rank


def splitting_types_rational(rank: int, total_degree: int) -> list[SplittingType]:
    """Splitting types on a generic rational curve allowed by ``d(W) = 1``.

    These are the decreasing degree tuples whose values fill an interval of
    integers, in ascending lexicographic order.
    """
    if rank < 1:
        raise InvalidRank(f"rank must be at least 1, got {rank}")
    lo, hi = splitting_window(rank, total_degree)
    found = [
        SplittingType(t)
        for t in bounded_partitions(rank, total_degree, lo, hi)
        if has_consecutive_support(t)
    ]
    return sorted(found, key=lambda s: s.degrees)


@dataclass(frozen=True)
class EllipticRestriction:
    """Restriction of a semistable rank-2 bundle to a generic elliptic curve of the pencil family."""

    total_degree: int
    split_types: tuple[SplittingType, ...]
    semistable_alternative: bool = True


def restriction_types_elliptic(total_degree: int) -> EllipticRestriction:
    hi = -(-total_degree // 2)
    lo = total_degree // 2
    return EllipticRestriction(total_degree, (SplittingType((hi, lo)),))


@dataclass(frozen=True)
class CurveFamily:
    """A family descriptor; ``custom`` passes a caller-supplied ``d(W)`` through unvalidated."""

    kind: str
    normal_degrees: tuple[int, ...] | None = None
    dim_L: int | None = None
    custom_dW: Fraction | None = None
    dW: Fraction = field(init=False)
    validated: bool = field(init=False)

    def __post_init__(self) -> None:
        if self.kind == "rational":
            value, ok = d_rational(self.normal_degrees or ()), True
        elif self.kind == "elliptic_pencil":
            if self.dim_L is None:
                raise PencilTooSmall("elliptic_pencil family needs dim_L")
            value, ok = d_elliptic(self.dim_L), True
        elif self.kind == "custom":
            if self.custom_dW is None:
                raise UnknownFamilyKind("custom family needs an explicit dW")
            value, ok = as_rational(self.custom_dW), False
        else:
            raise UnknownFamilyKind(f"unknown family kind {self.kind!r}")
        object.__setattr__(self, "dW", value)
        object.__setattr__(self, "validated", ok)

    @classmethod
    def from_dict(cls, data: Mapping[str, Any]) -> "CurveFamily":
        kind = data.get("kind")
        if kind == "rational":
            return cls(kind, normal_degrees=tuple(data["normal_degrees"]))
        if kind == "elliptic_pencil":
            return cls(kind, dim_L=data["dim_L"])
        if kind == "custom":
            return cls(kind, custom_dW=as_rational(data["dW"]))
        raise UnknownFamilyKind(f"unknown family kind {kind!r}")

