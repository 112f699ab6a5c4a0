"""Riemann-Roch for rank-2 bundles and the rank/degree of the spectrum.

Two independent routes are kept side by side.  The Euler characteristic is
assembled from the Chern character and the Todd class of ``Z``; the rank of
the spectrum comes from Riemann-Roch on a surface ``S`` in ``|L|``; the degree
is available both as a closed formula in the Chern numbers and as
``-chi(E) - r``.  :func:`spectrum_degree` insists that the two agree.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from .errors import (
    NegativeRank,
    NonIntegralChi,
    NonIntegralDegree,
    NonIntegralRank,
    NotNormalized,
    RouteMismatch,
)
from .rational import as_integer
from .threefold import BundleChern, ThreefoldInvariants, in_normalization_window, validate_threefold

__all__ = [
    "Td2Pairing",
    "ToddComponents",
    "SpectrumInvariants",
    "todd_components",
    "chi_structure_sheaf_surface",
    "euler_char_threefold",
    "euler_char_integral",
    "euler_char_surface",
    "euler_char_line_bundle",
    "rank_formula",
    "degree_closed_formula",
    "degree_route_formula",
    "spectrum_rank",
    "spectrum_degree",
    "spectrum_invariants",
]


@dataclass(frozen=True)
class Td2Pairing:
    """``Td_2(Z) = lambda^2 / 3 + c2(Z) / 12`` as coefficients on ``lambda^2`` and ``c2(Z)``."""

    lambda_sq: Fraction
    c2Z: Fraction

    def pair(self, chern: BundleChern) -> Fraction:
        """``c1(E) . Td_2(Z)``."""
        return self.lambda_sq * chern.c1_lambdasq + self.c2Z * chern.c1_c2Z


class ToddComponents(NamedTuple):
    td1: Fraction  # coefficient of lambda: Td_1 = c1(Z)/2 = lambda
    td2: Td2Pairing
    td3: Fraction


def todd_components(inv: ThreefoldInvariants) -> ToddComponents:
    inv = validate_threefold(inv)
    # c1(Z) = 2 lambda, so c1(Z)^2 / 12 = lambda^2 / 3 and c1 c2 / 24 = lambda c2 / 12.
    return ToddComponents(
        td1=Fraction(1),
        td2=Td2Pairing(Fraction(1, 3), Fraction(1, 12)),
        td3=Fraction(inv.lambda_c2Z, 12),
    )


def euler_char_threefold(chern: BundleChern, inv: ThreefoldInvariants) -> Fraction:
    """``chi(E) = ch_3 + ch_2 Td_1 + ch_1 Td_2 + 2 Td_3``."""
    td = todd_components(inv)
    ch3 = Fraction(chern.c1_cubed - 3 * chern.c1_c2, 6)
    ch2_td1 = td.td1 * Fraction(chern.p1_lambda, 2)
    ch1_td2 = td.td2.pair(chern)
    return ch3 + ch2_td1 + ch1_td2 + chern.rank * td.td3


def euler_char_integral(chern: BundleChern, inv: ThreefoldInvariants) -> int:
    chi = euler_char_threefold(chern, inv)
    value = as_integer(chi)
    if value is None:
        raise NonIntegralChi(f"chi(E) = {chi} is not an integer; Chern data is inconsistent")
    return value


def euler_char_line_bundle(
    d_cubed: int, dsq_lambda: int, d_lambdasq: int, d_c2Z: int, inv: ThreefoldInvariants
) -> Fraction:
    """Riemann-Roch for a line bundle with first Chern class ``D``."""
    td = todd_components(inv)
    return (
        Fraction(d_cubed, 6)
        + td.td1 * Fraction(dsq_lambda, 2)
        + td.td2.lambda_sq * d_lambdasq
        + td.td2.c2Z * d_c2Z
        + td.td3
    )


def chi_structure_sheaf_surface(inv: ThreefoldInvariants) -> Fraction:
    """``chi(O_S)`` for a smooth ``S`` in ``|L|`` by Noether's formula.

    Adjunction gives ``K_S = -lambda|_S`` so ``K_S^2 = lambda^3``, and
    ``c(T_S) = c(T_Z)|_S / (1 + lambda)`` gives ``c2(S) = lambda c2(Z) - lambda^3``.
    """
    inv = validate_threefold(inv)
    k_sq = inv.lambda3
    c2_s = inv.lambda_c2Z - inv.lambda3
    return Fraction(k_sq + c2_s, 12)


def euler_char_surface(chern: BundleChern, inv: ThreefoldInvariants) -> Fraction:
    """``chi(E_S) = 2 chi(O_S) + c1(c1 - K_S)/2 - c2`` on ``S`` in ``|L|``."""
    chi_o = chi_structure_sheaf_surface(inv)
    # On S every class is cut with lambda; K_S = -lambda.
    return (
        chern.rank * chi_o
        + Fraction(chern.c1sq_lambda + chern.c1_lambdasq, 2)
        - chern.c2_lambda
    )


def rank_formula(chern: BundleChern, inv: ThreefoldInvariants) -> Fraction:
    """``r = -(mu(E) + p1(E) lambda / 2 + 2)``, unchecked."""
    validate_threefold(inv)
    return -(chern.mu + Fraction(chern.p1_lambda, 2) + 2)


def degree_closed_formula(chern: BundleChern, inv: ThreefoldInvariants) -> Fraction:
    """``d = (3 c1 c2 - c1^3)/6 - c1 c2(Z)/12 + mu(E)/3``, unchecked."""
    validate_threefold(inv)
    return (
        Fraction(3 * chern.c1_c2 - chern.c1_cubed, 6)
        - Fraction(chern.c1_c2Z, 12)
        + chern.mu / 3
    )


def degree_route_formula(chern: BundleChern, inv: ThreefoldInvariants) -> Fraction:
    """``d = chi(H) - rk(H) = -chi(E) - r``, unchecked."""
    return -euler_char_threefold(chern, inv) - rank_formula(chern, inv)


def _check_window(chern: BundleChern, inv: ThreefoldInvariants, strict: bool) -> None:
    if strict and not in_normalization_window(chern, inv):
        raise NotNormalized(
            f"mu(E) = {chern.mu} is outside [{1 - inv.lambda3}, 0); normalize first "
            "or pass strict=False for a diagnostic evaluation"
        )


def spectrum_rank(chern: BundleChern, inv: ThreefoldInvariants, *, strict: bool = True) -> int:
    """Rank of the spectrum of a normalized semistable ``E``.

    Semistability is the caller's hypothesis.  A negative value proves that no
    semistable bundle carries this Chern data.
    """
    _check_window(chern, inv, strict)
    r = rank_formula(chern, inv)
    value = as_integer(r)
    if value is None:
        raise NonIntegralRank(f"r = {r} is not an integer")
    if value < 0:
        raise NegativeRank(f"r = {value} < 0: E cannot be semistable with this Chern data")
    return value


def spectrum_degree(chern: BundleChern, inv: ThreefoldInvariants, *, strict: bool = True) -> int:
    """Degree of the spectrum, checked against ``-chi(E) - r``.

    With ``strict=False`` neither the normalization window nor the sign of
    ``r`` is enforced, which allows diagnostic evaluation on arbitrary data.
    """
    _check_window(chern, inv, strict)
    closed = degree_closed_formula(chern, inv)
    value = as_integer(closed)
    if value is None:
        raise NonIntegralDegree(f"d = {closed} is not an integer")
    if strict:
        r = spectrum_rank(chern, inv)
    else:
        r = as_integer(rank_formula(chern, inv))
        if r is None:
            raise NonIntegralRank(f"r = {rank_formula(chern, inv)} is not an integer")
    route = -euler_char_integral(chern, inv) - r
    if route != value:
        raise RouteMismatch(f"closed formula gives d = {value} but -chi(E) - r = {route}")
    return value


@dataclass(frozen=True)
class SpectrumInvariants:
    r: int
    d: int
    chi_E: int
    chi_E_S: int

    def __post_init__(self) -> None:
        assert self.r == -self.chi_E_S
        assert self.d == -self.chi_E - self.r

    def to_dict(self) -> dict[str, int]:
        return {"r": self.r, "d": self.d, "chi_E": self.chi_E, "chi_E_S": self.chi_E_S}


def spectrum_invariants(
    chern: BundleChern, inv: ThreefoldInvariants, *, strict: bool = True
) -> SpectrumInvariants:
    r = spectrum_rank(chern, inv, strict=strict)
    d = spectrum_degree(chern, inv, strict=strict)
    chi_s = as_integer(euler_char_surface(chern, inv))
    if chi_s is None or chi_s != -r:
        raise RouteMismatch(f"surface route gives chi(E_S) = {euler_char_surface(chern, inv)}, r = {r}")
    return SpectrumInvariants(r=r, d=d, chi_E=euler_char_integral(chern, inv), chi_E_S=chi_s)
