"""Intersection-number model of a threefold with a half-anticanonical bundle.

A threefold ``Z`` is described only through the numbers that the spectrum
formulas need: ``lambda^3`` and ``lambda . c2(Z)`` for ``lambda = c1(L)``,
``L^2 = K_Z^-1``, together with ``dim |L|``.  A rank-2 bundle ``E`` is
described by six intersection numbers of its Chern classes.  No Picard lattice
is modelled, so ``det E`` need not be a multiple of ``L``.

Slope convention: degrees are measured on the base curve of a generic pencil
in ``|L|``, whose class is ``lambda^2``.  Hence ``mu(E) = c1(E).lambda^2 / 2``
and ``mu(L) = lambda^3``.
"""
from __future__ import annotations

from dataclasses import asdict, dataclass, fields
from fractions import Fraction
from typing import Any, Mapping

from .errors import (
    InvalidChernData,
    NonPositiveDegree,
    NotNormalizable,
    PencilTooSmall,
    ToddViolation,
    UnknownEntry,
)

__all__ = [
    "ThreefoldInvariants",
    "ValidatedThreefold",
    "BundleChern",
    "NormalizationResult",
    "CATALOG",
    "validate_threefold",
    "catalog_lookup",
    "catalog_names",
    "slope",
    "mu_L",
    "twist",
    "normalize",
    "in_normalization_window",
]

# lambda . c2(Z) is pinned by Todd_3(Z) = lambda c2(Z) / 12 = chi(O_Z) = 1.
TODD_LAMBDA_C2 = 12
MIN_DIM_L = 3


def _check_int(name: str, value: Any) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise InvalidChernData(f"{name} must be an integer, got {value!r}")
    return value


@dataclass(frozen=True)
class ThreefoldInvariants:
    lambda3: int
    lambda_c2Z: int
    dim_L: int
    name: str | None = None

    def __post_init__(self) -> None:
        for f in ("lambda3", "lambda_c2Z", "dim_L"):
            _check_int(f, getattr(self, f))

    @classmethod
    def from_dict(cls, data: Mapping[str, Any]) -> "ThreefoldInvariants":
        try:
            return cls(
                lambda3=data["lambda3"],
                lambda_c2Z=data["lambda_c2Z"],
                dim_L=data["dim_L"],
                name=data.get("name"),
            )
        except KeyError as exc:
            raise InvalidChernData(f"missing threefold field {exc.args[0]!r}") from None

    def to_dict(self) -> dict[str, Any]:
        out: dict[str, Any] = {
            "lambda3": self.lambda3,
            "lambda_c2Z": self.lambda_c2Z,
            "dim_L": self.dim_L,
        }
        if self.name is not None:
            out["name"] = self.name
        return out


@dataclass(frozen=True)
class ValidatedThreefold(ThreefoldInvariants):
    """Threefold invariants that passed :func:`validate_threefold`."""


def validate_threefold(inv: ThreefoldInvariants) -> ValidatedThreefold:
    if isinstance(inv, ValidatedThreefold):
        return inv
    if inv.lambda_c2Z != TODD_LAMBDA_C2:
        raise ToddViolation(
            f"lambda.c2(Z) = {inv.lambda_c2Z}, but Todd_3(Z) = 1 forces {TODD_LAMBDA_C2}"
        )
    if inv.lambda3 < 1:
        raise NonPositiveDegree(f"lambda^3 = {inv.lambda3} must be at least 1")
    if inv.dim_L < MIN_DIM_L:
        raise PencilTooSmall(f"dim|L| = {inv.dim_L} must be at least {MIN_DIM_L}")
    return ValidatedThreefold(inv.lambda3, inv.lambda_c2Z, inv.dim_L, inv.name)


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    lambda3: int
    description: str

    @property
    def invariants(self) -> ValidatedThreefold:
        return validate_threefold(
            ThreefoldInvariants(self.lambda3, TODD_LAMBDA_C2, self.lambda3 + 1, self.name)
        )


# dim|L| = h0(L) - 1 = chi(L) - 1 = lambda^3 + 1 for every entry.
CATALOG: dict[str, CatalogEntry] = {
    e.name: e
    for e in (
        CatalogEntry("p3-o2", 8, "projective 3-space with L = O(2)"),
        CatalogEntry("cubic", 3, "cubic threefold in P^4, L = O(1)"),
        CatalogEntry("flag", 6, "flag manifold F(1,2) in P^2 x P^2*, L = O(1,1)"),
        CatalogEntry("quadric-intersection", 4, "complete intersection of two quadrics in P^5"),
        CatalogEntry("double-solid", 2, "double cover of P^3 branched along a quartic"),
    )
}


def catalog_names() -> list[str]:
    return list(CATALOG)


def catalog_lookup(name: str) -> ValidatedThreefold:
    try:
        return CATALOG[name].invariants
    except KeyError:
        known = ", ".join(CATALOG)
        raise UnknownEntry(f"unknown threefold {name!r}; known: {known}") from None


@dataclass(frozen=True)
class BundleChern:
    """Intersection numbers of a rank-2 bundle ``E`` on ``Z``.

    ``c1_lambdasq`` is ``c1(E).lambda^2`` and ``c1_c2Z`` is ``c1(E).c2(Z)``;
    the other names read the same way.
    """

    c1_cubed: int
    c1_c2: int
    c1sq_lambda: int
    c2_lambda: int
    c1_lambdasq: int
    c1_c2Z: int

    rank = 2

    def __post_init__(self) -> None:
        for f in fields(self):
            _check_int(f.name, getattr(self, f.name))

    @property
    def p1_lambda(self) -> int:
        """``p1(E).lambda`` with ``p1 = c1^2 - 2 c2``."""
        return self.c1sq_lambda - 2 * self.c2_lambda

    @property
    def mu(self) -> Fraction:
        return Fraction(self.c1_lambdasq, 2)

    @classmethod
    def zero(cls) -> "BundleChern":
        return cls(0, 0, 0, 0, 0, 0)

    @classmethod
    def from_dict(cls, data: Mapping[str, Any]) -> "BundleChern":
        names = [f.name for f in fields(cls)]
        missing = [n for n in names if n not in data]
        if missing:
            raise InvalidChernData(f"missing Chern fields: {', '.join(missing)}")
        return cls(**{n: data[n] for n in names})

    def to_dict(self) -> dict[str, int]:
        return asdict(self)


@dataclass(frozen=True)
class NormalizationResult:
    twist_exponent: int
    normalized: BundleChern
    mu_normalized: Fraction


def mu_L(inv: ThreefoldInvariants) -> Fraction:
    return Fraction(validate_threefold(inv).lambda3)


def slope(chern: BundleChern, inv: ThreefoldInvariants) -> Fraction:
    validate_threefold(inv)
    return chern.mu


def twist(chern: BundleChern, inv: ThreefoldInvariants, m: int) -> BundleChern:
    """Chern data of ``E (x) L^m``: ``c1 + 2m lambda``, ``c2 + m c1 lambda + m^2 lambda^2``."""
    l3 = validate_threefold(inv).lambda3
    c = chern
    return BundleChern(
        c1_cubed=c.c1_cubed + 6 * m * c.c1sq_lambda + 12 * m**2 * c.c1_lambdasq + 8 * m**3 * l3,
        c1_c2=(
            c.c1_c2
            + m * (c.c1sq_lambda + 2 * c.c2_lambda)
            + 3 * m**2 * c.c1_lambdasq
            + 2 * m**3 * l3
        ),
        c1sq_lambda=c.c1sq_lambda + 4 * m * c.c1_lambdasq + 4 * m**2 * l3,
        c2_lambda=c.c2_lambda + m * c.c1_lambdasq + m**2 * l3,
        c1_lambdasq=c.c1_lambdasq + 2 * m * l3,
        c1_c2Z=c.c1_c2Z + 2 * m * inv.lambda_c2Z,
    )


def in_normalization_window(chern: BundleChern, inv: ThreefoldInvariants) -> bool:
    l3 = validate_threefold(inv).lambda3
    return 1 - l3 <= chern.mu < 0


def normalize(chern: BundleChern, inv: ThreefoldInvariants) -> NormalizationResult:
    """Twist ``E`` by the unique power of ``L`` that lands ``mu`` in ``[1 - mu(L), 0)``.

    Twisting moves ``mu`` in steps of ``mu(L)`` while the window is one unit
    narrower, so some bundles have no normalized twist at all.
    """
    l3 = validate_threefold(inv).lambda3
    mu = chern.mu
    m = -(mu // l3) - 1
    mu_new = mu + m * l3
    if mu_new < 1 - l3:
        raise NotNormalizable(
            f"mu(E) = {mu} has no L-twist in [{1 - l3}, 0): the closest is {mu_new}"
        )
    return NormalizationResult(int(m), twist(chern, inv, int(m)), mu_new)
