"""Exact divisor arithmetic on P(1,a,b) and on weighted blow-ups of P(1,1,2).

Divisor classes are rational combinations of the named boundary curves:
Dx, Dy, Dz on a weighted projective plane, plus the exceptional curve E on
a blow-up.  The pairing on the blow-up is pinned by the strict-transform
relations Dy = Dx - p*E, Dz = 2*Dx - q*E together with Dx^2 = 1/2,
Dx.E = 0, E^2 = -1/(p*q); an independent fan-based computation of E^2 from
the ray list is provided as a cross-check.  Ampleness is decided by the
toric criterion: positivity against every torus-invariant curve.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Dict, Iterable, List, Mapping, Optional, Tuple, Union

from .poly import Scalar, _coerce
from .weights import boundary_contact_points, by_name


class ToricError(ValueError):
    pass


@dataclass(frozen=True)
class WPSPlane:
    """The weighted projective plane P(1, a, b) with gcd(a, b) = 1."""

    a: int
    b: int

    def __post_init__(self):
        if self.a < 1 or self.b < 1 or gcd(self.a, self.b) != 1:
            raise ToricError(f"weights (1,{self.a},{self.b}) must be coprime positive")

    @property
    def weights(self) -> Tuple[int, int, int]:
        return (1, self.a, self.b)

    @property
    def divisor_names(self) -> Tuple[str, ...]:
        return ("Dx", "Dy", "Dz")

    def __str__(self) -> str:
        return f"P(1,{self.a},{self.b})"

    def to_json(self) -> dict:
        return {"kind": "wps", "weights": [1, self.a, self.b]}


@dataclass(frozen=True)
class BlownUpSurface:
    """Weighted blow-up of P(1,1,2) at the smooth point [1:0:0].

    The local coordinates (y, z) receive weights (p, q).  The stored ray
    list follows the order (Dy-side ray, exceptional ray, Dz-side ray,
    Dx ray); divisor coefficient arrays in the JSON schema use that order.
    """

    p: int
    q: int

    def __post_init__(self):
        if self.p < 1 or self.q < 1 or gcd(self.p, self.q) != 1:
            raise ToricError(f"blow-up weights ({self.p},{self.q}) must be coprime positive")

    @property
    def base(self) -> WPSPlane:
        return WPSPlane(1, 2)

    @property
    def rays(self) -> Tuple[Tuple[int, int], ...]:
        return ((1, 0), (self.q, self.p), (0, 1), (-1, -2))

    @property
    def divisor_names(self) -> Tuple[str, ...]:
        return ("Dx", "Dy", "Dz", "E")

    # JSON coefficient arrays follow the ray order above.
    RAY_DIVISOR_ORDER = ("Dy", "E", "Dz", "Dx")

    def __str__(self) -> str:
        return f"Bl^({self.p},{self.q}) P(1,1,2)"

    def to_json(self) -> dict:
        return {
            "kind": "blowup",
            "base": [1, 1, 2],
            "blowWeights": [self.p, self.q],
            "rays": [list(r) for r in self.rays],
        }


Surface = Union[WPSPlane, BlownUpSurface]


class DivisorClass:
    """A rational combination of named boundary divisors on a fixed surface."""

    __slots__ = ("surface", "coefficients")

    def __init__(self, surface: Surface, coefficients: Mapping[str, Scalar]):
        clean: Dict[str, Fraction] = {}
        for name, value in coefficients.items():
            if name not in surface.divisor_names:
                raise ToricError(f"{surface} has no boundary divisor named {name!r}")
            value = _coerce(value)
            if value:
                clean[name] = value
        object.__setattr__(self, "surface", surface)
        object.__setattr__(self, "coefficients", clean)

    def __setattr__(self, name, value):
        raise AttributeError("DivisorClass is immutable")

    def coefficient(self, name: str) -> Fraction:
        return self.coefficients.get(name, Fraction(0))

    def __add__(self, other: "DivisorClass") -> "DivisorClass":
        if not isinstance(other, DivisorClass):
            return NotImplemented
        if other.surface != self.surface:
            raise ToricError("divisors live on different surfaces")
        total = dict(self.coefficients)
        for name, value in other.coefficients.items():
            total[name] = total.get(name, Fraction(0)) + value
        return DivisorClass(self.surface, total)

    def __sub__(self, other: "DivisorClass") -> "DivisorClass":
        return self + (-1) * other

    def __mul__(self, scalar) -> "DivisorClass":
        value = _coerce(scalar)
        return DivisorClass(self.surface, {n: c * value for n, c in self.coefficients.items()})

    __rmul__ = __mul__

    def __neg__(self) -> "DivisorClass":
        return (-1) * self

    def __eq__(self, other) -> bool:
        if not isinstance(other, DivisorClass):
            return NotImplemented
        return self.surface == other.surface and self.coefficients == other.coefficients

    def __str__(self) -> str:
        if not self.coefficients:
            return "0"
        return " + ".join(f"({c})*{n}" for n, c in sorted(self.coefficients.items()))

    def to_json(self) -> dict:
        if isinstance(self.surface, BlownUpSurface):
            order = self.surface.RAY_DIVISOR_ORDER
        else:
            order = self.surface.divisor_names
        return {
            "surface": self.surface.to_json(),
            "coefficients": [
                {"num": self.coefficient(n).numerator, "den": self.coefficient(n).denominator}
                for n in order
            ],
        }


def divisor(surface: Surface, name: str) -> DivisorClass:
    return DivisorClass(surface, {name: 1})


# --------------------------------------------------------------- the pairing

_WPS_TABLE = {
    ("Dx", "Dx"): lambda a, b: Fraction(1, a * b),
    ("Dx", "Dy"): lambda a, b: Fraction(1, b),
    ("Dx", "Dz"): lambda a, b: Fraction(1, a),
    ("Dy", "Dy"): lambda a, b: Fraction(a, b),
    ("Dy", "Dz"): lambda a, b: Fraction(1),
    ("Dz", "Dz"): lambda a, b: Fraction(b, a),
}


def _wps_pair(surface: WPSPlane, n1: str, n2: str) -> Fraction:
    key = tuple(sorted((n1, n2)))
    return _WPS_TABLE[key](surface.a, surface.b)


def _blowup_basis(surface: BlownUpSurface, name: str) -> Tuple[Fraction, Fraction]:
    """Coordinates of a named boundary divisor in the (Dx, E) basis."""
    p, q = surface.p, surface.q
    return {
        "Dx": (Fraction(1), Fraction(0)),
        "Dy": (Fraction(1), Fraction(-p)),
        "Dz": (Fraction(2), Fraction(-q)),
        "E": (Fraction(0), Fraction(1)),
    }[name]


def _blowup_pair(surface: BlownUpSurface, n1: str, n2: str) -> Fraction:
    x1, e1 = _blowup_basis(surface, n1)
    x2, e2 = _blowup_basis(surface, n2)
    return x1 * x2 * Fraction(1, 2) + e1 * e2 * Fraction(-1, surface.p * surface.q)


def intersect(d1: DivisorClass, d2: DivisorClass) -> Fraction:
    """Bilinear intersection pairing; both classes must share one surface."""
    if d1.surface != d2.surface:
        raise ToricError("cannot intersect divisors on different surfaces")
    surface = d1.surface
    pair = _wps_pair if isinstance(surface, WPSPlane) else _blowup_pair
    total = Fraction(0)
    for n1, c1 in d1.coefficients.items():
        for n2, c2 in d2.coefficients.items():
            total += c1 * c2 * pair(surface, n1, n2)
    return total


def intersect_wps(surface: WPSPlane, d1: DivisorClass, d2: DivisorClass) -> Fraction:
    if d1.surface != surface or d2.surface != surface:
        raise ToricError("classes do not live on the given plane")
    return intersect(d1, d2)


# ----------------------------------------------------------------- blow-ups


def blowup(p: int, q: int) -> BlownUpSurface:
    return BlownUpSurface(p, q)


def canonical_class(surface: Surface) -> DivisorClass:
    return DivisorClass(surface, {name: -1 for name in surface.divisor_names})


def strict_transform_branch_class(surface: BlownUpSurface, d: int) -> DivisorClass:
    """Class of the strict transform of a degree-10 branch curve: 10*Dx - d*E."""
    return DivisorClass(surface, {"Dx": 10, "E": -d})


def log_pair_class(surface: BlownUpSurface, d: int) -> DivisorClass:
    """K + E + half the strict transform of the degree-10 branch curve."""
    half_branch = Fraction(1, 2) * strict_transform_branch_class(surface, d)
    return canonical_class(surface) + divisor(surface, "E") + half_branch


def e_square_from_rays(surface: BlownUpSurface) -> Fraction:
    """Fan cross-check: recompute E^2 from the stored ray list.

    For consecutive rays u, v, w the self-intersection of the wall divisor
    of v is -det(u, w) / (det(u, v) * det(v, w)).
    """
    rays = surface.rays
    u, v, w = rays[0], rays[1], rays[2]
    det = lambda r, s: r[0] * s[1] - r[1] * s[0]
    return Fraction(-det(u, w), det(u, v) * det(v, w))


# ---------------------------------------------------------------- ampleness


@dataclass(frozen=True)
class AmplenessReport:
    ample: bool
    intersections: Tuple[Tuple[str, Fraction], ...]

    def intersection(self, name: str) -> Fraction:
        for n, v in self.intersections:
            if n == name:
                return v
        raise KeyError(name)


def ample_check(surface: Surface, d: DivisorClass) -> AmplenessReport:
    """Toric Nakai test: ample iff positive against every invariant curve."""
    if d.surface != surface:
        raise ToricError("divisor does not live on the given surface")
    rows = tuple((name, intersect(d, divisor(surface, name))) for name in surface.divisor_names)
    return AmplenessReport(all(v > 0 for _, v in rows), rows)


@dataclass(frozen=True)
class TailAmpleness:
    sigma: str
    c: Fraction
    margin: Fraction
    ample: bool


def tail_ample_constant(sigma) -> TailAmpleness:
    """The constant c with (tail branch curve) ~ c*G, and the ampleness margin.

    c equals p*q times the number of contact points of the tail curve with
    G = V(t); the log canonical class of the tail pair is (c/2 - p - q)*G,
    so ampleness amounts to c/2 - p - q > 0.
    """
    s = by_name(sigma)
    count = len(boundary_contact_points(s))
    c = Fraction(s.p * s.q * count)
    margin = c / 2 - s.p - s.q
    return TailAmpleness(s.name, c, margin, margin > 0)


def log_canonical_toric(surface: Surface, coefficients: Mapping[str, Scalar]) -> bool:
    """Log canonicity of (X, D) for D supported on boundary curves.

    On these Q-factorial surfaces the pair is log canonical as soon as every
    coefficient lies in (0, 1]; an empty boundary is trivially fine.
    """
    for name, value in coefficients.items():
        if name not in surface.divisor_names:
            raise ToricError(f"{surface} has no boundary divisor named {name!r}")
        value = _coerce(value)
        if not (0 < value <= 1):
            return False
    return True


# --------------------------------------------------- quotient singularities


@dataclass(frozen=True)
class CyclicQuotientSingularity:
    """Type 1/r (1, s); r = 1 means a smooth point."""

    r: int
    s: int
    location: str

    @property
    def is_smooth(self) -> bool:
        return self.r == 1

    @property
    def normalized_weight(self) -> int:
        return self.s % self.r if self.r else 0

    def same_type(self, other: "CyclicQuotientSingularity") -> bool:
        return self.r == other.r and self.normalized_weight == other.normalized_weight

    def __str__(self) -> str:
        return f"1/{self.r}(1,{self.s}) at {self.location}"

    def to_json(self) -> dict:
        return {"r": self.r, "s": self.s, "location": self.location}


def quotient_singularities(surface: Surface) -> Tuple[CyclicQuotientSingularity, ...]:
    """Cyclic quotient points of the surface (smooth entries have r = 1)."""
    if isinstance(surface, WPSPlane):
        return (
            CyclicQuotientSingularity(surface.a, surface.b % surface.a if surface.a > 1 else 0, "[0:1:0]"),
            CyclicQuotientSingularity(surface.b, surface.a % surface.b if surface.b > 1 else 0, "[0:0:1]"),
        )
    p, q = surface.p, surface.q
    return (
        CyclicQuotientSingularity(p, -q % p if p > 1 else 0, "E fixed point t1"),
        CyclicQuotientSingularity(q, -p % q if q > 1 else 0, "E fixed point t2"),
    )


# ----------------------------------------------------------- misc formulas


def aut_dimension(surface: WPSPlane) -> int:
    """Dimension of Aut(P(1,a,b)): 5+b when a = 1, else 4 + floor(b/a)."""
    a, b = surface.a, surface.b
    if a == 1:
        return 5 + b
    if a > b:
        a, b = b, a
    return 4 + b // a


def genus_smooth_curve(surface: WPSPlane, d: int) -> Fraction:
    """Genus d(d - w0 - w1 - w2)/(2 w0 w1 w2) + 1 of a smooth degree-d curve."""
    w0, w1, w2 = surface.weights
    return Fraction(d * (d - w0 - w1 - w2), 2 * w0 * w1 * w2) + 1
