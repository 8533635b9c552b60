"""Monomial weight calculus for degree-10 branch curves in P(1,1,2).

The space V10 is spanned by the 36 monomials x^a y^b z^c with a+b+2c = 10.
Each of the eight singularity classes assigns the weight p*b + q*c - d to
such a monomial; exactly two monomials (m1, m2) have weight zero.  U_sigma
is the slice where m1 and m2 carry the same coefficient, and the torus
action t*u rescales non-positive-weight monomials by t^(-weight).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Mapping, Optional, Sequence, Tuple, Union

from .poly import Scalar, SparsePolynomial, _coerce

Monomial110 = Tuple[int, int, int]


class WeightError(ValueError):
    pass


class DegenerateTailError(WeightError):
    """Raised when a tail-curve construction needs a regular element."""


@dataclass(frozen=True)
class SingularityClass:
    """One of the eight unimodular classes, with its weights and degree."""

    name: str
    p: int
    q: int
    d: int
    mu: int

    @property
    def series(self) -> str:
        return self.name[0]

    def __str__(self) -> str:
        return self.name


_TABLE = {
    "E12": (3, 7, 21),
    "E13": (2, 5, 15),
    "E14": (3, 8, 24),
    "Z11": (3, 4, 15),
    "Z12": (2, 3, 11),
    "Z13": (3, 5, 18),
    "W12": (4, 5, 20),
    "W13": (3, 4, 16),
}

SIGMA_ORDER: Tuple[str, ...] = ("E12", "E13", "E14", "Z11", "Z12", "Z13", "W12", "W13")

SINGULARITIES: Dict[str, SingularityClass] = {
    name: SingularityClass(name, p, q, d, int(name[1:]))
    for name, (p, q, d) in _TABLE.items()
}

ZW_NAMES: Tuple[str, ...] = ("Z11", "Z12", "Z13", "W12", "W13")


def by_name(sigma: Union[str, SingularityClass]) -> SingularityClass:
    if isinstance(sigma, SingularityClass):
        return sigma
    try:
        return SINGULARITIES[sigma]
    except KeyError:
        raise WeightError(f"unknown singularity class {sigma!r}") from None


def all_monomials() -> Tuple[Monomial110, ...]:
    """The 36 exponent triples (a, b, c) with a + b + 2c = 10, lex sorted."""
    out: List[Monomial110] = []
    for a in range(11):
        for b in range(11 - a):
            rest = 10 - a - b
            if rest % 2 == 0:
                out.append((a, b, rest // 2))
    return tuple(sorted(out))


MONOMIALS_110: Tuple[Monomial110, ...] = all_monomials()


def weight(sigma, m: Monomial110) -> int:
    """Weight p*b + q*c - d of the monomial x^a y^b z^c."""
    s = by_name(sigma)
    a, b, c = m
    if (a, b, c) not in _MONOMIAL_SET:
        raise WeightError(f"{m} is not a degree-10 monomial exponent triple")
    return s.p * b + s.q * c - s.d


_MONOMIAL_SET = frozenset(MONOMIALS_110)


@dataclass(frozen=True)
class WeightDecomposition:
    sigma: SingularityClass
    positive: Tuple[Monomial110, ...]
    zero: Tuple[Monomial110, ...]
    negative: Tuple[Monomial110, ...]
    m1: Monomial110
    m2: Monomial110


def classify(sigma) -> WeightDecomposition:
    """Partition the 36 monomials by weight sign; m1 is the y-heavy zero."""
    s = by_name(sigma)
    positive, zero, negative = [], [], []
    for m in MONOMIALS_110:
        w = weight(s, m)
        (positive if w > 0 else zero if w == 0 else negative).append(m)
    if len(zero) != 2:
        raise WeightError(f"{s.name}: expected two weight-zero monomials, got {zero}")
    m1, m2 = sorted(zero, key=lambda m: m[1], reverse=True)
    return WeightDecomposition(s, tuple(positive), tuple(zero), tuple(negative), m1, m2)


def monomial_string(m: Monomial110) -> str:
    a, b, c = m
    parts = []
    for name, e in (("x", a), ("y", b), ("z", c)):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts) if parts else "1"


XYZ = ("x", "y", "z")
TXYZ = ("t", "x", "y", "z")
TAB = ("t", "alpha", "beta")


class UElement:
    """An element of U_sigma: a degree-10 polynomial whose two weight-zero
    monomials carry the same coefficient.

    Immutable; supports +, scalar *, and exact comparison.
    """

    __slots__ = ("sigma", "coefficients")

    def __init__(self, sigma, coefficients: Mapping[Monomial110, Scalar]):
        s = by_name(sigma)
        clean: Dict[Monomial110, Fraction] = {}
        for m, c in coefficients.items():
            m = tuple(m)
            if m not in _MONOMIAL_SET:
                raise WeightError(f"{m} is not a degree-10 monomial exponent triple")
            value = _coerce(c)
            if value:
                clean[m] = value
        dec = classify(s)
        if clean.get(dec.m1, Fraction(0)) != clean.get(dec.m2, Fraction(0)):
            raise WeightError(
                f"not in U_{s.name}: coefficients of {monomial_string(dec.m1)} and "
                f"{monomial_string(dec.m2)} differ"
            )
        object.__setattr__(self, "sigma", s)
        object.__setattr__(self, "coefficients", clean)

    def __setattr__(self, name, value):
        raise AttributeError("UElement is immutable")

    @classmethod
    def from_polynomial(cls, sigma, poly: SparsePolynomial) -> "UElement":
        if tuple(poly.variables) != XYZ:
            poly = poly.with_variables(XYZ)
        coeffs: Dict[Monomial110, Fraction] = {}
        for (a, b, c), value in poly.terms.items():
            if (a, b, c) not in _MONOMIAL_SET:
                raise WeightError(f"monomial x^{a}y^{b}z^{c} does not have degree 10")
            coeffs[(a, b, c)] = value
        return cls(sigma, coeffs)

    def coefficient(self, m: Monomial110) -> Fraction:
        return self.coefficients.get(tuple(m), Fraction(0))

    @property
    def regular(self) -> bool:
        dec = classify(self.sigma)
        return bool(self.coefficient(dec.m1))

    @property
    def is_zero(self) -> bool:
        return not self.coefficients

    def support(self) -> Tuple[Monomial110, ...]:
        return tuple(sorted(self.coefficients))

    def __add__(self, other: "UElement") -> "UElement":
        if not isinstance(other, UElement):
            return NotImplemented
        if other.sigma != self.sigma:
            raise WeightError("cannot add elements attached to different classes")
        total = dict(self.coefficients)
        for m, c in other.coefficients.items():
            total[m] = total.get(m, Fraction(0)) + c
        return UElement(self.sigma, total)

    def __mul__(self, scalar) -> "UElement":
        value = _coerce(scalar)
        return UElement(self.sigma, {m: c * value for m, c in self.coefficients.items()})

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, UElement):
            return NotImplemented
        return self.sigma == other.sigma and self.coefficients == other.coefficients

    def __hash__(self):
        return hash((self.sigma, frozenset(self.coefficients.items())))

    def to_polynomial(self) -> SparsePolynomial:
        return SparsePolynomial(XYZ, dict(self.coefficients))

    def __str__(self) -> str:
        return str(self.to_polynomial())

    def __repr__(self) -> str:
        return f"UElement({self.sigma.name}, {self})"

    def to_json(self) -> dict:
        return {
            "sigma": self.sigma.name,
            "coefficients": [
                {"a": a, "b": b, "c": c, "num": v.numerator, "den": v.denominator}
                for (a, b, c), v in sorted(self.coefficients.items())
            ],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "UElement":
        coeffs = {
            (int(e["a"]), int(e["b"]), int(e["c"])): Fraction(int(e["num"]), int(e["den"]))
            for e in data["coefficients"]
        }
        return cls(data["sigma"], coeffs)


def project(u: UElement) -> Tuple[UElement, UElement, UElement]:
    """Split u into its positive, zero, and negative weight parts."""
    plus: Dict[Monomial110, Fraction] = {}
    zero: Dict[Monomial110, Fraction] = {}
    minus: Dict[Monomial110, Fraction] = {}
    for m, c in u.coefficients.items():
        w = weight(u.sigma, m)
        (plus if w > 0 else zero if w == 0 else minus)[m] = c
    s = u.sigma
    return UElement(s, plus), UElement(s, zero), UElement(s, minus)


def c_star_act(u: UElement, t: Optional[Scalar] = None) -> SparsePolynomial:
    """The torus action t*u as a polynomial in (t, x, y, z).

    Monomials of weight w <= 0 are scaled by t^(-w); positive-weight ones are
    untouched.  Passing a rational t substitutes it (one code path: the formal
    result is specialized).
    """
    terms: Dict[Tuple[int, int, int, int], Fraction] = {}
    for (a, b, c), coeff in u.coefficients.items():
        w = weight(u.sigma, (a, b, c))
        terms[(max(-w, 0), a, b, c)] = coeff
    formal = SparsePolynomial(TXYZ, terms)
    if t is None:
        return formal
    return formal.substitute({"t": _coerce(t)}).with_variables(TXYZ)


def theta_map(poly: SparsePolynomial) -> SparsePolynomial:
    """Ring map t->t, x->1, y->alpha, z->beta applied to a (t,x,y,z) polynomial."""
    if tuple(poly.variables) != TXYZ:
        poly = poly.with_variables(TXYZ)
    terms: Dict[Tuple[int, int, int], Fraction] = {}
    for (et, _, ey, ez), coeff in poly.terms.items():
        key = (et, ey, ez)
        acc = terms.get(key, Fraction(0)) + coeff
        if acc:
            terms[key] = acc
        else:
            terms.pop(key, None)
    return SparsePolynomial(TAB, terms)


def theta_tail(sigma, u: UElement) -> SparsePolynomial:
    """Equation of the tail curve: theta applied to the non-positive part of t*u.

    Homogeneous of degree d once t, alpha, beta get degrees 1, p, q.
    """
    s = by_name(sigma)
    if u.sigma != s:
        raise WeightError(f"element is attached to {u.sigma.name}, not {s.name}")
    if not u.regular:
        raise DegenerateTailError(
            f"element is not regular (its weight-zero part vanishes): {u}"
        )
    _, zero, minus = project(u)
    tail = theta_map(c_star_act(zero + minus))
    degrees = set()
    for (et, ea, eb), _ in tail.terms.items():
        degrees.add(et + s.p * ea + s.q * eb)
    if degrees != {s.d}:
        raise WeightError(f"tail curve is not homogeneous of degree {s.d}: {tail}")
    return tail


def count_degree_d_monomials(p: int, q: int, d: int) -> int:
    """Number of monomials t^i alpha^j beta^k with i + p*j + q*k = d."""
    count = 0
    for j in range(d // p + 1):
        for k in range((d - p * j) // q + 1):
            if d - p * j - q * k >= 0:
                count += 1
    return count


def sigma_generic_necessary(u: UElement) -> Dict[str, bool]:
    """Checkable necessary conditions for genericity of the degeneration.

    (i) the z^5 coefficient is nonzero, (ii) the element is regular, and
    (iii) the two weight-zero coefficients agree and are nonzero.  Sufficiency
    (uniqueness of the singular point, smoothness of nearby fibers) is out of
    reach of a syntactic test and is not decided here.
    """
    dec = classify(u.sigma)
    z5 = bool(u.coefficient((0, 0, 5)))
    regular = u.regular
    pair = u.coefficient(dec.m1) == u.coefficient(dec.m2) and bool(u.coefficient(dec.m1))
    return {
        "z5_nonzero": z5,
        "regular": regular,
        "zero_pair_equal_nonzero": pair,
        "all_pass": z5 and regular and pair,
    }


def boundary_contact_points(sigma) -> Tuple[Tuple[int, int, int], ...]:
    """Points of P(1,p,q) where the tail curve meets the curve t = 0.

    theta(m1 + m2) factors as alpha^A beta^B (alpha^q + beta^p); the factor
    alpha^A adds [0:0:1], beta^B adds [0:1:0], and the binomial contributes
    [0:1:-1] for odd p and [0:-1:1] for even p.
    """
    s = by_name(sigma)
    dec = classify(s)
    (_, b1, c1), (_, b2, c2) = dec.m1, dec.m2
    a_exp, b_exp = min(b1, b2), min(c1, c2)
    residual = {(b1 - a_exp, c1 - b_exp), (b2 - a_exp, c2 - b_exp)}
    if residual != {(s.q, 0), (0, s.p)}:
        raise WeightError(f"{s.name}: unexpected weight-zero pair factorization")
    points: List[Tuple[int, int, int]] = []
    if b_exp > 0:
        points.append((0, 1, 0))
    if a_exp > 0:
        points.append((0, 0, 1))
    points.append((0, 1, -1) if s.p % 2 == 1 else (0, -1, 1))
    return tuple(points)


SXYZ = ("s", "x", "y", "z")


def truncate_dvr(sigma, series: SparsePolynomial) -> Tuple[SparsePolynomial, Optional[UElement]]:
    """Lowest-order truncation of a V10-valued polynomial family over a DVR.

    ``series`` lives in (s, x, y, z): each degree-10 monomial m carries a
    polynomial coefficient f_m(s), which is truncated to its lowest-order
    term.  Returns the truncation together with the regular element u
    witnessing tau(f) = s*u, or None when the truncation does not have that
    shape (the family is not generic for this class at the DVR level).
    """
    s = by_name(sigma)
    if tuple(series.variables) != SXYZ:
        series = series.with_variables(SXYZ)
    per_monomial: Dict[Monomial110, Dict[int, Fraction]] = {}
    for (es, a, b, c), coeff in series.terms.items():
        if (a, b, c) not in _MONOMIAL_SET:
            raise WeightError(f"monomial x^{a}y^{b}z^{c} does not have degree 10")
        per_monomial.setdefault((a, b, c), {})[es] = coeff
    truncated: Dict[Tuple[int, int, int, int], Fraction] = {}
    witness: Dict[Monomial110, Fraction] = {}
    shape_ok = True
    for m, series_coeffs in per_monomial.items():
        order = min(series_coeffs)
        value = series_coeffs[order]
        a, b, c = m
        truncated[(order, a, b, c)] = value
        if order == max(-weight(s, m), 0):
            witness[m] = value
        else:
            shape_ok = False
    tau = SparsePolynomial(SXYZ, truncated)
    if not shape_ok:
        return tau, None
    try:
        u = UElement(s, witness)
    except WeightError:
        return tau, None
    if not u.regular:
        return tau, None
    return tau, u
