"""Plane-sextic models for the Z and W classes.

The squaring map [x:y:z] -> [xy : y^2 : z] turns the non-negative-weight
part of a branch curve into a plane sextic after one extra factor of x1:
the monomial x^a y^b z^c goes to x0^a x1^((b-a)/2 + 1) x2^c.  For the E
classes the weight-zero monomial x^4 z^3 would need a negative exponent,
so no sextic model exists there.

The bundled sample curves specialize the generic model with small integer
coefficients; their singular loci and line incidences are certified by
exact resultant elimination (never by numerical root finding).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .poly import (
    PolynomialError,
    SparsePolynomial,
    _uv_gcd,
    _uv_rational_roots,
    _uv_squarefree_decomposition,
    parse_polynomial,
    resultant,
)
from .singularities import classify_local
from .weights import Monomial110, UElement, ZW_NAMES, by_name, classify, project, weight

X012 = ("x0", "x1", "x2")


class SexticError(ValueError):
    pass


class NotTransformableError(SexticError):
    """The monomial (or class) admits no plane-sextic image."""


class PositiveDimensionalSingularLocusError(SexticError):
    pass


def mu_transform(sigma, m: Monomial110) -> Tuple[int, int, int]:
    """Ternary exponents of the sextic image of a non-negative monomial."""
    s = by_name(sigma)
    if s.name not in ZW_NAMES:
        raise NotTransformableError(f"{s.name}: only the Z and W classes have sextic models")
    a, b, c = m
    if weight(s, m) < 0:
        raise NotTransformableError(f"{m} has negative weight for {s.name}")
    if (b - a) % 2 != 0:
        raise NotTransformableError(f"{m}: exponent (b-a)/2 is not an integer")
    e1 = (b - a) // 2 + 1
    if e1 < 0:
        raise NotTransformableError(f"{m}: sextic image would need exponent {e1} on x1")
    return (a, e1, c)


@dataclass(frozen=True)
class SexticModel:
    sigma: str
    form: SparsePolynomial  # degree-6 in (x0, x1, x2)
    line: str = "x1"

    def to_json(self) -> dict:
        return {"sigma": self.sigma, "form": str(self.form), "line": self.line}


def sextic_model(sigma, u: UElement) -> SexticModel:
    """Image of the non-negative part of u as a plane sextic."""
    s = by_name(sigma)
    if u.sigma != s:
        raise SexticError(f"element is attached to {u.sigma.name}, not {s.name}")
    if not u.regular:
        raise SexticError("a sextic model needs a regular element")
    plus, zero, _ = project(u)
    terms: Dict[Tuple[int, int, int], Fraction] = {}
    for part in (plus, zero):
        for m, coeff in part.coefficients.items():
            exps = mu_transform(s, m)
            terms[exps] = terms.get(exps, Fraction(0)) + coeff
    form = SparsePolynomial(X012, terms)
    for exps in form.terms:
        if sum(exps) != 6:
            raise SexticError(f"image term x0^{exps[0]} x1^{exps[1]} x2^{exps[2]} is not sextic")
    return SexticModel(s.name, form)


# ------------------------------------------------------------------- samples

# Sample coefficient choices for the five models.  The two weight-zero
# monomials carry equal coefficient 1, and the positive-weight monomial
# x^2 z^4 is included where available so that the line section x1 = 0
# acquires the generic contact pattern rather than a degenerate one.
_SAMPLE_TEXT = {
    "Z11": "x1*(x0^5 + x1^5 + x2^5) + x0^2*x2^3*(x0 + x2)",
    "Z12": "x1*(x2*(x0^4 + x1^4 + x2^4) + x1*(x0^4 + x1^4)) + x0^2*x2^3*(x0 + x2)",
    "Z13": "x1*(x2^2*(x0^3 + x1^3 + x2^3) + x1*x2*(x0^3 + x1^3) + x1*(x0^4 + x1^4))"
    " + x0^2*x2^3*(x0 + x1 + x2)",
    "W12": "x1*(x0^5 + x1^5 + x2^5) + x2^4*x0^2",
    "W13": "x1*(x1^5 + x0^4*x2 + x2^5) + x0^2*x2^4",
}

SAMPLE_FORMS: Dict[str, SparsePolynomial] = {
    name: parse_polynomial(text, X012) for name, text in _SAMPLE_TEXT.items()
}


def _sample_u(sigma) -> UElement:
    """Pull the sample sextic back to a degree-10 element."""
    s = by_name(sigma)
    form = SAMPLE_FORMS[s.name]
    coeffs: Dict[Monomial110, Fraction] = {}
    for (e0, e1, e2), value in form.terms.items():
        a = e0
        b = e0 + 2 * e1 - 2
        c = e2
        coeffs[(a, b, c)] = value
    return UElement(s, coeffs)


SAMPLE_ELEMENTS: Dict[str, UElement] = {}


def sample_element(sigma) -> UElement:
    s = by_name(sigma)
    if s.name not in ZW_NAMES:
        raise NotTransformableError(f"{s.name}: no sample sextic exists for the E classes")
    if s.name not in SAMPLE_ELEMENTS:
        SAMPLE_ELEMENTS[s.name] = _sample_u(s)
    return SAMPLE_ELEMENTS[s.name]


def sample_model(sigma) -> SexticModel:
    return sextic_model(sigma, sample_element(sigma))


# ------------------------------------------------------------ line incidence


def _normalize_point(coords: Sequence[Fraction]) -> Tuple[Fraction, ...]:
    """Scale so the last nonzero coordinate is 1."""
    last = max(i for i, c in enumerate(coords) if c)
    scale = coords[last]
    return tuple(c / scale for c in coords)


def point_label(coords: Sequence[Fraction]) -> str:
    def fmt(c: Fraction) -> str:
        return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"

    return "[" + ":".join(fmt(c) for c in coords) + "]"


@dataclass(frozen=True)
class IncidenceReport:
    partition: Tuple[int, ...]
    rational_points: Tuple[Tuple[Tuple[Fraction, ...], int], ...]

    def to_json(self) -> dict:
        return {
            "partition": list(self.partition),
            "points": [
                {"point": point_label(pt), "multiplicity": m} for pt, m in self.rational_points
            ],
        }


def line_incidence(model: SexticModel) -> IncidenceReport:
    """Multiplicity partition of the intersection with the line x1 = 0.

    The restriction is factored exactly over Q: squarefree splitting yields
    the multiplicity of every (complex) point, and rational points are
    reported with coordinates.
    """
    restriction = model.form.substitute({"x1": 0})
    binary = SparsePolynomial(
        ("x0", "x2"), {(e0, e2): c for (e0, e1, e2), c in restriction.terms.items() if e1 == 0}
    )
    if binary.is_zero:
        raise SexticError("the line x1 = 0 is a component of the curve")
    x_exps = [e[0] for e in binary.terms]
    y_exps = [e[1] for e in binary.terms]
    a, b = min(x_exps), min(y_exps)
    multiplicities: List[int] = []
    rational: List[Tuple[Tuple[Fraction, ...], int]] = []
    if a:
        multiplicities.append(a)
        rational.append(((Fraction(0), Fraction(0), Fraction(1)), a))
    if b:
        multiplicities.append(b)
        rational.append(((Fraction(1), Fraction(0), Fraction(0)), b))
    degree = binary.homogeneous_degree()
    coeffs = [Fraction(0)] * (degree - a - b + 1)
    for (ex, _), c in binary.terms.items():
        coeffs[ex - a] = c
    if len(coeffs) > 1:
        for factor, mult in _uv_squarefree_decomposition(coeffs):
            roots = _uv_rational_roots(factor)
            for root, root_mult in roots:
                # squarefree factors have simple roots
                multiplicities.extend([mult] * root_mult)
                rational.append((_normalize_point((root, Fraction(0), Fraction(1))), mult))
            irrational_degree = len(factor) - 1 - sum(m for _, m in roots)
            multiplicities.extend([mult] * irrational_degree)
    multiplicities.sort(reverse=True)
    rational.sort(key=lambda pm: (-pm[1], pm[0]))
    return IncidenceReport(tuple(multiplicities), tuple(rational))


# ------------------------------------------------------------- singular scan


@dataclass(frozen=True)
class ScanFinding:
    point: Optional[Tuple[Fraction, ...]]
    local_type: str
    certificate: Optional[str] = None

    def to_json(self) -> dict:
        return {
            "point": None if self.point is None else point_label(self.point),
            "type": self.local_type,
            "certificate": self.certificate,
        }


@dataclass(frozen=True)
class ScanReport:
    findings: Tuple[ScanFinding, ...]
    chart_certificates: Tuple[Tuple[str, str], ...]

    @property
    def smooth(self) -> bool:
        return not self.findings

    def labels(self) -> Tuple[str, ...]:
        return tuple(f.local_type for f in self.findings)

    def to_json(self) -> dict:
        return {
            "smooth": self.smooth,
            "findings": [f.to_json() for f in self.findings],
            "certificates": [{"chart": c, "result": r} for c, r in self.chart_certificates],
        }


def _uv_from_poly(poly: SparsePolynomial, name: str) -> List[Fraction]:
    idx = poly.variables.index(name)
    if any(e[i] for e in poly.terms for i in range(len(poly.variables)) if i != idx):
        raise PolynomialError(f"{poly} is not univariate in {name}")
    out = [Fraction(0)] * (poly.degree_in(name) + 1)
    for exps, coeff in poly.terms.items():
        out[exps[idx]] = coeff
    return out


def _classify_at(form: SparsePolynomial, point: Tuple[Fraction, ...]) -> str:
    chart = max(i for i, c in enumerate(point) if c)
    names = list(form.variables)
    chart_name = names[chart]
    others = [n for n in names if n != chart_name]
    local_vars = tuple(others)
    substitution = {chart_name: SparsePolynomial.constant(local_vars, 1)}
    for n in others:
        shift = point[names.index(n)] / point[chart]
        substitution[n] = SparsePolynomial.variable(local_vars, n) + shift
    germ = form.substitute(substitution)
    return classify_local(germ)


def _chart_scan(form: SparsePolynomial, chart_var: str):
    """Common zeros of the curve and its partials on one affine chart."""
    others = tuple(n for n in form.variables if n != chart_var)
    affine = form.substitute(
        {chart_var: SparsePolynomial.constant(others, 1),
         others[0]: SparsePolynomial.variable(others, others[0]),
         others[1]: SparsePolynomial.variable(others, others[1])}
    )
    u, v = others
    system = [affine, affine.partial_derivative(u), affine.partial_derivative(v)]
    if affine.is_zero:
        raise PositiveDimensionalSingularLocusError("the curve vanishes identically")
    resultants: List[List[Fraction]] = []
    for other in system[1:]:
        if other.is_zero:
            continue
        if affine.degree_in(v) < 1 or other.degree_in(v) < 1:
            continue
        res = resultant(affine, other, v)
        if res.is_zero:
            raise PositiveDimensionalSingularLocusError(
                f"vanishing resultant on the chart {chart_var} = 1"
            )
        resultants.append(_uv_from_poly(res, u))
    if not resultants:
        raise PositiveDimensionalSingularLocusError(
            f"cannot eliminate on the chart {chart_var} = 1"
        )
    g = resultants[0]
    for other in resultants[1:]:
        g = _uv_gcd(g, other)
    solutions: List[Tuple[Fraction, Fraction]] = []
    certificates: List[str] = []
    if len(g) - 1 == 0:
        return solutions, "empty (constant resultant gcd)"
    roots = _uv_rational_roots(g)
    residual_degree = len(g) - 1 - sum(m for _, m in roots)
    confirmed = 0
    for root, _ in roots:
        specialized = [p.substitute({u: root}) for p in system]
        uni: List[List[Fraction]] = []
        for p in specialized:
            if p.is_zero:
                continue
            uni.append(_uv_from_poly(p.drop_variables([u]), v))
        if not uni:
            raise PositiveDimensionalSingularLocusError("a whole line of singular points")
        h = uni[0]
        for other in uni[1:]:
            h = _uv_gcd(h, other)
        if len(h) - 1 == 0:
            continue  # extraneous resultant root
        v_roots = _uv_rational_roots(h)
        for v_root, _ in v_roots:
            solutions.append((root, v_root))
            confirmed += 1
        if sum(m for _, m in v_roots) < len(h) - 1:
            certificates.append(
                f"nonrational candidate above {u} = {root} (degree {len(h) - 1} remainder)"
            )
    if residual_degree > 0:
        certificates.append(
            f"nonrational candidate locus of degree {residual_degree} in the resultant gcd"
        )
    note = "; ".join(certificates) if certificates else f"{confirmed} rational solution(s)"
    return solutions, note


def singular_scan(model: SexticModel) -> ScanReport:
    """Exact singular-locus scan of the sextic.

    Works on the charts x1 = 1 and x2 = 1 by resultant elimination, then
    checks the one remaining point [1:0:0] directly.  Rational singular
    points come back classified; non-rational candidates are reported as
    certificates instead of being isolated numerically.
    """
    form = model.form
    findings: List[ScanFinding] = []
    seen = set()
    chart_notes: List[Tuple[str, str]] = []
    for chart_var in ("x1", "x2"):
        solutions, note = _chart_scan(form, chart_var)
        chart_notes.append((chart_var, note))
        for u_val, v_val in solutions:
            if chart_var == "x1":
                point = _normalize_point((u_val, Fraction(1), v_val))
            else:
                point = _normalize_point((u_val, v_val, Fraction(1)))
            if point in seen:
                continue
            seen.add(point)
            findings.append(ScanFinding(point, _classify_at(form, point)))
    base = (Fraction(1), Fraction(0), Fraction(0))
    if base not in seen:
        affine = form.substitute(
            {
                "x0": SparsePolynomial.constant(("x1", "x2"), 1),
                "x1": SparsePolynomial.variable(("x1", "x2"), "x1"),
                "x2": SparsePolynomial.variable(("x1", "x2"), "x2"),
            }
        )
        if not affine.constant_term():
            label = classify_local(affine)
            if label != "smooth":
                findings.append(ScanFinding(base, label))
    findings.sort(key=lambda f: f.point)
    return ScanReport(tuple(findings), tuple(chart_notes))


# ----------------------------------------------------------------- dimension


def sextic_moduli_dimension(sigma) -> int:
    """Dimension count for the locus of sextics with this contact pattern.

    Monomial count of the model shape, projectivized, plus the choices of
    the line and of two points on it, minus the automorphisms of the plane.
    """
    s = by_name(sigma)
    if s.name not in ZW_NAMES:
        raise NotTransformableError(f"{s.name}: only the Z and W classes have sextic models")
    dec = classify(s)
    monomials = len(dec.positive) + len(dec.zero)
    return (monomials - 1 + 2 + 1 + 1) - 8


def shape_check(model: SexticModel) -> bool:
    """Structural decomposition test by coefficient-support inspection.

    Every term must be divisible by x1 except the images of the weight-zero
    pair and (for the Z classes) of x^2 z^4; the two weight-zero images must
    carry equal nonzero coefficients.
    """
    s = by_name(model.sigma)
    dec = classify(s)
    image_m1 = mu_transform(s, dec.m1)
    image_m2 = mu_transform(s, dec.m2)
    allowed_off_line = {(3, 0, 3), (2, 0, 4)} if s.series == "Z" else {(2, 0, 4)}
    for exps in model.form.terms:
        if exps[1] == 0 and exps not in allowed_off_line:
            return False
    c1 = model.form.coefficient(image_m1)
    c2 = model.form.coefficient(image_m2)
    return bool(c1) and c1 == c2
