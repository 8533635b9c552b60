"""Normal forms of degree-10 double covers and the stability test.

A cover w^2 = z^5 + q4 z^3 + q6 z^2 + q8 z + q10 (binary forms q_{2k} in
x, y) is non-stable exactly when a single linear form ell satisfies
ell^k | q_{2k} for k = 2..5, with zero forms divisible by everything.
The test is run coordinate-free through derivative gcds: ell^k | q iff
ell divides the gcd of q and all its partials of order < k.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .poly import (
    NonHomogeneousError,
    PolynomialError,
    SparsePolynomial,
    binary_form_gcd,
    binary_form_rational_linear_factors,
)
from .singularities import SingularityError, milnor_of_label, modality

XY = ("x", "y")
XYZ = ("x", "y", "z")


class GitError(ValueError):
    pass


class NotNormalizableError(GitError):
    """The z^5 coefficient vanishes, so no normal form exists."""


@dataclass(frozen=True)
class NormalFormQuintic:
    """Coefficient forms of w^2 = z^5 + q4 z^3 + q6 z^2 + q8 z + q10."""

    q4: SparsePolynomial
    q6: SparsePolynomial
    q8: SparsePolynomial
    q10: SparsePolynomial

    def __post_init__(self):
        for form, degree in self.forms_with_degrees():
            if tuple(form.variables) != XY:
                raise GitError(f"forms must live over {XY}, got {form.variables}")
            if form.is_zero:
                continue
            if not form.is_homogeneous() or form.total_degree() != degree:
                raise GitError(f"expected a homogeneous form of degree {degree}, got {form}")

    def forms_with_degrees(self) -> Tuple[Tuple[SparsePolynomial, int], ...]:
        return ((self.q4, 4), (self.q6, 6), (self.q8, 8), (self.q10, 10))

    def branch_polynomial(self) -> SparsePolynomial:
        """The degree-10 form z^5 + q4 z^3 + q6 z^2 + q8 z + q10 in (x,y,z)."""
        z = SparsePolynomial.variable(XYZ, "z")
        total = z**5
        for form, power in ((self.q4, 3), (self.q6, 2), (self.q8, 1), (self.q10, 0)):
            total = total + form.with_variables(XYZ) * z**power
        return total


def normalize(f10: SparsePolynomial) -> NormalFormQuintic:
    """Scale the z^5 coefficient to 1 and kill the z^4 term.

    The substitution z -> z - q2/5 is the classical Tschirnhaus step; the
    result is independent of reapplication (the map is idempotent).
    """
    if tuple(f10.variables) != XYZ:
        f10 = f10.with_variables(XYZ)
    if not f10.is_homogeneous((1, 1, 2)) or f10.homogeneous_degree((1, 1, 2)) != 10:
        raise GitError("input must be a weighted degree-10 form in (x, y, z)")
    coeffs = f10.coefficients_in("z")
    lead = coeffs.get(5)
    if lead is None or lead.is_zero:
        raise NotNormalizableError("the z^5 coefficient vanishes")
    c5 = lead.constant_term()
    f10 = f10 * (1 / c5)
    q2 = f10.coefficients_in("z").get(4, SparsePolynomial.zero(XY))
    shift = SparsePolynomial.variable(XYZ, "z") - q2.with_variables(XYZ) * Fraction(1, 5)
    normalized = f10.substitute({"z": shift})
    by_z = normalized.coefficients_in("z")
    if 4 in by_z and not by_z[4].is_zero:
        raise GitError("Tschirnhaus substitution failed to kill the z^4 term")
    zero = SparsePolynomial.zero(XY)
    return NormalFormQuintic(
        by_z.get(3, zero), by_z.get(2, zero), by_z.get(1, zero), by_z.get(0, zero)
    )


def derivative_gcd(form: SparsePolynomial, orders: int) -> SparsePolynomial:
    """Gcd of a binary form with all its partials of order < ``orders``.

    A linear form divides the result exactly when it divides the input with
    multiplicity at least ``orders``.  The zero form yields zero.
    """
    if form.is_zero:
        return form
    current = [form]
    acc = form
    for _ in range(orders - 1):
        nxt: List[SparsePolynomial] = []
        for g in current:
            for name in form.variables:
                d = g.partial_derivative(name)
                if not d.is_zero:
                    nxt.append(d)
        for d in nxt:
            acc = binary_form_gcd(acc, d)
        current = nxt
    return binary_form_gcd(acc, SparsePolynomial.zero(form.variables))


@dataclass(frozen=True)
class StabilityReport:
    stable: bool
    witness: Optional[SparsePolynomial]
    gcd_chain_degrees: Tuple[int, ...]
    common_gcd: SparsePolynomial

    def to_json(self) -> dict:
        return {
            "stable": self.stable,
            "witness": None if self.witness is None else str(self.witness),
            "gcdChainDegrees": list(self.gcd_chain_degrees),
            "commonGcd": str(self.common_gcd),
        }


def is_git_stable(nf: NormalFormQuintic) -> StabilityReport:
    """Stability of the cover defined by a normal form.

    Non-stable exactly when some linear form ell has ell^k | q_{2k} for
    k = 2, 3, 4, 5 (zero forms count as divisible).  The candidate locus is
    the gcd of the derivative gcds G_k; a rational witness is extracted when
    one exists, otherwise the nonconstant gcd itself certifies the verdict.
    """
    chain: List[SparsePolynomial] = []
    for (form, _), k in zip(nf.forms_with_degrees(), (2, 3, 4, 5)):
        chain.append(derivative_gcd(form, k))
    common = SparsePolynomial.zero(XY)
    for g in chain:
        common = binary_form_gcd(common, g)
    degrees = tuple(-1 if g.is_zero else g.total_degree() for g in chain)
    if common.is_zero:
        # every q_{2k} vanishes: any linear form destabilizes
        witness = SparsePolynomial.variable(XY, "x")
        return StabilityReport(False, witness, degrees, common)
    if common.total_degree() == 0:
        return StabilityReport(True, None, degrees, common)
    witness = None
    factors = binary_form_rational_linear_factors(common)
    if factors:
        witness = factors[0][0]
    return StabilityReport(False, witness, degrees, common)


_STABLE_LABELS = {"E12", "E13", "E14", "Z11", "Z12", "Z13", "W12", "W13", "E7tilde", "E8tilde"}


def stability_from_singularities(labels: Sequence[str]) -> Dict[str, object]:
    """Stability verdict from a list of classified branch-curve germs.

    Isolated log canonical types and the eight catalog types all satisfy
    mu <= 14 and modality <= 1, hence give stable covers; anything with
    mu >= 16 or unknown labels leaves the criterion inconclusive.
    """
    reasons: List[str] = []
    for label in labels:
        if label == "smooth":
            continue
        try:
            mu = milnor_of_label(label)
            m = modality(label)
        except SingularityError:
            return {"stable": None, "verdict": "inconclusive", "reason": f"unrecognized type {label!r}"}
        if mu <= 14 and m <= 1 and (label in _STABLE_LABELS or m == 0):
            reasons.append(f"{label}: mu={mu}, modality={m}")
        else:
            return {
                "stable": None,
                "verdict": "inconclusive",
                "reason": f"{label} has mu={mu}, modality={m}; outside the stable criterion",
            }
    return {"stable": True, "verdict": "stable", "reason": "; ".join(reasons) or "no singular points"}
