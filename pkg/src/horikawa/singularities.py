"""Local models, Milnor numbers, and classification of plane-curve germs.

The catalog covers the eight unimodular non-log-canonical types together
with the two simple elliptic germs they degenerate from, plus detection of
A1/A2 points as needed by the sextic scans.  Milnor numbers are computed
by exact linear algebra: the Jacobian ideal is truncated degree by degree
and the codimension is read off once consecutive truncations agree.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .poly import SparsePolynomial, parse_polynomial
from .weights import SIGMA_ORDER, SINGULARITIES, by_name


class SingularityError(ValueError):
    pass


class NonIsolatedSingularityError(SingularityError):
    """The Jacobian staircase failed to stabilize: the critical locus has
    positive dimension (or the degree cap was too small for the input)."""


YZ = ("y", "z")
YZA = ("y", "z", "a")

# Local models written in (y, z) with one modulus parameter a; the a = 0
# part is weighted-homogeneous of degree d for the weights (p, q).
_LOCAL_MODEL_TEXT = {
    "E12": "z^3 + y^7 + a*y^5*z",
    "E13": "z^3 + y^5*z + a*y^8",
    "E14": "z^3 + y^8 + a*y^6*z",
    "Z11": "y*z^3 + y^5 + a*y^4*z",
    "Z12": "y*z^3 + y^4*z + a*y^3*z^2",
    "Z13": "y*z^3 + y^6 + a*y^5*z",
    "W12": "z^4 + y^5 + a*y^3*z^2",
    "W13": "z^4 + y^4*z + a*y^6",
}

LOCAL_MODELS: Dict[str, SparsePolynomial] = {
    name: parse_polynomial(text, YZA) for name, text in _LOCAL_MODEL_TEXT.items()
}


@dataclass(frozen=True)
class LocalModel:
    sigma: str
    normal_form: SparsePolynomial


def local_model(sigma, a: Optional[Fraction] = None) -> SparsePolynomial:
    """Normal form of the class, over (y,z,a) or with the modulus substituted."""
    s = by_name(sigma)
    model = LOCAL_MODELS[s.name]
    if a is None:
        return model
    return model.substitute({"a": Fraction(a)}).with_variables(YZA).drop_variables(["a"])


# ------------------------------------------------------------ Milnor number


def _monomials_below(bound: int) -> List[Tuple[int, int]]:
    out = [(i, j) for i in range(bound) for j in range(bound) if i + j < bound]
    out.sort(key=lambda e: (e[0] + e[1], e))
    return out


def _quotient_dimension(partials: Sequence[SparsePolynomial], bound: int) -> int:
    """dim of k[y,z] / (Jacobian ideal + all monomials of degree >= bound)."""
    columns = {m: i for i, m in enumerate(_monomials_below(bound))}
    rows: List[List[Fraction]] = []
    for g in partials:
        if g.is_zero:
            continue
        order = min(sum(e) for e in g.terms)
        for i in range(bound):
            for j in range(bound - i):
                if i + j + order >= bound:
                    continue
                row = [Fraction(0)] * len(columns)
                nonzero = False
                for (ey, ez), coeff in g.terms.items():
                    target = (ey + i, ez + j)
                    if target in columns:
                        row[columns[target]] = coeff
                        nonzero = True
                if nonzero:
                    rows.append(row)
    rank = 0
    ncols = len(columns)
    pivot_col = 0
    for col in range(ncols):
        pivot = next((r for r in range(rank, len(rows)) if rows[r][col]), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        lead = rows[rank][col]
        for r in range(len(rows)):
            if r != rank and rows[r][col]:
                factor = rows[r][col] / lead
                for cc in range(col, ncols):
                    rows[r][cc] -= factor * rows[rank][cc]
        rank += 1
        if rank == len(rows):
            break
    return ncols - rank


def milnor_number(f: SparsePolynomial, max_bound: Optional[int] = None) -> int:
    """Milnor number of an isolated critical point at the origin.

    Works over the two declared variables by staircase reduction: the
    dimension of k[y,z]/(f_y, f_z, m^B) is computed for growing B and
    accepted once two consecutive bounds agree, which certifies that the
    truncation has swallowed the whole Jacobian algebra.
    """
    if len(f.variables) != 2:
        raise SingularityError(f"expected a two-variable germ, got variables {f.variables}")
    v1, v2 = f.variables
    partials = [f.partial_derivative(v1), f.partial_derivative(v2)]
    if all(g.is_zero for g in partials):
        raise NonIsolatedSingularityError("the germ is constant")
    if any(g.constant_term() for g in partials):
        raise SingularityError("the origin is not a critical point")
    cap = max_bound if max_bound is not None else max(2 * f.total_degree(), 20)
    previous = None
    bound = 2
    while bound <= cap + 1:
        current = _quotient_dimension(partials, bound)
        if previous is not None and current == previous:
            return current
        previous = current
        bound += 1
    raise NonIsolatedSingularityError(
        f"Jacobian staircase did not stabilize below total degree {cap}"
    )


# ------------------------------------------------------------ classification

# Principal-part patterns: weights on (y, z), the weighted degree, the
# allowed support of the minimal-weight part, the monomials that must be
# present, and an optional nondegeneracy test on the coefficients.

_EIGHT_PATTERNS = {
    "E12": ((3, 7), 21, {(0, 3), (7, 0)}),
    "E13": ((2, 5), 15, {(0, 3), (5, 1)}),
    "E14": ((3, 8), 24, {(0, 3), (8, 0)}),
    "Z11": ((3, 4), 15, {(1, 3), (5, 0)}),
    "Z12": ((2, 3), 11, {(1, 3), (4, 1)}),
    "Z13": ((3, 5), 18, {(1, 3), (6, 0)}),
    "W12": ((4, 5), 20, {(0, 4), (5, 0)}),
    "W13": ((3, 4), 16, {(0, 4), (4, 1)}),
}


def _weight_zero_part(f: SparsePolynomial, weights: Tuple[int, int]):
    degrees = {}
    for exps, coeff in f.terms.items():
        w = weights[0] * exps[0] + weights[1] * exps[1]
        degrees.setdefault(w, {})[exps] = coeff
    low = min(degrees)
    return low, degrees[low]


def _match_principal(f: SparsePolynomial) -> Optional[str]:
    swapped = SparsePolynomial(f.variables, {(e[1], e[0]): c for e, c in f.terms.items()})
    for candidate in (f, swapped):
        for name, (weights, degree, support) in _EIGHT_PATTERNS.items():
            low, part = _weight_zero_part(candidate, weights)
            if low == degree and set(part) == support:
                return name
        # simple elliptic of degree 2: z^3 + y^6 + a y^2 z^2, 4a^3 + 27 != 0
        low, part = _weight_zero_part(candidate, (1, 2))
        if low == 6 and set(part) <= {(0, 3), (6, 0), (2, 2)} and {(0, 3), (6, 0)} <= set(part):
            c1 = part[(0, 3)]
            c2 = part[(6, 0)]
            c3 = part.get((2, 2), Fraction(0))
            if 4 * c3**3 * c2 + 27 * c1**2 * c2**2 != 0:
                return "E8tilde"
    # simple elliptic of degree 1: binary quartic with distinct roots
    low, part = _weight_zero_part(f, (1, 1))
    if low == 4 and set(part) <= {(4, 0), (0, 4), (2, 2)} and {(4, 0), (0, 4)} <= set(part):
        if part.get((2, 2), Fraction(0)) ** 2 != 4 * part[(4, 0)] * part[(0, 4)]:
            return "E7tilde"
    return None


def classify_local(f: SparsePolynomial) -> str:
    """Classify a two-variable germ at the origin.

    Returns one of "smooth", "A1", "A2", "E7tilde", "E8tilde", the eight
    catalog names, or "unknown".  Coordinate changes searched are diagonal
    rescalings and the variable swap only, which is enough for every germ
    this package produces.
    """
    if f.is_zero:
        raise SingularityError("cannot classify the zero polynomial")
    if len(f.variables) != 2:
        raise SingularityError(f"expected a two-variable germ, got variables {f.variables}")
    if f.constant_term():
        raise SingularityError("the germ does not vanish at the origin")
    by_degree: Dict[int, Dict[Tuple[int, int], Fraction]] = {}
    for exps, coeff in f.terms.items():
        by_degree.setdefault(sum(exps), {})[exps] = coeff
    if 1 in by_degree:
        return "smooth"
    quadratic = by_degree.get(2, {})
    if quadratic:
        c20 = quadratic.get((2, 0), Fraction(0))
        c11 = quadratic.get((1, 1), Fraction(0))
        c02 = quadratic.get((0, 2), Fraction(0))
        if c11 * c11 - 4 * c20 * c02 != 0:
            return "A1"
        # rank one and a pure square: an A2 needs the cube of the other
        # variable, which together with the square is the whole principal
        # part for the weights (3, 2)
        cubic = by_degree.get(3, {})
        if c20 and not c11 and not c02 and cubic.get((0, 3)):
            return "A2"
        if c02 and not c11 and not c20 and cubic.get((3, 0)):
            return "A2"
        return "unknown"
    match = _match_principal(f)
    return match if match else "unknown"


def modality(label: str) -> int:
    """Modality of a classified type (0 for ADE, 1 for the catalog, 2 for N16)."""
    if label in _EIGHT_PATTERNS or label in ("E7tilde", "E8tilde"):
        return 1
    if label == "N16":
        return 2
    if label and label[0] == "A" and label[1:].isdigit():
        return 0
    if label in ("D4", "D5", "E6", "E7", "E8") or (
        label and label[0] == "D" and label[1:].isdigit()
    ):
        return 0
    raise SingularityError(f"modality of {label!r} is not known here")


def milnor_of_label(label: str) -> int:
    if label in _EIGHT_PATTERNS:
        return int(label[1:])
    if label == "E7tilde":
        return 9
    if label == "E8tilde":
        return 10
    if label == "N16":
        return 16
    if label and label[0] in "AD" and label[1:].isdigit():
        return int(label[1:])
    raise SingularityError(f"Milnor number of {label!r} is not known here")


# ------------------------------------------------------------------ adjacency

# Directed arrows as drawn: tail deforms to head (Milnor number drops by one).
ADJACENCY_ARROWS: Tuple[Tuple[str, str], ...] = (
    ("E12", "E8tilde"),
    ("E13", "E12"),
    ("E14", "E13"),
    ("Z11", "E7tilde"),
    ("Z12", "Z11"),
    ("Z13", "Z12"),
    ("W12", "Z11"),
    ("W13", "Z12"),
    ("W13", "W12"),
)

_ADJACENCY_NODES = ("E8tilde", "E12", "E13", "E14", "E7tilde", "Z11", "Z12", "Z13", "W12", "W13")


def adjacency_neighbors(node: str) -> Dict[str, Tuple[str, ...]]:
    """Outgoing and incoming arrows of the adjacency diagram.

    ``degenerates_to`` lists the targets of the node's drawn arrows (its
    adjacent, less degenerate types); ``deforms_from`` lists arrow sources.
    """
    if node not in _ADJACENCY_NODES:
        raise SingularityError(f"unknown adjacency node {node!r}")
    out = tuple(head for tail, head in ADJACENCY_ARROWS if tail == node)
    incoming = tuple(tail for tail, head in ADJACENCY_ARROWS if head == node)
    return {"degenerates_to": out, "deforms_from": incoming}


# --------------------------------------------------------------------- export


def catalog_export() -> List[dict]:
    """One JSON record per catalog type."""
    records = []
    for name in SIGMA_ORDER:
        s = SINGULARITIES[name]
        records.append(
            {
                "name": name,
                "p": s.p,
                "q": s.q,
                "d": s.d,
                "mu": s.mu,
                "modality": 1,
                "normalForm": str(LOCAL_MODELS[name]),
                "adjacency": adjacency_neighbors(name),
            }
        )
    return records
