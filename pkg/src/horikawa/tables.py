"""Reference tables and their machine-checked regeneration.

Every published number this package reproduces lives here once, as a
golden constant annotated with the reference table it came from, so any
mismatch in a regenerated value names the entry it contradicts.  Known
internal discrepancies of the source material are recorded as notes and
never silently reconciled.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from .degeneration import (
    ADE_CONFIGURATIONS,
    GAMMA_DIMENSIONS,
    IF00_NUMBERS,
    boundary_dimension,
    branch_curve_cohomology,
    gamma_ideal,
    gamma_probabilistic_converse,
    gamma_substitution_check,
    z_canonical_square,
    y_ambient,
)
from .sextics import ZW_NAMES, line_incidence, sample_model, sextic_moduli_dimension, singular_scan
from .singularities import LOCAL_MODELS, local_model, milnor_number
from .toric import (
    WPSPlane,
    ample_check,
    aut_dimension,
    blowup,
    divisor,
    e_square_from_rays,
    genus_smooth_curve,
    log_pair_class,
    tail_ample_constant,
)
from .weights import (
    MONOMIALS_110,
    SIGMA_ORDER,
    SINGULARITIES,
    boundary_contact_points,
    by_name,
    classify,
    count_degree_d_monomials,
    monomial_string,
    weight,
)

GOLDEN_VERSION = "1.0"

# ----------------------------------------------------------------- goldens

GOLDEN_WEIGHTS = {
    # (p, q, d) per class; source: reference table "weights and degrees
    # associated to the eight singularities"
    "E12": (3, 7, 21), "E13": (2, 5, 15), "E14": (3, 8, 24), "Z11": (3, 4, 15),
    "Z12": (2, 3, 11), "Z13": (3, 5, 18), "W12": (4, 5, 20), "W13": (3, 4, 16),
}

GOLDEN_ALWAYS_POSITIVE = (
    (0, 0, 5), (1, 1, 4), (2, 2, 3), (0, 2, 4), (3, 3, 2), (1, 3, 3), (2, 4, 2),
    (0, 4, 3), (1, 5, 2), (2, 6, 1), (0, 6, 2), (1, 7, 1), (0, 8, 1), (1, 9, 0),
    (0, 10, 0),
)

GOLDEN_ALWAYS_NEGATIVE = (
    (10, 0, 0), (8, 0, 1), (6, 0, 2), (9, 1, 0), (7, 1, 1), (5, 1, 2),
    (8, 2, 0), (6, 2, 1), (4, 2, 2), (7, 3, 0), (5, 3, 1), (6, 4, 0),
)

# sign of the nine variable monomials per class, in SIGMA_ORDER
GOLDEN_VARIABLE_SIGNS = {
    (4, 0, 3): ("0", "0", "0", "-", "-", "-", "-", "-"),
    (2, 0, 4): ("+", "+", "+", "+", "+", "+", "0", "0"),
    (3, 1, 3): ("+", "+", "+", "0", "0", "0", "-", "-"),
    (4, 4, 1): ("-", "-", "-", "+", "0", "-", "+", "0"),
    (5, 5, 0): ("-", "-", "-", "0", "-", "-", "0", "-"),
    (3, 5, 1): ("+", "0", "-", "+", "+", "+", "+", "+"),
    (4, 6, 0): ("-", "-", "-", "+", "+", "0", "+", "+"),
    (3, 7, 0): ("0", "-", "-", "+", "+", "+", "+", "+"),
    (2, 8, 0): ("+", "+", "0", "+", "+", "+", "+", "+"),
}

GOLDEN_WEIGHT_ZERO = {
    "E12": ((3, 7, 0), (4, 0, 3)),
    "E13": ((3, 5, 1), (4, 0, 3)),
    "E14": ((2, 8, 0), (4, 0, 3)),
    "Z11": ((5, 5, 0), (3, 1, 3)),
    "Z12": ((4, 4, 1), (3, 1, 3)),
    "Z13": ((4, 6, 0), (3, 1, 3)),
    "W12": ((5, 5, 0), (2, 0, 4)),
    "W13": ((4, 4, 1), (2, 0, 4)),
}

# (Dx, Dy, Dz, E) intersections of the adjusted log canonical class
GOLDEN_LOG_INTERSECTIONS = {
    "E12": ("1/2", "3/7", "5/6", "1/42"),
    "E13": ("1/2", "2/5", "3/4", "1/20"),
    "E14": ("1/2", "3/8", "2/3", "1/24"),
    "Z11": ("1/2", "3/8", "5/6", "1/24"),
    "Z12": ("1/2", "1/3", "3/4", "1/12"),
    "Z13": ("1/2", "3/10", "2/3", "1/15"),
    "W12": ("1/2", "3/10", "3/4", "1/20"),
    "W13": ("1/2", "1/4", "2/3", "1/12"),
}

GOLDEN_C_TABLE = {
    "E12": 21, "E13": 20, "E14": 24, "Z11": 24, "Z12": 18, "Z13": 30, "W12": 20, "W13": 24,
}

GOLDEN_KSQ = {
    "E12": "19/21", "E13": "4/5", "E14": "2/3", "Z11": "5/6",
    "Z12": "2/3", "Z13": "7/15", "W12": "3/5", "W13": "1/3",
}

KSQ_NOTE = (
    "E13: an introductory summary of these invariants circulates the value 4/3; "
    "the parity formula gives 4/5, which is reported here and flagged rather "
    "than silently reconciled."
)

GOLDEN_AMBIENT = {
    "E12": (42, (1, 6, 14, 21)),
    "E13": (30, (1, 4, 10, 15)),
    "E14": (24, (1, 3, 8, 12)),
    "Z11": (30, (1, 6, 8, 15)),
    "Z12": (22, (1, 4, 6, 11)),
    "Z13": (18, (1, 3, 5, 9)),
    "W12": (20, (1, 4, 5, 10)),
    "W13": (16, (1, 3, 4, 8)),
}

GOLDEN_MONOMIAL_COUNTS = {
    "E12": 17, "E13": 18, "E14": 19, "Z11": 15, "Z12": 16, "Z13": 17, "W12": 16, "W13": 17,
}

GOLDEN_AUT_DIMS = {
    "E12": 6, "E13": 6, "E14": 6, "Z11": 5, "Z12": 5, "Z13": 5, "W12": 5, "W13": 5,
}
GOLDEN_AUT_BASE = 7  # Aut(P(1,1,2))

GOLDEN_DIM_COUNTS = {
    "E12": (10, 17, 27), "E13": (11, 16, 27), "E14": (12, 15, 27), "Z11": (9, 18, 27),
    "Z12": (10, 17, 27), "Z13": (11, 16, 27), "W12": (10, 17, 27), "W13": (11, 16, 27),
}

GOLDEN_GLUING = {
    "E12": ("[0:1:-1]",),
    "E13": ("[0:1:0]", "[0:-1:1]"),
    "E14": ("[0:1:-1]",),
    "Z11": ("[0:0:1]", "[0:1:-1]"),
    "Z12": ("[0:1:0]", "[0:0:1]", "[0:-1:1]"),
    "Z13": ("[0:0:1]", "[0:1:-1]"),
    "W12": ("[0:-1:1]",),
    "W13": ("[0:1:0]", "[0:1:-1]"),
}

GLUING_NOTE = (
    "Z12: one published sketch of the gluing shows two extra contacts with the "
    "exceptional curve; the contact-point table above is the authoritative count."
)

GOLDEN_SEXTIC_DIMS = {"Z11": 18, "Z12": 17, "Z13": 16, "W12": 17, "W13": 16}

GOLDEN_SEXTIC_SINGULAR = {
    "Z11": (), "Z12": ("A1",), "Z13": ("A2",), "W12": (), "W13": ("A1",),
}

GOLDEN_SEXTIC_PARTITIONS = {
    "Z11": (3, 2, 1), "Z12": (3, 2, 1), "Z13": (3, 2, 1), "W12": (4, 2), "W13": (4, 2),
}

GOLDEN_IF00 = dict(IF00_NUMBERS)

GOLDEN_GAMMA = {name: (GAMMA_DIMENSIONS[name], " , ".join(t for t in texts))
                for name, texts in {
    "E12": ("c", "e", "f", "a*g"),
    "E13": ("c", "e", "f", "a*g"),
    "E14": ("c", "e", "f", "a*g"),
    "Z11": ("c", "e", "a*f"),
    "Z12": ("c", "e", "f"),
    "Z13": ("c", "e", "f"),
    "W12": ("c", "e", "a*f"),
    "W13": ("c", "e", "f"),
}.items()}


# ------------------------------------------------------------------ reports


@dataclass
class TableReport:
    tableId: str
    headers: List[str]
    rows: List[List[str]]
    notes: List[str]
    mismatches: List[str]

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def to_json(self) -> dict:
        return {
            "tableId": self.tableId,
            "headers": self.headers,
            "rows": self.rows,
            "notes": self.notes,
            "mismatches": self.mismatches,
            "ok": self.ok,
        }

    def to_tsv(self) -> str:
        lines = ["\t".join(self.headers)]
        lines += ["\t".join(row) for row in self.rows]
        lines += [f"# {note}" for note in self.notes]
        lines += [f"# MISMATCH {m}" for m in self.mismatches]
        return "\n".join(lines)

    def to_markdown(self) -> str:
        lines = ["| " + " | ".join(self.headers) + " |"]
        lines.append("|" + "|".join(" --- " for _ in self.headers) + "|")
        lines += ["| " + " | ".join(row) + " |" for row in self.rows]
        lines += [f"> {note}" for note in self.notes]
        lines += [f"> MISMATCH: {m}" for m in self.mismatches]
        return "\n".join(lines)


def _frac(value: Fraction) -> str:
    return str(value.numerator) if value.denominator == 1 else f"{value.numerator}/{value.denominator}"


def _compare(mismatches: List[str], table: str, key: str, computed, golden):
    if str(computed) != str(golden):
        mismatches.append(f"{table}/{key}: computed {computed}, reference {golden}")


# ------------------------------------------------------------ table builders


def table_weights() -> TableReport:
    mismatches: List[str] = []
    rows = []
    for name in SIGMA_ORDER:
        s = SINGULARITIES[name]
        _compare(mismatches, "weights", name, (s.p, s.q, s.d), GOLDEN_WEIGHTS[name])
        identity = Fraction((s.d - s.p) * (s.d - s.q), s.p * s.q)
        _compare(mismatches, "weights", f"{name}/milnor-identity", identity, s.mu)
        rows.append([name, f"({s.p},{s.q})", str(s.d), str(s.mu)])
    return TableReport("weights", ["Sing.", "(p,q)", "d", "mu"], rows, [], mismatches)


def table_signs() -> TableReport:
    mismatches: List[str] = []
    sign = lambda w: "+" if w > 0 else "-" if w < 0 else "0"
    for name in SIGMA_ORDER:
        for m in GOLDEN_ALWAYS_POSITIVE:
            if sign(weight(name, m)) != "+":
                mismatches.append(f"signs/{name}: {m} should be always positive")
        for m in GOLDEN_ALWAYS_NEGATIVE:
            if sign(weight(name, m)) != "-":
                mismatches.append(f"signs/{name}: {m} should be always negative")
    rows = []
    for m, signs in GOLDEN_VARIABLE_SIGNS.items():
        computed = tuple(sign(weight(name, m)) for name in SIGMA_ORDER)
        _compare(mismatches, "signs", str(m), computed, signs)
        rows.append([str(m)] + list(computed))
    for name in SIGMA_ORDER:
        dec = classify(name)
        _compare(mismatches, "signs", f"{name}/m1m2", (dec.m1, dec.m2), GOLDEN_WEIGHT_ZERO[name])
        rows.append([f"zero({name})", monomial_string(dec.m1), monomial_string(dec.m2)] + [""] * 6)
        sizes = (len(dec.positive), len(dec.zero), len(dec.negative))
        if sum(sizes) != 36:
            mismatches.append(f"signs/{name}: partition sizes {sizes} do not cover 36")
    notes = ["15 monomials are positive for every class; 12 are negative for every class."]
    return TableReport(
        "signs", ["monomial"] + list(SIGMA_ORDER), rows, notes, mismatches
    )


def table_intersections() -> TableReport:
    mismatches: List[str] = []
    rows = []
    for name in SIGMA_ORDER:
        s = SINGULARITIES[name]
        surface = blowup(s.p, s.q)
        report = ample_check(surface, log_pair_class(surface, s.d))
        values = tuple(_frac(report.intersection(n)) for n in ("Dx", "Dy", "Dz", "E"))
        _compare(mismatches, "intersections", name, values, GOLDEN_LOG_INTERSECTIONS[name])
        if not report.ample:
            mismatches.append(f"intersections/{name}: class failed the ampleness test")
        e_sq = e_square_from_rays(surface)
        if e_sq != Fraction(-1, s.p * s.q):
            mismatches.append(f"intersections/{name}: fan E^2 {e_sq} != -1/pq")
        rows.append([name] + list(values))
    notes = ["Intersections of K + E + (1/2) * branch strict transform with the boundary."]
    return TableReport("intersections", ["Sing.", "Dx", "Dy", "Dz", "E"], rows, notes, mismatches)


def table_ctable() -> TableReport:
    mismatches: List[str] = []
    rows = []
    for name in SIGMA_ORDER:
        t = tail_ample_constant(name)
        _compare(mismatches, "ctable", name, t.c, GOLDEN_C_TABLE[name])
        if t.margin <= 0 or not t.ample:
            mismatches.append(f"ctable/{name}: margin {t.margin} is not positive")
        rows.append([name, _frac(t.c), _frac(t.margin)])
    return TableReport("ctable", ["Sing.", "c", "c/2 - p - q"], rows, [], mismatches)


def table_ksq() -> TableReport:
    mismatches: List[str] = []
    rows = []
    for name in SIGMA_ORDER:
        value = z_canonical_square(name)
        _compare(mismatches, "ksq", name, _frac(value), GOLDEN_KSQ[name])
        rows.append([name, _frac(value)])
    return TableReport("ksq", ["Sing.", "K^2"], rows, [KSQ_NOTE], mismatches)


def table_ambient() -> TableReport:
    mismatches: List[str] = []
    rows = []
    for name in SIGMA_ORDER:
        weights, degree = y_ambient(name)
        _compare(mismatches, "ambient", name, (degree, weights), GOLDEN_AMBIENT[name])
        rows.append([name, str(degree), "P" + str(weights).replace(" ", "")])
    return TableReport("ambient", ["Sing.", "degree", "ambient"], rows, [], mismatches)


def table_invariants() -> TableReport:
    mismatches: List[str] = []
    rows = []
    for name in SIGMA_ORDER:
        s = SINGULARITIES[name]
        chi_y = s.mu + 3
        chi_z = 36 - s.mu
        total = chi_y + chi_z - 2
        _compare(mismatches, "invariants", f"{name}/if00", IF00_NUMBERS[name], GOLDEN_IF00[name])
        _compare(mismatches, "invariants", f"{name}/totalChi", total, 37)
        ade = ADE_CONFIGURATIONS[name]
        if 24 - sum(ade) != chi_y:
            mismatches.append(
                f"invariants/{name}: ADE configuration {ade} gives chi {24 - sum(ade)}, not {chi_y}"
            )
        h11 = str(32 - s.mu) if name in ZW_NAMES else "-"
        rows.append([name, str(IF00_NUMBERS[name]), GOLDEN_KSQ[name], str(chi_y), str(chi_z), str(total), h11])
    headers = ["Sing.", "No. in K3 list", "K^2(Z)", "chi(Y)", "chi(Z)", "chi(total)", "h11(Z)"]
    return TableReport("invariants", headers, rows, [KSQ_NOTE], mismatches)


def table_autdims() -> TableReport:
    mismatches: List[str] = []
    base = aut_dimension(WPSPlane(1, 2))
    _compare(mismatches, "autdims", "P(1,1,2)", base, GOLDEN_AUT_BASE)
    rows = [["P(1,1,2)", str(base)]]
    for name in SIGMA_ORDER:
        s = SINGULARITIES[name]
        value = aut_dimension(WPSPlane(s.p, s.q))
        _compare(mismatches, "autdims", name, value, GOLDEN_AUT_DIMS[name])
        rows.append([f"{name}: P(1,{s.p},{s.q})", str(value)])
    return TableReport("autdims", ["space", "dim Aut"], rows, [], mismatches)


def table_gammadims(fast: bool = False) -> TableReport:
    mismatches: List[str] = []
    rows = []
    for name in SIGMA_ORDER:
        report = gamma_ideal(name)
        golden_dim, golden_radical = GOLDEN_GAMMA[name]
        _compare(mismatches, "gammadims", name, report.dimGamma, golden_dim)
        radical_text = " , ".join(str(g) for g in report.claimedRadical)
        _compare(mismatches, "gammadims", f"{name}/radical", radical_text, golden_radical)
        if not gamma_substitution_check(report):
            mismatches.append(f"gammadims/{name}: a generator survives the radical substitution")
        if not fast and not gamma_probabilistic_converse(report):
            mismatches.append(f"gammadims/{name}: sampling found a spurious vanishing point")
        rows.append([name, str(report.dimGamma), radical_text, str(len(report.generators))])
    return TableReport(
        "gammadims", ["Sing.", "dim", "radical", "#generators"], rows, [], mismatches
    )


def table_monomialcounts() -> TableReport:
    mismatches: List[str] = []
    rows = []
    for name in SIGMA_ORDER:
        s = SINGULARITIES[name]
        count = count_degree_d_monomials(s.p, s.q, s.d)
        _compare(mismatches, "monomialcounts", name, count, GOLDEN_MONOMIAL_COUNTS[name])
        nonpos = sum(1 for m in MONOMIALS_110 if weight(s, m) <= 0)
        if nonpos != count:
            mismatches.append(
                f"monomialcounts/{name}: {count} degree-d monomials vs {nonpos} non-positive weights"
            )
        rows.append([name, str(count)])
    return TableReport("monomialcounts", ["Sing.", "#monomials"], rows, [], mismatches)


def table_dimcounts() -> TableReport:
    mismatches: List[str] = []
    rows = []
    for name in SIGMA_ORDER:
        s = SINGULARITIES[name]
        dims = boundary_dimension(name)
        triple = (dims["ySide"], dims["zSide"], dims["total"])
        _compare(mismatches, "dimcounts", name, triple, GOLDEN_DIM_COUNTS[name])
        if dims["ySide"] != s.mu - 2 or dims["zSide"] != 29 - s.mu or dims["total"] != 27:
            mismatches.append(f"dimcounts/{name}: identities (mu-2, 29-mu, 27) fail for {triple}")
        rows.append([name] + [str(v) for v in triple])
    return TableReport("dimcounts", ["Sing.", "tail side", "cover side", "total"], rows, [], mismatches)


def table_gluing() -> TableReport:
    mismatches: List[str] = []
    rows = []
    for name in SIGMA_ORDER:
        s = SINGULARITIES[name]
        labels = tuple(
            "[" + ":".join(str(c) for c in p) + "]" for p in boundary_contact_points(name)
        )
        _compare(mismatches, "gluing", name, labels, GOLDEN_GLUING[name])
        rows.append([name, ", ".join(labels), "yes" if s.d % 2 else "no"])
    return TableReport(
        "gluing", ["Sing.", "contact points", "gluing curve in branch locus"], rows, [GLUING_NOTE], mismatches
    )


def table_sexticdims() -> TableReport:
    mismatches: List[str] = []
    rows = []
    for name in ZW_NAMES:
        value = sextic_moduli_dimension(name)
        _compare(mismatches, "sexticdims", name, value, GOLDEN_SEXTIC_DIMS[name])
        rows.append([name, str(value)])
    return TableReport("sexticdims", ["Sing.", "dim"], rows, [], mismatches)


def table_sextics() -> TableReport:
    """Sample sextic scans: singular loci and line incidences (slow-ish)."""
    mismatches: List[str] = []
    rows = []
    for name in ZW_NAMES:
        model = sample_model(name)
        scan = singular_scan(model)
        _compare(mismatches, "sextics", f"{name}/singular", scan.labels(), GOLDEN_SEXTIC_SINGULAR[name])
        incidence = line_incidence(model)
        _compare(
            mismatches, "sextics", f"{name}/partition", incidence.partition, GOLDEN_SEXTIC_PARTITIONS[name]
        )
        rows.append(
            [name, ",".join(scan.labels()) or "smooth", str(incidence.partition)]
        )
    return TableReport(
        "sextics", ["Sing.", "singular locus", "line partition"], rows, [], mismatches
    )


def table_milnor() -> TableReport:
    mismatches: List[str] = []
    rows = []
    for name in SIGMA_ORDER:
        s = SINGULARITIES[name]
        model = local_model(name, Fraction(0))
        mu = milnor_number(model)
        _compare(mismatches, "milnor", name, mu, s.mu)
        quasi = Fraction((s.d - s.p) * (s.d - s.q), s.p * s.q)
        _compare(mismatches, "milnor", f"{name}/quasi-homogeneous", quasi, s.mu)
        rows.append([name, str(LOCAL_MODELS[name]), str(mu)])
    return TableReport("milnor", ["Sing.", "local model", "mu"], rows, [], mismatches)


TABLE_BUILDERS: Dict[str, Callable[[], TableReport]] = {
    "weights": table_weights,
    "signs": table_signs,
    "intersections": table_intersections,
    "ctable": table_ctable,
    "ksq": table_ksq,
    "ambient": table_ambient,
    "invariants": table_invariants,
    "autdims": table_autdims,
    "gammadims": table_gammadims,
    "monomialcounts": table_monomialcounts,
    "dimcounts": table_dimcounts,
    "gluing": table_gluing,
    "sexticdims": table_sexticdims,
    "sextics": table_sextics,
    "milnor": table_milnor,
}

TABLE_ORDER = tuple(TABLE_BUILDERS)


def build_table(table_id: str) -> TableReport:
    if table_id not in TABLE_BUILDERS:
        raise KeyError(f"unknown table id {table_id!r}; known: {', '.join(TABLE_ORDER)}")
    return TABLE_BUILDERS[table_id]()


def build_all() -> List[TableReport]:
    return [build_table(i) for i in TABLE_ORDER]
