"""Exact sparse multivariate polynomial arithmetic over the rationals.

A polynomial is a map from exponent vectors to nonzero ``Fraction``
coefficients, over an explicitly declared tuple of variable names.  All
arithmetic is exact; nothing here ever touches a float.

  SparsePolynomial(("x", "y"), {(2, 0): Fraction(1), (0, 2): Fraction(-1)})
  <=>  x^2 - y^2

Invariants kept by the constructor: no stored coefficient is zero, and
every exponent vector has one non-negative entry per declared variable.
Values are immutable after construction, so instances are safe to share
between threads.

The text format is a plain sum of terms, e.g. ``3/2*x^2*y - z^5``; it is
printed in graded lexicographic order (declared variable order breaks
ties) and parses back bit-exactly.
"""

from __future__ import annotations

import re
from fractions import Fraction
from math import gcd
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

Exponents = Tuple[int, ...]
Scalar = Union[int, Fraction]


class PolynomialError(ValueError):
    """Base error for polynomial operations."""


class VariableMismatchError(PolynomialError):
    """Operands live over different variable universes."""


class NonHomogeneousError(PolynomialError):
    """A binary-form operation received a non-homogeneous input."""


def _coerce(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise PolynomialError(f"not an exact rational: {value!r}")


def _grlex_key(exponents: Exponents):
    return (sum(exponents), exponents)


class SparsePolynomial:
    __slots__ = ("variables", "terms")

    def __init__(self, variables: Sequence[str], terms: Optional[Mapping[Exponents, Scalar]] = None):
        variables = tuple(variables)
        if len(set(variables)) != len(variables):
            raise PolynomialError(f"duplicate variable names: {variables}")
        clean: Dict[Exponents, Fraction] = {}
        if terms:
            nvars = len(variables)
            for exps, coeff in terms.items():
                exps = tuple(exps)
                if len(exps) != nvars or any((not isinstance(e, int)) or e < 0 for e in exps):
                    raise PolynomialError(f"bad exponent vector {exps} for variables {variables}")
                value = _coerce(coeff)
                if value:
                    clean[exps] = clean.get(exps, Fraction(0)) + value
                    if not clean[exps]:
                        del clean[exps]
        object.__setattr__(self, "variables", variables)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("SparsePolynomial is immutable")

    # ---------------------------------------------------------------- factories

    @classmethod
    def zero(cls, variables: Sequence[str]) -> "SparsePolynomial":
        return cls(variables, {})

    @classmethod
    def constant(cls, variables: Sequence[str], value: Scalar) -> "SparsePolynomial":
        value = _coerce(value)
        if not value:
            return cls.zero(variables)
        return cls(variables, {(0,) * len(tuple(variables)): value})

    @classmethod
    def variable(cls, variables: Sequence[str], name: str) -> "SparsePolynomial":
        variables = tuple(variables)
        if name not in variables:
            raise PolynomialError(f"unknown variable {name!r} in universe {variables}")
        exps = tuple(1 if v == name else 0 for v in variables)
        return cls(variables, {exps: Fraction(1)})

    @classmethod
    def monomial(cls, variables: Sequence[str], exponents: Exponents, coeff: Scalar = 1) -> "SparsePolynomial":
        return cls(variables, {tuple(exponents): _coerce(coeff)})

    # ------------------------------------------------------------------- basics

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, SparsePolynomial):
            return self.variables == other.variables and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self == SparsePolynomial.constant(self.variables, other)
        return NotImplemented

    def __hash__(self):
        return hash((self.variables, frozenset(self.terms.items())))

    def sorted_terms(self) -> List[Tuple[Exponents, Fraction]]:
        """Terms in descending graded lexicographic order."""
        return sorted(self.terms.items(), key=lambda kv: _grlex_key(kv[0]), reverse=True)

    def total_degree(self) -> int:
        if not self.terms:
            return 0
        return max(sum(e) for e in self.terms)

    def degree_in(self, name: str) -> int:
        idx = self._index(name)
        if not self.terms:
            return 0
        return max(e[idx] for e in self.terms)

    def coefficient(self, exponents: Exponents) -> Fraction:
        return self.terms.get(tuple(exponents), Fraction(0))

    def constant_term(self) -> Fraction:
        return self.terms.get((0,) * len(self.variables), Fraction(0))

    def leading_term(self) -> Tuple[Exponents, Fraction]:
        if not self.terms:
            raise PolynomialError("zero polynomial has no leading term")
        exps = max(self.terms, key=_grlex_key)
        return exps, self.terms[exps]

    def _index(self, name: str) -> int:
        try:
            return self.variables.index(name)
        except ValueError:
            raise PolynomialError(f"unknown variable {name!r} in universe {self.variables}") from None

    def _check_same_universe(self, other: "SparsePolynomial"):
        if self.variables != other.variables:
            raise VariableMismatchError(
                f"variable universes differ: {self.variables} vs {other.variables}"
            )

    # --------------------------------------------------------------- arithmetic

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = SparsePolynomial.constant(self.variables, other)
        if not isinstance(other, SparsePolynomial):
            return NotImplemented
        self._check_same_universe(other)
        out = dict(self.terms)
        for exps, coeff in other.terms.items():
            acc = out.get(exps, Fraction(0)) + coeff
            if acc:
                out[exps] = acc
            else:
                out.pop(exps, None)
        return SparsePolynomial(self.variables, out)

    __radd__ = __add__

    def __neg__(self):
        return SparsePolynomial(self.variables, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = SparsePolynomial.constant(self.variables, other)
        if not isinstance(other, SparsePolynomial):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            other = _coerce(other)
            if not other:
                return SparsePolynomial.zero(self.variables)
            return SparsePolynomial(self.variables, {e: c * other for e, c in self.terms.items()})
        if not isinstance(other, SparsePolynomial):
            return NotImplemented
        self._check_same_universe(other)
        out: Dict[Exponents, Fraction] = {}
        for ea, ca in self.terms.items():
            for eb, cb in other.terms.items():
                exps = tuple(i + j for i, j in zip(ea, eb))
                acc = out.get(exps, Fraction(0)) + ca * cb
                if acc:
                    out[exps] = acc
                else:
                    out.pop(exps, None)
        return SparsePolynomial(self.variables, out)

    __rmul__ = __mul__

    def __pow__(self, power: int):
        if not isinstance(power, int) or power < 0:
            raise PolynomialError(f"exponent must be a non-negative integer, got {power!r}")
        result = SparsePolynomial.constant(self.variables, 1)
        base = self
        while power:
            if power & 1:
                result = result * base
            base = base * base if power > 1 else base
            power >>= 1
        return result

    # ------------------------------------------------------------ calculus etc.

    def partial_derivative(self, name: str) -> "SparsePolynomial":
        idx = self._index(name)
        out: Dict[Exponents, Fraction] = {}
        for exps, coeff in self.terms.items():
            e = exps[idx]
            if e == 0:
                continue
            new = list(exps)
            new[idx] = e - 1
            out[tuple(new)] = coeff * e
        return SparsePolynomial(self.variables, out)

    def substitute(self, mapping: Mapping[str, Union["SparsePolynomial", Scalar]]) -> "SparsePolynomial":
        """Simultaneous substitution of variables by polynomials or scalars.

        All polynomial values must share one variable universe, which becomes
        the universe of the result; variables left unmapped must exist there.
        """
        for name in mapping:
            self._index(name)
        poly_values = [v for v in mapping.values() if isinstance(v, SparsePolynomial)]
        if poly_values:
            target = poly_values[0].variables
            for v in poly_values[1:]:
                if v.variables != target:
                    raise VariableMismatchError(
                        f"substitution images live over different universes: {target} vs {v.variables}"
                    )
        else:
            target = self.variables
        images: List[SparsePolynomial] = []
        for name in self.variables:
            if name in mapping:
                value = mapping[name]
                if not isinstance(value, SparsePolynomial):
                    value = SparsePolynomial.constant(target, value)
                images.append(value)
            else:
                if name not in target:
                    raise VariableMismatchError(
                        f"unmapped variable {name!r} absent from target universe {target}"
                    )
                images.append(SparsePolynomial.variable(target, name))
        result = SparsePolynomial.zero(target)
        for exps, coeff in self.terms.items():
            term = SparsePolynomial.constant(target, coeff)
            for image, e in zip(images, exps):
                if e:
                    term = term * image**e
            result = result + term
        return result

    def evaluate(self, assignment: Mapping[str, Scalar]) -> Fraction:
        values = [_coerce(assignment[name]) for name in self.variables]
        total = Fraction(0)
        for exps, coeff in self.terms.items():
            term = coeff
            for value, e in zip(values, exps):
                if e:
                    term *= value**e
            total += term
        return total

    # -------------------------------------------------------- universe plumbing

    def with_variables(self, variables: Sequence[str]) -> "SparsePolynomial":
        """Re-express this polynomial over a larger (or reordered) universe."""
        variables = tuple(variables)
        positions = []
        for name in self.variables:
            if name not in variables:
                raise VariableMismatchError(f"target universe {variables} misses {name!r}")
            positions.append(variables.index(name))
        out: Dict[Exponents, Fraction] = {}
        for exps, coeff in self.terms.items():
            new = [0] * len(variables)
            for pos, e in zip(positions, exps):
                new[pos] = e
            out[tuple(new)] = coeff
        return SparsePolynomial(variables, out)

    def drop_variables(self, names: Iterable[str]) -> "SparsePolynomial":
        """Remove variables that occur with exponent zero everywhere."""
        names = set(names)
        for name in names:
            idx = self._index(name)
            if any(e[idx] for e in self.terms):
                raise PolynomialError(f"variable {name!r} still occurs; cannot drop it")
        keep = [i for i, v in enumerate(self.variables) if v not in names]
        return SparsePolynomial(
            tuple(self.variables[i] for i in keep),
            {tuple(e[i] for i in keep): c for e, c in self.terms.items()},
        )

    def coefficients_in(self, name: str) -> Dict[int, "SparsePolynomial"]:
        """Collect coefficients of powers of one variable.

        The returned polynomials live over the universe with ``name`` removed.
        """
        idx = self._index(name)
        rest = tuple(v for i, v in enumerate(self.variables) if i != idx)
        buckets: Dict[int, Dict[Exponents, Fraction]] = {}
        for exps, coeff in self.terms.items():
            e = exps[idx]
            reduced = tuple(x for i, x in enumerate(exps) if i != idx)
            buckets.setdefault(e, {})[reduced] = coeff
        return {e: SparsePolynomial(rest, t) for e, t in buckets.items()}

    # ------------------------------------------------------------- homogeneity

    def weighted_degrees(self, weights: Optional[Sequence[int]] = None) -> List[int]:
        if weights is None:
            weights = (1,) * len(self.variables)
        return [sum(w * e for w, e in zip(weights, exps)) for exps in self.terms]

    def is_homogeneous(self, weights: Optional[Sequence[int]] = None) -> bool:
        degrees = self.weighted_degrees(weights)
        return len(set(degrees)) <= 1

    def homogeneous_degree(self, weights: Optional[Sequence[int]] = None) -> Optional[int]:
        """Degree of a (weighted-)homogeneous polynomial; None for zero."""
        degrees = set(self.weighted_degrees(weights))
        if not degrees:
            return None
        if len(degrees) > 1:
            raise NonHomogeneousError(f"not homogeneous: degrees {sorted(degrees)}")
        return degrees.pop()

    # ---------------------------------------------------------- exact division

    def divide_exact(self, divisor: "SparsePolynomial") -> "SparsePolynomial":
        """Exact division; raises if the divisor does not divide evenly."""
        self._check_same_universe(divisor)
        if divisor.is_zero:
            raise PolynomialError("division by the zero polynomial")
        remainder = dict(self.terms)
        quotient: Dict[Exponents, Fraction] = {}
        div_exps, div_coeff = divisor.leading_term()
        while remainder:
            exps = max(remainder, key=_grlex_key)
            coeff = remainder[exps]
            delta = tuple(a - b for a, b in zip(exps, div_exps))
            if any(d < 0 for d in delta):
                raise PolynomialError("inexact polynomial division")
            factor = coeff / div_coeff
            quotient[delta] = quotient.get(delta, Fraction(0)) + factor
            for dexps, dcoeff in divisor.terms.items():
                target = tuple(a + b for a, b in zip(delta, dexps))
                acc = remainder.get(target, Fraction(0)) - factor * dcoeff
                if acc:
                    remainder[target] = acc
                else:
                    remainder.pop(target, None)
        return SparsePolynomial(self.variables, quotient)

    # ----------------------------------------------------------------- display

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        pieces: List[str] = []
        for exps, coeff in self.sorted_terms():
            factors = [
                f"{name}^{e}" if e > 1 else name
                for name, e in zip(self.variables, exps)
                if e
            ]
            magnitude = abs(coeff)
            if not factors:
                body = str(magnitude)
            elif magnitude == 1:
                body = "*".join(factors)
            else:
                body = "*".join([str(magnitude)] + factors)
            if not pieces:
                pieces.append(body if coeff > 0 else f"-{body}")
            else:
                pieces.append(f"+ {body}" if coeff > 0 else f"- {body}")
        return " ".join(pieces)

    def __repr__(self) -> str:
        return f"SparsePolynomial({self.variables!r}, {self})"


# ------------------------------------------------------------------- parsing

_TOKEN = re.compile(r"\s*(?:(?P<int>\d+)|(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>[-+*/^()]))")


class _Parser:
    def __init__(self, text: str):
        self.tokens: List[Tuple[str, str]] = []
        pos = 0
        while pos < len(text):
            match = _TOKEN.match(text, pos)
            if not match or match.end() == pos:
                if text[pos:].strip():
                    raise PolynomialError(f"cannot tokenize {text[pos:]!r}")
                break
            pos = match.end()
            for kind in ("int", "name", "op"):
                value = match.group(kind)
                if value is not None:
                    self.tokens.append((kind, value))
                    break
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else (None, None)

    def take(self):
        token = self.peek()
        self.pos += 1
        return token

    def expect_op(self, op: str):
        kind, value = self.take()
        if kind != "op" or value != op:
            raise PolynomialError(f"expected {op!r}, found {value!r}")

    def parse(self, variables: Tuple[str, ...]) -> "SparsePolynomial":
        result = self.expression(variables)
        if self.pos != len(self.tokens):
            raise PolynomialError(f"trailing input near {self.peek()[1]!r}")
        return result

    def expression(self, variables):
        sign = 1
        kind, value = self.peek()
        if kind == "op" and value in "+-":
            self.take()
            sign = -1 if value == "-" else 1
        total = self.term(variables) * sign
        while True:
            kind, value = self.peek()
            if kind == "op" and value in "+-":
                self.take()
                nxt = self.term(variables)
                total = total + (nxt if value == "+" else -nxt)
            else:
                return total

    def term(self, variables):
        product = self.factor(variables)
        while True:
            kind, value = self.peek()
            if kind == "op" and value == "*":
                self.take()
                product = product * self.factor(variables)
            else:
                return product

    def factor(self, variables):
        kind, value = self.take()
        if kind == "int":
            number = Fraction(int(value))
            kind2, value2 = self.peek()
            if kind2 == "op" and value2 == "/":
                self.take()
                kind3, value3 = self.take()
                if kind3 != "int":
                    raise PolynomialError("expected an integer denominator")
                number = number / int(value3)
            return SparsePolynomial.constant(variables, number)
        if kind == "name":
            base = SparsePolynomial.variable(variables, value)
            return self._maybe_power(base)
        if kind == "op" and value == "(":
            inner = self.expression(variables)
            self.expect_op(")")
            return self._maybe_power(inner)
        if kind == "op" and value == "-":
            return -self.factor(variables)
        raise PolynomialError(f"unexpected token {value!r}")

    def _maybe_power(self, base):
        kind, value = self.peek()
        if kind == "op" and value == "^":
            self.take()
            kind2, value2 = self.take()
            if kind2 != "int":
                raise PolynomialError("expected an integer exponent after '^'")
            return base ** int(value2)
        return base


def parse_polynomial(text: str, variables: Optional[Sequence[str]] = None) -> SparsePolynomial:
    """Parse the text format; variables default to first-appearance order."""
    if variables is None:
        seen: List[str] = []
        for match in _TOKEN.finditer(text):
            name = match.group("name")
            if name and name not in seen:
                seen.append(name)
        variables = seen
    return _Parser(text).parse(tuple(variables))


# ----------------------------------------------------------- spec-style ops


def arith(p: SparsePolynomial, q, kind: str, substitution=None) -> SparsePolynomial:
    """Dispatch wrapper over +, *, **, and simultaneous substitution."""
    if kind == "add":
        return p + q
    if kind == "mul":
        return p * q
    if kind == "pow":
        return p**q
    if kind == "substitute":
        return p.substitute(substitution if substitution is not None else q)
    raise PolynomialError(f"unknown arith kind {kind!r}")


# ------------------------------------------------- univariate helper toolkit
#
# Dense ascending coefficient lists over Fraction; used for binary-form gcds,
# squarefree splitting, and rational root extraction.


def _uv_trim(coeffs: List[Fraction]) -> List[Fraction]:
    while coeffs and not coeffs[-1]:
        coeffs.pop()
    return coeffs


def _uv_degree(coeffs: List[Fraction]) -> int:
    return len(coeffs) - 1


def _uv_divmod(num: List[Fraction], den: List[Fraction]):
    num = num[:]
    quot = [Fraction(0)] * max(len(num) - len(den) + 1, 0)
    dlead = den[-1]
    while len(num) >= len(den) and any(num):
        if not num[-1]:
            num.pop()
            continue
        shift = len(num) - len(den)
        factor = num[-1] / dlead
        quot[shift] = factor
        for i, c in enumerate(den):
            num[shift + i] -= factor * c
        num.pop()
    return _uv_trim(quot), _uv_trim(num)


def _uv_gcd(a: List[Fraction], b: List[Fraction]) -> List[Fraction]:
    a, b = _uv_trim(a[:]), _uv_trim(b[:])
    while b:
        _, r = _uv_divmod(a, b)
        a, b = b, r
    if a:
        lead = a[-1]
        a = [c / lead for c in a]
    return a


def _uv_derivative(coeffs: List[Fraction]) -> List[Fraction]:
    return _uv_trim([coeffs[i] * i for i in range(1, len(coeffs))])


def _uv_sub(a: List[Fraction], b: List[Fraction]) -> List[Fraction]:
    out = [Fraction(0)] * max(len(a), len(b))
    for i, c in enumerate(a):
        out[i] += c
    for i, c in enumerate(b):
        out[i] -= c
    return _uv_trim(out)


def _uv_squarefree_decomposition(coeffs: List[Fraction]) -> List[Tuple[List[Fraction], int]]:
    """Yun's algorithm: returns [(monic squarefree factor, multiplicity)]."""
    coeffs = _uv_trim(coeffs[:])
    if not coeffs or _uv_degree(coeffs) == 0:
        return []
    lead = coeffs[-1]
    a = [c / lead for c in coeffs]
    da = _uv_derivative(a)
    g = _uv_gcd(a, da)
    out: List[Tuple[List[Fraction], int]] = []
    if _uv_degree(g) == 0:
        return [(a, 1)]
    c, _ = _uv_divmod(a, g)
    d = _uv_sub(_uv_divmod(da, g)[0], _uv_derivative(c))
    k = 1
    while _uv_degree(c) > 0:
        y = _uv_gcd(c, d) if d else c[:]
        if not y:
            y = [Fraction(1)]
        if _uv_degree(y) > 0:
            out.append((y, k))
            c, _ = _uv_divmod(c, y)
            d, _ = _uv_divmod(d, y) if d else ([], [])
        d = _uv_sub(d, _uv_derivative(c))
        k += 1
    return out


def _divisors(n: int, bound: int = 10**7) -> List[int]:
    n = abs(n)
    if n == 0:
        return []
    small: List[int] = []
    large: List[int] = []
    i = 1
    while i * i <= n and i <= bound:
        if n % i == 0:
            small.append(i)
            if i != n // i:
                large.append(n // i)
        i += 1
    return small + large[::-1]


def _uv_eval(coeffs: List[Fraction], point: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(coeffs):
        acc = acc * point + c
    return acc


def _uv_deflate(coeffs: List[Fraction], root: Fraction) -> List[Fraction]:
    """Divide by (t - root); the caller guarantees the division is exact."""
    out = [Fraction(0)] * (len(coeffs) - 1)
    acc = Fraction(0)
    for i in range(len(coeffs) - 1, 0, -1):
        acc = coeffs[i] + acc * root
        out[i - 1] = acc
    return _uv_trim(out)


def _uv_rational_roots(coeffs: List[Fraction]) -> List[Tuple[Fraction, int]]:
    """All rational roots with multiplicities, by candidate testing + deflation."""
    coeffs = _uv_trim(coeffs[:])
    if not coeffs:
        raise PolynomialError("zero polynomial has every rational as a root")
    roots: List[Tuple[Fraction, int]] = []
    zero_mult = 0
    while coeffs and not coeffs[0]:
        coeffs = coeffs[1:]
        zero_mult += 1
    if zero_mult:
        roots.append((Fraction(0), zero_mult))
    if _uv_degree(coeffs) < 1:
        return roots
    denom_lcm = 1
    for c in coeffs:
        denom_lcm = denom_lcm * c.denominator // gcd(denom_lcm, c.denominator)
    ints = [int(c * denom_lcm) for c in coeffs]
    content = 0
    for v in ints:
        content = gcd(content, v)
    ints = [v // content for v in ints]
    candidates = set()
    for p in _divisors(ints[0]):
        for q in _divisors(ints[-1]):
            candidates.add(Fraction(p, q))
            candidates.add(Fraction(-p, q))
    for r in sorted(candidates):
        mult = 0
        while _uv_degree(coeffs) >= 1 and not _uv_eval(coeffs, r):
            coeffs = _uv_deflate(coeffs, r)
            mult += 1
        if mult:
            roots.append((r, mult))
        if _uv_degree(coeffs) < 1:
            break
    return roots


# ------------------------------------------------------------- binary forms


def _binary_split(form: SparsePolynomial) -> Tuple[int, int, List[Fraction]]:
    """Split a nonzero binary form as x^A * y^B * (univariate part in t=x/y)."""
    x_exps = [e[0] for e in form.terms]
    y_exps = [e[1] for e in form.terms]
    a, b = min(x_exps), min(y_exps)
    degree = form.homogeneous_degree()
    coeffs = [Fraction(0)] * (degree - a - b + 1)
    for (ex, ey), c in form.terms.items():
        coeffs[ex - a] = c
    return a, b, _uv_trim(coeffs)


def _homogenize(variables: Tuple[str, str], coeffs: List[Fraction], xpow: int, ypow: int) -> SparsePolynomial:
    d = _uv_degree(coeffs)
    terms = {}
    for i, c in enumerate(coeffs):
        if c:
            terms[(i + xpow, d - i + ypow)] = c
    return SparsePolynomial(variables, terms)


def _require_binary_form(form: SparsePolynomial, label: str):
    if len(form.variables) != 2:
        raise PolynomialError(f"{label} must live over two variables, got {form.variables}")
    if not form.is_homogeneous():
        raise NonHomogeneousError(f"{label} is not homogeneous: {form}")


def binary_form_gcd(f: SparsePolynomial, g: SparsePolynomial) -> SparsePolynomial:
    """Gcd of two binary forms, monic in the leading lexicographic term.

    The zero form is a valid input: gcd(f, 0) is the monic normalization of f.
    """
    _require_binary_form(f, "gcd input")
    _require_binary_form(g, "gcd input")
    if f.variables != g.variables:
        raise VariableMismatchError(f"{f.variables} vs {g.variables}")
    if f.is_zero and g.is_zero:
        return SparsePolynomial.zero(f.variables)
    if f.is_zero or g.is_zero:
        nonzero = g if f.is_zero else f
        a, b, coeffs = _binary_split(nonzero)
        lead = coeffs[-1]
        return _homogenize(nonzero.variables, [c / lead for c in coeffs], a, b)
    af, bf, uf = _binary_split(f)
    ag, bg, ug = _binary_split(g)
    h = _uv_gcd(uf, ug)
    return _homogenize(f.variables, h, min(af, ag), min(bf, bg))


def binary_form_divides(f: SparsePolynomial, g: SparsePolynomial) -> bool:
    """Whether f divides g exactly (zero g is divisible by everything)."""
    if g.is_zero:
        return True
    if f.is_zero:
        return False
    try:
        g.divide_exact(f)
        return True
    except PolynomialError:
        return False


def binary_form_rational_linear_factors(form: SparsePolynomial) -> List[Tuple[SparsePolynomial, int]]:
    """Linear factors over Q with multiplicities, each normalized monic."""
    _require_binary_form(form, "factorization input")
    if form.is_zero:
        raise PolynomialError("zero form has no factorization")
    x, y = form.variables
    a, b, coeffs = _binary_split(form)
    out: List[Tuple[SparsePolynomial, int]] = []
    if a:
        out.append((SparsePolynomial.variable(form.variables, x), a))
    if b:
        out.append((SparsePolynomial.variable(form.variables, y), b))
    for root, mult in _uv_rational_roots(coeffs):
        # root t0 of the x/y-dehomogenization <-> factor (x - t0*y)
        factor = SparsePolynomial(form.variables, {(1, 0): Fraction(1), (0, 1): -root})
        out.append((factor, mult))
    return out


# ---------------------------------------------------------------- resultant


def resultant(p: SparsePolynomial, q: SparsePolynomial, name: str) -> SparsePolynomial:
    """Sylvester resultant eliminating one variable, computed exactly.

    Both arguments must have positive degree in the eliminated variable.  The
    determinant is evaluated with fraction-free (Bareiss) elimination, which
    keeps intermediate entries polynomial.
    """
    if p.variables != q.variables:
        raise VariableMismatchError(f"{p.variables} vs {q.variables}")
    m, n = p.degree_in(name), q.degree_in(name)
    if m < 1 or n < 1:
        raise PolynomialError(f"both arguments need positive degree in {name!r}")
    pc = p.coefficients_in(name)
    qc = q.coefficients_in(name)
    rest = tuple(v for v in p.variables if v != name)
    zero = SparsePolynomial.zero(rest)
    size = m + n
    matrix = [[zero] * size for _ in range(size)]
    for row in range(n):
        for k in range(m + 1):
            matrix[row][row + k] = pc.get(m - k, zero)
    for row in range(m):
        for k in range(n + 1):
            matrix[n + row][row + k] = qc.get(n - k, zero)
    return _bareiss_determinant(matrix, rest)


def _bareiss_determinant(matrix: List[List[SparsePolynomial]], variables: Tuple[str, ...]) -> SparsePolynomial:
    size = len(matrix)
    zero = SparsePolynomial.zero(variables)
    one = SparsePolynomial.constant(variables, 1)
    m = [row[:] for row in matrix]
    sign = 1
    prev = one
    for k in range(size - 1):
        if m[k][k].is_zero:
            pivot_row = next((r for r in range(k + 1, size) if not m[r][k].is_zero), None)
            if pivot_row is None:
                return zero
            m[k], m[pivot_row] = m[pivot_row], m[k]
            sign = -sign
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]).divide_exact(prev)
            m[i][k] = zero
        prev = m[k][k]
    det = m[size - 1][size - 1]
    return det if sign > 0 else -det
