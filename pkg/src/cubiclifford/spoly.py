"""Sparse commutative multivariate polynomials over an exact scalar field.

This hosts the coefficient ring S = k[X3, AL, BE, Y3, GA] of the rank-18
module structure (X3, Y3 are the central generator cubes, AL/BE the two
polarization sums, GA the degree-4 central element), the center variable S,
and the univariate k[GA] coefficients of the specialized algebras.

Terms are stored as exponent-tuple -> nonzero Scalar. Canonical printing
orders terms by total degree descending, then exponent tuple descending
(first listed variable most significant).
"""

from __future__ import annotations

from .errors import FieldMismatch, MissingAssignment, UnknownSymbol, VariableMismatch
from ._parsing import ExprParser
from .fields import FieldSpec, Scalar

GCA_VARS = ("X3", "AL", "BE", "Y3", "GA")
CENTER_VARS = ("X3", "AL", "BE", "Y3", "GA", "S")
GAMMA_VARS = ("GA",)


class SPolynomial:
    __slots__ = ("field", "variables", "terms")

    def __init__(self, field: FieldSpec, variables: tuple[str, ...], terms: dict):
        self.field = field
        self.variables = variables
        self.terms = {e: c for e, c in terms.items() if not c.is_zero()}

    # -- constructors ----------------------------------------------------

    @staticmethod
    def zero(field, variables=GCA_VARS):
        return SPolynomial(field, variables, {})

    @staticmethod
    def const(field, value, variables=GCA_VARS):
        c = field.scalar(value)
        return SPolynomial(field, variables, {(0,) * len(variables): c})

    @staticmethod
    def variable(field, name, variables=GCA_VARS):
        if name not in variables:
            raise VariableMismatch(f"{name!r} not among {variables}")
        expo = tuple(1 if v == name else 0 for v in variables)
        return SPolynomial(field, variables, {expo: field.one()})

    @staticmethod
    def monomial(field, exponents, coeff, variables=GCA_VARS):
        return SPolynomial(field, variables, {tuple(exponents): field.scalar(coeff)})

    # -- structure -------------------------------------------------------

    def _check(self, other):
        if self.field != other.field:
            raise FieldMismatch(f"{self.field} vs {other.field}")
        if self.variables != other.variables:
            raise VariableMismatch(f"{self.variables} vs {other.variables}")

    def is_zero(self):
        return not self.terms

    def is_constant(self):
        return all(all(e == 0 for e in expo) for expo in self.terms)

    def constant_value(self) -> Scalar:
        zero_expo = (0,) * len(self.variables)
        c = self.terms.get(zero_expo)
        if c is None and len(self.terms) == 0:
            return self.field.zero()
        if len(self.terms) > 1 or c is None:
            raise VariableMismatch("polynomial is not constant")
        return c

    def total_degree(self):
        return max((sum(e) for e in self.terms), default=0)

    def __eq__(self, other):
        return (
            isinstance(other, SPolynomial)
            and self.field == other.field
            and self.variables == other.variables
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.field, self.variables, frozenset(self.terms.items())))

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        self._check(other)
        terms = dict(self.terms)
        for e, c in other.terms.items():
            acc = terms.get(e)
            terms[e] = c if acc is None else acc + c
        return SPolynomial(self.field, self.variables, terms)

    def __neg__(self):
        return SPolynomial(self.field, self.variables, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, Scalar):
            return self.scale(other)
        self._check(other)
        terms = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                c = c1 * c2
                acc = terms.get(e)
                terms[e] = c if acc is None else acc + c
        return SPolynomial(self.field, self.variables, terms)

    def scale(self, c: Scalar):
        if c.field != self.field:
            raise FieldMismatch("scalar from a different field")
        if c.is_zero():
            return SPolynomial.zero(self.field, self.variables)
        return SPolynomial(self.field, self.variables, {e: k * c for e, k in self.terms.items()})

    def __pow__(self, n: int):
        result = SPolynomial.const(self.field, 1, self.variables)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- evaluation ---------------------------------------------------------

    def evaluate(self, assignment: dict) -> Scalar:
        """Full evaluation; every variable must be assigned."""
        point = []
        for v in self.variables:
            if v not in assignment:
                raise MissingAssignment(f"no value for {v!r}")
            s = assignment[v]
            if s.field != self.field:
                raise FieldMismatch(f"assignment for {v!r} is in {s.field}")
            point.append(s)
        total = self.field.zero()
        for expo, coeff in self.terms.items():
            term = coeff
            for val, e in zip(point, expo):
                if e:
                    term = term * val**e
            total = total + term
        return total

    def substitute(self, assignment: dict, keep: tuple[str, ...]) -> "SPolynomial":
        """Evaluate some variables, keeping ``keep`` formal (in their order)."""
        positions = []
        for v in self.variables:
            if v in keep:
                positions.append(("keep", keep.index(v)))
            elif v in assignment:
                positions.append(("eval", assignment[v]))
            else:
                raise MissingAssignment(f"no value for {v!r}")
        out = {}
        for expo, coeff in self.terms.items():
            new_expo = [0] * len(keep)
            c = coeff
            for (what, info), e in zip(positions, expo):
                if what == "keep":
                    new_expo[info] += e
                elif e:
                    c = c * info**e
            key = tuple(new_expo)
            acc = out.get(key)
            out[key] = c if acc is None else acc + c
        return SPolynomial(self.field, keep, out)

    # -- printing / parsing ---------------------------------------------------

    def _sorted_terms(self):
        return sorted(self.terms.items(), key=lambda item: (sum(item[0]), item[0]), reverse=True)

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for expo, coeff in self._sorted_terms():
            mono = "*".join(
                v if e == 1 else f"{v}^{e}" for v, e in zip(self.variables, expo) if e
            )
            cs = str(coeff)
            if coeff.is_composite_text():
                cs = f"({cs})"
            if not mono:
                text = cs
            elif cs == "1":
                text = mono
            elif cs == "-1":
                text = f"-{mono}"
            else:
                text = f"{cs}*{mono}"
            if not parts:
                parts.append(text)
            elif text.startswith("-"):
                parts.append(f" - {text[1:]}")
            else:
                parts.append(f" + {text}")
        return "".join(parts)

    def __repr__(self):
        return f"SPolynomial({self})"

    def to_json(self):
        return str(self)

    @staticmethod
    def parse(text: str, field: FieldSpec, variables=GCA_VARS) -> "SPolynomial":
        return ExprParser(text, _PolyContext(field, variables)).parse()


class _PolyContext:
    def __init__(self, field, variables):
        self.field = field
        self.variables = variables

    def const(self, q):
        return SPolynomial.const(self.field, self.field.scalar(q), self.variables)

    def symbol(self, name, pos):
        if name == "w":
            return SPolynomial.const(self.field, self.field.omega(), self.variables)
        if name in self.variables:
            return SPolynomial.variable(self.field, name, self.variables)
        raise UnknownSymbol(f"unknown symbol {name!r}", pos)

    @staticmethod
    def add(a, b):
        return a + b

    @staticmethod
    def sub(a, b):
        return a - b

    @staticmethod
    def mul(a, b):
        return a * b

    @staticmethod
    def neg(a):
        return -a

    @staticmethod
    def pow_int(a, n):
        return a**n


def poly_arithmetic(p: SPolynomial, q: SPolynomial, op: str) -> SPolynomial:
    if op == "add":
        return p + q
    if op == "sub":
        return p - q
    if op == "mul":
        return p * q
    raise VariableMismatch(f"unknown op {op!r}")


def discriminant_polynomial(field: FieldSpec, variables=GCA_VARS) -> SPolynomial:
    """Delta = 18*X3*AL*BE*Y3 - 4*AL^3*Y3 + AL^2*BE^2 - 4*X3*BE^3 - 27*X3^2*Y3^2.

    This is the expansion the center equation uses; the variant missing the
    AL^2*BE^2 term that appears once elsewhere fails the s^2 identity.
    """
    return SPolynomial.parse(
        "18*X3*AL*BE*Y3 - 4*AL^3*Y3 + AL^2*BE^2 - 4*X3*BE^3 - 27*X3^2*Y3^2",
        field,
        variables,
    )
