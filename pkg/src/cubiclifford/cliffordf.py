"""Specialized Clifford algebras: the generic rank-18 module evaluated at a
binary cubic form, leaving the degree-4 central generator formal.

Elements are 18-vectors of univariate polynomials in GA over k. Products
fold through the generic structure matrices with (X3, AL, BE, Y3) evaluated
at the form's coefficients, so the specialization map is an algebra
homomorphism by construction and is cross-checked as one in the tests.
"""

from __future__ import annotations

from functools import lru_cache

from .errors import (
    FieldMismatch,
    FormMismatch,
    HypothesisNotMet,
    SingularMatrix,
    UnsupportedField,
)
from .fields import Scalar, sqrt_in_field
from .forms import BinaryCubicForm, GL2Element, act_gl2
from .freealg import (
    FreeElement,
    alpha_element,
    beta_element,
    epsilon_element,
    gamma_element,
    linear_substitute,
)
from .gca import BASIS_WORDS, GCAElement, _structure_columns_int
from .spoly import GAMMA_VARS, SPolynomial

from . import curves


class CliffordFElement:
    """An element of the algebra at a fixed form: 18 polynomials in GA."""

    __slots__ = ("form", "coords")

    def __init__(self, form: BinaryCubicForm, coords):
        self.form = form
        self.coords = tuple(coords)
        assert len(self.coords) == 18

    def _check(self, other):
        if self.form != other.form:
            raise FormMismatch("elements specialized at different forms")

    def __add__(self, other):
        self._check(other)
        return CliffordFElement(self.form, [a + b for a, b in zip(self.coords, other.coords)])

    def __sub__(self, other):
        self._check(other)
        return CliffordFElement(self.form, [a - b for a, b in zip(self.coords, other.coords)])

    def __neg__(self):
        return CliffordFElement(self.form, [-a for a in self.coords])

    def scale(self, c: Scalar):
        return CliffordFElement(self.form, [a.scale(c) for a in self.coords])

    def is_zero(self):
        return all(c.is_zero() for c in self.coords)

    def __eq__(self, other):
        return (
            isinstance(other, CliffordFElement)
            and self.form == other.form
            and self.coords == other.coords
        )

    def __hash__(self):
        return hash((self.form, self.coords))

    def __str__(self):
        parts = [f"[{i}] {c}" for i, c in enumerate(self.coords) if not c.is_zero()]
        return "0" if not parts else "; ".join(parts)

    def __repr__(self):
        return f"CliffordFElement({self})"

    def to_json(self):
        return {"form": self.form.to_json(), "coords": [str(c) for c in self.coords]}


class SpecializedAlgebra:
    """The rank-18 module over k[GA] at one nondegenerate form."""

    def __init__(self, form: BinaryCubicForm):
        if not form.field.has_omega():
            raise UnsupportedField("the specialized algebra needs omega in the field")
        form.require_nondegenerate()
        self.form = form
        self.field = form.field
        self._zero = SPolynomial.zero(self.field, GAMMA_VARS)
        c0, c1, c2, c3 = form.coeffs
        consts = (c0, c1, c2, c3)
        cols = _structure_columns_int()
        self.mx, self.my = [], []
        for j in range(18):
            for letter, store in (("x", self.mx), ("y", self.my)):
                column = []
                for i, poly in enumerate(cols[(letter, j)]):
                    terms = {}
                    for expo, c in poly:
                        coeff = self.field.scalar(c)
                        for base, e in zip(consts, expo[:4]):
                            if e:
                                coeff = coeff * base**e
                        key = (expo[4],)
                        acc = terms.get(key)
                        terms[key] = coeff if acc is None else acc + coeff
                    p = SPolynomial(self.field, GAMMA_VARS, terms)
                    if not p.is_zero():
                        column.append((i, p))
                store.append(column)

    # -- constructors -----------------------------------------------------

    def zero(self) -> CliffordFElement:
        return CliffordFElement(self.form, [self._zero] * 18)

    def one(self) -> CliffordFElement:
        return self.basis_element(0)

    def basis_element(self, i: int) -> CliffordFElement:
        coords = [self._zero] * 18
        coords[i] = SPolynomial.const(self.field, 1, GAMMA_VARS)
        return CliffordFElement(self.form, coords)

    def scalar_element(self, poly: SPolynomial) -> CliffordFElement:
        coords = [self._zero] * 18
        coords[0] = poly
        return CliffordFElement(self.form, coords)

    def gamma(self) -> CliffordFElement:
        return self.scalar_element(SPolynomial.variable(self.field, "GA", GAMMA_VARS))

    # -- products ----------------------------------------------------------

    def _mul_letter(self, coords, letter):
        cols = self.mx if letter == "x" else self.my
        out = [self._zero] * 18
        for j in range(18):
            v = coords[j]
            if v.is_zero():
                continue
            for i, p in cols[j]:
                out[i] = out[i] + v * p
        return tuple(out)

    def reduce_free(self, e: FreeElement) -> CliffordFElement:
        if e.field != self.field:
            raise FieldMismatch(f"{e.field} vs {self.field}")
        total = self.zero()
        unit = self.one().coords
        for w, c in e.terms.items():
            coords = unit
            for letter in w:
                coords = self._mul_letter(coords, letter)
            total = total + CliffordFElement(self.form, coords).scale(c)
        return total

    def mul(self, u: CliffordFElement, v: CliffordFElement) -> CliffordFElement:
        if u.form != self.form or v.form != self.form:
            raise FormMismatch("elements from a different specialization")
        total = self.zero()
        for j in range(18):
            vj = v.coords[j]
            if vj.is_zero():
                continue
            coords = u.coords
            for letter in BASIS_WORDS[j]:
                coords = self._mul_letter(coords, letter)
            total = total + CliffordFElement(self.form, [a * vj for a in coords])
        return total

    def left_multiplication_matrix(self, u: CliffordFElement):
        """18x18 matrix of L_u over k[GA] (columns are u * b_j)."""
        return [self.mul(u, self.basis_element(j)).coords for j in range(18)]

    def relations_hold(self) -> bool:
        """The four defining relations as identities of the representation."""
        field = self.field
        x3 = FreeElement.word(field, "xxx")
        y3 = FreeElement.word(field, "yyy")
        checks = (
            x3 - FreeElement.one(field).scale(self.form.coeffs[0]),
            alpha_element(field) - FreeElement.one(field).scale(self.form.coeffs[1]),
            beta_element(field) - FreeElement.one(field).scale(self.form.coeffs[2]),
            y3 - FreeElement.one(field).scale(self.form.coeffs[3]),
        )
        return all(self.reduce_free(rel).is_zero() for rel in checks)


@lru_cache(maxsize=64)
def specialized_algebra(form: BinaryCubicForm) -> SpecializedAlgebra:
    return SpecializedAlgebra(form)


def specialize(u: GCAElement, f: BinaryCubicForm) -> CliffordFElement:
    """Evaluate the S-coefficients at the form, GA left formal."""
    if u.field != f.field:
        raise FieldMismatch(f"{u.field} vs {f.field}")
    f.require_nondegenerate()
    c0, c1, c2, c3 = f.coeffs
    assign = {"X3": c0, "AL": c1, "BE": c2, "Y3": c3}
    return CliffordFElement(f, [p.substitute(assign, GAMMA_VARS) for p in u.coords])


def mul_af(u: CliffordFElement, v: CliffordFElement) -> CliffordFElement:
    if u.form != v.form:
        raise FormMismatch("elements specialized at different forms")
    return specialized_algebra(u.form).mul(u, v)


class IsoReport:
    __slots__ = ("relations", "gamma_factor", "gamma_expected")

    def __init__(self, relations, gamma_factor, gamma_expected):
        self.relations = relations
        self.gamma_factor = gamma_factor
        self.gamma_expected = gamma_expected

    @property
    def passed(self):
        return all(self.relations.values()) and self.gamma_factor == self.gamma_expected

    def to_json(self):
        return {
            "relations": self.relations,
            "gamma_factor": None if self.gamma_factor is None else self.gamma_factor.to_json(),
            "gamma_expected": self.gamma_expected.to_json(),
            "pass": self.passed,
        }


def check_clifford_iso(g: GL2Element, f: BinaryCubicForm) -> IsoReport:
    """Verify that x -> g.x, y -> g.y carries the defining relations of the
    transformed form's algebra into identities at f, and report the induced
    scaling of the degree-4 central generator (must be det(g)^2)."""
    if g.field != f.field:
        raise FieldMismatch("matrix and form fields differ")
    f.require_nondegenerate()
    if g.det.is_zero():
        raise SingularMatrix("g must be invertible")
    field = f.field
    target = act_gl2(g, f)
    alg = specialized_algebra(f)
    one = FreeElement.one(field)
    sources = (
        FreeElement.word(field, "xxx"),
        alpha_element(field),
        beta_element(field),
        FreeElement.word(field, "yyy"),
    )
    names = ("cube-x", "polarization-u2v", "polarization-uv2", "cube-y")
    relations = {}
    for name, src, coeff in zip(names, sources, target.coeffs):
        image = linear_substitute(g, src) - one.scale(coeff)
        relations[name] = alg.reduce_free(image).is_zero()
    gamma_image = alg.reduce_free(linear_substitute(g, gamma_element(field)))
    factor = None
    expected = g.det**2
    if all(gamma_image.coords[i].is_zero() for i in range(1, 18)):
        head = gamma_image.coords[0]
        if head.is_zero():
            factor = field.zero()
        elif head.terms.keys() == {(1,)}:
            factor = head.terms[(1,)]
    return IsoReport(relations, factor, expected)


class SymbolReport:
    __slots__ = ("checks", "first_failure")

    def __init__(self, checks, first_failure):
        self.checks = checks
        self.first_failure = first_failure

    @property
    def passed(self):
        return self.first_failure is None

    def to_json(self):
        out = {"checks": {k: v["pass"] for k, v in self.checks.items()}, "pass": self.passed}
        if self.first_failure is not None:
            out["first_failure"] = self.first_failure
            out["witness"] = self.checks[self.first_failure]["witness"]
        return out


def symbol_relations_check(f: BinaryCubicForm) -> SymbolReport:
    """The cyclic-algebra relations at f: eps*x = w*x*eps,
    eps*y = w*y*eps + (1-w)*gamma, and eps^3 central."""
    f.require_nondegenerate()
    field = f.field
    alg = specialized_algebra(f)
    w = field.omega()
    one = field.one()
    x = FreeElement.generator(field, "x")
    y = FreeElement.generator(field, "y")
    eps = epsilon_element(field)
    ga = gamma_element(field)
    eps3 = eps**3
    identities = (
        ("eps-x-commutation", eps * x - (x * eps).scale(w)),
        ("eps-y-commutation", eps * y - (y * eps).scale(w) - ga.scale(one - w)),
        ("eps-cube-central-x", eps3 * x - x * eps3),
        ("eps-cube-central-y", eps3 * y - y * eps3),
    )
    checks = {}
    first_failure = None
    for name, elem in identities:
        value = alg.reduce_free(elem)
        entry = {"pass": value.is_zero()}
        if not value.is_zero():
            entry["witness"] = value.to_json()["coords"]
            if first_failure is None:
                first_failure = name
        checks[name] = entry
    return SymbolReport(checks, first_failure)


class BrauerProbe:
    __slots__ = ("status", "witness")

    def __init__(self, status, witness):
        self.status = status
        self.witness = witness

    def to_json(self):
        out = {"status": self.status}
        if self.witness is not None:
            out["witness"] = self.witness.to_json()
        return out


def brauer_triviality_probe(f: BinaryCubicForm, budget: int | None = None) -> BrauerProbe:
    """A rational point on w^3 = f(u, v) certifies that the class of the
    specialized algebra is trivial; absence within budget proves nothing."""
    f.require_nondegenerate()
    point = curves.point_search(f, budget)
    if point is None:
        return BrauerProbe("unknown-within-budget", None)
    return BrauerProbe("trivial", point)


def gamma_independence_check(f: BinaryCubicForm, degree_bound: int) -> bool:
    """Evidence for freeness over k[GA]: the left-multiplication operators
    of GA^j * b_i (j <= degree_bound) are k-linearly independent.

    The representation is validated first (the defining relations hold as
    operator identities), so operator independence implies independence of
    the elements themselves in the specialized algebra.
    """
    f.require_nondegenerate()
    if sqrt_in_field(f.field.scalar(-108) * f.discriminant()) is None:
        raise HypothesisNotMet("sqrt(-108*Delta) is not in the field")
    alg = specialized_algebra(f)
    if not alg.relations_hold():
        return False
    vectors = []
    max_deg = 0
    mats = []
    for i in range(18):
        mat = alg.left_multiplication_matrix(alg.basis_element(i))
        mats.append(mat)
        for col in mat:
            for p in col:
                if not p.is_zero():
                    max_deg = max(max_deg, p.total_degree())
    width = max_deg + degree_bound + 1
    field = f.field
    zero = field.zero()
    for shift in range(degree_bound + 1):
        for mat in mats:
            vec = []
            for col in mat:
                for p in col:
                    dense = [zero] * width
                    for (e,), c in p.terms.items():
                        dense[e + shift] = c
                    vec.extend(dense)
            vectors.append(vec)
    return _rank(vectors, field) == len(vectors)


def _rank(vectors, field) -> int:
    if field.kind == "Fp":
        import numpy as np

        from .gca import _rref_mod_p

        a = np.array([[s.val for s in v] for v in vectors], dtype=np.int64)
        _, _, pivots = _rref_mod_p(a.T % field.p, field.p)
        return len(pivots)
    rows = [list(v) for v in vectors]
    ncols = len(rows[0]) if rows else 0
    rank = 0
    for c in range(ncols):
        piv = next((i for i in range(rank, len(rows)) if not rows[i][c].is_zero()), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = rows[rank][c].inverse()
        rows[rank] = [v * inv for v in rows[rank]]
        for i in range(len(rows)):
            if i != rank and not rows[i][c].is_zero():
                fct = rows[i][c]
                rows[i] = [a - fct * b for a, b in zip(rows[i], rows[rank])]
        rank += 1
        if rank == len(rows):
            break
    return rank
