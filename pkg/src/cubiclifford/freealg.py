"""The free associative algebra k<x, y>.

Words are plain strings over the alphabet "xy"; elements are finite
word -> Scalar maps. This is where inputs live before reduction to the
rank-18 normal form, and where linear changes of the two generators act.

Composition convention (frozen by the action-law test): substituting
g = (a b; c d) sends x -> a*x + c*y and y -> b*x + d*y, and
``linear_substitute(g, linear_substitute(h, e)) == linear_substitute(g*h, e)``
with g*h the ordinary matrix product. (The induced action on forms
composes the other way round; see forms.act_gl2.)
"""

from __future__ import annotations

from .errors import FieldMismatch, SingularMatrix, UnknownSymbol
from ._parsing import ExprParser
from .fields import FieldSpec, Scalar

LETTERS = "xy"


def word_text(word: str) -> str:
    """Compress a word into power notation: 'xxyyx' -> 'x^2*y^2*x'."""
    if not word:
        return "1"
    parts = []
    i = 0
    while i < len(word):
        j = i
        while j < len(word) and word[j] == word[i]:
            j += 1
        parts.append(word[i] if j - i == 1 else f"{word[i]}^{j - i}")
        i = j
    return "*".join(parts)


class FreeElement:
    __slots__ = ("field", "terms")

    def __init__(self, field: FieldSpec, terms: dict):
        self.field = field
        self.terms = {w: c for w, c in terms.items() if not c.is_zero()}

    # -- constructors ---------------------------------------------------

    @staticmethod
    def zero(field):
        return FreeElement(field, {})

    @staticmethod
    def one(field):
        return FreeElement(field, {"": field.one()})

    @staticmethod
    def word(field, w: str, coeff=1):
        assert all(ch in LETTERS for ch in w)
        return FreeElement(field, {w: field.scalar(coeff)})

    @staticmethod
    def generator(field, letter: str):
        return FreeElement.word(field, letter)

    # -- arithmetic ------------------------------------------------------

    def _check(self, other):
        if self.field != other.field:
            raise FieldMismatch(f"{self.field} vs {other.field}")

    def __add__(self, other):
        self._check(other)
        terms = dict(self.terms)
        for w, c in other.terms.items():
            acc = terms.get(w)
            terms[w] = c if acc is None else acc + c
        return FreeElement(self.field, terms)

    def __neg__(self):
        return FreeElement(self.field, {w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, Scalar):
            return self.scale(other)
        self._check(other)
        terms = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                w = w1 + w2
                c = c1 * c2
                acc = terms.get(w)
                terms[w] = c if acc is None else acc + c
        return FreeElement(self.field, terms)

    def scale(self, c: Scalar):
        if c.field != self.field:
            raise FieldMismatch("scalar from a different field")
        if c.is_zero():
            return FreeElement.zero(self.field)
        return FreeElement(self.field, {w: k * c for w, k in self.terms.items()})

    def __pow__(self, n: int):
        result = FreeElement.one(self.field)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        return (
            isinstance(other, FreeElement)
            and self.field == other.field
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.field, frozenset(self.terms.items())))

    def is_zero(self):
        return not self.terms

    def max_degree(self):
        return max((len(w) for w in self.terms), default=0)

    def homogeneous_parts(self) -> dict:
        parts = {}
        for w, c in self.terms.items():
            parts.setdefault(len(w), {})[w] = c
        return {n: FreeElement(self.field, t) for n, t in sorted(parts.items())}

    # -- printing / parsing -------------------------------------------------

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for w in sorted(self.terms, key=lambda w: (len(w), w)):
            coeff = self.terms[w]
            cs = str(coeff)
            if coeff.is_composite_text():
                cs = f"({cs})"
            if not w:
                text = cs
            elif cs == "1":
                text = word_text(w)
            elif cs == "-1":
                text = f"-{word_text(w)}"
            else:
                text = f"{cs}*{word_text(w)}"
            if not parts:
                parts.append(text)
            elif text.startswith("-"):
                parts.append(f" - {text[1:]}")
            else:
                parts.append(f" + {text}")
        return "".join(parts)

    def __repr__(self):
        return f"FreeElement({self})"

    def to_json(self):
        return [
            {"word": w, "coeff": self.terms[w].to_json()}
            for w in sorted(self.terms, key=lambda w: (len(w), w))
        ]


class _FreeContext:
    def __init__(self, field):
        self.field = field

    def const(self, q):
        return FreeElement(self.field, {"": self.field.scalar(q)})

    def symbol(self, name, pos):
        if name in ("x", "y"):
            return FreeElement.generator(self.field, name)
        if name == "w":
            return FreeElement(self.field, {"": self.field.omega()})
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


def parse_free_expression(text: str, field: FieldSpec) -> FreeElement:
    """Parse the expression grammar: x, y, w, integer and p/q literals,
    + - * ^ and parentheses."""
    return ExprParser(text, _FreeContext(field)).parse()


def linear_substitute(g, e: FreeElement) -> FreeElement:
    """Replace x by a*x + c*y and y by b*x + d*y throughout, then expand.

    ``g`` is a GL2Element (or anything with .field, .a, .b, .c, .d, .det).
    """
    if g.field != e.field:
        raise FieldMismatch(f"{g.field} vs {e.field}")
    if g.det.is_zero():
        raise SingularMatrix("substitution matrix must be invertible")
    field = e.field
    x, y = FreeElement.generator(field, "x"), FreeElement.generator(field, "y")
    images = {
        "x": x.scale(g.a) + y.scale(g.c),
        "y": x.scale(g.b) + y.scale(g.d),
    }
    total = FreeElement.zero(field)
    cache = {"": FreeElement.one(field)}
    for w, c in e.terms.items():
        if w not in cache:
            # build up prefix images so shared prefixes are reused
            for i in range(1, len(w) + 1):
                prefix = w[:i]
                if prefix not in cache:
                    cache[prefix] = cache[prefix[:-1]] * images[prefix[-1]]
        total = total + cache[w].scale(c)
    return total


# -- the distinguished elements -------------------------------------------

def alpha_element(field) -> FreeElement:
    """x^2*y + x*y*x + y*x^2, the u^2*v polarization sum."""
    return FreeElement(field, {w: field.one() for w in ("xxy", "xyx", "yxx")})


def beta_element(field) -> FreeElement:
    """x*y^2 + y*x*y + y^2*x, the u*v^2 polarization sum."""
    return FreeElement(field, {w: field.one() for w in ("xyy", "yxy", "yyx")})


def gamma_element(field) -> FreeElement:
    """(yx)^2 - x^2*y^2; equal to (xy)^2 - y^2*x^2 after reduction."""
    return FreeElement(field, {"yxyx": field.one(), "xxyy": -field.one()})


def gamma_element_alt(field) -> FreeElement:
    """(xy)^2 - y^2*x^2, the other defining expression for the same class."""
    return FreeElement(field, {"xyxy": field.one(), "yyxx": -field.one()})


def delta_element(field) -> FreeElement:
    """y*x - w*x*y."""
    return FreeElement(field, {"yx": field.one(), "xy": -field.omega()})


def epsilon_element(field) -> FreeElement:
    """x*y*x + w*x^2*y + w^2*y*x^2."""
    w = field.omega()
    return FreeElement(field, {"xyx": field.one(), "xxy": w, "yxx": w * w})


def s_element(field) -> FreeElement:
    """delta^3 - (3w(1-w)*x^3*y^3 + (1+2w^2)*alpha*beta)/2, the center
    coordinate with s^2 = gamma^3 + Delta/4."""
    w = field.omega()
    half = field.scalar(1) / field.scalar(2)
    d3 = delta_element(field) ** 3
    xy3 = FreeElement.word(field, "xxxyyy")
    ab = alpha_element(field) * beta_element(field)
    shift = xy3.scale(field.scalar(3) * w * (field.one() - w)) + ab.scale(
        field.one() + field.scalar(2) * w * w
    )
    return d3 - shift.scale(half)
