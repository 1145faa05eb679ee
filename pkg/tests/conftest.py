"""Shared helpers for building random exact-field objects in tests."""

from fractions import Fraction

from cubiclifford.errors import SingularMatrix
from cubiclifford.fields import FieldSpec
from cubiclifford.forms import BinaryCubicForm, GL2Element
from cubiclifford.freealg import FreeElement


def rand_scalar(field, rng, nonzero=False):
    while True:
        if field.kind == "Fp":
            s = field.scalar(rng.randint(0, field.p - 1))
        elif field.kind == "Qw":
            s = field.scalar((Fraction(rng.randint(-4, 4)), Fraction(rng.randint(-4, 4))))
        else:
            s = field.scalar(Fraction(rng.randint(-8, 8), rng.randint(1, 4)))
        if not (nonzero and s.is_zero()):
            return s


def rand_gl2(field, rng):
    while True:
        try:
            return GL2Element(field, [rand_scalar(field, rng) for _ in range(4)])
        except SingularMatrix:
            continue


def rand_form(field, rng, nondegenerate=True):
    while True:
        f = BinaryCubicForm(field, [rand_scalar(field, rng) for _ in range(4)])
        if not nondegenerate or f.is_nondegenerate():
            return f


def rand_free_element(field, rng, max_len=8, max_terms=4):
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        w = "".join(rng.choice("xy") for _ in range(rng.randint(0, max_len)))
        terms[w] = rand_scalar(field, rng, nonzero=True)
    return FreeElement(field, terms)


Q = FieldSpec.rationals()
QW = FieldSpec.cyclotomic()
F7 = FieldSpec.prime(7)
F7B = FieldSpec.prime(7, 4)
F13 = FieldSpec.prime(13)
