"""Scalar arithmetic over Q, Q(w), and F_p."""

import random
from fractions import Fraction

import pytest

from cubiclifford.errors import (
    DivisionByZero,
    FieldMismatch,
    UnsupportedField,
    UnsupportedFieldForTest,
    ZeroInput,
)
from cubiclifford.fields import (
    FieldSpec,
    Scalar,
    cube_root_in_field,
    iroot,
    nth_power_class,
    prime_power_root_mod,
    scalar_arithmetic,
    sixth_power_class_token,
    sqrt_in_field,
)

Q = FieldSpec.rationals()
QW = FieldSpec.cyclotomic()
F7 = FieldSpec.prime(7)
F13 = FieldSpec.prime(13)


def test_field_spec_validation():
    assert F7.omega_residue == 2  # smallest residue of order 3 mod 7
    assert FieldSpec.prime(7, 4).omega_residue == 4
    assert FieldSpec.prime(13).omega_residue == 3
    with pytest.raises(UnsupportedField):
        FieldSpec.prime(5)  # 5 = 2 mod 3
    with pytest.raises(UnsupportedField):
        FieldSpec.prime(3)
    with pytest.raises(UnsupportedField):
        FieldSpec.prime(9)
    with pytest.raises(UnsupportedField):
        FieldSpec.prime(7, 3)  # 3^3 = 6 != 1 mod 7
    with pytest.raises(UnsupportedField):
        Q.omega()


def test_omega_has_order_three():
    for field in (QW, F7, F13, FieldSpec.prime(7, 4), FieldSpec.prime(9973)):
        w = field.omega()
        assert w != field.one()
        assert w * w * w == field.one()
        assert w * w + w + 1 == field.zero()  # minimal polynomial


def test_spec_examples():
    w = QW.omega()
    assert w * w * w == QW.one()
    assert w + w * w == QW.scalar(-1)
    two = F7.scalar(2)
    assert two * two * two == F7.one()


def test_arithmetic_dispatch_and_errors():
    a, b = Q.scalar(Fraction(3, 4)), Q.scalar(Fraction(1, 4))
    assert scalar_arithmetic(a, b, "add") == Q.one()
    assert scalar_arithmetic(a, b, "div") == Q.scalar(3)
    with pytest.raises(FieldMismatch):
        scalar_arithmetic(a, F7.one(), "add")
    with pytest.raises(DivisionByZero):
        a / Q.zero()
    with pytest.raises(FieldMismatch):
        Q.one() + F7.one()


def test_inverse_property_random():
    rng = random.Random(1)
    for _ in range(100):
        fa = Q.scalar(Fraction(rng.randint(-40, 40), rng.randint(1, 20)))
        if not fa.is_zero():
            assert fa * fa.inverse() == Q.one()
        fb = QW.scalar((rng.randint(-9, 9), rng.randint(-9, 9)))
        if not fb.is_zero():
            assert fb * fb.inverse() == QW.one()
        fc = F13.scalar(rng.randint(1, 12))
        assert fc * fc.inverse() == F13.one()


def test_pow_and_neg():
    w = QW.omega()
    assert w**3 == QW.one()
    assert w**-1 == w * w
    assert (-F7.scalar(3)).val == 4
    assert F7.scalar(3) ** 6 == F7.one()


def test_iroot_exact():
    assert iroot(0, 3) == 0
    assert iroot(64, 6) == 2
    assert iroot(64, 3) == 4
    assert iroot(63, 3) is None
    assert iroot(10**30, 3) == 10**10
    assert iroot(10**30 + 1, 3) is None


def test_prime_power_root_against_brute_force():
    for p in (7, 13, 19, 31, 37, 43, 61):
        for r in (2, 3):
            cubes = {pow(x, r, p) for x in range(p)}
            for a in range(p):
                got = prime_power_root_mod(a, r, p)
                if a in cubes:
                    assert got is not None and pow(got, r, p) == a
                else:
                    assert got is None


def test_sqrt_examples():
    assert sqrt_in_field(F7.scalar(2)) == F7.scalar(3)  # least of {3, 4}
    assert sqrt_in_field(Q.zero()) == Q.zero()
    assert sqrt_in_field(Q.scalar(2)) is None
    assert sqrt_in_field(Q.scalar(Fraction(9, 4))) == Q.scalar(Fraction(3, 2))
    # -3 = (1 + 2w)^2 in Q(w)
    r = sqrt_in_field(QW.scalar(-3))
    assert r is not None and r * r == QW.scalar(-3)
    # w itself is a square: (w^2)^2 = w^4 = w
    r = sqrt_in_field(QW.omega())
    assert r is not None and r * r == QW.omega()
    assert sqrt_in_field(QW.scalar(2)) is None


def test_sqrt_of_square_is_consistent():
    rng = random.Random(2)
    for field in (Q, QW, F7, F13):
        for _ in range(40):
            if field.kind == "Fp":
                r = field.scalar(rng.randint(0, field.p - 1))
            elif field.kind == "Qw":
                r = field.scalar((rng.randint(-6, 6), rng.randint(-6, 6)))
            else:
                r = field.scalar(Fraction(rng.randint(-30, 30), rng.randint(1, 12)))
            sq = r * r
            got = sqrt_in_field(sq)
            assert got is not None and got * got == sq


def test_nth_power_class_examples():
    assert nth_power_class(F7.one(), 6) is True
    cubes = {pow(x, 3, 7) for x in range(1, 7)}
    assert cubes == {1, 6}
    assert nth_power_class(F7.scalar(3), 3) is False
    assert nth_power_class(F7.scalar(6), 3) is True
    assert nth_power_class(Q.scalar(64), 6) is True
    assert nth_power_class(Q.scalar(-8), 3) is True
    assert nth_power_class(Q.scalar(-4), 2) is False
    assert nth_power_class(Q.scalar(Fraction(8, 27)), 3) is True
    with pytest.raises(ZeroInput):
        nth_power_class(Q.zero(), 2)


def test_nth_power_class_qw():
    # -3 is a square (and not a cube) in Q(w)
    assert nth_power_class(QW.scalar(-3), 2) is True
    assert nth_power_class(QW.scalar(-3), 3) is False
    assert nth_power_class(QW.scalar(64), 6) is True
    # -27/4 is neither a square nor a sixth power in Q(w): -(-27/4)/3 = 9/4 is
    # a square, so -27/4 IS a square there, but not a cube.
    assert nth_power_class(QW.scalar(Fraction(-27, 4)), 2) is True
    assert nth_power_class(QW.scalar(Fraction(-27, 4)), 6) is False
    with pytest.raises(UnsupportedFieldForTest):
        nth_power_class(QW.omega(), 2)
    with pytest.raises(UnsupportedFieldForTest):
        nth_power_class(QW.scalar(2), 5)


def test_nth_power_class_invariant_under_nth_power_factors():
    rng = random.Random(3)
    for p in (7, 13):
        field = FieldSpec.prime(p)
        for n in (2, 3, 6):
            for _ in range(60):
                a = field.scalar(rng.randint(1, p - 1))
                b = field.scalar(rng.randint(1, p - 1))
                assert nth_power_class(a * b**n, n) == nth_power_class(a, n)


def test_cube_roots():
    assert cube_root_in_field(Q.scalar(Fraction(-27, 8))) == Q.scalar(Fraction(-3, 2))
    assert cube_root_in_field(Q.scalar(2)) is None
    r = cube_root_in_field(F7.scalar(6))
    assert r is not None and r**3 == F7.scalar(6)
    assert cube_root_in_field(F7.scalar(3)) is None
    # w = (w^2)^3 * w ... w is a cube iff some t^3 = w; N(w) = 1, t must be a unit
    r = cube_root_in_field(QW.omega())
    assert r is None  # units of Z[w] have cubes {1, -1}
    r = cube_root_in_field(QW.scalar(-8))
    assert r is not None and r**3 == QW.scalar(-8)
    rng = random.Random(4)
    for _ in range(20):
        t = QW.scalar((Fraction(rng.randint(-5, 5), rng.randint(1, 3)), Fraction(rng.randint(-5, 5))))
        c = t**3
        got = cube_root_in_field(c)
        assert got is not None and got**3 == c


def test_sixth_power_token():
    assert sixth_power_class_token(Q.scalar(5)) is None
    toks = {v: sixth_power_class_token(F13.scalar(v)) for v in range(1, 13)}
    sixth = {pow(x, 6, 13) for x in range(1, 13)}
    for a in range(1, 13):
        for b in range(1, 13):
            same = (a * pow(b, -1, 13)) % 13 in sixth
            assert (toks[a] == toks[b]) == same


def test_omega_swap_symmetry():
    # both cube roots mod 7 are legal omegas and are each other's square
    f_a = FieldSpec.prime(7, 2)
    f_b = FieldSpec.prime(7, 4)
    assert f_a.omega() * f_a.omega() == Scalar(f_a, f_b.omega_residue)


def test_json_round_trip():
    for field in (Q, QW, F7):
        assert FieldSpec.from_json(field.to_json()) == field
    vals = [Q.scalar(Fraction(3, 7)), Q.scalar(-2), QW.scalar((Fraction(1, 2), -3)), F7.scalar(5)]
    for v in vals:
        assert Scalar.from_json(v.field, v.to_json()) == v


def test_str_forms():
    assert str(Q.scalar(Fraction(-2, 3))) == "-2/3"
    assert str(QW.omega()) == "w"
    assert str(QW.scalar((1, -2))) == "1-2*w"
    assert str(QW.scalar((0, 2))) == "2*w"
    assert str(F7.scalar(5)) == "5"
