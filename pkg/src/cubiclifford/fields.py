"""Exact arithmetic in the supported coefficient fields.

Three fields are supported, all exact:

* ``Q``   -- the rationals (``fractions.Fraction`` underneath),
* ``Qw``  -- Q(w) = Q[t]/(t^2 + t + 1), elements stored as pairs (a, b)
  meaning a + b*w with rational a, b,
* ``Fp``  -- a prime field with p = 1 (mod 3), p not in {2, 3}, together
  with a chosen cube root of unity ``omega`` (smallest such residue unless
  overridden).

Scalars are immutable; equality is representation equality, and every
representation is canonical (reduced fractions, reduced pairs, least
nonnegative residues).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt

from .errors import (
    DivisionByZero,
    FieldMismatch,
    UnsupportedField,
    UnsupportedFieldForTest,
    ZeroInput,
)

RATIONALS = "Q"
CYCLOTOMIC = "Qw"
PRIME = "Fp"


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, valid far beyond the 2^31 cap on p."""
    if n < 2:
        return False
    for small in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % small == 0:
            return n == small
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def iroot(m: int, n: int) -> int | None:
    """Exact integer n-th root of m >= 0, or None if m is not an n-th power."""
    if m < 0:
        raise ValueError("iroot expects m >= 0")
    if m in (0, 1):
        return m
    if n == 1:
        return m
    if n == 2:
        r = isqrt(m)
        return r if r * r == m else None
    hi = 1 << ((m.bit_length() + n - 1) // n + 1)
    lo = 0
    while lo < hi:
        mid = (lo + hi) // 2
        if mid**n < m:
            lo = mid + 1
        else:
            hi = mid
    return lo if lo**n == m else None


def prime_power_root_mod(a: int, r: int, p: int) -> int | None:
    """One solution of x^r = a (mod p) for prime r, or None.

    Adleman-Manders-Miller; reduces to Tonelli-Shanks for r = 2. When
    r | p - 1 a root exists iff a^((p-1)/r) = 1.
    """
    a %= p
    if a == 0:
        return 0
    if (p - 1) % r != 0:
        # x -> x^r is a bijection
        return pow(a, pow(r, -1, p - 1), p)
    if pow(a, (p - 1) // r, p) != 1:
        return None
    s, t = 0, p - 1
    while t % r == 0:
        t //= r
        s += 1
    b = 2
    while pow(b, (p - 1) // r, p) == 1:
        b += 1
    g = pow(b, t, p)  # generator of the r-Sylow subgroup, order r^s
    # x0 = a^alpha with r*alpha = 1 (mod t); then x0^r / a lies in the Sylow.
    alpha = pow(r, -1, t) if t > 1 else 0
    x = pow(a, alpha, p)
    e = pow(x, r, p) * pow(a, -1, p) % p
    # Pohlig-Hellman digits of e in base g; e is an r-th power in the Sylow,
    # so the lowest digit vanishes and the division by r below is exact.
    d = 0
    for i in range(s):
        probe = pow(e * pow(g, -d, p) % p, r ** (s - 1 - i), p)
        unit = pow(g, r ** (s - 1), p)
        digit, acc = 0, 1
        while acc != probe:
            acc = acc * unit % p
            digit += 1
        d += digit * r**i
    if d % r != 0:
        return None
    return x * pow(g, (r**s - d // r) % (r**s), p) % p


def _omega_residues(p: int) -> tuple[int, int]:
    """Both primitive cube roots of unity mod p (roots of t^2 + t + 1)."""
    s = prime_power_root_mod(p - 3, 2, p)  # sqrt(-3)
    if s is None:
        raise UnsupportedField(f"p = {p} has no primitive cube root of unity")
    inv2 = pow(2, -1, p)
    r1 = (-1 + s) * inv2 % p
    r2 = (-1 - s) * inv2 % p
    return (min(r1, r2), max(r1, r2))


@dataclass(frozen=True)
class FieldSpec:
    """One of Q, Q(w), or F_p with its chosen omega residue."""

    kind: str
    p: int | None = None
    omega_residue: int | None = None

    def __post_init__(self):
        if self.kind not in (RATIONALS, CYCLOTOMIC, PRIME):
            raise UnsupportedField(f"unknown field kind {self.kind!r}")
        if self.kind == PRIME:
            p = self.p
            if p is None or p in (2, 3) or p % 3 != 1 or not is_prime(p):
                raise UnsupportedField(
                    f"p must be a prime = 1 (mod 3), not in {{2, 3}}; got {p}"
                )
            w = self.omega_residue
            roots = _omega_residues(p)
            if w is None:
                object.__setattr__(self, "omega_residue", roots[0])
            elif w % p not in roots:
                raise UnsupportedField(f"{w} is not a cube root of 1 mod {p} (roots: {roots})")
            else:
                object.__setattr__(self, "omega_residue", w % p)
        elif self.p is not None or self.omega_residue is not None:
            raise UnsupportedField("p/omega only apply to Fp")

    # -- constructors -------------------------------------------------

    @staticmethod
    def rationals() -> "FieldSpec":
        return FieldSpec(RATIONALS)

    @staticmethod
    def cyclotomic() -> "FieldSpec":
        return FieldSpec(CYCLOTOMIC)

    @staticmethod
    def prime(p: int, omega: int | None = None) -> "FieldSpec":
        return FieldSpec(PRIME, p, omega)

    # -- scalar factories ---------------------------------------------

    def scalar(self, value) -> "Scalar":
        """Coerce an int, Fraction, or (a, b) pair into this field."""
        if isinstance(value, Scalar):
            if value.field != self:
                raise FieldMismatch("scalar belongs to a different field")
            return value
        if self.kind == PRIME:
            if isinstance(value, Fraction):
                if value.denominator % self.p == 0:
                    raise DivisionByZero("denominator vanishes mod p")
                return Scalar(self, value.numerator * pow(value.denominator, -1, self.p) % self.p)
            return Scalar(self, int(value) % self.p)
        if self.kind == RATIONALS:
            return Scalar(self, Fraction(value))
        if isinstance(value, tuple):
            return Scalar(self, (Fraction(value[0]), Fraction(value[1])))
        return Scalar(self, (Fraction(value), Fraction(0)))

    def zero(self) -> "Scalar":
        return self.scalar(0)

    def one(self) -> "Scalar":
        return self.scalar(1)

    def omega(self) -> "Scalar":
        """The chosen primitive cube root of unity; an error over Q."""
        if self.kind == RATIONALS:
            raise UnsupportedField("Q has no primitive cube root of unity")
        if self.kind == PRIME:
            return Scalar(self, self.omega_residue)
        return Scalar(self, (Fraction(0), Fraction(1)))

    def has_omega(self) -> bool:
        return self.kind != RATIONALS

    def cube_roots_of_unity(self) -> list["Scalar"]:
        if self.kind == RATIONALS:
            return [self.one()]
        w = self.omega()
        return [self.one(), w, w * w]

    def elements(self):
        """Iterate all field elements (Fp only)."""
        if self.kind != PRIME:
            raise UnsupportedField("only Fp is finite")
        for v in range(self.p):
            yield Scalar(self, v)

    # -- JSON ----------------------------------------------------------

    def to_json(self):
        if self.kind == PRIME:
            return {"kind": "Fp", "p": self.p, "omega": self.omega_residue}
        return {"kind": self.kind}

    @staticmethod
    def from_json(obj) -> "FieldSpec":
        kind = obj["kind"]
        if kind == "Fp":
            return FieldSpec.prime(obj["p"], obj.get("omega"))
        if kind in (RATIONALS, CYCLOTOMIC):
            return FieldSpec(kind)
        raise UnsupportedField(f"unknown field kind {kind!r}")

    def __str__(self):
        if self.kind == PRIME:
            return f"F{self.p}(w={self.omega_residue})"
        return "Q(w)" if self.kind == CYCLOTOMIC else "Q"


def _frac_str(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


class Scalar:
    """An immutable element of one of the three supported fields."""

    __slots__ = ("field", "val")

    def __init__(self, field: FieldSpec, val):
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "val", val)

    def __setattr__(self, *_):
        raise AttributeError("Scalar is immutable")

    def _coerce(self, other) -> "Scalar":
        if isinstance(other, Scalar):
            if other.field != self.field:
                raise FieldMismatch(f"{self.field} vs {other.field}")
            return other
        if isinstance(other, (int, Fraction)):
            return self.field.scalar(other)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        k = self.field.kind
        if k == PRIME:
            return Scalar(self.field, (self.val + o.val) % self.field.p)
        if k == RATIONALS:
            return Scalar(self.field, self.val + o.val)
        return Scalar(self.field, (self.val[0] + o.val[0], self.val[1] + o.val[1]))

    __radd__ = __add__

    def __neg__(self):
        k = self.field.kind
        if k == PRIME:
            return Scalar(self.field, -self.val % self.field.p)
        if k == RATIONALS:
            return Scalar(self.field, -self.val)
        return Scalar(self.field, (-self.val[0], -self.val[1]))

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        k = self.field.kind
        if k == PRIME:
            return Scalar(self.field, self.val * o.val % self.field.p)
        if k == RATIONALS:
            return Scalar(self.field, self.val * o.val)
        # (a + bw)(c + dw) with w^2 = -1 - w
        a, b = self.val
        c, d = o.val
        bd = b * d
        return Scalar(self.field, (a * c - bd, a * d + b * c - bd))

    __rmul__ = __mul__

    def inverse(self) -> "Scalar":
        if self.is_zero():
            raise DivisionByZero("inverse of zero")
        k = self.field.kind
        if k == PRIME:
            return Scalar(self.field, pow(self.val, -1, self.field.p))
        if k == RATIONALS:
            return Scalar(self.field, 1 / self.val)
        # 1/(a + bw) = conj/norm, conj = (a - b) - b*w, norm = a^2 - a*b + b^2
        a, b = self.val
        n = a * a - a * b + b * b
        return Scalar(self.field, ((a - b) / n, -b / n))

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result = self.field.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.field.scalar(other)
        return (
            isinstance(other, Scalar)
            and self.field == other.field
            and self.val == other.val
        )

    def __hash__(self):
        return hash((self.field, self.val))

    def is_zero(self) -> bool:
        if self.field.kind == CYCLOTOMIC:
            return self.val[0] == 0 and self.val[1] == 0
        return self.val == 0

    def is_rational(self) -> bool:
        """True if the value lies in Q (always true off Qw)."""
        return self.field.kind != CYCLOTOMIC or self.val[1] == 0

    def rational_part(self) -> Fraction:
        if self.field.kind == PRIME:
            raise UnsupportedField("Fp scalars have no rational lift")
        if self.field.kind == RATIONALS:
            return self.val
        if self.val[1] != 0:
            raise UnsupportedField("not a rational element of Q(w)")
        return self.val[0]

    def conjugate(self) -> "Scalar":
        """The omega -> omega^2 conjugate (identity off Qw)."""
        if self.field.kind != CYCLOTOMIC:
            return self
        a, b = self.val
        return Scalar(self.field, (a - b, -b))

    def __str__(self):
        k = self.field.kind
        if k == PRIME:
            return str(self.val)
        if k == RATIONALS:
            return _frac_str(self.val)
        a, b = self.val
        if b == 0:
            return _frac_str(a)
        wpart = "w" if b == 1 else "-w" if b == -1 else f"{_frac_str(b)}*w"
        if a == 0:
            return wpart
        return f"{_frac_str(a)}{'+' if not wpart.startswith('-') else ''}{wpart}"

    def __repr__(self):
        return f"Scalar({self.field}, {self})"

    def is_composite_text(self) -> bool:
        """True if str() needs parentheses inside a product."""
        return self.field.kind == CYCLOTOMIC and self.val[0] != 0 and self.val[1] != 0

    # -- JSON ----------------------------------------------------------

    def to_json(self):
        k = self.field.kind
        if k == PRIME:
            return self.val
        if k == RATIONALS:
            v = self.val
            return v.numerator if v.denominator == 1 else f"{v.numerator}/{v.denominator}"

        def part(q):
            return q.numerator if q.denominator == 1 else f"{q.numerator}/{q.denominator}"

        a, b = self.val
        if b == 0 and a.denominator == 1:
            return a.numerator
        return {"a": part(a), "b": part(b)}

    @staticmethod
    def from_json(field: FieldSpec, obj) -> "Scalar":
        if isinstance(obj, dict):
            if field.kind != CYCLOTOMIC:
                raise FieldMismatch("a+b*w literal outside Q(w)")
            return field.scalar((Fraction(str(obj["a"])), Fraction(str(obj["b"]))))
        if isinstance(obj, str):
            return field.scalar(Fraction(obj))
        return field.scalar(obj)


def scalar_arithmetic(a: Scalar, b: Scalar, op: str) -> Scalar:
    """Dispatch form of the four field operations (used by the CLI)."""
    if a.field != b.field:
        raise FieldMismatch(f"{a.field} vs {b.field}")
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise UnsupportedFieldForTest(f"unknown op {op!r}")


def _rational_nth_power_root(q: Fraction, n: int) -> Fraction | None:
    """Exact n-th root of a rational, or None. Needs no factorization:
    gcd(num, den) = 1, so both parts must be integer n-th powers."""
    if q == 0:
        return Fraction(0)
    neg = q < 0
    if neg and n % 2 == 0:
        return None
    num = iroot(abs(q.numerator), n)
    den = iroot(q.denominator, n)
    if num is None or den is None:
        return None
    root = Fraction(num, den)
    return -root if neg else root


def _qw_square_root(a: Fraction, b: Fraction) -> tuple[Fraction, Fraction] | None:
    """One square root of a + b*w in Q(w), or None."""
    if b == 0:
        r = _rational_nth_power_root(a, 2)
        if r is not None:
            return (r, Fraction(0))
        # (u + 2u*w)^2 = -3u^2, so a in -3*(Q*)^2 also has a root
        u = _rational_nth_power_root(-a / 3, 2)
        if u is not None:
            return (u, 2 * u)
        return None
    # v != 0; 2u = (b + v^2)/v and 3v^4 + (4a - 2b)v^2 - b^2 = 0
    disc = _rational_nth_power_root((4 * a - 2 * b) ** 2 + 12 * b * b, 2)
    if disc is None:
        return None
    for sign in (1, -1):
        v2 = (-(4 * a - 2 * b) + sign * disc) / 6
        if v2 <= 0:
            continue
        v = _rational_nth_power_root(v2, 2)
        if v is None:
            continue
        u = (b + v2) / (2 * v)
        if (u * u - v * v, 2 * u * v - v * v) == (a, b):
            return (u, v)
    return None


def sqrt_in_field(a: Scalar) -> Scalar | None:
    """A deterministic square root of ``a`` in its own field, or None.

    Choice of branch: least nonnegative residue over Fp; nonnegative root
    over Q; over Q(w) the root whose pair (a-part, b-part) is
    lexicographically largest of the two.
    """
    field = a.field
    if field.kind == PRIME:
        r = prime_power_root_mod(a.val, 2, field.p)
        if r is None:
            return None
        return Scalar(field, min(r, (-r) % field.p))
    if field.kind == RATIONALS:
        r = _rational_nth_power_root(a.val, 2)
        return None if r is None else Scalar(field, abs(r))
    pair = _qw_square_root(*a.val)
    if pair is None:
        return None
    return Scalar(field, max(pair, (-pair[0], -pair[1])))


def cube_root_in_field(a: Scalar) -> Scalar | None:
    """A cube root of ``a`` in its own field, or None."""
    field = a.field
    if field.kind == PRIME:
        r = prime_power_root_mod(a.val, 3, field.p)
        return None if r is None else Scalar(field, r)
    if field.kind == RATIONALS:
        r = _rational_nth_power_root(a.val, 3)
        return None if r is None else Scalar(field, r)
    return _qw_cube_root(a)


def _qw_cube_root(a: Scalar) -> Scalar | None:
    """Cube root in Q(w) via the integral lattice Z[w].

    Scale to T^3 = C with C in Z[w]; a root T is integral over Z, hence in
    Z[w], and N(T) is the exact cube root of N(C). Enumerate lattice points
    of that norm.
    """
    x, y = a.val
    if x == 0 and y == 0:
        return a.field.zero()
    den = (x.denominator * y.denominator) // gcd(x.denominator, y.denominator)
    ax = int(x * den * den * den)  # C = a * den^3, integral components
    ay = int(y * den * den * den)
    norm_c = ax * ax - ax * ay + ay * ay
    n3 = iroot(norm_c, 3)
    if n3 is None:
        return None
    # U^2 - U*V + V^2 = n3: for each U, V = (U +- sqrt(4*n3 - 3U^2))/2
    bound = isqrt(4 * n3 // 3) + 1
    for u in range(-bound, bound + 1):
        d = 4 * n3 - 3 * u * u
        if d < 0:
            continue
        s = isqrt(d)
        if s * s != d:
            continue
        for v2 in {(u + s), (u - s)}:
            if v2 % 2:
                continue
            v = v2 // 2
            # (u + v*w)^3 = u^3 - 3uv^2 + v^3 + 3uv(u - v) w
            if (u**3 - 3 * u * v * v + v**3, 3 * u * v * (u - v)) == (ax, ay):
                return a.field.scalar((Fraction(u, den), Fraction(v, den)))
    return None


def nth_power_class(a: Scalar, n: int) -> bool:
    """True iff ``a`` is an n-th power in the multiplicative group.

    Fp: a^((p-1)/gcd(n, p-1)) = 1. Q: exact integer root extraction.
    Q(w): only n in {2, 3, 6} and only for rational elements (a sixth power
    is exactly a square that is also a cube).
    """
    if n < 1:
        raise UnsupportedFieldForTest("n must be positive")
    if a.is_zero():
        raise ZeroInput("0 is outside the multiplicative group")
    field = a.field
    if field.kind == PRIME:
        e = (field.p - 1) // gcd(n, field.p - 1)
        return pow(a.val, e, field.p) == 1
    if field.kind == RATIONALS:
        return _rational_nth_power_root(a.val, n) is not None
    if n not in (2, 3, 6):
        raise UnsupportedFieldForTest(f"Q(w) power-class test limited to n in {{2,3,6}}, got {n}")
    if not a.is_rational():
        raise UnsupportedFieldForTest("Q(w) power-class test limited to rational elements")
    q = a.val[0]
    checks = []
    if n in (2, 6):
        checks.append(
            _rational_nth_power_root(q, 2) is not None
            or _rational_nth_power_root(-q / 3, 2) is not None
        )
    if n in (3, 6):
        checks.append(_rational_nth_power_root(q, 3) is not None)
    return all(checks)


def sixth_power_class_token(a: Scalar):
    """Canonical token labelling the class of ``a`` mod sixth powers (Fp only).

    Two nonzero residues have equal tokens iff their ratio is a sixth power.
    Returns None over Q / Q(w), where no factorization-free token exists.
    """
    if a.field.kind != PRIME:
        return None
    if a.is_zero():
        raise ZeroInput("0 has no power class")
    p = a.field.p
    return pow(a.val, (p - 1) // gcd(6, p - 1), p)
