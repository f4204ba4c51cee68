"""Coefficient fields: exact rationals and prime fields.

Scalars are plain Python values so the polynomial engine stays cheap: a
`fractions.Fraction` in characteristic 0, an int in [0, p) in characteristic
p. A Field object carries the arithmetic; polynomials never look at their
coefficients except through it.
"""

from fractions import Fraction

from .errors import DivisionByZero, InvalidCharacteristic, MixedCharacteristic

DEFAULT_PRIME = 32003  # classical default modulus for modular CAS runs


def _is_prime(n):
    """Deterministic Miller-Rabin, valid far beyond 64-bit inputs."""
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class Field:
    """Shared interface; see RationalField and PrimeField."""

    characteristic = None

    def __eq__(self, other):
        return isinstance(other, Field) and self.characteristic == other.characteristic

    def __hash__(self):
        return hash(("germkit.Field", self.characteristic))

    def arith(self, a, b, op):
        """Binary arithmetic by name: op in {'add','sub','mul','div'}."""
        if op == "add":
            return self.add(a, b)
        if op == "sub":
            return self.sub(a, b)
        if op == "mul":
            return self.mul(a, b)
        if op == "div":
            return self.div(a, b)
        raise ValueError("unknown op %r" % (op,))


class RationalField(Field):
    """The rationals, backed by fractions.Fraction.

    Fraction already keeps values normalized (gcd 1, positive denominator),
    which is exactly the canonical form we promise externally.
    """

    characteristic = 0
    zero = Fraction(0)
    one = Fraction(1)

    def coerce(self, x):
        if isinstance(x, Fraction):
            return x
        if isinstance(x, int):
            return Fraction(x)
        raise TypeError("cannot coerce %r into QQ" % (x,))

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def div(self, a, b):
        if not b:
            raise DivisionByZero("division by zero in QQ")
        return a / b

    def neg(self, a):
        return -a

    def inv(self, a):
        if not a:
            raise DivisionByZero("inverse of zero in QQ")
        return 1 / a

    def to_str(self, a):
        return str(a)

    def __repr__(self):
        return "QQ"


class PrimeField(Field):
    """F_p for a prime p; scalars are ints reduced into [0, p)."""

    def __init__(self, p):
        if not isinstance(p, int) or not _is_prime(p):
            raise InvalidCharacteristic("characteristic must be 0 or a prime, got %r" % (p,))
        self.characteristic = p
        self.zero = 0
        self.one = 1 % p

    def coerce(self, x):
        p = self.characteristic
        if isinstance(x, int):
            return x % p
        if isinstance(x, Fraction):
            den = x.denominator % p
            if den == 0:
                raise DivisionByZero("denominator divisible by %d" % p)
            return x.numerator * pow(den, p - 2, p) % p
        raise TypeError("cannot coerce %r into F_%d" % (x, self.characteristic))

    def add(self, a, b):
        return (a + b) % self.characteristic

    def sub(self, a, b):
        return (a - b) % self.characteristic

    def mul(self, a, b):
        return a * b % self.characteristic

    def div(self, a, b):
        p = self.characteristic
        if b % p == 0:
            raise DivisionByZero("division by zero in F_%d" % p)
        return a * pow(b, p - 2, p) % p

    def neg(self, a):
        return -a % self.characteristic

    def inv(self, a):
        p = self.characteristic
        if a % p == 0:
            raise DivisionByZero("inverse of zero in F_%d" % p)
        return pow(a, p - 2, p)

    def to_str(self, a):
        return str(a)

    def __repr__(self):
        return "F_%d" % self.characteristic


QQ = RationalField()

_prime_fields = {}


def field_for(characteristic):
    """Field of the given characteristic (0 or a prime)."""
    if characteristic == 0:
        return QQ
    f = _prime_fields.get(characteristic)
    if f is None:
        f = _prime_fields[characteristic] = PrimeField(characteristic)
    return f


def field_arith(field_a, a, field_b, b, op):
    """Spec-level binary arithmetic that refuses to mix characteristics."""
    if field_a != field_b:
        raise MixedCharacteristic(
            "cannot combine characteristic %r with %r"
            % (field_a.characteristic, field_b.characteristic)
        )
    return field_a.arith(a, b, op)


def inverse(field, a):
    return field.inv(a)
