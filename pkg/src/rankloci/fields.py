"""Exact scalars: arbitrary-precision rationals and prime fields F_p.

Rationals are plain ``fractions.Fraction`` (always lowest terms, positive
denominator).  Prime-field elements are immutable ``Fp`` wrappers holding the
reduced representative in [0, p).  Field objects dispatch construction,
parsing and printing so the rest of the package is field-agnostic.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import InputError


class Rationals:
    """The field Q.  Singleton ``QQ``."""

    char = 0
    name = "Q"
    zero = Fraction(0)
    one = Fraction(1)

    def of(self, x):
        return Fraction(x)

    def parse(self, s: str) -> Fraction:
        try:
            return Fraction(s)
        except (ValueError, ZeroDivisionError) as e:
            raise InputError(f"bad rational literal {s!r}: {e}") from None

    def to_str(self, x) -> str:
        return str(x)

    def rand(self, rng, bound: int = 100) -> Fraction:
        return Fraction(rng.randint(-bound, bound))

    def __repr__(self):
        return "QQ"


QQ = Rationals()


class Fp:
    """Element of F_p, stored as the representative in [0, p)."""

    __slots__ = ("v", "p")

    def __init__(self, v: int, p: int):
        self.v = v % p
        self.p = p

    def _lift(self, other):
        if isinstance(other, Fp):
            if other.p != self.p:
                raise InputError(f"mixed characteristics {self.p} and {other.p}")
            return other
        if isinstance(other, int):
            return Fp(other, self.p)
        return NotImplemented

    def __add__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return Fp(self.v + o.v, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return Fp(self.v - o.v, self.p)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return Fp(o.v - self.v, self.p)

    def __mul__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return Fp(self.v * o.v, self.p)

    __rmul__ = __mul__

    def __neg__(self):
        return Fp(-self.v, self.p)

    def inverse(self) -> "Fp":
        if self.v == 0:
            raise ZeroDivisionError(f"inverse of 0 in F_{self.p}")
        return Fp(pow(self.v, self.p - 2, self.p), self.p)

    def __truediv__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return o * self.inverse()

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        return Fp(pow(self.v, e, self.p), self.p)

    def __eq__(self, other):
        if isinstance(other, Fp):
            return self.p == other.p and self.v == other.v
        if isinstance(other, int):
            return self.v == other % self.p
        return NotImplemented

    def __hash__(self):
        return hash((self.v, self.p))

    def __bool__(self):
        return self.v != 0

    def __repr__(self):
        return f"Fp({self.v},{self.p})"

    def __str__(self):
        return str(self.v)


class PrimeField:
    """The field F_p for a prime p < 2**31 (kernel arithmetic fits int64)."""

    name: str

    def __init__(self, p: int):
        if p >= 2**31:
            raise InputError(f"prime {p} too large (must be < 2^31)")
        if not _is_prime(p):
            raise InputError(f"{p} is not prime")
        self.p = p
        self.char = p
        self.name = f"F{p}"
        self.zero = Fp(0, p)
        self.one = Fp(1, p)

    def of(self, x):
        if isinstance(x, Fp):
            if x.p != self.p:
                raise InputError(f"element of F_{x.p} used in F_{self.p}")
            return x
        return Fp(int(x), self.p)

    def parse(self, s: str) -> Fp:
        s = s.strip()
        if "/" in s:
            num, den = s.split("/", 1)
            return self.of(int(num)) / self.of(int(den))
        try:
            return self.of(int(s))
        except ValueError:
            raise InputError(f"bad F_{self.p} literal {s!r}") from None

    def to_str(self, x: Fp) -> str:
        return str(x.v)

    def rand(self, rng, bound: int | None = None) -> Fp:
        return Fp(rng.randrange(self.p), self.p)

    def elements(self):
        return [Fp(v, self.p) for v in range(self.p)]

    def __repr__(self):
        return f"GF({self.p})"


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


_GF_CACHE: dict[int, PrimeField] = {}


def GF(p: int) -> PrimeField:
    """Cached prime-field constructor; GF(p) is a singleton per p."""
    f = _GF_CACHE.get(p)
    if f is None:
        f = _GF_CACHE[p] = PrimeField(p)
    return f


def field_by_char(c: int | None):
    """Field from a characteristic tag: 0/None means Q, a prime means F_p."""
    if not c:
        return QQ
    return GF(c)


def parse_field_token(tok: str):
    """CLI field spec: 'q'/'Q'/'0' is the rationals, a prime is F_p."""
    t = tok.strip().lower()
    if t in ("q", "0", "rat", "rationals"):
        return QQ
    try:
        return GF(int(t))
    except ValueError:
        raise InputError(f"bad field token {tok!r}") from None
