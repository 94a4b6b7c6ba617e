"""Exact Laurent polynomials with half-integer exponents.

Exponents are stored *doubled*: the tuple ``(1, 0, 2)`` stands for the
monomial ``t1^(1/2) t3``.  A polynomial is a dict from such tuples to
:class:`fractions.Fraction` coefficients with no zero entries.

The default variable order for a session of order ``r`` is
``t1, t2, t3, q0, ..., q_{r-1}``; vertex computations only use the first
three slots and c-valued quantities use a single slot for ``c = kappa^(1/2)``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Mapping, Sequence

from .errors import BracketVanishes, UsageError, ZeroWeight

ExponentVector = tuple  # tuple[int, ...] of doubled exponents


def variable_names(r: int) -> tuple[str, ...]:
    return ("t1", "t2", "t3") + tuple(f"q{i}" for i in range(r))


def _double(x) -> int:
    d = Fraction(x) * 2
    if d.denominator != 1:
        raise UsageError(f"exponent {x} is not a half-integer")
    return int(d)


def exponent(r: int, t: Sequence = (0, 0, 0), q: Sequence | None = None) -> ExponentVector:
    """Doubled exponent vector for ``t^t q^q`` in the session of order ``r``.

    Entries of ``t`` and ``q`` are the mathematical exponents (ints, Fractions
    or half-integers); they are doubled here.
    """
    q = tuple(q) if q is not None else (0,) * r
    if len(t) != 3 or len(q) != r:
        raise UsageError(f"expected 3 t-exponents and {r} q-exponents")
    return tuple(_double(x) for x in tuple(t) + q)


def kappa_power(k2: int, nvars: int = 3) -> ExponentVector:
    """Doubled exponent of ``kappa^(k2/2)`` padded with zeros to ``nvars``."""
    return (k2, k2, k2) + (0,) * (nvars - 3)


def mono_mul(a: ExponentVector, b: ExponentVector) -> ExponentVector:
    return tuple(x + y for x, y in zip(a, b))


def mono_inv(a: ExponentVector) -> ExponentVector:
    return tuple(-x for x in a)


def mono_pow(a: ExponentVector, n: int) -> ExponentVector:
    return tuple(n * x for x in a)


def is_trivial(a: ExponentVector) -> bool:
    return not any(a)


class LaurentPoly:
    """Sparse exact Laurent polynomial; immutable by convention."""

    __slots__ = ("nvars", "_terms")

    def __init__(self, terms: Mapping[ExponentVector, object] | None = None, nvars: int | None = None):
        clean: dict[ExponentVector, Fraction] = {}
        if terms:
            for e, c in terms.items():
                e = tuple(int(x) for x in e)
                if nvars is None:
                    nvars = len(e)
                elif len(e) != nvars:
                    raise UsageError(f"exponent {e} has arity {len(e)}, expected {nvars}")
                c = Fraction(c)
                if c:
                    clean[e] = clean.get(e, 0) + c
                    if not clean[e]:
                        del clean[e]
        if nvars is None:
            raise UsageError("arity of an empty polynomial must be given")
        self.nvars = nvars
        self._terms = clean

    # -- constructors -------------------------------------------------
    @classmethod
    def _raw(cls, terms: dict, nvars: int) -> "LaurentPoly":
        p = object.__new__(cls)
        p.nvars = nvars
        p._terms = terms
        return p

    @classmethod
    def zero(cls, nvars: int) -> "LaurentPoly":
        return cls._raw({}, nvars)

    @classmethod
    def constant(cls, value, nvars: int) -> "LaurentPoly":
        value = Fraction(value)
        return cls._raw({(0,) * nvars: value} if value else {}, nvars)

    @classmethod
    def one(cls, nvars: int) -> "LaurentPoly":
        return cls.constant(1, nvars)

    @classmethod
    def monomial(cls, exps: ExponentVector, coeff=1) -> "LaurentPoly":
        exps = tuple(exps)
        coeff = Fraction(coeff)
        return cls._raw({exps: coeff} if coeff else {}, len(exps))

    # -- inspection ---------------------------------------------------
    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self):
        """Terms in lexicographic exponent order."""
        return sorted(self._terms.items())

    def exponents(self):
        return sorted(self._terms)

    def coefficient(self, exps: ExponentVector) -> Fraction:
        return self._terms.get(tuple(exps), Fraction(0))

    def constant_term(self) -> Fraction:
        return self.coefficient((0,) * self.nvars)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    # -- arithmetic ---------------------------------------------------
    def _coerce(self, other) -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            if other.nvars != self.nvars:
                raise UsageError(f"arity mismatch: {self.nvars} vs {other.nvars}")
            return other
        if isinstance(other, (int, Rational)):
            return LaurentPoly.constant(other, self.nvars)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for e, c in other._terms.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return LaurentPoly._raw(out, self.nvars)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._raw({e: -c for e, c in self._terms.items()}, self.nvars)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Rational)):
            other = Fraction(other)
            if not other:
                return LaurentPoly.zero(self.nvars)
            return LaurentPoly._raw({e: c * other for e, c in self._terms.items()}, self.nvars)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return LaurentPoly._raw({e: c for e, c in out.items() if c}, self.nvars)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            if len(self._terms) != 1:
                raise UsageError("only monomials can be inverted")
            ((e, c),) = self._terms.items()
            return LaurentPoly.monomial(mono_pow(e, n), c**n)
        out = LaurentPoly.one(self.nvars)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, LaurentPoly):
            return self.nvars == other.nvars and self._terms == other._terms
        if isinstance(other, (int, Rational)):
            return self._terms == LaurentPoly.constant(other, self.nvars)._terms
        return NotImplemented

    def __hash__(self):
        return hash((self.nvars, frozenset(self._terms.items())))

    def map_exponents(self, fn) -> "LaurentPoly":
        out: dict = {}
        for e, c in self._terms.items():
            e2 = tuple(fn(e))
            out[e2] = out.get(e2, 0) + c
        return LaurentPoly._raw({e: c for e, c in out.items() if c}, len(next(iter(out))) if out else self.nvars)

    def filter(self, pred) -> "LaurentPoly":
        return LaurentPoly._raw({e: c for e, c in self._terms.items() if pred(e)}, self.nvars)

    # -- display --------------------------------------------------------
    def format(self, names: Sequence[str] | None = None) -> str:
        if not self._terms:
            return "0"
        names = names or (variable_names(self.nvars - 3) if self.nvars >= 3 else ("c",) * self.nvars)
        parts = []
        for e, c in self.items():
            mono = []
            for name, d in zip(names, e):
                if d == 0:
                    continue
                x = Fraction(d, 2)
                mono.append(name if x == 1 else f"{name}^{x}")
            body = "*".join(mono)
            if not body:
                parts.append(str(c))
            elif c == 1:
                parts.append(body)
            elif c == -1:
                parts.append("-" + body)
            else:
                parts.append(f"{c}*{body}")
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self):
        return f"LaurentPoly({self.format()})"

    # -- serialization --------------------------------------------------
    def to_json(self) -> dict:
        return {
            "doubled": True,
            "terms": [[list(e), c.numerator, c.denominator] for e, c in self.items()],
        }

    @classmethod
    def from_json(cls, obj: Mapping, nvars: int | None = None) -> "LaurentPoly":
        if not obj.get("doubled", False):
            raise UsageError("expected doubled exponents")
        terms = {tuple(e): Fraction(n, d) for e, n, d in obj["terms"]}
        if not terms and nvars is None:
            raise UsageError("arity of an empty polynomial must be given")
        return cls(terms, nvars)


# -- named operations -------------------------------------------------------

def bracket(m: ExponentVector) -> LaurentPoly:
    """``[m] = m^(1/2) - m^(-1/2)``."""
    m = tuple(m)
    if is_trivial(m):
        raise ZeroWeight("bracket of the trivial monomial vanishes identically")
    if any(x % 2 for x in m):
        raise UsageError(f"square root of {m} is not on the half-lattice")
    half = tuple(x // 2 for x in m)
    return LaurentPoly._raw({half: Fraction(1), mono_inv(half): Fraction(-1)}, len(m))


def adams(p: LaurentPoly, n: int) -> LaurentPoly:
    """Raise every variable (t's and q's alike) to the ``n``-th power."""
    if n < 1:
        raise UsageError("Adams operations are indexed by n >= 1")
    if n == 1:
        return p
    return LaurentPoly._raw({mono_pow(e, n): c for e, c in p._terms.items()}, p.nvars)


def dual(p: LaurentPoly) -> LaurentPoly:
    return LaurentPoly._raw({mono_inv(e): c for e, c in p._terms.items()}, p.nvars)


@dataclass(frozen=True)
class RationalPoint:
    """Values ``s_i = t_i^(1/2)``; all nonzero."""

    s1: Fraction
    s2: Fraction
    s3: Fraction

    def __post_init__(self):
        for name in ("s1", "s2", "s3"):
            v = Fraction(getattr(self, name))
            if not v:
                raise UsageError("point coordinates must be nonzero")
            object.__setattr__(self, name, v)

    @property
    def s(self) -> tuple[Fraction, Fraction, Fraction]:
        return (self.s1, self.s2, self.s3)

    @property
    def c(self) -> Fraction:
        return self.s1 * self.s2 * self.s3

    def power(self, n: int) -> "RationalPoint":
        """The point ``s -> s^n`` at which Adams-twisted quantities are evaluated."""
        return RationalPoint(self.s1**n, self.s2**n, self.s3**n)

    def monomial(self, e: ExponentVector) -> Fraction:
        """Value of a t-monomial (doubled exponents; extra slots must be zero)."""
        if any(e[3:]):
            raise UsageError("q-dependent monomial evaluated without q values")
        return self.s1 ** e[0] * self.s2 ** e[1] * self.s3 ** e[2]

    def bracket(self, e: ExponentVector) -> Fraction:
        """Value of ``[w]`` for the t-monomial ``w`` with doubled exponents ``e``."""
        if is_trivial(e):
            raise ZeroWeight("bracket of the trivial monomial vanishes identically")
        if any(x % 2 for x in e):
            raise UsageError(f"square root of {e} is not on the half-lattice")
        v = self.s1 ** (e[0] // 2) * self.s2 ** (e[1] // 2) * self.s3 ** (e[2] // 2)
        out = v - 1 / v
        if not out:
            raise BracketVanishes(tuple(x // 2 for x in e[:3]))
        return out

    def __str__(self):
        return " ".join(str(x) for x in self.s)


def evaluate(p: LaurentPoly, pt: RationalPoint, q_values: Sequence | None = None) -> Fraction:
    """Exact value of ``p`` at ``pt`` (and at ``q_values`` for the q-slots)."""
    qv = [Fraction(x) for x in q_values] if q_values is not None else []
    total = Fraction(0)
    for e, c in p._terms.items():
        v = pt.s1 ** e[0] * pt.s2 ** e[1] * pt.s3 ** e[2] * c
        for j, d in enumerate(e[3:]):
            if not d:
                continue
            if j >= len(qv):
                raise UsageError("polynomial involves q-variables; q_values required")
            if d % 2:
                raise UsageError("half-integer q exponent cannot be evaluated at a rational q")
            v *= qv[j] ** (d // 2)
        total += v
    return total


# -- univariate Laurent polynomials in c and rational functions of c -------

def c_poly(coeffs: Mapping[int, object]) -> LaurentPoly:
    """Univariate polynomial ``sum coeffs[k] c^k``."""
    return LaurentPoly({(2 * k,): v for k, v in coeffs.items()}, 1)


def c_terms(p: LaurentPoly) -> list[tuple[int, Fraction]]:
    return [(e[0] // 2, c) for e, c in p.items()]


def _poly_divmod(num: dict[int, Fraction], den: dict[int, Fraction]):
    """Polynomial long division on dense-ish dicts with nonnegative exponents."""
    num = dict(num)
    dd = max(den)
    lc = den[dd]
    quot: dict[int, Fraction] = {}
    while num and max(num) >= dd:
        k = max(num)
        f = num[k] / lc
        quot[k - dd] = f
        for e, c in den.items():
            v = num.get(e + k - dd, 0) - f * c
            if v:
                num[e + k - dd] = v
            else:
                num.pop(e + k - dd, None)
    return quot, num


class CRational:
    """Ratio of two univariate Laurent polynomials in ``c = kappa^(1/2)``.

    No gcd is computed: the denominator is made monic with zero valuation,
    and divided out exactly when it divides the numerator.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: LaurentPoly, den: LaurentPoly | None = None):
        if num.nvars != 1 or (den is not None and den.nvars != 1):
            raise UsageError("CRational needs univariate polynomials in c")
        den = den if den is not None else LaurentPoly.one(1)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        self.num, self.den = self._normalize(num, den)

    @staticmethod
    def _normalize(num, den):
        dterms = {e[0] // 2: c for e, c in den._terms.items()}
        shift = min(dterms)
        dterms = {k - shift: c for k, c in dterms.items()}
        lc = dterms[max(dterms)]
        dterms = {k: c / lc for k, c in dterms.items()}
        nterms = {e[0] // 2 - shift: c / lc for e, c in num._terms.items()}
        if nterms and len(dterms) > 1:
            low = min(nterms)
            q, rem = _poly_divmod({k - low: c for k, c in nterms.items()}, dterms)
            if not rem:
                nterms = {k + low: c for k, c in q.items()}
                dterms = {0: Fraction(1)}
        return c_poly(nterms), c_poly(dterms)

    @classmethod
    def from_int(cls, n) -> "CRational":
        return cls(LaurentPoly.constant(n, 1))

    @classmethod
    def c_power(cls, k: int, coeff=1) -> "CRational":
        return cls(c_poly({k: coeff}))

    def is_polynomial(self) -> bool:
        return self.den == LaurentPoly.one(1)

    def as_poly(self) -> LaurentPoly:
        if not self.is_polynomial():
            raise UsageError(f"{self} is not a Laurent polynomial in c")
        return self.num

    def __bool__(self):
        return not self.num.is_zero()

    def _coerce(self, other):
        if isinstance(other, CRational):
            return other
        if isinstance(other, LaurentPoly):
            return CRational(other)
        if isinstance(other, (int, Rational)):
            return CRational.from_int(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if self.den == other.den:
            return CRational(self.num + other.num, self.den)
        return CRational(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return CRational(-self.num, self.den)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Rational)):
            return CRational(self.num * other, self.den)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return CRational(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not other:
            raise ZeroDivisionError("division by zero in Q(c)")
        return CRational(self.num * other.den, self.den * other.num)

    def __pow__(self, n: int):
        if n < 0:
            return CRational.from_int(1) / (self ** (-n))
        return CRational(self.num**n, self.den**n)

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self.num * other.den == other.num * self.den

    def __hash__(self):
        raise TypeError("CRational is unhashable; equality is by cross-multiplication")

    def evaluate(self, c) -> Fraction:
        c = Fraction(c)
        n = sum(v * c**k for k, v in c_terms(self.num))
        d = sum(v * c**k for k, v in c_terms(self.den))
        return Fraction(n) / d

    def to_json(self) -> dict:
        enc = lambda p: [[k, str(v)] for k, v in c_terms(p)]
        return {"num": enc(self.num), "den": enc(self.den)}

    @classmethod
    def from_json(cls, obj) -> "CRational":
        dec = lambda rows: c_poly({k: Fraction(v) for k, v in rows})
        return cls(dec(obj["num"]), dec(obj["den"]))

    def __repr__(self):
        if self.is_polynomial():
            return f"CRational({self.num.format(('c',))})"
        return f"CRational(({self.num.format(('c',))}) / ({self.den.format(('c',))}))"
