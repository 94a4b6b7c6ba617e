"""Truncated multivariate power series in q_0, ..., q_{r-1}.

Coefficients live in any exact ring supporting ``+``, ``*`` and scaling by
Fractions: :class:`~fractions.Fraction` at a point, :class:`LaurentPoly`
symbolically, or :class:`CRational` in the limit.  Truncation is by total
degree ``sum(alpha)``.
"""
from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from typing import Callable, Mapping

from .errors import ExpDomain, LogDomain, UsageError
from .laurent import CRational, LaurentPoly, RationalPoint
from .partitions import IndexSemigroup, color_vector, partitions_up_to
from .vertex import ahat_eval, ahat_limit, weights

Key = tuple[int, ...]


def ring_of(unit) -> str:
    if isinstance(unit, LaurentPoly):
        return "laurent"
    if isinstance(unit, CRational):
        return "crational"
    return "rational"


def _mul_homogeneous(a: dict, b: dict, out: dict, scale=None):
    for ka, ca in a.items():
        for kb, cb in b.items():
            k = tuple(x + y for x, y in zip(ka, kb))
            v = ca * cb
            if scale is not None:
                v = v * scale
            prev = out.get(k)
            out[k] = v if prev is None else prev + v


class QSeries:
    __slots__ = ("r", "N", "unit", "_c")

    def __init__(self, r: int, N: int, coeffs: Mapping[Key, object] | None = None, unit=Fraction(1)):
        self.r = r
        self.N = N
        self.unit = unit
        c = {}
        for k, v in (coeffs or {}).items():
            k = tuple(int(x) for x in k)
            if len(k) != r:
                raise UsageError(f"key {k} does not have {r} entries")
            if sum(k) <= N and v:
                c[k] = v
        self._c = c

    @classmethod
    def _raw(cls, r, N, c, unit):
        s = object.__new__(cls)
        s.r, s.N, s.unit, s._c = r, N, unit, c
        return s

    @property
    def ring(self) -> str:
        return ring_of(self.unit)

    @property
    def zero_coeff(self):
        return self.unit * 0

    @classmethod
    def one(cls, r, N, unit=Fraction(1)):
        return cls._raw(r, N, {(0,) * r: unit}, unit)

    @classmethod
    def zero(cls, r, N, unit=Fraction(1)):
        return cls._raw(r, N, {}, unit)

    @classmethod
    def monomial(cls, key: Key, coeff, N: int, unit=None):
        return cls(len(key), N, {tuple(key): coeff}, unit if unit is not None else coeff * 0 + 1)

    def coefficient(self, alpha) -> object:
        return self._c.get(tuple(alpha), self.zero_coeff)

    def __getitem__(self, alpha):
        return self.coefficient(alpha)

    def keys(self):
        return sorted(self._c, key=lambda k: (sum(k), k))

    def items(self):
        return [(k, self._c[k]) for k in self.keys()]

    def __len__(self):
        return len(self._c)

    def constant_term(self):
        return self.coefficient((0,) * self.r)

    def _check(self, other: "QSeries"):
        if not isinstance(other, QSeries):
            raise UsageError("expected a QSeries")
        if other.r != self.r:
            raise UsageError(f"series in {self.r} vs {other.r} variables")
        if ring_of(other.unit) != ring_of(self.unit):
            raise UsageError(f"ring mismatch: {self.ring} vs {other.ring}")

    # -- arithmetic -----------------------------------------------------
    def __add__(self, other):
        self._check(other)
        N = min(self.N, other.N)
        out = {k: v for k, v in self._c.items() if sum(k) <= N}
        for k, v in other._c.items():
            if sum(k) > N:
                continue
            w = out[k] + v if k in out else v
            if w:
                out[k] = w
            else:
                out.pop(k, None)
        return QSeries._raw(self.r, N, out, self.unit)

    def __neg__(self):
        return QSeries._raw(self.r, self.N, {k: -v for k, v in self._c.items()}, self.unit)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, s) -> "QSeries":
        out = {}
        for k, v in self._c.items():
            w = v * s
            if w:
                out[k] = w
        return QSeries._raw(self.r, self.N, out, self.unit)

    def __mul__(self, other):
        if not isinstance(other, QSeries):
            return self.scale(other)
        self._check(other)
        N = min(self.N, other.N)
        out: dict = {}
        for ka, ca in self._c.items():
            da = sum(ka)
            for kb, cb in other._c.items():
                if da + sum(kb) > N:
                    continue
                k = tuple(x + y for x, y in zip(ka, kb))
                v = ca * cb
                out[k] = out[k] + v if k in out else v
        return QSeries._raw(self.r, N, {k: v for k, v in out.items() if v}, self.unit)

    def __eq__(self, other):
        if not isinstance(other, QSeries):
            return NotImplemented
        if other.r != self.r:
            return False
        N = min(self.N, other.N)
        keys = {k for k in self._c if sum(k) <= N} | {k for k in other._c if sum(k) <= N}
        return all(self.coefficient(k) == other.coefficient(k) for k in keys)

    __hash__ = None

    def truncate(self, N: int) -> "QSeries":
        return QSeries._raw(self.r, min(N, self.N), {k: v for k, v in self._c.items() if sum(k) <= N}, self.unit)

    def map(self, fn: Callable, unit=None) -> "QSeries":
        out = {}
        for k, v in self._c.items():
            w = fn(v)
            if w:
                out[k] = w
        return QSeries._raw(self.r, self.N, out, unit if unit is not None else fn(self.unit))

    def scale_q(self, n: int) -> "QSeries":
        """Substitute ``q_i -> q_i^n`` (the q-half of an Adams operation)."""
        return QSeries._raw(
            self.r, self.N, {tuple(n * x for x in k): v for k, v in self._c.items() if n * sum(k) <= self.N}, self.unit
        )

    def flip_q0(self) -> "QSeries":
        """Substitute ``q_0 -> -q_0``."""
        return QSeries._raw(self.r, self.N, {k: (-v if k[0] % 2 else v) for k, v in self._c.items()}, self.unit)

    def support_outside(self, I: IndexSemigroup) -> list[Key]:
        return [k for k in self.keys() if any(k) and (min(k) < 0 or tuple(k) not in I.members)]

    # -- exp / log ----------------------------------------------------------
    def _by_degree(self) -> dict[int, dict]:
        out: dict[int, dict] = {}
        for k, v in self._c.items():
            out.setdefault(sum(k), {})[k] = v
        return out

    def exp(self) -> "QSeries":
        f = self._by_degree()
        if any(d <= 0 for d in f):
            raise ExpDomain("exp needs every term to have positive total degree")
        g: dict[int, dict] = {0: {(0,) * self.r: self.unit}}
        for d in range(1, self.N + 1):
            acc: dict = {}
            for k in range(1, d + 1):
                if k in f and g.get(d - k):
                    _mul_homogeneous(f[k], g[d - k], acc, scale=Fraction(k, d))
            g[d] = {key: v for key, v in acc.items() if v}
        out = {k: v for part in g.values() for k, v in part.items()}
        return QSeries._raw(self.r, self.N, out, self.unit)

    def log(self) -> "QSeries":
        g = self._by_degree()
        zero = (0,) * self.r
        if g.get(0) != {zero: self.unit} or any(d < 0 for d in g):
            raise LogDomain("log needs constant term 1 and no other degree-0 terms")
        f: dict[int, dict] = {}
        for d in range(1, self.N + 1):
            acc: dict = dict(g.get(d, {}))
            for k in range(1, d):
                if f.get(k) and g.get(d - k):
                    _mul_homogeneous(f[k], g[d - k], acc, scale=Fraction(-k, d))
            f[d] = {key: v for key, v in acc.items() if v}
        out = {k: v for part in f.values() for k, v in part.items()}
        return QSeries._raw(self.r, self.N, out, self.unit)

    # -- output -------------------------------------------------------------
    def coefficient_json(self, v):
        if isinstance(v, CRational):
            return v.to_json()
        if isinstance(v, LaurentPoly):
            if v.nvars == 1:
                return CRational(v).to_json()
            return v.to_json()
        return str(v)

    def to_json(self, mode: str | None = None) -> dict:
        return {
            "r": self.r,
            "N": self.N,
            "mode": mode,
            "coefficients": [{"alpha": list(k), "value": self.coefficient_json(v)} for k, v in self.items()],
        }

    def __repr__(self):
        body = ", ".join(f"{k}: {v}" for k, v in self.items()[:8])
        more = ", ..." if len(self._c) > 8 else ""
        return f"QSeries(r={self.r}, N={self.N}, {{{body}{more}}})"


def restrict(f: QSeries, I: IndexSemigroup) -> QSeries:
    """Drop coefficients at nonzero keys outside ``I``."""
    if f.N > I.bound:
        raise UsageError(f"series order {f.N} exceeds the index set bound {I.bound}")
    if f.r != I.r:
        raise UsageError("index set has a different r")
    zero = (0,) * f.r
    return QSeries._raw(f.r, f.N, {k: v for k, v in f._c.items() if k == zero or k in I.members}, f.unit)


# -- brute-force series ---------------------------------------------------------

def _table_row(args):
    pi, r = args
    return color_vector(pi, r), weights(pi, r)


_TABLES: dict[tuple[int, int], tuple] = {}


def weight_table(r: int, N: int, jobs: int = 1) -> tuple:
    """``(color vector, W(pi))`` for every nonempty partition with <= N boxes.

    Rows come in canonical partition order whatever ``jobs`` is; results are
    memoized per ``(r, N)``.
    """
    if (r, N) not in _TABLES:
        parts = [(pi, r) for pi in partitions_up_to(N) if len(pi)]
        if jobs > 1:
            with ProcessPoolExecutor(max_workers=jobs) as ex:
                rows = tuple(ex.map(_table_row, parts, chunksize=16))
        else:
            rows = tuple(map(_table_row, parts))
        _TABLES[(r, N)] = rows
    return _TABLES[(r, N)]


def z_enumerated(r: int, N: int, mode: str = "point", pt: RationalPoint | None = None, jobs: int = 1) -> QSeries:
    """Localization sum ``1 + sum_pi (-1)^{alpha_0} ahat(pi) q^alpha``.

    ``mode`` is ``"point"`` (exact rationals at ``pt``), ``"limit"``
    (CRational limit values ``(-c)^index``) or ``"numerical"`` (the signed
    count with every vertex weight replaced by 1).
    """
    if mode == "point":
        if pt is None:
            raise UsageError("point mode needs a RationalPoint")
        unit = Fraction(1)
        value = lambda ws: ahat_eval(ws, pt)
    elif mode == "limit":
        unit = CRational.from_int(1)
        value = ahat_limit
    elif mode == "numerical":
        unit = Fraction(1)
        value = lambda ws: Fraction(1)
    else:
        raise UsageError(f"unknown mode {mode!r}")
    acc: dict = {(0,) * r: unit}
    for alpha, ws in weight_table(r, N, jobs):
        v = value(ws)
        if alpha[0] % 2:
            v = -v
        acc[alpha] = acc[alpha] + v if alpha in acc else v
    return QSeries(r, N, acc, unit)
