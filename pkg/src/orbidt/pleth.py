"""Closed-form series as sums of bracket products, and plethystic exponentials.

A :class:`BracketTerm` is

    scalar * lead * prod [num_i] / prod [den_j] * prod 1 / ([u q^beta] [u q^-beta])

where ``lead`` is a monomial in t's and q's, the brackets are in t's only and
each q-dependent denominator is a *pair* ``(u, beta)``.  A pair expands in
ascending powers of ``q^beta``:

    1 / ([u q^b][u q^-b]) = -sum_{k>=1} h_{k-1}(u, 1/u) q^{k b},
    h_m(u, 1/u) = sum_{j=0}^{m} u^{m-2j}.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Mapping, Sequence

from .errors import CalabiYauViolation, DomainError, NonKappaContent, UsageError
from .laurent import (
    ExponentVector,
    LaurentPoly,
    RationalPoint,
    bracket,
    c_poly,
)
from .partitions import IndexSemigroup, enumerate_I_partitions
from .qseries import QSeries, z_enumerated

KAPPA2 = (2, 2, 2)  # kappa, doubled
SQRT_KAPPA = (1, 1, 1)  # kappa^(1/2), doubled


def t_mono(a: int, b: int, c: int) -> ExponentVector:
    """Doubled exponent of ``t1^a t2^b t3^c``."""
    return (2 * a, 2 * b, 2 * c)


def q_interval(i: int, j: int, r: int, sign: int = 1) -> tuple[int, ...]:
    """Integer exponent key of ``q_{[i,j]}^sign = (q_i ... q_j)^sign``."""
    return tuple(sign if i <= k <= j else 0 for k in range(r))


@dataclass(frozen=True, order=True)
class QPair:
    u: ExponentVector  # doubled t-monomial
    beta: tuple[int, ...]  # integer q-exponents

    def adams(self, n: int) -> "QPair":
        return QPair(tuple(n * x for x in self.u), tuple(n * x for x in self.beta))


@dataclass(frozen=True)
class BracketTerm:
    scalar: Fraction
    lead_t: ExponentVector = (0, 0, 0)  # doubled
    lead_q: tuple[int, ...] = ()  # integer exponents
    num: tuple[ExponentVector, ...] = ()
    den: tuple[ExponentVector, ...] = ()
    pairs: tuple[QPair, ...] = ()

    def adams(self, n: int) -> "BracketTerm":
        if n < 1:
            raise UsageError("Adams operations are indexed by n >= 1")
        sc = lambda e: tuple(n * x for x in e)
        return BracketTerm(
            self.scalar,
            sc(self.lead_t),
            sc(self.lead_q),
            tuple(sc(e) for e in self.num),
            tuple(sc(e) for e in self.den),
            tuple(p.adams(n) for p in self.pairs),
        )

    def shape(self):
        return (self.lead_t, self.lead_q, tuple(sorted(self.num)), tuple(sorted(self.den)), tuple(sorted(self.pairs)))

    def q_valuation(self) -> int:
        return sum(self.lead_q) + sum(sum(p.beta) for p in self.pairs)


@dataclass(frozen=True)
class SymbolicSum:
    r: int
    terms: tuple[BracketTerm, ...] = ()

    def __post_init__(self):
        for t in self.terms:
            if len(t.lead_q) != self.r or any(len(p.beta) != self.r for p in t.pairs):
                raise UsageError(f"term has the wrong number of q-variables for r={self.r}")

    def __add__(self, other: "SymbolicSum") -> "SymbolicSum":
        if other.r != self.r:
            raise UsageError("sums over different r")
        return SymbolicSum(self.r, self.terms + other.terms)

    def __len__(self):
        return len(self.terms)

    def adams(self, n: int) -> "SymbolicSum":
        return SymbolicSum(self.r, tuple(t.adams(n) for t in self.terms))

    def canonical(self) -> "SymbolicSum":
        """Merge terms with identical bracket structure; drop zero terms."""
        acc: dict = {}
        for t in self.terms:
            acc[t.shape()] = acc.get(t.shape(), Fraction(0)) + t.scalar
        terms = []
        for (lt, lq, num, den, pairs), s in sorted(acc.items()):
            if s:
                terms.append(BracketTerm(s, lt, lq, num, den, pairs))
        return SymbolicSum(self.r, tuple(terms))


# -- the closed forms ---------------------------------------------------------

def _diag_pair(r: int, u=SQRT_KAPPA) -> QPair:
    return QPair(u, (1,) * r)


def build_F(w1: ExponentVector, w2: ExponentVector, w3: ExponentVector, r: int = 1) -> SymbolicSum:
    """``[w2 w3][w1 w3][w1 w2] / ([w1][w2][w3] [kappa^1/2 q][kappa^1/2 q^-1])``, q = q_0...q_{r-1}."""
    ws = [tuple(w) for w in (w1, w2, w3)]
    if any(not any(w) for w in ws):
        raise CalabiYauViolation("chart weights must be nontrivial")
    if tuple(a + b + c for a, b, c in zip(*ws)) != KAPPA2:
        raise CalabiYauViolation(f"weights {ws} do not multiply to kappa")
    mul = lambda a, b: tuple(x + y for x, y in zip(a, b))
    term = BracketTerm(
        Fraction(1),
        lead_q=(0,) * r,
        num=(mul(ws[1], ws[2]), mul(ws[0], ws[2]), mul(ws[0], ws[1])),
        den=tuple(ws),
        pairs=(_diag_pair(r),),
    )
    return SymbolicSum(r, (term,))


def chart_weights(r: int) -> list[tuple[ExponentVector, ExponentVector, ExponentVector]]:
    """Torus weights of the r charts of the resolution A_{r-1} x C."""
    return [(t_mono(r - k, -k, 0), t_mono(-r + k + 1, k + 1, 0), t_mono(0, 0, 1)) for k in range(r)]


def build_F_r(r: int) -> SymbolicSum:
    if r < 1:
        raise UsageError("r must be positive")
    out = SymbolicSum(r)
    for w in chart_weights(r):
        out = out + build_F(*w, r=r)
    return out


def _color_intervals(r: int):
    for i in range(1, r):
        for j in range(i, r):
            yield i, j


def build_F_col(r: int) -> SymbolicSum:
    """``[t1t2]/[t3] / D(q) * sum_{0<i<=j<r} (q_[i,j] + q_[i,j]^-1)``."""
    terms = []
    for i, j in _color_intervals(r):
        for s in (1, -1):
            terms.append(
                BracketTerm(
                    Fraction(1),
                    lead_q=q_interval(i, j, r, s),
                    num=(t_mono(1, 1, 0),),
                    den=(t_mono(0, 0, 1),),
                    pairs=(_diag_pair(r),),
                )
            )
    return SymbolicSum(r, tuple(terms))


def build_F_limit(r: int, form: str = "double") -> SymbolicSum:
    """``-kappa^(1/2) / D(q) * sum_{i,j} q_[0,i] / q_[0,j]``.

    ``form="young"`` writes the color sum as ``r + sum_{0<i<=j<r}(q_[i,j] + q_[i,j]^-1)``.
    """
    terms = []
    if form == "double":
        for i in range(r):
            for j in range(r):
                key = tuple(a - b for a, b in zip(q_interval(0, i, r), q_interval(0, j, r)))
                terms.append(BracketTerm(Fraction(-1), SQRT_KAPPA, key, pairs=(_diag_pair(r),)))
    elif form == "young":
        terms.append(BracketTerm(Fraction(-r), SQRT_KAPPA, (0,) * r, pairs=(_diag_pair(r),)))
        for i, j in _color_intervals(r):
            for s in (1, -1):
                terms.append(BracketTerm(Fraction(-1), SQRT_KAPPA, q_interval(i, j, r, s), pairs=(_diag_pair(r),)))
    else:
        raise UsageError(f"unknown form {form!r}")
    return SymbolicSum(r, tuple(terms))


def build_F_num(r: int) -> SymbolicSum:
    """``-1/([q][q^-1]) * (r + sum_{0<i<=j<r}(q_[i,j] + q_[i,j]^-1))``.

    The accompanying substitution ``q_0 -> -q_0`` is applied to the series
    after expansion (see :meth:`QSeries.flip_q0`).
    """
    pair = _diag_pair(r, (0, 0, 0))
    terms = [BracketTerm(Fraction(-r), lead_q=(0,) * r, pairs=(pair,))]
    for i, j in _color_intervals(r):
        for s in (1, -1):
            terms.append(BracketTerm(Fraction(-1), lead_q=q_interval(i, j, r, s), pairs=(pair,)))
    return SymbolicSum(r, tuple(terms))


FORMULAS: dict[str, Callable[[int], SymbolicSum]] = {
    "F": lambda r: build_F(*chart_weights(1)[0], r=r),
    "Fr": build_F_r,
    "Fcol": build_F_col,
    "Fnum": build_F_num,
    "Flim": build_F_limit,
    "main": lambda r: build_F_r(r) + build_F_col(r),
}


# -- coefficient rings for expansion -------------------------------------------

class _PointRing:
    def __init__(self, pt: RationalPoint):
        self.pt = pt
        self.unit = Fraction(1)

    def mono(self, e):
        return self.pt.monomial(e)

    def bracket(self, e):
        return self.pt.bracket(e)

    def inv(self, x):
        return 1 / x


class _PolyRing:
    unit = LaurentPoly.one(3)

    def mono(self, e):
        return LaurentPoly.monomial(e)

    def bracket(self, e):
        return bracket(e)

    def inv(self, x):
        raise UsageError("t-dependent denominators can only be expanded at a point")


class _CRing:
    unit = c_poly({0: 1})

    def _kappa_exp(self, e) -> int:
        if not (e[0] == e[1] == e[2]):
            raise NonKappaContent(f"monomial {e} is not a power of kappa")
        return e[0]

    def mono(self, e):
        return c_poly({self._kappa_exp(e): 1})

    def bracket(self, e):
        k = self._kappa_exp(e)
        if k % 2:
            raise NonKappaContent(f"bracket of kappa^{Fraction(k, 2)} needs c^(1/2)")
        return c_poly({k // 2: 1, -k // 2: -1})

    def inv(self, x):
        raise UsageError("denominators are not supported in c-ring mode")


class _NumberRing:
    unit = Fraction(1)

    def mono(self, e):
        if any(e):
            raise NonKappaContent("numeric mode allows no t-dependence")
        return Fraction(1)

    def bracket(self, e):
        raise NonKappaContent("numeric mode allows no t-dependence")

    def inv(self, x):
        return 1 / x


def coefficient_ring(mode):
    """``mode`` is a RationalPoint, ``"poly"``, ``"c"`` or ``"numeric"``."""
    if isinstance(mode, RationalPoint):
        return _PointRing(mode)
    if mode == "poly":
        return _PolyRing()
    if mode == "c":
        return _CRing()
    if mode == "numeric":
        return _NumberRing()
    raise UsageError(f"unknown expansion mode {mode!r}")


def _h(ring, u, m):
    out = ring.unit * 0
    for j in range(m + 1):
        out = out + ring.mono(tuple((m - 2 * j) * x for x in u))
    return out


def _pair_series(ring, pair: QPair, r: int, M: int) -> QSeries:
    d = sum(pair.beta)
    if d <= 0:
        raise UsageError(f"pair direction {pair.beta} must have positive degree")
    coeffs = {}
    k = 1
    while k * d <= M:
        coeffs[tuple(k * b for b in pair.beta)] = -_h(ring, pair.u, k - 1)
        k += 1
    return QSeries(r, M, coeffs, ring.unit)


def expand_term(term: BracketTerm, mode, N: int, r: int | None = None) -> QSeries:
    """Series expansion of one term to total q-degree ``N``."""
    ring = mode if hasattr(mode, "unit") and hasattr(mode, "mono") else coefficient_ring(mode)
    r = len(term.lead_q) if r is None else r
    pref = ring.mono(term.lead_t) * term.scalar
    for e in term.num:
        pref = pref * ring.bracket(e)
    for e in term.den:
        pref = pref * ring.inv(ring.bracket(e))
    shift = sum(term.lead_q)
    M = N - shift
    if M < 0 or not pref:
        return QSeries.zero(r, N, ring.unit)
    ser = QSeries.one(r, M, ring.unit)
    for p in term.pairs:
        ser = ser * _pair_series(ring, p, r, M)
    out = {}
    for k, v in ser.items():
        key = tuple(a + b for a, b in zip(k, term.lead_q))
        if sum(key) <= N:
            out[key] = v * pref
    return QSeries(r, N, out, ring.unit)


def expand(S: SymbolicSum, mode, N: int) -> QSeries:
    ring = coefficient_ring(mode) if not hasattr(mode, "mono") else mode
    out = QSeries.zero(S.r, N, ring.unit)
    for t in S.terms:
        out = out + expand_term(t, ring, N, S.r)
    return out


def pexp_eval(S: SymbolicSum, mode, N: int) -> QSeries:
    """``exp(sum_{n=1}^N psi_n(S) / n)`` truncated at total degree ``N``.

    Every term has positive q-valuation, so Adams levels beyond ``N`` cannot
    contribute.
    """
    for t in S.terms:
        if t.q_valuation() <= 0:
            raise UsageError("PExp argument must have positive q-valuation")
    ring = coefficient_ring(mode)
    acc = QSeries.zero(S.r, N, ring.unit)
    for n in range(1, N + 1):
        acc = acc + expand(S.adams(n), ring, N).scale(Fraction(1, n))
    return acc.exp()


@lru_cache(maxsize=None)
def mobius(n: int) -> int:
    if n == 1:
        return 1
    out, m, p = 1, n, 2
    while p * p <= m:
        if m % p == 0:
            m //= p
            if m % p == 0:
                return 0
            out = -out
        p += 1
    return -out if m > 1 else out


def plog(zs: Callable[[int], QSeries] | Sequence[QSeries], N: int) -> QSeries:
    """Inverse of :func:`pexp_eval` given the Adams family ``n -> psi_n^t(Z)``.

    ``zs(n)`` is ``Z`` with all equivariant parameters raised to the n-th power
    (for a point: evaluated at ``s^n``).
    """
    get = zs if callable(zs) else (lambda n: zs[n - 1])
    out = None
    for n in range(1, N + 1):
        mu = mobius(n)
        if not mu:
            continue
        z = get(n).truncate(N // n)
        term = z.log().scale(Fraction(mu, n))
        term = QSeries._raw(term.r, N, {tuple(n * x for x in k): v for k, v in term.items()}, term.unit)
        out = term if out is None else out + term
    return out


# -- combinatorial PExp over an index set -----------------------------------------

def _complete_homogeneous(monos: Sequence[ExponentVector], l: int) -> LaurentPoly:
    """``h_l`` of a multiset of monomials."""
    nv = len(monos[0]) if monos else 3
    h = [LaurentPoly.one(nv)] + [LaurentPoly.zero(nv)] * l
    for m in monos:
        powers = [LaurentPoly.monomial(tuple(i * x for x in m)) for i in range(l + 1)]
        h = [sum((h[k - i] * powers[i] for i in range(k + 1)), LaurentPoly.zero(nv)) for k in range(l + 1)]
    return h[l]


def pexp_direct(assignments: Mapping[tuple, Sequence[ExponentVector]], I: IndexSemigroup, N: int) -> QSeries:
    """``1 + sum_alpha q^alpha sum_{lambda in P_I(alpha)} prod_parts h_l(G_part)``.

    ``assignments`` maps members of ``I`` to multisets of t-monomials
    (doubled exponents); unassigned members carry the empty multiset.
    """
    for a in assignments:
        if not I.is_in_I(a):
            raise DomainError(f"{a} is not in the index set")
    unit = LaurentPoly.one(3)
    cache: dict = {}

    def h(beta, l):
        if (beta, l) not in cache:
            monos = list(assignments.get(beta, ()))
            cache[(beta, l)] = _complete_homogeneous(monos, l) if monos else (unit if l == 0 else unit * 0)
        return cache[(beta, l)]

    coeffs = {(0,) * I.r: unit}
    for alpha in I.sorted_members():
        if sum(alpha) > N:
            continue
        total = unit * 0
        for lam in enumerate_I_partitions(alpha, I):
            mult: dict = {}
            for part in lam:
                mult[part] = mult.get(part, 0) + 1
            prod = unit
            for part, l in mult.items():
                prod = prod * h(part, l)
                if not prod:
                    break
            total = total + prod
        coeffs[alpha] = total
    return QSeries(I.r, N, coeffs, unit)


def assignments_to_sum(assignments: Mapping[tuple, Sequence[ExponentVector]], r: int) -> SymbolicSum:
    terms = []
    for alpha, monos in sorted(assignments.items()):
        for m in monos:
            terms.append(BracketTerm(Fraction(1), tuple(m), tuple(alpha)))
    return SymbolicSum(r, tuple(terms))


# -- rigidity ---------------------------------------------------------------------

def residual_series(pt: RationalPoint, r: int, N: int) -> QSeries:
    """``(PLog Z - F_r) / ([t1 t2]/[t3])`` at ``pt``: the coefficients ``h_alpha``."""
    fam = lambda n: z_enumerated(r, N // n, "point", pt.power(n))
    resid = plog(fam, N) - expand(build_F_r(r), pt, N)
    scale = pt.bracket(t_mono(1, 1, 0)) / pt.bracket(t_mono(0, 0, 1))
    return resid.scale(1 / scale)


def rigidity_h(alpha, pt1: RationalPoint, pt2: RationalPoint, N: int | None = None) -> tuple[Fraction, Fraction]:
    """``h_alpha`` computed at two points sharing ``kappa``."""
    alpha = tuple(alpha)
    if pt1.c != pt2.c:
        raise UsageError("rigidity comparison needs points with the same s1*s2*s3")
    N = sum(alpha) if N is None else N
    r = len(alpha)
    return residual_series(pt1, r, N)[alpha], residual_series(pt2, r, N)[alpha]
