"""Vertex operators on partitions and the transfer-matrix limit series.

States are sparse maps ``partition -> coefficient``; a coefficient is a
polynomial stored as ``{(graded exponents, c exponent): Fraction}``.  The
graded variables are ``q_0..q_{r-1}`` followed by any formal variables a
check needs (``x, y`` or ``a, b``); every graded variable has degree 1 and
states are truncated at total degree ``N``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator, Sequence

from .errors import UsageError
from .laurent import CRational, c_poly
from .qseries import QSeries

Partition2D = tuple[int, ...]
Poly = dict  # {(exps, cexp): Fraction}


@dataclass(frozen=True)
class Mono:
    """``coeff * g^exps * c^cexp``; ``coeff`` 0 stands for the zero argument."""

    exps: tuple[int, ...]
    cexp: int = 0
    coeff: Fraction = Fraction(1)

    @property
    def degree(self) -> int:
        return sum(self.exps)

    def __mul__(self, other: "Mono") -> "Mono":
        return Mono(tuple(a + b for a, b in zip(self.exps, other.exps)), self.cexp + other.cexp, self.coeff * other.coeff)

    def power(self, k: int) -> "Mono":
        if k == 0:
            return Mono((0,) * len(self.exps))
        return Mono(tuple(k * e for e in self.exps), k * self.cexp, self.coeff**k)


def graded(nvars: int, **slots) -> Mono:
    """Monomial with exponent ``v`` in slot ``i`` for each ``_i=v`` keyword (plus ``c=``)."""
    exps = [0] * nvars
    cexp = slots.pop("c", 0)
    for k, v in slots.items():
        exps[int(k.lstrip("_"))] += v
    return Mono(tuple(exps), cexp)


def q_block(nvars: int, i: int, j: int) -> Mono:
    """``q_{[i,j]}``; empty when ``i > j``."""
    return Mono(tuple(1 if i <= k <= j else 0 for k in range(nvars)))


# -- polynomial helpers ---------------------------------------------------------

def _poly_one(nvars: int) -> Poly:
    return {((0,) * nvars, 0): Fraction(1)}


def _min_degree(p: Poly) -> int:
    return min(sum(k[0]) for k in p)


def _poly_add_into(acc: Poly, p: Poly, m: Mono | None, N: int) -> None:
    for (e, c), v in p.items():
        if m is not None:
            e = tuple(a + b for a, b in zip(e, m.exps))
            c = c + m.cexp
            v = v * m.coeff
        if sum(e) > N or not v:
            continue
        k = (e, c)
        w = acc.get(k, 0) + v
        if w:
            acc[k] = w
        else:
            acc.pop(k, None)


def _poly_mul(p: Poly, s: Poly, N: int) -> Poly:
    out: Poly = {}
    for (e2, c2), v2 in s.items():
        _poly_add_into(out, p, Mono(e2, c2, v2), N)
    return out


# -- states -------------------------------------------------------------------------

@dataclass
class StateVector:
    nvars: int
    N: int
    data: dict = field(default_factory=dict)  # Partition2D -> Poly

    @classmethod
    def basis(cls, lam: Partition2D, nvars: int, N: int) -> "StateVector":
        return cls(nvars, N, {tuple(lam): _poly_one(nvars)})

    @classmethod
    def vacuum(cls, nvars: int, N: int) -> "StateVector":
        return cls.basis((), nvars, N)

    def add(self, lam: Partition2D, p: Poly, m: Mono | None = None) -> None:
        acc = self.data.setdefault(lam, {})
        _poly_add_into(acc, p, m, self.N)
        if not acc:
            del self.data[lam]

    def coefficient(self, lam: Partition2D) -> Poly:
        return self.data.get(tuple(lam), {})

    def scale(self, s: Poly) -> "StateVector":
        out = StateVector(self.nvars, self.N)
        for lam, p in self.data.items():
            q = _poly_mul(p, s, self.N)
            if q:
                out.data[lam] = q
        return out

    def __eq__(self, other):
        if not isinstance(other, StateVector):
            return NotImplemented
        return self.data == other.data

    def difference(self, other: "StateVector"):
        """First ``(partition, key, lhs, rhs)`` where the two states differ, or None."""
        for lam in sorted(set(self.data) | set(other.data)):
            a, b = self.coefficient(lam), other.coefficient(lam)
            for k in sorted(set(a) | set(b)):
                if a.get(k, 0) != b.get(k, 0):
                    return lam, k, a.get(k, 0), b.get(k, 0)
        return None


def _strip(parts) -> Partition2D:
    return tuple(p for p in parts if p > 0)


def grow(lam: Partition2D, budget: int) -> Iterator[tuple[Partition2D, int]]:
    """All ``mu`` with ``mu_1 >= lam_1 >= mu_2 >= lam_2 >= ...`` adding at most ``budget`` boxes."""
    ext = tuple(lam) + (0,)

    def rec(i, left, acc):
        if i == len(ext):
            yield _strip(acc), sum(acc) - sum(lam)
            return
        lo = ext[i]
        if i == 0:
            hi = lo + left
        else:
            hi = min(ext[i - 1], lo + left)
        for v in range(lo, hi + 1):
            acc.append(v)
            yield from rec(i + 1, left - (v - lo), acc)
            acc.pop()

    yield from rec(0, budget, [])


def shrink(lam: Partition2D, budget: int | None) -> Iterator[tuple[Partition2D, int]]:
    """All ``mu`` with ``lam_1 >= mu_1 >= lam_2 >= mu_2 >= ...`` removing at most ``budget`` boxes."""
    lam = tuple(lam)
    ext = lam + (0,)
    total = sum(lam)

    def rec(i, acc):
        if i == len(lam):
            removed = total - sum(acc)
            if budget is None or removed <= budget:
                yield _strip(acc), removed
            return
        removed_so_far = sum(lam[:i]) - sum(acc)
        for v in range(lam[i], ext[i + 1] - 1, -1):
            if budget is not None and removed_so_far + lam[i] - v > budget:
                break
            acc.append(v)
            yield from rec(i + 1, acc)
            acc.pop()

    yield from rec(0, [])


def gamma(direction: str, x: Mono, v: StateVector, N: int | None = None) -> StateVector:
    """``Gamma_-(x)`` grows each slice by a horizontal strip, ``Gamma_+(x)`` shrinks it."""
    N = v.N if N is None else N
    out = StateVector(v.nvars, N)
    if direction not in ("+", "-"):
        raise UsageError("direction must be '+' or '-'")
    for lam, p in v.data.items():
        if x.coeff == 0:
            out.add(lam, p)
            continue
        slack = N - _min_degree(p)
        if x.degree > 0:
            budget = slack // x.degree
        elif direction == "-":
            # degree-0 argument: the new slice is weighted by |mu| right after
            budget = slack - sum(lam)
            if budget < 0:
                continue
        else:
            budget = None
        moves = grow(lam, budget) if direction == "-" else shrink(lam, budget)
        for mu, k in moves:
            out.add(mu, p, x.power(k))
    return out


def weight(op: str, v: StateVector, i: int = 0) -> StateVector:
    """Diagonal operators: ``Q_i`` multiplies by ``q_i^{|lam|}``, ``K_+``/``K_-`` by ``c^{+-|lam|}``."""
    out = StateVector(v.nvars, v.N)
    for lam, p in v.data.items():
        n = sum(lam)
        if op == "Q":
            m = Mono(tuple(n if k == i else 0 for k in range(v.nvars)))
        elif op == "K+":
            m = Mono((0,) * v.nvars, n)
        elif op == "K-":
            m = Mono((0,) * v.nvars, -n)
        else:
            raise UsageError(f"unknown weight operator {op!r}")
        out.add(lam, p, m)
    return out


# -- operator words -------------------------------------------------------------------

@dataclass(frozen=True)
class OperatorSpec:
    """Word in ``G+ x``, ``G- x``, ``Q i``, ``K+``, ``K-``; applied right to left."""

    letters: tuple

    def __post_init__(self):
        for n, let in enumerate(self.letters):
            if let[0] in ("K+", "K-"):
                neighbours = [self.letters[j] for j in (n - 1, n + 1) if 0 <= j < len(self.letters)]
                if ("Q", 0) not in neighbours:
                    raise UsageError("K must sit next to Q_0")
            elif let[0] not in ("G+", "G-", "Q"):
                raise UsageError(f"unknown letter {let!r}")

    def __mul__(self, other: "OperatorSpec") -> "OperatorSpec":
        return OperatorSpec(self.letters + other.letters)

    def __pow__(self, n: int) -> "OperatorSpec":
        return OperatorSpec(self.letters * n)

    def apply(self, v: StateVector) -> StateVector:
        for let in reversed(self.letters):
            if let[0] == "G+":
                v = gamma("+", let[1], v)
            elif let[0] == "G-":
                v = gamma("-", let[1], v)
            elif let[0] == "Q":
                v = weight("Q", v, let[1])
            else:
                v = weight(let[0], v)
        return v


def A_bar(direction: str, r: int, x: Mono, limit: bool = True) -> OperatorSpec:
    """``Gamma(x) Q_{r-1} ... Gamma(x) Q_1 Gamma(x) K Q_0``; ``limit=False`` drops ``K``."""
    g = "G" + direction
    letters = []
    for i in range(r - 1, 0, -1):
        letters += [(g, x), ("Q", i)]
    letters.append((g, x))
    if limit:
        letters.append(("K" + direction,))
    letters.append(("Q", 0))
    return OperatorSpec(tuple(letters))


def _to_qseries(p: Poly, r: int, N: int, limit: bool) -> QSeries:
    by_key: dict = {}
    for (e, c), v in p.items():
        cs = by_key.setdefault(e[:r], {})
        cs[c] = cs.get(c, 0) + v
    if limit:
        coeffs = {k: CRational(c_poly(cs)) for k, cs in by_key.items()}
        return QSeries(r, N, coeffs, CRational.from_int(1))
    coeffs = {k: sum(cs.values(), Fraction(0)) for k, cs in by_key.items()}
    return QSeries(r, N, coeffs, Fraction(1))


def z_limit(r: int, N: int, limit: bool = True, blocks: int | None = None) -> QSeries:
    """``<0| Abar_+(1)^n Abar_-(1)^n |0>`` to total q-degree ``N``.

    With ``limit=False`` the K operators are omitted, giving the plain
    colored count ``sum_pi q^{color}`` (MacMahon for r = 1).
    """
    if r < 1 or N < 0:
        raise UsageError("need r >= 1 and N >= 0")
    n = N if blocks is None else blocks
    one = Mono((0,) * r)
    word = A_bar("+", r, one, limit) ** n * A_bar("-", r, one, limit) ** n
    v = word.apply(StateVector.vacuum(r, N))
    return _to_qseries(v.coefficient(()), r, N, limit)


# -- commutation checks -----------------------------------------------------------------

@dataclass
class CheckResult:
    ok: bool
    name: str
    checked: int = 0
    counterexample: dict | None = None

    def __bool__(self):
        return self.ok

    def to_json(self) -> dict:
        return {"name": self.name, "ok": self.ok, "checked": self.checked, "counterexample": self.counterexample}


def _partitions_up_to(n: int) -> list[Partition2D]:
    out = [()]

    def rec(rest, cap, acc):
        if acc:
            out.append(tuple(acc))
        for p in range(min(rest, cap), 0, -1):
            acc.append(p)
            rec(rest - p, p, acc)
            acc.pop()

    rec(n, n, [])
    return sorted(out, key=lambda l: (sum(l), l))


def _geometric(m: Mono, nvars: int, N: int) -> Poly:
    """``(1 - m)^{-1}`` truncated at degree ``N``."""
    if m.degree <= 0:
        raise UsageError("geometric series needs a positive-degree monomial")
    out: Poly = {}
    k = 0
    while k * m.degree <= N:
        mk = m.power(k)
        out[(mk.exps, mk.cexp)] = mk.coeff
        k += 1
    return out


def _compare_words(name, lhs: OperatorSpec, rhs: OperatorSpec, factor: Poly, nvars: int, N: int, lam_max: int):
    checked = 0
    for lam in _partitions_up_to(lam_max):
        start = StateVector.basis(lam, nvars, N)
        left = lhs.apply(start)
        right = rhs.apply(start).scale(factor)
        checked += 1
        diff = left.difference(right)
        if diff is not None:
            mu, key, a, b = diff
            return CheckResult(False, name, checked, {
                "basis": list(lam), "partition": list(mu), "monomial": list(key[0]), "c": key[1],
                "lhs": str(a), "rhs": str(b),
            })
    return CheckResult(True, name, checked)


def check_gamma_commutation(a: Mono | None = None, b: Mono | None = None, N: int = 4) -> CheckResult:
    """``Gamma_+(a) Gamma_-(b) = (1 - ab)^{-1} Gamma_-(b) Gamma_+(a)`` on ``|lam>``, ``|lam| <= N``.

    The defaults are formal variables ``a, b`` of degree 1.
    """
    nvars = 2
    a = graded(nvars, _0=1) if a is None else a
    b = graded(nvars, _1=1) if b is None else b
    nvars = len(a.exps)
    ab = a * b
    factor = _poly_one(nvars) if ab.coeff == 0 else _geometric(ab, nvars, N)
    lhs = OperatorSpec((("G+", a), ("G-", b)))
    rhs = OperatorSpec((("G-", b), ("G+", a)))
    return _compare_words("gamma", lhs, rhs, factor, nvars, N, N)


def A_plus(r: int, x: Mono, nvars: int) -> OperatorSpec:
    """``Gamma_+(x q c) Gamma_+(x q_[0,r-2] c) ... Gamma_+(x q_0 c)``."""
    c = Mono((0,) * nvars, 1)
    return OperatorSpec(tuple(("G+", x * q_block(nvars, 0, i) * c) for i in range(r - 1, -1, -1)))


def A_minus(r: int, y: Mono, nvars: int) -> OperatorSpec:
    """``Gamma_-(y) Gamma_-(y q_{r-1}) ... Gamma_-(y q_[1,r-1])``."""
    return OperatorSpec(tuple(("G-", y * q_block(nvars, j, r - 1)) for j in range(r, 0, -1)))


def commutator_factor(r: int, N: int) -> Poly:
    """``C_r(x, y) = prod_{i,j} (1 - x y q q_[0,i]/q_[0,j] c)^{-1}`` with ``x, y`` in slots r, r+1."""
    nvars = r + 2
    xy = graded(nvars, **{f"_{r}": 1, f"_{r + 1}": 1})
    q = q_block(nvars, 0, r - 1)
    out = _poly_one(nvars)
    for i in range(r):
        for j in range(r):
            e = tuple(a + b - d for a, b, d in zip(q.exps, q_block(nvars, 0, i).exps, q_block(nvars, 0, j).exps))
            m = xy * Mono(e, 1)
            out = _poly_mul(out, _geometric(m, nvars, N), N)
    return out


def check_A_commutation(r: int, N: int = 4) -> CheckResult:
    """``A_+(x) A_-(y) = C_r(x, y) A_-(y) A_+(x)`` on ``|lam>``, ``|lam| <= N``."""
    nvars = r + 2
    x = graded(nvars, **{f"_{r}": 1})
    y = graded(nvars, **{f"_{r + 1}": 1})
    lhs = A_plus(r, x, nvars) * A_minus(r, y, nvars)
    rhs = A_minus(r, y, nvars) * A_plus(r, x, nvars)
    return _compare_words(f"A(r={r})", lhs, rhs, commutator_factor(r, N), nvars, N, N)


def transfer_checks(rs: Sequence[int] = (1, 2), N: int = 4) -> list[CheckResult]:
    out = [check_gamma_commutation(N=N)]
    out += [check_A_commutation(r, N) for r in rs]
    return out
