"""Exact generator action on formal combinations of integral tableaux.

The raising, lowering and diagonal generators act on a tableau through
rational coefficient formulas in its entries; tableaux produced outside the
distinguished basis are treated as zero (that convention is what closes the
action for admissible relation sets), with optional leak reporting for
probing non-admissible sets.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import prod

from .errors import (
    CriticalDenominator,
    LabeledEntryUnsupported,
    NotDominant,
    NotSatisfying,
    OutOfBasisLeak,
)
from .patterns import weight
from .patterns import satisfies as _satisfies


@dataclass(frozen=True)
class LinComb:
    """Formal rational combination of patterns; zero coefficients dropped."""

    terms: tuple = ()  # ((Pattern, Fraction), ...) sorted by offsets

    @classmethod
    def build(cls, items):
        acc = {}
        for pattern, coeff in items:
            c = acc.get(pattern, Fraction(0)) + Fraction(coeff)
            if c:
                acc[pattern] = c
            elif pattern in acc:
                del acc[pattern]
        return cls(tuple(sorted(acc.items(), key=lambda t: t[0].offsets_key())))

    @classmethod
    def single(cls, pattern, coeff=1):
        return cls.build([(pattern, coeff)])

    def __add__(self, other):
        return LinComb.build(list(self.terms) + list(other.terms))

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c):
        c = Fraction(c)
        return LinComb.build([(p, x * c) for p, x in self.terms])

    def is_zero(self):
        return not self.terms

    def __str__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"({c})*[{p}]" for p, c in self.terms)


def _require_rational_rows(M, rows):
    for k in rows:
        if not 1 <= k <= M.n:
            continue
        for e in M.row(k):
            if not e.is_rational:
                raise LabeledEntryUnsupported(
                    "generator action needs rational entries in the touched rows"
                )


def _row_denominator(M, k, i):
    den = Fraction(1)
    mki = M[(k, i)].offset
    for j in range(1, k + 1):
        if j == i:
            continue
        f = mki - M[(k, j)].offset + j - i
        if f == 0:
            raise CriticalDenominator(k, i, j)
        den *= f
    return den


def act_raise(k, M):
    """Raising generator between rows k and k+1."""
    if not 1 <= k <= M.n - 1:
        raise ValueError(f"raise index {k} out of range 1..{M.n - 1}")
    _require_rational_rows(M, (k, k + 1))
    items = []
    for i in range(1, k + 1):
        mki = M[(k, i)].offset
        num = prod(
            mki - M[(k + 1, j)].offset + j - i for j in range(1, k + 2)
        )
        coeff = -Fraction(num) / _row_denominator(M, k, i)
        if coeff:
            items.append((M.shifted(k, i, 1), coeff))
    return LinComb.build(items)


def act_lower(k, M):
    """Lowering generator between rows k+1 and k."""
    if not 1 <= k <= M.n - 1:
        raise ValueError(f"lower index {k} out of range 1..{M.n - 1}")
    _require_rational_rows(M, (k - 1, k))
    items = []
    for i in range(1, k + 1):
        mki = M[(k, i)].offset
        num = prod(
            mki - M[(k - 1, j)].offset + j - i for j in range(1, k)
        )
        coeff = Fraction(num) / _row_denominator(M, k, i)
        if coeff:
            items.append((M.shifted(k, i, -1), coeff))
    return LinComb.build(items)


def act_cartan(k, M):
    """Diagonal generator: multiplies by the kth weight of the tableau."""
    if not 1 <= k <= M.n:
        raise ValueError(f"cartan index {k} out of range 1..{M.n}")
    _require_rational_rows(M, (k - 1, k))
    return LinComb.single(M, weight(M, k))


RAISE, LOWER, CARTAN = "raise", "lower", "cartan"


def _act_one(gen, M):
    kind, k = gen
    if kind == RAISE:
        return act_raise(k, M)
    if kind == LOWER:
        return act_lower(k, M)
    if kind == CARTAN:
        return act_cartan(k, M)
    raise ValueError(f"unknown generator kind {kind!r}")


def act_in_basis(C, L, gen, v, strict=False, collect_leaks=False):
    """Linear extension of a generator with the basis-membership filter.

    Terms landing outside the basis are treated as zero.  With strict=True a
    nonzero out-of-basis coefficient raises OutOfBasisLeak; with
    collect_leaks=True the dropped (pattern, coefficient) pairs are returned
    alongside the result.
    """
    for pattern, _ in v.terms:
        if not _satisfies(C, pattern):
            raise NotSatisfying("input term outside the basis")
    items = []
    leaks = []
    for pattern, coeff in v.terms:
        for target, c in _act_one(gen, pattern).terms:
            c = c * coeff
            if _satisfies(C, target):
                items.append((target, c))
            else:
                if strict:
                    raise OutOfBasisLeak(target, c)
                leaks.append((target, c))
    result = LinComb.build(items)
    if collect_leaks:
        return result, tuple(leaks)
    return result


@dataclass(frozen=True)
class CommutatorReport:
    checked: int
    failures: tuple = ()

    @property
    def ok(self):
        return not self.failures


def check_commutators(C, L, sample):
    """Verify the bracket identities of the generator action on each sample.

    Checked per basis tableau: [raise_k, lower_k] = cartan_k - cartan_{k+1};
    cartan brackets scale raise/lower by the usual +/-1 pattern; mixed and
    distant same-type brackets vanish.
    """
    n = L.n
    failures = []
    checked = 0

    def apply(gen, v):
        return act_in_basis(C, L, gen, v)

    def bracket(g1, g2, v):
        return apply(g1, apply(g2, v)) - apply(g2, apply(g1, v))

    for M in sample:
        v = LinComb.single(M)
        checked += 1
        for k in range(1, n):
            lhs = bracket((RAISE, k), (LOWER, k), v)
            rhs = apply((CARTAN, k), v) - apply((CARTAN, k + 1), v)
            if lhs != rhs:
                failures.append((f"[raise{k},lower{k}]", M, str(lhs - rhs)))
        for j in range(1, n + 1):
            for k in range(1, n):
                want = (1 if j == k else 0) - (1 if j == k + 1 else 0)
                lhs = bracket((CARTAN, j), (RAISE, k), v)
                rhs = apply((RAISE, k), v).scale(want)
                if lhs != rhs:
                    failures.append((f"[cartan{j},raise{k}]", M, str(lhs - rhs)))
                lhs = bracket((CARTAN, j), (LOWER, k), v)
                rhs = apply((LOWER, k), v).scale(-want)
                if lhs != rhs:
                    failures.append((f"[cartan{j},lower{k}]", M, str(lhs - rhs)))
        for k in range(1, n):
            for l in range(1, n):
                if abs(k - l) >= 2:
                    for kind in (RAISE, LOWER):
                        res = bracket((kind, k), (kind, l), v)
                        if not res.is_zero():
                            failures.append((f"[{kind}{k},{kind}{l}]", M, str(res)))
                if k != l:
                    res = bracket((RAISE, k), (LOWER, l), v)
                    if not res.is_zero():
                        failures.append((f"[raise{k},lower{l}]", M, str(res)))
    return CommutatorReport(checked, tuple(failures))


def weyl_dim(lam):
    """Dimension of the simple module with integral dominant highest weight."""
    lam = [Fraction(x) for x in lam]
    if any(x.denominator != 1 for x in lam):
        raise NotDominant("weight entries must be integers")
    if any(lam[i] < lam[i + 1] for i in range(len(lam) - 1)):
        raise NotDominant("weight entries must be weakly decreasing")
    n = len(lam)
    dim = Fraction(1)
    for i in range(n):
        for j in range(i + 1, n):
            dim *= Fraction(lam[i] - lam[j] + j - i, j - i)
    assert dim.denominator == 1
    return int(dim)
