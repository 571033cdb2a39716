"""Triangular patterns with exact entries and the pointwise predicates.

An entry is ``base(label) + offset`` where the offset is an exact rational and
the label stands for a fixed irrational base value, enclosed by a certified
rational interval.  Two entries are equal iff labels and offsets coincide;
their difference is an integer iff the labels coincide and the offset
difference is an integer.  Order between different labels is decided through
the intervals and raises when the intervals overlap.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from math import isqrt

from .errors import (
    IncomparableEntries,
    NonRationalWeight,
    SizeMismatch,
)

# Default enclosure width for labeled entries: 2**-64.
ENCLOSURE_BITS = 64


def _frac(x):
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int) or isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"cannot coerce {x!r} to an exact rational")


@dataclass(frozen=True)
class Entry:
    offset: Fraction
    label: str = None
    lo: Fraction = field(default=None, compare=False)
    hi: Fraction = field(default=None, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "offset", _frac(self.offset))
        if self.label is not None:
            if self.lo is None or self.hi is None:
                raise ValueError("labeled entry requires an enclosing interval")
            object.__setattr__(self, "lo", _frac(self.lo))
            object.__setattr__(self, "hi", _frac(self.hi))
            if self.lo > self.hi:
                raise ValueError("empty enclosure interval")

    @classmethod
    def rational(cls, x):
        if isinstance(x, Entry):
            return x
        return cls(_frac(x))

    @classmethod
    def labeled(cls, name, lo, hi, offset=0):
        return cls(_frac(offset), name, _frac(lo), _frac(hi))

    @classmethod
    def sqrt(cls, m, offset=0):
        """Labeled entry for the square root of a nonsquare integer m > 0,
        with a 2**-64-wide certified enclosure."""
        if m <= 0 or isqrt(m) ** 2 == m:
            raise ValueError(f"sqrt label wants a positive nonsquare, got {m}")
        scale = 1 << ENCLOSURE_BITS
        a = isqrt(m * scale * scale)
        return cls.labeled(f"sqrt{m}", Fraction(a, scale), Fraction(a + 1, scale), offset)

    @property
    def is_rational(self):
        return self.label is None

    def value_bounds(self):
        if self.label is None:
            return self.offset, self.offset
        return self.lo + self.offset, self.hi + self.offset

    def add(self, q):
        return Entry(self.offset + _frac(q), self.label, self.lo, self.hi)

    def diff(self, other):
        """Exact difference as a rational, or None when labels differ."""
        if self.label != other.label:
            return None
        return self.offset - other.offset

    def integer_diff(self, other):
        d = self.diff(other)
        return d is not None and d.denominator == 1

    def __str__(self):
        if self.label is None:
            return str(self.offset)
        if self.offset == 0:
            return self.label
        sign = "+" if self.offset > 0 else "-"
        return f"{self.label}{sign}{abs(self.offset)}"


def cmp_entries(a, b):
    """-1, 0, 1 comparison; raises IncomparableEntries when undecidable."""
    if a.label == b.label:
        return (a.offset > b.offset) - (a.offset < b.offset)
    alo, ahi = a.value_bounds()
    blo, bhi = b.value_bounds()
    if ahi < blo:
        return -1
    if alo > bhi:
        return 1
    raise IncomparableEntries(f"cannot order {a} and {b} from their intervals")


def separation(a, b):
    """Certified positive lower bound for |a - b| of distinct entries."""
    if a.label == b.label:
        d = abs(a.offset - b.offset)
        if d == 0:
            raise ValueError("entries are equal")
        return d
    alo, ahi = a.value_bounds()
    blo, bhi = b.value_bounds()
    gap = max(blo - ahi, alo - bhi)
    if gap <= 0:
        raise IncomparableEntries(f"cannot separate {a} and {b}")
    return gap


def coord_index(n, v):
    """Index of vertex (k,i) in the serialization order (top row first)."""
    k, i = v
    return (n * (n + 1) - k * (k + 1)) // 2 + (i - 1)


@dataclass(frozen=True)
class Pattern:
    n: int
    entries: tuple  # Entry per vertex, serialization order (row n first)

    def __post_init__(self):
        if len(self.entries) != self.n * (self.n + 1) // 2:
            raise ValueError("wrong number of entries")
        object.__setattr__(
            self, "entries", tuple(Entry.rational(e) for e in self.entries)
        )

    @classmethod
    def from_rows(cls, rows):
        """Build from rows listed top row (length n) first."""
        n = len(rows[0])
        if [len(r) for r in rows] != list(range(n, 0, -1)):
            raise ValueError("rows must have lengths n, n-1, ..., 1")
        flat = [Entry.rational(x) for row in rows for x in row]
        return cls(n, tuple(flat))

    def __getitem__(self, v):
        return self.entries[coord_index(self.n, v)]

    def row(self, k):
        start = coord_index(self.n, (k, 1))
        return list(self.entries[start:start + k])

    def rows(self):
        return [self.row(k) for k in range(self.n, 0, -1)]

    def with_entry(self, v, entry):
        idx = coord_index(self.n, v)
        ents = list(self.entries)
        ents[idx] = Entry.rational(entry)
        return Pattern(self.n, tuple(ents))

    def shifted(self, k, i, delta):
        """Add an integer to entry (k,i)."""
        return self.with_entry((k, i), self[(k, i)].add(delta))

    def offsets_key(self):
        return tuple(e.offset for e in self.entries)

    def all_rational(self):
        return all(e.is_rational for e in self.entries)

    def __str__(self):
        return " | ".join(
            " ".join(str(e) for e in row) for row in self.rows()
        )


def constant_pattern(n, value=0):
    return Pattern(n, tuple(Entry.rational(value) for _ in range(n * (n + 1) // 2)))


def _check_sizes(C, X):
    if C.n != X.n:
        raise SizeMismatch(f"relation set has n={C.n}, pattern has n={X.n}")


def is_c_pattern(C, X):
    """x_src >= x_dst for every relation, with certified order."""
    _check_sizes(C, X)
    for src, dst in C:
        if X[src] == X[dst]:
            continue
        if cmp_entries(X[src], X[dst]) < 0:
            return False
    return True


def satisfies(C, L):
    """l_src - l_dst is a nonnegative integer for every relation."""
    _check_sizes(C, L)
    for src, dst in C:
        d = L[src].diff(L[dst])
        if d is None or d.denominator != 1 or d < 0:
            return False
    return True


def is_realization(C, L):
    """satisfies C, and same-row integer differences match components."""
    from .relations import connected_components

    if not satisfies(C, L):
        return False
    blocks = connected_components(C)
    block_of = {v: idx for idx, b in enumerate(blocks) for v in b}
    for k in range(1, L.n):
        for i in range(1, k + 1):
            for j in range(i + 1, k + 1):
                same = block_of[(k, i)] == block_of[(k, j)]
                if L[(k, i)].integer_diff(L[(k, j)]) != same:
                    return False
    return True


def noncritical_at(C, M):
    """No zero of m_ki - m_kj + j - i within a component, below the top row."""
    from .relations import connected_components

    _check_sizes(C, M)
    for block in connected_components(C):
        for k in range(1, M.n):
            cols = sorted(v[1] for v in block if v[0] == k)
            for i in cols:
                for j in cols:
                    if i == j:
                        continue
                    d = M[(k, i)].diff(M[(k, j)])
                    if d is not None and d + j - i == 0:
                        return False
    return True


def row_sum(X, k):
    if not 1 <= k <= X.n:
        raise ValueError(f"row {k} out of range")
    total = Fraction(0)
    for e in X.row(k):
        if not e.is_rational:
            raise NonRationalWeight(f"labeled entry {e} in row {k}")
        total += e.offset
    return total


def weight(X, k):
    """w_k = R_k - R_{k-1}; labels must cancel between the two rows."""
    if not 1 <= k <= X.n:
        raise ValueError(f"row {k} out of range")
    labels_k = sorted(e.label for e in X.row(k) if e.label)
    labels_km1 = [] if k == 1 else sorted(e.label for e in X.row(k - 1) if e.label)
    if labels_k != labels_km1:
        raise NonRationalWeight(f"labels do not cancel in weight {k}")
    total = sum(e.offset for e in X.row(k))
    if k > 1:
        total -= sum(e.offset for e in X.row(k - 1))
    return Fraction(total)


def weight_vector(X):
    return tuple(weight(X, k) for k in range(1, X.n + 1))
