"""Relation sets on the triangular vertex set and their structural checks.

Vertices are pairs ``(row, col)`` with ``1 <= col <= row <= n``; row ``n`` is
the top row.  A relation set is a finite set of ordered vertex pairs, each
falling into one of three classes: "plus" (target one row below), "minus"
(target one row above) or "zero" (both endpoints in the top row).
"""

from dataclasses import dataclass
from functools import lru_cache

from .errors import InvalidRelation

PLUS = "plus"
MINUS = "minus"
ZERO = "zero"

Vertex = tuple  # (row, col)


def vertices(n):
    """All triangle vertices for height n, sorted by (row, col)."""
    return [(k, i) for k in range(1, n + 1) for i in range(1, k + 1)]


def is_vertex(v, n):
    if not (isinstance(v, tuple) and len(v) == 2):
        return False
    row, col = v
    return isinstance(row, int) and isinstance(col, int) and 1 <= col <= row <= n


def relation_class(src, dst, n):
    """Classify a relation or raise InvalidRelation."""
    if not is_vertex(src, n) or not is_vertex(dst, n):
        raise InvalidRelation(f"invalid endpoint in {(src, dst)} for n={n}")
    if dst[0] == src[0] - 1:
        return PLUS
    if dst[0] == src[0] + 1:
        return MINUS
    if src[0] == dst[0] == n and src[1] != dst[1]:
        return ZERO
    raise InvalidRelation(f"{(src, dst)} is not a plus/minus/zero relation for n={n}")


@dataclass(frozen=True)
class RelationSet:
    n: int
    relations: tuple = ()

    def __post_init__(self):
        if not (isinstance(self.n, int) and self.n >= 1):
            raise InvalidRelation(f"n must be a positive integer, got {self.n!r}")
        rels = sorted({(tuple(src), tuple(dst)) for src, dst in self.relations})
        for src, dst in rels:
            relation_class(src, dst, self.n)
        object.__setattr__(self, "relations", tuple(rels))

    def __iter__(self):
        return iter(self.relations)

    def __len__(self):
        return len(self.relations)


def standard_set(n, k, variant):
    """The standard one-parameter families of relation sets.

    variant is one of "plus", "minus", "both", "empty".  The plus family has
    arrows (i+1,j) -> (i,j) and the minus family (i,j) -> (i+1,j+1), both over
    k <= j <= i <= n-1.  "empty" is the generic (empty) set.
    """
    if not 1 <= k <= n:
        raise InvalidRelation(f"k={k} out of range 1..{n}")
    rels = []
    if variant in ("plus", "both"):
        rels += [(((i + 1), j), (i, j)) for i in range(k, n) for j in range(k, i + 1)]
    if variant in ("minus", "both"):
        rels += [((i, j), ((i + 1), j + 1)) for i in range(k, n) for j in range(k, i + 1)]
    if variant not in ("plus", "minus", "both", "empty"):
        raise InvalidRelation(f"unknown variant {variant!r}")
    return RelationSet(n, rels)


def support(C):
    """All vertices that are source or target of some relation."""
    out = set()
    for src, dst in C:
        out.add(src)
        out.add(dst)
    return out


@lru_cache(maxsize=None)
def _successors(C):
    succ = {v: [] for v in vertices(C.n)}
    for src, dst in C:
        succ[src].append(dst)
    return succ


@lru_cache(maxsize=None)
def _reach_sets(C):
    """Directed reachability closure: vertex -> frozenset of reachable vertices."""
    succ = _successors(C)
    out = {}
    for start in vertices(C.n):
        seen = {start}
        stack = [start]
        while stack:
            v = stack.pop()
            for w in succ[v]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        out[start] = frozenset(seen)
    return out


def reaches(C, a, b):
    """True iff there is a directed path (possibly empty) from a to b."""
    return b in _reach_sets(C)[a]


@lru_cache(maxsize=None)
def connected_components(C):
    """Undirected components of the relation graph, as a tuple of frozensets.

    Vertices outside the support are singleton blocks.  Blocks are sorted by
    their least member.
    """
    parent = {v: v for v in vertices(C.n)}

    def root(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for src, dst in C:
        ra, rb = root(src), root(dst)
        if ra != rb:
            parent[ra] = rb
    blocks = {}
    for v in vertices(C.n):
        blocks.setdefault(root(v), set()).add(v)
    return tuple(sorted((frozenset(b) for b in blocks.values()), key=min))


def same_component(C, a, b):
    for block in connected_components(C):
        if a in block:
            return b in block
    return False


@dataclass(frozen=True)
class ReducedReport:
    ok: bool
    violations: tuple = ()


def is_reduced(C):
    """Check the at-most-one-arrow conditions and top-row redundancy.

    A top-row relation is redundant if its source still reaches its target
    after removing the relation itself.
    """
    violations = []
    for v in sorted(support(C)):
        k, j = v
        outs_up = [dst for src, dst in C if src == v and dst[0] == k + 1]
        ins_up = [src for src, dst in C if dst == v and src[0] == k + 1]
        outs_down = [dst for src, dst in C if src == v and dst[0] == k - 1]
        ins_down = [src for src, dst in C if dst == v and src[0] == k - 1]
        if len(outs_up) > 1:
            violations.append(("multiple_up_out", v))
        if len(ins_up) > 1:
            violations.append(("multiple_up_in", v))
        if len(outs_down) > 1:
            violations.append(("multiple_down_out", v))
        if len(ins_down) > 1:
            violations.append(("multiple_down_in", v))
    for rel in C:
        src, dst = rel
        if relation_class(src, dst, C.n) == ZERO:
            rest = RelationSet(C.n, [r for r in C if r != rel])
            if reaches(rest, src, dst):
                violations.append(("redundant_top_relation", rel))
    return ReducedReport(not violations, tuple(violations))


def adjoining_pairs(C):
    """Same-row pairs ((k,i);(k,j)), k != n, i < j, with (k,i) reaching (k,j)
    and no strictly intermediate same-row vertex on the reachability order."""
    reach = _reach_sets(C)
    pairs = []
    for k in range(1, C.n):
        for i in range(1, k + 1):
            for j in range(i + 1, k + 1):
                if (k, j) not in reach[(k, i)]:
                    continue
                blocked = any(
                    t != i and t != j
                    and (k, t) in reach[(k, i)]
                    and (k, j) in reach[(k, t)]
                    for t in range(1, k + 1)
                )
                if not blocked:
                    pairs.append(((k, i), (k, j)))
    return pairs


@dataclass(frozen=True)
class AdmissibilityResult:
    status: str  # "admissible" | "not_admissible" | "inapplicable"
    witness: tuple = None
    reason: str = None


def _has_directed_cycle(C):
    succ = _successors(C)
    color = {v: 0 for v in vertices(C.n)}  # 0 new, 1 active, 2 done

    def visit(v):
        color[v] = 1
        for w in succ[v]:
            if color[w] == 1:
                return True
            if color[w] == 0 and visit(w):
                return True
        color[v] = 2
        return False

    return any(color[v] == 0 and visit(v) for v in vertices(C.n))


def check_admissible(C):
    """Classify a relation set as admissible / not admissible / inapplicable.

    The structural hypotheses checked first: the set is reduced, the graph is
    acyclic with same-row reachability only left-to-right, and no pair of
    arrows between consecutive rows crosses.  Under those hypotheses the set
    is admissible iff every adjoining pair ((k,i);(k,j)) is covered by a
    diamond through rows k+1 and k-1 or by an ordered pair of arrows into
    row k+1 and back.
    """
    red = is_reduced(C)
    if not red.ok:
        return AdmissibilityResult("inapplicable", reason="not reduced")
    if _has_directed_cycle(C):
        return AdmissibilityResult("inapplicable", reason="directed cycle")
    reach = _reach_sets(C)
    for k in range(1, C.n + 1):
        for i in range(1, k + 1):
            for j in range(1, i):
                if (k, j) in reach[(k, i)]:
                    return AdmissibilityResult(
                        "inapplicable",
                        reason=f"same-row reachability ({k},{i}) to ({k},{j}) with {i} > {j}",
                    )
    # Crossing arrows between consecutive rows, orientation-free.
    arcs = set()
    for src, dst in C:
        if abs(src[0] - dst[0]) == 1:
            low, high = (src, dst) if src[0] < dst[0] else (dst, src)
            arcs.add((low, high))
    for (k_i, t_v) in arcs:
        k, i = k_i
        t = t_v[1]
        for (j_v, s_v) in arcs:
            if j_v[0] == k and s_v[0] == k + 1 and j_v[1] > i and s_v[1] < t:
                return AdmissibilityResult(
                    "inapplicable",
                    reason=f"crossing arrows between rows {k} and {k + 1}",
                )
    rels = set(C.relations)
    for (ki, kj) in adjoining_pairs(C):
        k, i = ki
        j = kj[1]
        covered = False
        for p in range(1, k + 2):
            if ((k, i), (k + 1, p)) in rels and ((k + 1, p), (k, j)) in rels:
                for q in range(1, k):
                    if ((k, i), (k - 1, q)) in rels and ((k - 1, q), (k, j)) in rels:
                        covered = True
                        break
            if covered:
                break
        if not covered:
            for s in range(1, k + 2):
                for t in range(s + 1, k + 2):
                    if ((k, i), (k + 1, s)) in rels and ((k + 1, t), (k, j)) in rels:
                        covered = True
                        break
                if covered:
                    break
        if not covered:
            return AdmissibilityResult("not_admissible", witness=(ki, kj))
    return AdmissibilityResult("admissible")


def is_top_connected(C):
    """Every supported vertex below the top row reaches some top-row vertex."""
    reach = _reach_sets(C)
    for v in support(C):
        if v[0] == C.n:
            continue
        if not any((C.n, r) in reach[v] for r in range(1, C.n + 1)):
            return False
    return True


def structural_noncritical(C):
    """Sufficient test: "yes" if every same-row pair sharing a component is
    reachability-ordered left to right (below the top row); else "unknown"."""
    reach = _reach_sets(C)
    for block in connected_components(C):
        for k in range(1, C.n):
            row = sorted(v[1] for v in block if v[0] == k)
            for a in range(len(row)):
                for b in range(a + 1, len(row)):
                    if (k, row[b]) not in reach[(k, row[a])]:
                        return "unknown"
    return "yes"
