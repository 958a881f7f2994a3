"""Counting bounds and the walk-length machinery behind them.

Three independent pieces:

  * a constructive lower bound: starting from a de Bruijn word b of order n,
    splice any absent length-(n+1) word y into b b b b to get a circular
    witness t_y whose cyclic factor set is exactly {y} plus the factors of
    b; concatenating the t_y realizes every subset of the absent words, so
    at least 2^(2^n) sets of order n+1 are circularly representable;

  * an upper-bound audit: counting candidate sets net by net shows there
    are at most 10^(2^(n-1)) of them; the audit reproduces the full
    L[k][i] = C(m,i) C(m-i,k-2i) 2^(k-2i) table (m = 2^(n-1)) and checks
    the telescoped identity sum_k sum_i L[k][i] 7^i = 10^m exactly;

  * covering closed walks in strongly connected digraphs: every such graph
    on n vertices has one of length at most floor((n+1)^2/4), a chain-fan
    family attains the bound, and 2^(2n-2) + 2^(n-1) therefore caps the
    extremal witness lengths.

All arithmetic in this module is exact integer arithmetic.
"""

from __future__ import annotations

import math
import random
from collections import deque
from dataclasses import dataclass, field

from .factorsets import circular_factors
from .words import Word


class AlreadyPresent(ValueError):
    """The word to splice in is already a cyclic factor of the scaffold."""


class NotStronglyConnected(ValueError):
    """Walk construction requires a strongly connected digraph."""


WALK_MAX_VERTICES = 15


# -- constructive lower bound -------------------------------------------------

def _check_debruijn(b: Word) -> int:
    n = (len(b)).bit_length() - 1
    if len(b) != 1 << n or len(circular_factors(b, n)) != 1 << n:
        raise ValueError(f"{b!r} is not a de Bruijn word")
    return n


def construct_ty(b: Word, y: Word) -> Word:
    """Splice y into the 4-fold repeat of b, keeping b as prefix and suffix.

    With t = bbbb (1-based), i1 the first occurrence of y minus its last
    letter and i2 the last occurrence of y minus its first letter, the
    returned circular word is

        b b t[1..i1-1] t[i1..i1+n-1] t[i2+n-1] t[i2+n..] b b

    whose cyclic factor set of order n+1 is {y} plus that of b. The two
    occurrences never overlap, which the construction asserts.
    """
    n = _check_debruijn(b)
    if y.length != n + 1:
        raise ValueError(f"expected a word of length {n + 1}, got {y.length}")
    if y in circular_factors(b, n + 1):
        raise AlreadyPresent(f"{y!r} is already a cyclic factor of the scaffold")
    bs = str(b)
    t = bs * 4
    y1 = str(y)[:n]
    y2 = str(y)[1:]
    i1 = t.index(y1) + 1
    i2 = t.rindex(y2) + 1
    if not i1 + n - 1 < i2:
        raise AssertionError("splice occurrences overlap; scaffold too short")
    text = (bs + bs + t[0:i1 - 1] + t[i1 - 1:i1 + n - 1]
            + t[i2 + n - 2] + t[i2 + n - 1:] + bs + bs)
    return Word.from_text(text)


def construct_ts(b: Word, absent: list[Word]) -> Word:
    """Concatenate the splices for each absent word.

    Every piece starts and ends with b, so junctions contribute no new
    factors: the cyclic factor set of the result is the input set united
    with the factors of b. An empty input yields b b.
    """
    if not absent:
        return b + b
    out = construct_ty(b, absent[0])
    for y in absent[1:]:
        out = out + construct_ty(b, y)
    return out


def lower_bound(n: int) -> int:
    """Certified count of distinct circularly representable sets of order
    n+1 produced by the splice construction: 2^(2^n)."""
    if n < 1:
        raise ValueError("order must be positive")
    return 1 << (1 << n)


# -- upper bound ---------------------------------------------------------------

def upper_bound(n: int) -> int:
    """Upper bound 10^(2^(n-1)) on the number of circularly representable
    sets of order n+1."""
    if n < 1:
        raise ValueError("order must be positive")
    return 10 ** (1 << (n - 1))


@dataclass(frozen=True)
class UpperBoundAudit:
    """Exact-arithmetic audit of the counting argument behind the bound."""

    n: int
    bound: int
    table: list[list[int]]       # table[k][i] = L[k][i]
    weighted_sum: int            # sum_k sum_i L[k][i] * 7^i
    telescoped: int              # sum_i C(m,i) 7^i 3^(m-i)
    binomial_identity_ok: bool   # inner sums collapse to powers of 3

    @property
    def consistent(self) -> bool:
        return self.weighted_sum == self.telescoped == self.bound

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "bound": str(self.bound),
            "L": [[str(v) for v in row] for row in self.table],
            "weighted_sum": str(self.weighted_sum),
            "telescoped": str(self.telescoped),
            "binomial_identity_ok": self.binomial_identity_ok,
            "consistent": self.consistent,
        }


def upper_bound_audit(n: int) -> UpperBoundAudit:
    """Rebuild the L[k][i] table and verify its telescoping exactly.

    L[k][i] counts the k-element sets of order-n words containing exactly i
    complete pairs {0x, 1x}: choose the i pairs, then k-2i loose elements
    from distinct remaining pairs.
    """
    if n < 1:
        raise ValueError("order must be positive")
    m = 1 << (n - 1)
    kmax = 1 << n
    table = []
    weighted = 0
    for k in range(kmax + 1):
        row = []
        for i in range(k // 2 + 1):
            v = math.comb(m, i) * math.comb(m - i, k - 2 * i) * (1 << (k - 2 * i)) \
                if k - 2 * i <= m - i else 0
            row.append(v)
            weighted += v * 7 ** i
        table.append(row)
    telescoped = sum(math.comb(m, i) * 7 ** i * 3 ** (m - i) for i in range(m + 1))
    identity_ok = all(
        sum(math.comb(m - i, k - 2 * i) * (1 << (k - 2 * i))
            for k in range(2 * i, kmax + 1) if k - 2 * i <= m - i) == 3 ** (m - i)
        for i in range(m + 1))
    return UpperBoundAudit(n, upper_bound(n), table, weighted, telescoped, identity_ok)


# -- covering walks -------------------------------------------------------------

@dataclass
class Digraph:
    """Directed graph as adjacency sets; self-loops allowed, no parallels."""

    vertex_count: int
    edges: list[set[int]] = field(default_factory=list)

    def __post_init__(self):
        if self.vertex_count < 1:
            raise ValueError("need at least one vertex")
        if not self.edges:
            self.edges = [set() for _ in range(self.vertex_count)]
        if len(self.edges) != self.vertex_count:
            raise ValueError("adjacency size mismatch")

    def add_edge(self, u: int, v: int) -> None:
        if not (0 <= u < self.vertex_count and 0 <= v < self.vertex_count):
            raise ValueError(f"edge ({u},{v}) out of range")
        self.edges[u].add(v)

    def strongly_connected(self) -> bool:
        if self.vertex_count == 1:
            return True

        def reach(adj):
            seen = {0}
            stack = [0]
            while stack:
                v = stack.pop()
                for w in adj[v]:
                    if w not in seen:
                        seen.add(w)
                        stack.append(w)
            return len(seen) == self.vertex_count

        radj = [set() for _ in range(self.vertex_count)]
        for v in range(self.vertex_count):
            for w in self.edges[v]:
                radj[w].add(v)
        return reach(self.edges) and reach(radj)

    def to_text(self) -> str:
        lines = [str(self.vertex_count)]
        for u in range(self.vertex_count):
            for v in sorted(self.edges[u]):
                lines.append(f"{u} -> {v}")
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "Digraph":
        lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
        if not lines:
            raise ValueError("empty digraph text")
        g = cls(int(lines[0]))
        for ln in lines[1:]:
            u, arrow, v = ln.split()
            if arrow != "->":
                raise ValueError(f"bad edge line: {ln!r}")
            g.add_edge(int(u), int(v))
        return g


@dataclass(frozen=True)
class WalkReport:
    """A constructed covering closed walk next to the exact optimum.

    Both walks are vertex sequences with first == last; length counts
    edges. The bound floor((n+1)^2/4) is guaranteed for the optimum.
    """

    walk: tuple[int, ...]
    length: int
    covers_all: bool
    bound: int
    optimal_walk: tuple[int, ...]
    optimal_length: int

    def to_json_dict(self) -> dict:
        return {
            "walk": list(self.walk),
            "length": self.length,
            "covers_all": self.covers_all,
            "bound": self.bound,
            "optimal_walk": list(self.optimal_walk),
            "optimal_length": self.optimal_length,
        }


def _longest_simple_path(g: Digraph) -> list[int]:
    """A longest simple path by dynamic programming over vertex subsets."""
    nv = g.vertex_count
    parent: dict[tuple[int, int], tuple[int, int] | None] = {}
    layer: list[tuple[int, int]] = []
    for v in range(nv):
        st = (1 << v, v)
        parent[st] = None
        layer.append(st)
    best = layer[0]
    while layer:
        nxt = []
        for mask, v in layer:
            for w in g.edges[v]:
                if not (mask >> w) & 1:
                    st = (mask | (1 << w), w)
                    if st not in parent:
                        parent[st] = (mask, v)
                        nxt.append(st)
        if nxt:
            best = nxt[0]
        layer = nxt
    path = []
    cur: tuple[int, int] | None = best
    while cur is not None:
        path.append(cur[1])
        cur = parent[cur]
    return path[::-1]


def _shortest_path(g: Digraph, s: int, t: int) -> list[int]:
    if s == t:
        return [s]
    prev: dict[int, int | None] = {s: None}
    q = deque([s])
    while q:
        v = q.popleft()
        for w in g.edges[v]:
            if w not in prev:
                prev[w] = v
                if w == t:
                    path = [w]
                    while prev[path[-1]] is not None:
                        path.append(prev[path[-1]])
                    return path[::-1]
                q.append(w)
    raise NotStronglyConnected(f"no path {s} -> {t}")


def _optimal_closed_cover(g: Digraph) -> list[int]:
    """Exact shortest closed covering walk.

    Any covering closed walk passes through vertex 0, so it can be rotated
    to start and end there; one search over (covered, vertex) states from
    ({0}, 0) back to (all, 0) suffices.
    """
    nv = g.vertex_count
    if nv == 1:
        return [0, 0] if 0 in g.edges[0] else [0]
    full = (1 << nv) - 1
    start = (1, 0)
    prev: dict[tuple[int, int], tuple[int, int] | None] = {start: None}
    q = deque([start])
    while q:
        st = q.popleft()
        mask, v = st
        for w in g.edges[v]:
            nst = (mask | (1 << w), w)
            if nst not in prev:
                prev[nst] = st
                if nst == (full, 0):
                    path = [0]
                    cur = st
                    while cur is not None:
                        path.append(cur[1])
                        cur = prev[cur]
                    return path[::-1]
                q.append(nst)
    raise NotStronglyConnected("no closed covering walk exists")


def hamiltonian_walk(g: Digraph) -> WalkReport:
    """Closed covering walk built from a longest simple path, plus the
    exact optimum for comparison.

    The construction starts at the last vertex of a longest simple path L,
    visits the leftover vertices (ascending) through shortest paths, returns
    to the head of L and traverses it. The floor((n+1)^2/4) bound is
    guaranteed for the optimal walk.
    """
    nv = g.vertex_count
    if nv > WALK_MAX_VERTICES:
        raise ValueError(f"exact search limited to {WALK_MAX_VERTICES} vertices")
    if not g.strongly_connected():
        raise NotStronglyConnected("graph is not strongly connected")
    bound = (nv + 1) ** 2 // 4
    optimal = _optimal_closed_cover(g)
    if nv == 1:
        walk = [0, 0] if 0 in g.edges[0] else [0]
    else:
        path = _longest_simple_path(g)
        leftover = sorted(set(range(nv)) - set(path))
        stops = [path[-1]] + leftover + [path[0]]
        walk = [path[-1]]
        for a, b in zip(stops, stops[1:]):
            walk.extend(_shortest_path(g, a, b)[1:])
        walk.extend(path[1:])
    return WalkReport(
        walk=tuple(walk),
        length=len(walk) - 1,
        covers_all=set(walk) == set(range(nv)),
        bound=bound,
        optimal_walk=tuple(optimal),
        optimal_length=len(optimal) - 1,
    )


def chain_fan(n: int) -> Digraph:
    """The family attaining the walk bound: a directed chain of floor(n/2)
    vertices whose tail fans out to ceil(n/2) leaves, each wired back to the
    chain head. Its optimal covering closed walk has exactly
    floor((n+1)^2/4) edges."""
    if n < 2:
        raise ValueError("the family needs at least two vertices")
    chain = n // 2
    g = Digraph(n)
    for i in range(chain - 1):
        g.add_edge(i, i + 1)
    for leaf in range(chain, n):
        g.add_edge(chain - 1, leaf)
        g.add_edge(leaf, 0)
    return g


def random_strongly_connected(rng: random.Random, max_vertices: int = 12) -> Digraph:
    """A random strongly connected digraph, by rejection sampling sparse
    random digraphs (single vertices get a self-loop so walks are real)."""
    nv = rng.randint(1, max_vertices)
    p = min(1.0, 1.8 / max(nv - 1, 1))
    while True:
        g = Digraph(nv)
        if nv == 1:
            g.add_edge(0, 0)
            return g
        for u in range(nv):
            for v in range(nv):
                if u != v and rng.random() < p:
                    g.add_edge(u, v)
        if g.strongly_connected():
            return g


def witness_length_bound(n: int) -> int:
    """Cap on the extremal shortest-witness lengths for order n:
    2^(2n-2) + 2^(n-1), the walk bound on a 2^n-vertex graph."""
    if n < 1:
        raise ValueError("order must be positive")
    return (1 << (2 * n - 2)) + (1 << (n - 1))


def growth_ratio(n: int, count: int) -> float:
    """count^(1/2^n): the per-order growth rate of the set counts."""
    return count ** (1.0 / (1 << n))
