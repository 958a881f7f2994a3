"""Factor sets of binary words and their overlap structure.

A FactorSet is a set of length-n binary words stored as a 2^n-bit membership
table (bit code(x) set iff x is a member). On top of it live:

  * factor extraction from ordinary and circular words,
  * the directed (n-1)-overlap graph,
  * representability tests: does some word have exactly this factor set?
  * shortest (circular) witness search over (covered-subset, current-vertex)
    states, with lexicographically-least tie-breaking,
  * prefix/suffix projection of a set one order down, and the pair /
    skeleton / net bookkeeping used by the counting bounds.

All values are immutable; the searches keep only private state.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .words import InvalidLength, Word


class EmptySet(ValueError):
    """Representability questions are asked of non-empty sets only."""


@dataclass(frozen=True)
class FactorSet:
    """A subset of the 2^order binary words of a fixed length."""

    order: int
    members: int

    def __post_init__(self):
        if self.order < 1:
            raise ValueError("order must be positive")
        if not 0 <= self.members < (1 << (1 << self.order)):
            raise ValueError("membership table wider than 2^order bits")

    # -- construction ------------------------------------------------------

    @classmethod
    def from_codes(cls, order: int, codes: Iterable[int]) -> "FactorSet":
        members = 0
        top = 1 << order
        for c in codes:
            if not 0 <= c < top:
                raise ValueError(f"code {c} out of range for order {order}")
            members |= 1 << c
        return cls(order, members)

    @classmethod
    def from_words(cls, ws: Iterable[Word]) -> "FactorSet":
        ws = list(ws)
        if not ws:
            raise EmptySet("cannot infer the order of an empty collection")
        order = ws[0].length
        if any(w.length != order for w in ws):
            raise ValueError("mixed word lengths")
        return cls.from_codes(order, (w.code for w in ws))

    @classmethod
    def from_texts(cls, texts: Iterable[str]) -> "FactorSet":
        return cls.from_words(Word.from_text(t) for t in texts)

    @classmethod
    def full(cls, order: int) -> "FactorSet":
        return cls(order, (1 << (1 << order)) - 1)

    @classmethod
    def parse(cls, text: str, order: int | None = None,
              hex_bitmap: bool = False) -> "FactorSet":
        """Parse either a comma-separated word list or a hex bitmap.

        The hex form is the membership table as one hexadecimal number of
        2^order bits and requires an explicit order.
        """
        text = text.strip()
        if hex_bitmap:
            if order is None:
                raise ValueError("hex bitmaps need an explicit order")
            return cls(order, int(text, 16))
        items = [t.strip() for t in text.split(",") if t.strip()]
        if not items:
            raise EmptySet("empty factor-set text")
        fs = cls.from_texts(items)
        if order is not None and fs.order != order:
            raise ValueError(f"words have length {fs.order}, expected {order}")
        return fs

    # -- views -------------------------------------------------------------

    def codes(self) -> Iterator[int]:
        """Member codes in ascending (= lexicographic) order."""
        m = self.members
        while m:
            low = m & -m
            yield low.bit_length() - 1
            m ^= low

    def __iter__(self) -> Iterator[Word]:
        for c in self.codes():
            yield Word(self.order, c)

    def __len__(self) -> int:
        return self.members.bit_count()

    def __contains__(self, item: Word | int) -> bool:
        code = item.code if isinstance(item, Word) else item
        if isinstance(item, Word) and item.length != self.order:
            return False
        return bool((self.members >> code) & 1)

    def is_empty(self) -> bool:
        return self.members == 0

    def to_text(self) -> str:
        return ",".join(str(w) for w in self)

    def to_hex(self) -> str:
        width = -(-(1 << self.order) // 4)
        return format(self.members, f"0{width}x")

    def __or__(self, other: "FactorSet") -> "FactorSet":
        if self.order != other.order:
            raise ValueError("orders differ")
        return FactorSet(self.order, self.members | other.members)

    def is_subset_of(self, other: "FactorSet") -> bool:
        return self.order == other.order and self.members & ~other.members == 0


@dataclass(frozen=True)
class WitnessResult:
    """Outcome of a witness search: found flag, witness length and word."""

    found: bool
    length: int = 0
    witness: Word | None = None


# -- factor extraction -----------------------------------------------------

def factors(w: Word, n: int) -> FactorSet:
    """The set of length-n factors of w read as an ordinary word."""
    if n < 1:
        raise ValueError("factor length must be positive")
    if w.length < n:
        raise InvalidLength(
            f"a word of length {w.length} has no factors of length {n}")
    mask = (1 << n) - 1
    members = 0
    for i in range(w.length - n + 1):
        members |= 1 << ((w.code >> (w.length - n - i)) & mask)
    return FactorSet(n, members)


def circular_factors(w: Word, n: int) -> FactorSet:
    """The set of length-n factors of w read circularly.

    Words shorter than n wrap around repeatedly, so every word has exactly
    |w| cyclic factor occurrences regardless of n.
    """
    if n < 1:
        raise ValueError("factor length must be positive")
    ext = w.repeated_to(w.length + n - 1)
    mask = (1 << n) - 1
    members = 0
    for i in range(w.length):
        members |= 1 << ((ext.code >> (ext.length - n - i)) & mask)
    return FactorSet(n, members)


# -- overlap graph ---------------------------------------------------------

def _succ(v: int, b: int, wmask: int) -> int:
    return ((v << 1) & wmask) | b


class OverlapGraph:
    """Directed overlap graph on a factor set.

    Vertices are the member words; there is an edge x -> y exactly when the
    last n-1 letters of x equal the first n-1 letters of y, i.e. when the
    length-(n+1) word x . y[n] has both of its length-n factors in the set.
    Out-degree is at most 2. Immutable once built.
    """

    def __init__(self, vertices: FactorSet):
        self.order = vertices.order
        self.vertices = vertices
        wmask = (1 << self.order) - 1
        adj: dict[int, tuple[int, ...]] = {}
        for x in vertices.codes():
            adj[x] = tuple(
                y for y in (_succ(x, 0, wmask), _succ(x, 1, wmask))
                if y in vertices)
        self.adjacency = adj

    def successors(self, x: int) -> tuple[int, ...]:
        return self.adjacency[x]

    def edge_count(self) -> int:
        return sum(len(s) for s in self.adjacency.values())

    def strongly_connected(self) -> bool:
        """Every vertex reaches every vertex (single vertex counts)."""
        verts = list(self.adjacency)
        if not verts:
            return False
        if len(verts) == 1:
            return True
        start = verts[0]
        if len(self._reach(start, forward=True)) != len(verts):
            return False
        return len(self._reach(start, forward=False)) == len(verts)

    def _reach(self, start: int, forward: bool) -> set[int]:
        n = self.order
        wmask = (1 << n) - 1
        seen = {start}
        stack = [start]
        while stack:
            v = stack.pop()
            if forward:
                nbrs = self.adjacency[v]
            else:
                nbrs = tuple(
                    p for p in ((v >> 1), (v >> 1) | (1 << (n - 1)))
                    if p in self.vertices and v in self.adjacency[p])
            for w in nbrs:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return seen


# -- representability ------------------------------------------------------

def is_circ_representable(fs: FactorSet) -> bool:
    """Whether some circular word has exactly this cyclic factor set.

    Decided structurally: the overlap graph induced on the set must be
    strongly connected and contain at least one edge (a lone vertex needs a
    self-loop). A circular witness is exactly a closed covering walk.
    """
    if fs.is_empty():
        raise EmptySet("no word witnesses the empty set")
    g = OverlapGraph(fs)
    return g.strongly_connected() and g.edge_count() >= 1


def is_representable(fs: FactorSet) -> bool:
    """Whether some ordinary word has exactly this factor set.

    Reachability of full coverage in the product space
    (covered subset, current vertex) over the overlap graph. A greedy
    walk-to-nearest-uncovered pass answers most instances; the exhaustive
    product-space search settles the rest.
    """
    if fs.is_empty():
        raise EmptySet("no word witnesses the empty set")
    if _greedy_cover(fs):
        return True
    return _min_cover_depth(fs) is not None


def _greedy_cover(fs: FactorSet) -> bool:
    """Try to cover the set by repeatedly walking to the nearest uncovered
    vertex; sound but not complete."""
    g = OverlapGraph(fs)
    total = len(fs)
    for start in fs.codes():
        covered = {start}
        v = start
        while len(covered) < total:
            # BFS from v through the induced graph to any uncovered vertex
            prev: dict[int, int | None] = {v: None}
            queue = [v]
            goal = None
            while queue and goal is None:
                nxt = []
                for a in queue:
                    for bneigh in g.successors(a):
                        if bneigh not in prev:
                            prev[bneigh] = a
                            if bneigh not in covered:
                                goal = bneigh
                                break
                            nxt.append(bneigh)
                    if goal is not None:
                        break
                queue = nxt
            if goal is None:
                break
            node: int | None = goal
            while node is not None:
                covered.add(node)
                node = prev[node]
            v = goal
        if len(covered) == total:
            return True
    return False


def _min_cover_depth(fs: FactorSet) -> int | None:
    """Minimal number of walk edges from any single-vertex start to full
    coverage, or None when the set is not representable."""
    n = fs.order
    wmask = (1 << n) - 1
    sm = fs.members
    starts = [((1 << v) << n) | v for v in fs.codes()]
    seen = set(starts)
    if any((st >> n) == sm for st in starts):
        return 0
    frontier = starts
    d = 0
    while frontier:
        d += 1
        nxt = []
        for st in frontier:
            v = st & wmask
            cov = st >> n
            for b in (0, 1):
                x = _succ(v, b, wmask)
                if not (sm >> x) & 1:
                    continue
                nst = ((cov | (1 << x)) << n) | x
                if nst not in seen:
                    if (nst >> n) == sm:
                        return d
                    seen.add(nst)
                    nxt.append(nst)
        frontier = nxt
    return None


def _backward_dist(fs: FactorSet, targets: list[int], levels: int) -> dict[int, int]:
    """Min steps from each product-space state forward to any target state,
    via BFS on reversed edges, out to ``levels`` levels."""
    n = fs.order
    sm = fs.members
    top = 1 << (n - 1)
    dist = {st: 0 for st in targets}
    frontier = list(dist)
    for r in range(1, levels + 1):
        nxt = []
        for st in frontier:
            x = st & ((1 << n) - 1)
            cov = st >> n
            for v in (x >> 1, (x >> 1) | top):
                if not (sm >> v) & 1:
                    continue
                if (cov >> v) & 1:
                    p = (cov << n) | v
                    if p not in dist:
                        dist[p] = r
                        nxt.append(p)
                cov2 = cov & ~(1 << x)
                if v != x and (cov2 >> v) & 1:
                    p = (cov2 << n) | v
                    if p not in dist:
                        dist[p] = r
                        nxt.append(p)
        frontier = nxt
    return dist


def _greedy_letters(fs: FactorSet, u: int, dist: dict[int, int], d: int) -> list[int]:
    """Lexicographically least appended-letter sequence realizing a walk of
    exactly d edges from ({u}, u) to a target, guided by backward distances."""
    n = fs.order
    wmask = (1 << n) - 1
    sm = fs.members
    cov, v = 1 << u, u
    letters = []
    for r in range(d, 0, -1):
        for b in (0, 1):
            x = _succ(v, b, wmask)
            if not (sm >> x) & 1:
                continue
            nst = ((cov | (1 << x)) << n) | x
            if dist.get(nst) == r - 1:
                letters.append(b)
                cov |= 1 << x
                v = x
                break
        else:
            raise AssertionError("witness reconstruction lost the target")
    return letters


def shortest_witness(fs: FactorSet) -> WitnessResult:
    """Shortest ordinary witness, lexicographically least among minimal.

    Breadth-first search over (covered, current-vertex) states started from
    every single-member state; a walk of d edges corresponds to a witness of
    length order + d.
    """
    if fs.is_empty():
        raise EmptySet("no word witnesses the empty set")
    n = fs.order
    d = _min_cover_depth(fs)
    if d is None:
        return WitnessResult(False)
    sm = fs.members
    targets = [(sm << n) | v for v in fs.codes()]
    dist = _backward_dist(fs, targets, d)
    for u in fs.codes():
        if dist.get(((1 << u) << n) | u) == d:
            break
    else:
        raise AssertionError("no start attains the BFS minimum")
    letters = _greedy_letters(fs, u, dist, d)
    code = u
    for b in letters:
        code = (code << 1) | b
    return WitnessResult(True, n + d, Word(n + d, code))


def shortest_circular_witness(fs: FactorSet) -> WitnessResult:
    """Shortest circular witness, lexicographically least among minimal.

    The witness of length d is a closed covering walk of d edges in the
    overlap graph; searched per start vertex. Reported length is that of the
    circular word itself.
    """
    if fs.is_empty():
        raise EmptySet("no word witnesses the empty set")
    n = fs.order
    wmask = (1 << n) - 1
    sm = fs.members
    members = list(fs.codes())
    if len(members) == 1:
        v = members[0]
        if v == 0 or v == wmask:
            return WitnessResult(True, 1, Word(1, v & 1))
        return WitnessResult(False)

    best: dict[int, int] = {}
    for u in members:
        du = _closed_cover_depth(fs, u)
        if du is not None:
            best[u] = du
    if not best:
        return WitnessResult(False)
    d = min(best.values())
    candidates = []
    for u in sorted(c for c, du in best.items() if du == d):
        dist = _backward_dist(fs, [(sm << n) | u], d)
        letters = _greedy_letters(fs, u, dist, d)
        code = u
        for b in letters:
            code = (code << 1) | b
        full = Word(n + d, code)
        candidates.append(full.segment(1, d))
    witness = min(candidates, key=lambda w: w.code)
    return WitnessResult(True, d, witness)


def _closed_cover_depth(fs: FactorSet, u: int) -> int | None:
    """Min closed-walk length from u covering the whole set, or None."""
    n = fs.order
    wmask = (1 << n) - 1
    sm = fs.members
    start = ((1 << u) << n) | u
    goal = (sm << n) | u
    seen = {start}
    frontier = [start]
    d = 0
    while frontier:
        d += 1
        nxt = []
        for st in frontier:
            v = st & wmask
            cov = st >> n
            for b in (0, 1):
                x = _succ(v, b, wmask)
                if not (sm >> x) & 1:
                    continue
                nst = ((cov | (1 << x)) << n) | x
                if nst not in seen:
                    if nst == goal:
                        return d
                    seen.add(nst)
                    nxt.append(nst)
        frontier = nxt
    return None


# -- one order down: prefixes and suffixes ---------------------------------

def incident(fs: FactorSet) -> FactorSet:
    """Project a set of order n+1 to order n via prefixes and suffixes.

    Returns { t : t is the length-n prefix or suffix of some member }; any
    circular word witnessing the input witnesses this projection.
    """
    if fs.order < 2:
        raise ValueError("projection needs order >= 2")
    n = fs.order - 1
    mask = (1 << n) - 1
    members = 0
    for w in fs.codes():
        members |= 1 << (w >> 1)
        members |= 1 << (w & mask)
    return FactorSet(n, members)


# -- pairs, skeletons, nets ------------------------------------------------

def count_pairs(fs: FactorSet) -> int:
    """Number of x of length n-1 with both 0x and 1x in the set."""
    n = fs.order
    m = fs.members
    hi = 1 << (n - 1)
    return sum(1 for x in range(hi)
               if (m >> x) & 1 and (m >> (x | hi)) & 1)


def count_skeletons(fs: FactorSet) -> int:
    """Number of x of length n-1 with 0x, 1x, x0 and x1 all in the set."""
    n = fs.order
    m = fs.members
    hi = 1 << (n - 1)
    count = 0
    for x in range(hi):
        if ((m >> x) & 1 and (m >> (x | hi)) & 1
                and (m >> (x << 1)) & 1 and (m >> ((x << 1) | 1)) & 1):
            count += 1
    return count


def feasible_net_subsets(x: Word, fs: FactorSet) -> list[FactorSet]:
    """Candidate intersections, with the net of x, of circularly
    representable sets of order n+1 incident on ``fs``.

    The net of x is {0x0, 0x1, 1x0, 1x1} (order n+1). When the whole
    skeleton {0x, 1x, x0, x1} lies in the set, the seven feasible subsets
    are returned in a fixed order; otherwise membership of the skeleton
    words forces at most one subset, and an empty list marks a
    contradiction (some skeleton word demands an extension the others
    forbid).
    """
    n = fs.order
    if x.length != n - 1:
        raise ValueError(f"x must have length {n - 1}, got {x.length}")
    m = fs.members
    xc = x.code
    hi = 1 << (n - 1)
    in_0x = bool((m >> xc) & 1)
    in_1x = bool((m >> (xc | hi)) & 1)
    in_x0 = bool((m >> (xc << 1)) & 1)
    in_x1 = bool((m >> ((xc << 1) | 1)) & 1)

    c0x0 = xc << 1
    c0x1 = (xc << 1) | 1
    c1x0 = (1 << n) | (xc << 1)
    c1x1 = (1 << n) | (xc << 1) | 1

    def fset(codes: tuple[int, ...]) -> FactorSet:
        return FactorSet.from_codes(n + 1, codes)

    if in_0x and in_1x and in_x0 and in_x1:
        return [
            fset((c0x0, c1x1)),
            fset((c0x0, c0x1, c1x1)),
            fset((c0x0, c1x0, c1x1)),
            fset((c0x0, c0x1, c1x0, c1x1)),
            fset((c0x0, c0x1, c1x0)),
            fset((c0x1, c1x0)),
            fset((c0x1, c1x0, c1x1)),
        ]

    # forced case: a net word axb can occur iff both ax and xb are present
    forced = []
    if in_0x and in_x0:
        forced.append(c0x0)
    if in_0x and in_x1:
        forced.append(c0x1)
    if in_1x and in_x0:
        forced.append(c1x0)
    if in_1x and in_x1:
        forced.append(c1x1)
    # every present skeleton word must be extendable within the net
    if in_0x and not (in_x0 or in_x1):
        return []
    if in_1x and not (in_x0 or in_x1):
        return []
    if in_x0 and not (in_0x or in_1x):
        return []
    if in_x1 and not (in_0x or in_1x):
        return []
    return [fset(tuple(forced))]
