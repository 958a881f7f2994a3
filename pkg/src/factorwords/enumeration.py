"""Exhaustive enumeration of representable and circularly representable sets.

The search graph has nodes (S, u, v): a set S of length-n words together
with a length-n prefix u and suffix v. A node is valid when some word with
prefix u and suffix v has factor set exactly S; appending one letter maps
(S, u, v) to (S + {x}, u, x) where x drops the first letter of v and appends
the new one. Breadth-first search from the single-word nodes ({u}, u, u)
reaches exactly the valid nodes, and the depth of a node is the witness
length minus n.

The prefix u never changes along an edge, so the search shards into 2^n
independent scans over (S, v) pairs. Shards merge by elementwise minimum,
which is associative and commutative: results are identical for any worker
count. S at order n is a 2^n-bit integer, so a whole shard's state space
indexes an array of 2^(2^n + n) depths; that is the fast path for n <= 4,
while n = 5 falls back to dictionaries behind an explicit budget.

A set S is representable iff it appears in some valid node, with shortest
witness n + (first depth). It is circularly representable iff some closed
walk of length d >= 1 returns to its start vertex having covered exactly S;
the shortest circular witness is the least such d (a lone vertex needs a
self-loop, covered by a singleton rule). Brute-force scans over all words
provide an independent oracle for every statistic.
"""

from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import numpy as np

from .budget import Budget, BudgetMeter
from .factorsets import FactorSet
from .words import Word

ARRAY_MAX_ORDER = 4      # dense per-shard arrays up to here
HARD_MAX_ORDER = 5       # beyond is out of scope
UNSEEN = 255             # depth sentinel in uint8 arrays
CHECKPOINT_VERSION = 1
_CHUNK_BITS = 21         # brute-force scan chunk: 2^21 codes


@dataclass(frozen=True)
class SearchNode:
    """A search-graph node: accumulated factor set plus prefix and suffix."""

    covered: FactorSet
    prefix: Word
    suffix: Word


@dataclass(frozen=True)
class EnumerationResult:
    """Per-order summary of the enumeration.

    ``sw_histogram`` maps shortest-witness length to the number of sets
    attaining it; ``scw_histogram`` is the circular analogue. ``rep_sets``
    and ``circ_sets`` (membership bitmaps, ascending) are filled on request.
    """

    n: int
    circ_count: int
    rep_count: int
    nu: int
    mu: int
    longest_circ_witness: Word | None
    longest_witness: Word | None
    sw_histogram: dict[int, int]
    scw_histogram: dict[int, int]
    rep_sets: tuple[int, ...] | None = None
    circ_sets: tuple[int, ...] | None = None

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "circ_count": self.circ_count,
            "rep_count": self.rep_count,
            "nu": self.nu,
            "mu": self.mu,
            "longest_circ_witness": str(self.longest_circ_witness)
            if self.longest_circ_witness else None,
            "longest_witness": str(self.longest_witness)
            if self.longest_witness else None,
            "sw_histogram": {str(k): v for k, v in sorted(self.sw_histogram.items())},
            "scw_histogram": {str(k): v for k, v in sorted(self.scw_histogram.items())},
        }


# -- per-shard scans ---------------------------------------------------------

def _scan_shard(n: int, u: int):
    """Layered BFS over one shard; returns (depth, set_first, circ_first).

    depth[(S << n) | v] is the BFS depth of state (S, v), set_first[S] the
    first depth at which S appears, circ_first[S] the first depth >= 1 of a
    state (S, u) closing a walk at the shard prefix.
    """
    width = 1 << n
    wmask = width - 1
    depth = np.full((1 << width) << n, UNSEEN, np.uint8)
    set_first = np.full(1 << width, UNSEEN, np.uint8)
    circ_first = np.full(1 << width, UNSEEN, np.uint8)
    start = ((1 << u) << n) | u
    depth[start] = 0
    set_first[1 << u] = 0
    frontier = np.array([start], dtype=np.int64)
    d = 0
    while frontier.size:
        d += 1
        v = frontier & wmask
        cov = frontier >> n
        nxt = []
        for b in (0, 1):
            s = ((v << 1) & wmask) | b
            nxt.append(((cov | (np.int64(1) << s)) << n) | s)
        ns = np.unique(np.concatenate(nxt))
        ns = ns[depth[ns] == UNSEEN]
        if ns.size == 0:
            break
        depth[ns] = d
        cs = ns >> n
        m = set_first[cs] == UNSEEN
        set_first[cs[m]] = d
        m = ((ns & wmask) == u) & (circ_first[cs] == UNSEEN)
        circ_first[cs[m]] = d
        frontier = ns
    return depth, set_first, circ_first


def _scan_shard_worker(args):
    n, u = args
    _, set_first, circ_first = _scan_shard(n, u)
    return u, set_first.tobytes(), circ_first.tobytes()


def _scan_shard_sparse(n: int, u: int, meter: BudgetMeter):
    """Dictionary-backed shard scan for orders past the dense-array limit."""
    width = 1 << n
    wmask = width - 1
    start = ((1 << u) << n) | u
    seen = {start}
    set_first = {1 << u: 0}
    circ_first: dict[int, int] = {}
    frontier = [start]
    d = 0
    charged = 0
    while frontier:
        d += 1
        nxt = []
        for st in frontier:
            v = st & wmask
            cov = st >> n
            for b in (0, 1):
                s = ((v << 1) & wmask) | b
                nst = ((cov | (1 << s)) << n) | s
                if nst not in seen:
                    seen.add(nst)
                    cs = nst >> n
                    if cs not in set_first:
                        set_first[cs] = d
                    if s == u and cs not in circ_first:
                        circ_first[cs] = d
                    nxt.append(nst)
        frontier = nxt
        meter.note(shard=u, frontier_depth=d, states=len(seen))
        meter.check_time(f"shard {u} depth {d}")
        # re-charge the approximate cost of the visited set and frontier
        approx = (len(seen) + len(frontier)) * 96
        meter.release_memory(charged)
        meter.charge_memory(approx, f"shard {u} depth {d}")
        charged = approx
    meter.release_memory(charged)
    return set_first, circ_first


# -- streaming valid nodes ---------------------------------------------------

def bfs_valid_nodes(n: int, budget: Budget | None = None):
    """Yield every valid node exactly once as (SearchNode, depth).

    Nodes come out shard by shard (prefix ascending), in breadth-first
    layers, states ascending within a layer.
    """
    _check_order(n, budget)
    budget = budget or Budget.default()
    meter = BudgetMeter(budget)
    width = 1 << n
    wmask = width - 1
    for u in range(width):
        start = ((1 << u) << n) | u
        seen = {start}
        frontier = [start]
        d = 0
        charged = 0
        pre = Word(n, u)
        yield SearchNode(FactorSet(n, 1 << u), pre, pre), 0
        while frontier:
            d += 1
            nxt = []
            for st in frontier:
                v = st & wmask
                cov = st >> n
                for b in (0, 1):
                    s = ((v << 1) & wmask) | b
                    nst = ((cov | (1 << s)) << n) | s
                    if nst not in seen:
                        seen.add(nst)
                        nxt.append(nst)
            nxt.sort()
            for st in nxt:
                yield SearchNode(FactorSet(n, st >> n), pre, Word(n, st & wmask)), d
            frontier = nxt
            meter.note(shard=u, frontier_depth=d, states=len(seen))
            meter.check_time(f"shard {u} depth {d}")
            approx = (len(seen) + len(frontier)) * 96
            meter.release_memory(charged)
            meter.charge_memory(approx, f"shard {u} depth {d}")
            charged = approx
        meter.release_memory(charged)


def bfs_with_parents(n: int, budget: Budget | None = None):
    """Run the search keeping back-pointers for witness reconstruction.

    Returns (nodes, parents): nodes is a list of (SearchNode, depth);
    parents maps each node to (parent node, appended letter), or to None
    for the depth-0 roots.
    """
    _check_order(n, budget)
    budget = budget or Budget.default()
    meter = BudgetMeter(budget)
    width = 1 << n
    wmask = width - 1
    nodes: list[tuple[SearchNode, int]] = []
    parents: dict[SearchNode, tuple[SearchNode, int] | None] = {}
    for u in range(width):
        pre = Word(n, u)
        start = ((1 << u) << n) | u
        node_of = {start: SearchNode(FactorSet(n, 1 << u), pre, pre)}
        parents[node_of[start]] = None
        nodes.append((node_of[start], 0))
        frontier = [start]
        d = 0
        while frontier:
            d += 1
            nxt = []
            for st in frontier:
                v = st & wmask
                cov = st >> n
                for b in (0, 1):
                    s = ((v << 1) & wmask) | b
                    nst = ((cov | (1 << s)) << n) | s
                    if nst not in node_of:
                        child = SearchNode(FactorSet(n, nst >> n), pre, Word(n, s))
                        node_of[nst] = child
                        parents[child] = (node_of[st], b)
                        nodes.append((child, d))
                        nxt.append(nst)
            frontier = nxt
            meter.note(shard=u, frontier_depth=d, states=len(node_of))
            meter.check_time(f"shard {u} depth {d}")
    return nodes, parents


def witness_at_depth(node: SearchNode,
                     parents: dict[SearchNode, tuple[SearchNode, int] | None]) -> Word:
    """Reconstruct a witness word for a node emitted by the search."""
    if node not in parents:
        raise ValueError("unknown node: not produced by this search")
    letters: list[int] = []
    cur = node
    while True:
        entry = parents[cur]
        if entry is None:
            break
        cur, letter = entry
        letters.append(letter)
    w = cur.prefix
    for b in reversed(letters):
        w = Word(w.length + 1, (w.code << 1) | b)
    return w


# -- full enumeration --------------------------------------------------------

def _check_order(n: int, budget: Budget | None) -> None:
    if n < 1:
        raise ValueError("order must be positive")
    if n > HARD_MAX_ORDER:
        raise ValueError(f"orders beyond {HARD_MAX_ORDER} are out of scope")
    if n == HARD_MAX_ORDER and budget is None:
        raise ValueError(
            "order 5 is a stretch run: pass an explicit Budget to opt in")


def enumerate_representable(n: int, budget: Budget | None = None,
                            collect_sets: bool = False,
                            checkpoint_path: str | None = None) -> EnumerationResult:
    """Enumerate all non-empty (circularly) representable sets of order n.

    Aggregates the sharded search: counts, the maxima mu/nu of the shortest
    (circular) witness lengths, histograms, and one extremal witness per
    flavor (the lexicographically least among the minimal-length witnesses
    of maximally-hard sets). With ``checkpoint_path`` set, per-shard results
    are appended to a restartable line-delimited file.
    """
    _check_order(n, budget)
    budget = budget or Budget.default()
    meter = BudgetMeter(budget)
    width = 1 << n

    if n > ARRAY_MAX_ORDER:
        return _enumerate_sparse(n, meter, collect_sets, checkpoint_path)

    shard_bytes = ((1 << width) << n) + 2 * (1 << width)
    meter.charge_memory(shard_bytes * min(budget.workers, width) + 2 * (1 << width),
                        "shard arrays")

    done: dict[int, tuple[bytes, bytes]] = {}
    if checkpoint_path:
        done = _load_checkpoint(checkpoint_path, n, width)
    pending = [u for u in range(width) if u not in done]

    if budget.workers > 1 and len(pending) > 1:
        with ProcessPoolExecutor(max_workers=min(budget.workers, len(pending))) as ex:
            for u, sf, cf in ex.map(_scan_shard_worker, [(n, u) for u in pending]):
                done[u] = (sf, cf)
                if checkpoint_path:
                    _append_checkpoint(checkpoint_path, n, u, sf, cf)
                meter.check_time(f"shard {u}")
    else:
        for u in pending:
            _, sf, cf = _scan_shard(n, u)
            done[u] = (sf.tobytes(), cf.tobytes())
            if checkpoint_path:
                _append_checkpoint(checkpoint_path, n, u, *done[u])
            meter.note(completed_shards=len(done))
            meter.check_time(f"shard {u}")

    gset = np.full(1 << width, UNSEEN, np.uint8)
    gcirc = np.full(1 << width, UNSEEN, np.uint8)
    for u in sorted(done):
        sf, cf = done[u]
        np.minimum(gset, np.frombuffer(sf, np.uint8), out=gset)
        np.minimum(gcirc, np.frombuffer(cf, np.uint8), out=gcirc)
    # lone vertices with a self-loop: the one-letter circular words
    for u in (0, width - 1):
        if gcirc[1 << u] > 1:
            gcirc[1 << u] = 1

    rep = gset != UNSEEN
    circ = gcirc != UNSEEN
    mu = n + int(gset[rep].max())
    nu = int(gcirc[circ].max())

    sw_hist: dict[int, int] = {}
    for dval, cnt in zip(*np.unique(gset[rep], return_counts=True)):
        sw_hist[n + int(dval)] = int(cnt)
    scw_hist: dict[int, int] = {}
    for dval, cnt in zip(*np.unique(gcirc[circ], return_counts=True)):
        scw_hist[int(dval)] = int(cnt)

    longest = _lexleast_extremal(n, gset, mu - n, circular=False)
    longest_circ = _lexleast_extremal(n, gcirc, nu, circular=True)

    return EnumerationResult(
        n=n,
        circ_count=int(circ.sum()),
        rep_count=int(rep.sum()),
        nu=nu,
        mu=mu,
        longest_circ_witness=longest_circ,
        longest_witness=longest,
        sw_histogram=sw_hist,
        scw_histogram=scw_hist,
        rep_sets=tuple(int(s) for s in np.flatnonzero(rep)) if collect_sets else None,
        circ_sets=tuple(int(s) for s in np.flatnonzero(circ)) if collect_sets else None,
    )


def _enumerate_sparse(n: int, meter: BudgetMeter, collect_sets: bool,
                      checkpoint_path: str | None) -> EnumerationResult:
    width = 1 << n
    gset: dict[int, int] = {}
    gcirc: dict[int, int] = {}
    for u in range(width):
        sf, cf = _scan_shard_sparse(n, u, meter)
        for s, d in sf.items():
            if gset.get(s, UNSEEN) > d:
                gset[s] = d
        for s, d in cf.items():
            if gcirc.get(s, UNSEEN) > d:
                gcirc[s] = d
        meter.note(completed_shards=u + 1)
        if checkpoint_path:
            _append_checkpoint(checkpoint_path, n, u,
                               json.dumps(sorted(sf.items())).encode(),
                               json.dumps(sorted(cf.items())).encode(), sparse=True)
    for u in (0, width - 1):
        if gcirc.get(1 << u, UNSEEN) > 1:
            gcirc[1 << u] = 1
    mu = n + max(gset.values())
    nu = max(gcirc.values())
    sw_hist: dict[int, int] = {}
    for d in gset.values():
        sw_hist[n + d] = sw_hist.get(n + d, 0) + 1
    scw_hist: dict[int, int] = {}
    for d in gcirc.values():
        scw_hist[d] = scw_hist.get(d, 0) + 1
    return EnumerationResult(
        n=n, circ_count=len(gcirc), rep_count=len(gset), nu=nu, mu=mu,
        longest_circ_witness=None, longest_witness=None,
        sw_histogram=sw_hist, scw_histogram=scw_hist,
        rep_sets=tuple(sorted(gset)) if collect_sets else None,
        circ_sets=tuple(sorted(gcirc)) if collect_sets else None,
    )


# -- extremal witness reconstruction ----------------------------------------

def _lexleast_extremal(n: int, firsts: np.ndarray, d: int, circular: bool) -> Word:
    """Lexicographically least witness of extremal length.

    firsts holds, per set, the globally minimal depth; target sets are those
    attaining d. Shards are rescanned in ascending prefix order; the first
    shard containing a target state yields the least witness prefix, and a
    backward distance table makes the greedy letter choice exact.
    """
    width = 1 << n
    target = firsts == d
    for u in range(width):
        depth, set_first, circ_first = _scan_shard(n, u)
        if circular:
            hits = np.flatnonzero((circ_first == d) & target)
            if hits.size == 0:
                continue
            states = (hits.astype(np.int64) << n) | u
        else:
            states = np.flatnonzero(depth == d).astype(np.int64)
            states = states[target[states >> n]]
            if states.size == 0:
                continue
        dist = _backward_dist_shard(n, states, d)
        letters = _greedy_letters_shard(n, u, dist, d)
        bits = [(u >> (n - 1 - i)) & 1 for i in range(n)] + letters
        if circular:
            bits = bits[:d]
        code = 0
        for b in bits:
            code = (code << 1) | b
        return Word(len(bits), code)
    raise AssertionError("no shard contains an extremal witness state")


def _backward_dist_shard(n: int, targets: np.ndarray, levels: int) -> np.ndarray:
    """Min steps to any target, over the whole shard state space."""
    wmask = (1 << n) - 1
    dist = np.full((1 << (1 << n)) << n, UNSEEN, np.uint8)
    frontier = np.unique(targets)
    dist[frontier] = 0
    for r in range(1, levels + 1):
        x = frontier & wmask
        cov = frontier >> n
        cands = []
        for b in (0, 1):
            v = (x >> 1) | (np.int64(b) << (n - 1))
            vbit = np.int64(1) << v
            keep = (cov & vbit) != 0
            cands.append(((cov << n) | v)[keep])
            xbit = np.int64(1) << x
            cov2 = cov & ~xbit
            keep = ((cov2 & vbit) != 0) & (v != x)
            cands.append(((cov2 << n) | v)[keep])
        ns = np.unique(np.concatenate(cands))
        ns = ns[dist[ns] == UNSEEN]
        if ns.size == 0:
            break
        dist[ns] = r
        frontier = ns
    return dist


def _greedy_letters_shard(n: int, u: int, dist: np.ndarray, d: int) -> list[int]:
    wmask = (1 << n) - 1
    st = ((1 << u) << n) | u
    if dist[st] != d:
        raise AssertionError("extremal start state does not attain the depth")
    cov, v = 1 << u, u
    letters = []
    for r in range(d, 0, -1):
        for b in (0, 1):
            s = ((v << 1) & wmask) | b
            nst = ((cov | (1 << s)) << n) | s
            if dist[nst] == r - 1:
                letters.append(b)
                cov |= 1 << s
                v = s
                break
        else:
            raise AssertionError("greedy reconstruction lost the target")
    return letters


# -- checkpoints -------------------------------------------------------------

def _append_checkpoint(path: str, n: int, u: int, sf: bytes, cf: bytes,
                       sparse: bool = False) -> None:
    import base64
    import os
    record: dict = {"record": "shard", "u": u}
    if sparse:
        record["set_first"] = json.loads(sf)
        record["circ_first"] = json.loads(cf)
    else:
        record["set_first_b64"] = base64.b64encode(sf).decode()
        record["circ_first_b64"] = base64.b64encode(cf).decode()
    new = not os.path.exists(path)
    with open(path, "a", encoding="utf-8") as fh:
        if new:
            fh.write(json.dumps({"record": "header",
                                 "version": CHECKPOINT_VERSION, "n": n}) + "\n")
        fh.write(json.dumps(record) + "\n")


def _load_checkpoint(path: str, n: int, width: int) -> dict[int, tuple[bytes, bytes]]:
    import base64
    import os
    if not os.path.exists(path):
        return {}
    done: dict[int, tuple[bytes, bytes]] = {}
    with open(path, encoding="utf-8") as fh:
        header = json.loads(fh.readline())
        if header.get("version") != CHECKPOINT_VERSION or header.get("n") != n:
            raise ValueError(f"checkpoint {path} does not match this run")
        for line in fh:
            rec = json.loads(line)
            if rec.get("record") != "shard":
                continue
            u = rec["u"]
            if not 0 <= u < width:
                raise ValueError(f"checkpoint shard {u} out of range")
            done[u] = (base64.b64decode(rec["set_first_b64"]),
                       base64.b64decode(rec["circ_first_b64"]))
    return done


# -- brute-force oracle -------------------------------------------------------

def _linear_chunk_sets(n: int, ell: int, start: int, stop: int) -> np.ndarray:
    """Distinct factor-set bitmaps over codes [start, stop) of length ell."""
    mask = (1 << n) - 1
    codes = np.arange(start, stop, dtype=np.uint32)
    bm = np.zeros(codes.size, np.uint32)
    one = np.uint32(1)
    for i in range(ell - n + 1):
        bm |= one << ((codes >> (ell - n - i)) & mask).astype(np.uint32)
    return np.unique(bm)


def _circular_chunk_sets(n: int, ell: int, start: int, stop: int) -> np.ndarray:
    """Distinct cyclic factor-set bitmaps over codes [start, stop), ell >= n."""
    mask = np.uint32((1 << n) - 1)
    codes = np.arange(start, stop, dtype=np.uint32)
    bm = np.zeros(codes.size, np.uint32)
    one = np.uint32(1)
    for p in range(ell):
        if p + n <= ell:
            w = (codes >> (ell - n - p)) & mask
        else:
            k = p + n - ell
            w = ((codes & np.uint32((1 << (n - k)) - 1)) << k) | (codes >> (ell - k))
        bm |= one << w
    return np.unique(bm)


def _chunk_worker(args):
    kind, n, ell, start, stop = args
    fn = _linear_chunk_sets if kind == "lin" else _circular_chunk_sets
    return kind, ell, fn(n, ell, start, stop)


def _tiny_circular_sets(n: int, ell: int) -> list[int]:
    """Cyclic factor sets of the 2^ell circular words shorter than n."""
    out = []
    for code in range(1 << ell):
        bits = [(code >> (ell - 1 - i)) & 1 for i in range(ell)]
        bm = 0
        for p in range(ell):
            w = 0
            for j in range(n):
                w = (w << 1) | bits[(p + j) % ell]
            bm |= 1 << w
        out.append(bm)
    return out


def brute_force_enumerate(n: int, max_len: int, budget: Budget | None = None,
                          collect_sets: bool = False) -> EnumerationResult:
    """Independent oracle: scan every word and circular word up to max_len.

    Exact only when max_len is at least the true mu/nu for the order; the
    caller picks max_len. Scans are chunked over contiguous code ranges and
    merged by set-union, so results do not depend on the worker count.
    """
    if not 1 <= n <= ARRAY_MAX_ORDER:
        raise ValueError(f"brute force supports orders 1..{ARRAY_MAX_ORDER}")
    if max_len < n:
        raise ValueError("max_len must be at least the order")
    budget = budget or Budget.default()
    meter = BudgetMeter(budget)
    meter.charge_memory((1 << _CHUNK_BITS) * 16 * min(budget.workers, 4), "scan buffers")
    width = 1 << n

    first_lin = np.zeros(1 << width, np.int64)
    first_circ = np.zeros(1 << width, np.int64)
    for ell in range(1, min(n, max_len + 1)):
        for bm in _tiny_circular_sets(n, ell):
            if first_circ[bm] == 0:
                first_circ[bm] = ell

    tasks = []
    for ell in range(n, max_len + 1):
        for start in range(0, 1 << ell, 1 << _CHUNK_BITS):
            stop = min(start + (1 << _CHUNK_BITS), 1 << ell)
            tasks.append(("lin", n, ell, start, stop))
            tasks.append(("circ", n, ell, start, stop))

    per_len: dict[tuple[str, int], list[np.ndarray]] = {}
    if budget.workers > 1:
        with ProcessPoolExecutor(max_workers=budget.workers) as ex:
            for kind, ell, sets in ex.map(_chunk_worker, tasks, chunksize=4):
                per_len.setdefault((kind, ell), []).append(sets)
                meter.check_time(f"{kind} length {ell}")
    else:
        for task in tasks:
            kind, ell, sets = _chunk_worker(task)
            per_len.setdefault((kind, ell), []).append(sets)
            meter.note(scanned=f"{kind} length {ell}")
            meter.check_time(f"{kind} length {ell}")

    for ell in range(n, max_len + 1):
        for kind, firsts in (("lin", first_lin), ("circ", first_circ)):
            parts = per_len.get((kind, ell))
            if not parts:
                continue
            sets = np.unique(np.concatenate(parts))
            fresh = sets[firsts[sets] == 0]
            firsts[fresh] = ell

    rep = first_lin != 0
    circ = first_circ != 0
    mu = int(first_lin.max())
    nu = int(first_circ.max())
    sw_hist = {int(l): int(c) for l, c in
               zip(*np.unique(first_lin[rep], return_counts=True))}
    scw_hist = {int(l): int(c) for l, c in
                zip(*np.unique(first_circ[circ], return_counts=True))}

    longest = _bf_lexleast(n, mu, first_lin, circular=False)
    longest_circ = _bf_lexleast(n, nu, first_circ, circular=True)

    return EnumerationResult(
        n=n, circ_count=int(circ.sum()), rep_count=int(rep.sum()),
        nu=nu, mu=mu,
        longest_circ_witness=longest_circ, longest_witness=longest,
        sw_histogram=sw_hist, scw_histogram=scw_hist,
        rep_sets=tuple(int(s) for s in np.flatnonzero(rep)) if collect_sets else None,
        circ_sets=tuple(int(s) for s in np.flatnonzero(circ)) if collect_sets else None,
    )


def _bf_lexleast(n: int, ell: int, firsts: np.ndarray, circular: bool) -> Word:
    """Least code of length ell whose factor set is first witnessed at ell."""
    target = firsts == ell
    if circular and ell < n:
        for code, bm in enumerate(_tiny_circular_sets(n, ell)):
            if target[bm]:
                return Word(ell, code)
        raise AssertionError("no extremal circular word found")
    mask = (1 << n) - 1
    for start in range(0, 1 << ell, 1 << _CHUNK_BITS):
        stop = min(start + (1 << _CHUNK_BITS), 1 << ell)
        codes = np.arange(start, stop, dtype=np.uint32)
        bm = np.zeros(codes.size, np.uint32)
        one = np.uint32(1)
        if circular:
            for p in range(ell):
                if p + n <= ell:
                    w = (codes >> (ell - n - p)) & mask
                else:
                    k = p + n - ell
                    w = (((codes & np.uint32((1 << (n - k)) - 1)) << k)
                         | (codes >> (ell - k)))
                bm |= one << w
        else:
            for i in range(ell - n + 1):
                bm |= one << ((codes >> (ell - n - i)) & np.uint32(mask))
        hits = np.flatnonzero(target[bm])
        if hits.size:
            return Word(ell, start + int(hits[0]))
    raise AssertionError("no extremal word found at the extremal length")
