"""Counting distinct factor sets of fixed-length words.

T(t, n) is the number of distinct sets of length-n factors over all 2^t
binary words of length t. Brute force computes it by scanning every word;
for n <= t < 2n a closed form does the same job:

    T(t, n) = 2^t - sum_{i=1}^{t-n+1} (i - 1) * L(i)

with L(i) the number of binary Lyndon words of length i. The closed form
rests on a characterization of when two distinct equal-length words share
their factor set: for t = n + k with n >= k + 1 this happens exactly when
they have the same minimal period p <= k + 1 and conjugate roots, and then
exactly p words share the set. Both directions are checked exhaustively
here, as is the t = 2n boundary case, where equality of periods and root
conjugacy is conjectural and words of large period empirically factor as
u v 01 v^R u against u v 10 v^R u with u a palindrome.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations

from .budget import Budget, BudgetExceededError, BudgetMeter
from .words import Word, are_root_conjugate, lyndon_count, lyndon_words, period

BRUTE_MAX_T = 24
_CHUNK_BITS = 18


class OutOfValidityRegion(ValueError):
    """The closed form only covers n <= t < 2n."""


@dataclass(frozen=True)
class TCell:
    """One table entry: the count of distinct factor sets and how it was
    obtained ("brute", "closed", or "both" when the two agree)."""

    t: int
    n: int
    value: int
    method: str


@dataclass(frozen=True)
class EqualFactorPair:
    """Two distinct equal-length words with identical factor sets."""

    w: Word
    w2: Word
    n: int
    period_w: int
    period_w2: int
    root_conjugate: bool


# -- grouping words by factor set ---------------------------------------------

def _factor_bitmap(code: int, t: int, n: int) -> int:
    bm = 0
    mask = (1 << n) - 1
    for sh in range(t - n, -1, -1):
        bm |= 1 << ((code >> sh) & mask)
    return bm


def group_words_by_factors(t: int, n: int,
                           budget: Budget | None = None) -> dict[int, list[int]]:
    """Map factor-set bitmap -> ascending codes of the words producing it."""
    if n < 1 or t < n:
        raise ValueError("need 1 <= n <= t")
    if t > BRUTE_MAX_T:
        raise ValueError(f"t beyond {BRUTE_MAX_T} is out of budget")
    meter = BudgetMeter(budget or Budget.default())
    meter.charge_memory((1 << t) * 64, f"groups for t={t}")
    groups: dict[int, list[int]] = {}
    mask = (1 << n) - 1
    shifts = range(t - n, -1, -1)
    for code in range(1 << t):
        bm = 0
        for sh in shifts:
            bm |= 1 << ((code >> sh) & mask)
        groups.setdefault(bm, []).append(code)
    return groups


def _count_chunk(args) -> list[int]:
    t, n, start, stop = args
    mask = (1 << n) - 1
    shifts = range(t - n, -1, -1)
    seen = set()
    add = seen.add
    for code in range(start, stop):
        bm = 0
        for sh in shifts:
            bm |= 1 << ((code >> sh) & mask)
        add(bm)
    return sorted(seen)


def count_T_bruteforce(t: int, n: int, budget: Budget | None = None) -> TCell:
    """T(t, n) by scanning all 2^t words (chunked; worker-count independent)."""
    if n < 1:
        raise ValueError("factor length must be positive")
    if t < n:
        raise ValueError(f"words of length {t} have no length-{n} factors")
    if t > BRUTE_MAX_T:
        raise ValueError(f"t beyond {BRUTE_MAX_T} is out of budget")
    budget = budget or Budget.default()
    meter = BudgetMeter(budget)
    meter.charge_memory(min(1 << t, 1 << _CHUNK_BITS) * 64 * budget.workers,
                        f"T({t},{n}) scan")
    tasks = [(t, n, start, min(start + (1 << _CHUNK_BITS), 1 << t))
             for start in range(0, 1 << t, 1 << _CHUNK_BITS)]
    seen: set[int] = set()
    if budget.workers > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=budget.workers) as ex:
            for part in ex.map(_count_chunk, tasks):
                seen.update(part)
                meter.check_time(f"T({t},{n})")
    else:
        for task in tasks:
            seen.update(_count_chunk(task))
            meter.check_time(f"T({t},{n})")
    return TCell(t, n, len(seen), "brute")


def count_T_closed(t: int, n: int) -> TCell:
    """T(t, n) for n <= t < 2n via Lyndon-word counts, exactly."""
    if not n <= t < 2 * n:
        raise OutOfValidityRegion(f"closed form needs n <= t < 2n, got t={t} n={n}")
    value = (1 << t) - sum((i - 1) * lyndon_count(i) for i in range(1, t - n + 2))
    return TCell(t, n, value, "closed")


# -- equal-factor structure -----------------------------------------------------

def equal_factor_pairs(t: int, n: int,
                       budget: Budget | None = None) -> list[EqualFactorPair]:
    """All unordered pairs of distinct words sharing a factor set, annotated
    with periods and root conjugacy; ordered by (first, second) code."""
    groups = group_words_by_factors(t, n, budget)
    out = []
    for bm in sorted(groups):
        codes = groups[bm]
        if len(codes) < 2:
            continue
        ws = [Word(t, c) for c in codes]
        pis = {w: period(w).period for w in ws}
        for a, b in combinations(ws, 2):
            out.append(EqualFactorPair(
                w=a, w2=b, n=n,
                period_w=pis[a], period_w2=pis[b],
                root_conjugate=are_root_conjugate(a, b)))
    return out


@dataclass(frozen=True)
class Theorem1Report:
    """Exhaustive two-directional check of the equal-factor-set
    characterization at one (t, n)."""

    t: int
    n: int
    k: int
    in_region: bool
    forward_ok: bool
    backward_ok: bool
    nontrivial_classes: int
    backward_classes: int
    counterexamples: tuple[dict, ...]

    @property
    def passed(self) -> bool:
        return self.forward_ok and self.backward_ok

    def to_json_dict(self) -> dict:
        return {
            "t": self.t, "n": self.n, "k": self.k,
            "in_region": self.in_region,
            "forward_ok": self.forward_ok,
            "backward_ok": self.backward_ok,
            "nontrivial_classes": self.nontrivial_classes,
            "backward_classes": self.backward_classes,
            "passed": self.passed,
            "counterexamples": list(self.counterexamples),
        }


_COUNTEREXAMPLE_CAP = 20


def check_theorem1(t: int, n: int, allow_out_of_region: bool = False,
                   budget: Budget | None = None) -> Theorem1Report:
    """Verify both directions of the characterization at (t, n).

    Forward: every pair of distinct words with equal factor sets has equal
    minimal periods <= k+1 (k = t-n) and conjugate roots. Backward: for
    every p <= k+1 and every Lyndon word r of length p, the length-t windows
    of the periodic repetition of r form a class of exactly p words, all
    with period p, pairwise root-conjugate, with one common factor set; and
    these classes are exactly the non-singleton groups.

    Outside the region n >= k+1 the claim is not made; failures found there
    with allow_out_of_region are reported with in_region=False.
    """
    if n < 1 or t < n:
        raise ValueError("need 1 <= n <= t")
    k = t - n
    in_region = n >= k + 1
    if not in_region and not allow_out_of_region:
        raise OutOfValidityRegion(
            f"characterization needs n >= k+1 (t={t}, n={n}, k={k}); "
            "pass allow_out_of_region=True to scan anyway")

    groups = group_words_by_factors(t, n, budget)
    counterexamples: list[dict] = []
    nontrivial = {bm: codes for bm, codes in groups.items() if len(codes) > 1}

    forward_ok = True
    for bm in sorted(nontrivial):
        ws = [Word(t, c) for c in nontrivial[bm]]
        pis = [period(w).period for w in ws]
        for (a, pa), (b, pb) in combinations(zip(ws, pis), 2):
            bad = pa != pb or pa > k + 1 or not are_root_conjugate(a, b)
            if bad:
                forward_ok = False
                if len(counterexamples) < _COUNTEREXAMPLE_CAP:
                    counterexamples.append({
                        "direction": "forward", "words": [str(a), str(b)],
                        "periods": [pa, pb],
                        "root_conjugate": are_root_conjugate(a, b)})

    backward_ok = True
    backward: set[frozenset[int]] = set()
    for p in range(1, k + 2):
        for r in lyndon_words(p):
            ext = r.repeated_to(t + p)
            cls = {ext.segment(j + 1, j + t) for j in range(p)}
            if p > 1:
                backward.add(frozenset(w.code for w in cls))
            if not in_region:
                continue
            fsets = {_factor_bitmap(w.code, t, n) for w in cls}
            ok = (len(cls) == p
                  and len(fsets) == 1
                  and all(period(w).period == p for w in cls)
                  and all(are_root_conjugate(a, b) for a, b in combinations(cls, 2)))
            if not ok:
                backward_ok = False
                if len(counterexamples) < _COUNTEREXAMPLE_CAP:
                    counterexamples.append({
                        "direction": "backward", "root": str(r),
                        "class": sorted(str(w) for w in cls)})
    if in_region:
        found = {frozenset(codes) for codes in nontrivial.values()}
        if found != backward:
            backward_ok = False
            counterexamples.append({
                "direction": "backward",
                "note": "period classes and equal-factor classes differ",
                "only_in_groups": len(found - backward),
                "only_in_classes": len(backward - found)})

    return Theorem1Report(
        t=t, n=n, k=k, in_region=in_region,
        forward_ok=forward_ok, backward_ok=backward_ok,
        nontrivial_classes=len(nontrivial), backward_classes=len(backward),
        counterexamples=tuple(counterexamples))


def counterexample_family(k: int) -> tuple[Word, Word, int, int]:
    """The boundary family showing the region constraint is needed:
    x = 0^k 1 0^(k-2) and y = 0^(k-1) 1 0^(k-1), of length t = 2k-1, share
    their length-(k-1) factor sets but have periods k+1 and k."""
    if k < 2:
        raise ValueError("the family needs k >= 2")
    x = Word.from_text("0" * k + "1" + "0" * (k - 2))
    y = Word.from_text("0" * (k - 1) + "1" + "0" * (k - 1))
    return x, y, k + 1, k


# -- the t = 2n boundary ---------------------------------------------------------

@dataclass(frozen=True)
class Conjecture2nReport:
    """Exhaustive scan of equal-factor pairs at word length t = 2n.

    The conjecture proper: equal periods and root conjugacy for every pair.
    For pairs with period above n+1, the structural observation that the
    pair factors as u v 01 v^R u vs u v 10 v^R u (u a nonempty palindrome,
    v nonempty) is tested; factorizations and any misses of the tentative
    period law period == n + |u| are reported as findings, not failures.
    """

    n: int
    t: int
    pair_count: int
    nontrivial_classes: int
    period_violations: tuple[dict, ...]
    conjugacy_violations: tuple[dict, ...]
    high_period_pairs: tuple[dict, ...]
    shape_misses: tuple[dict, ...]
    period_law_misses: tuple[dict, ...]

    @property
    def passed(self) -> bool:
        return not self.period_violations and not self.conjugacy_violations

    def to_json_dict(self) -> dict:
        return {
            "n": self.n, "t": self.t,
            "pair_count": self.pair_count,
            "nontrivial_classes": self.nontrivial_classes,
            "period_violations": list(self.period_violations),
            "conjugacy_violations": list(self.conjugacy_violations),
            "high_period_pairs": list(self.high_period_pairs),
            "shape_misses": list(self.shape_misses),
            "period_law_misses": list(self.period_law_misses),
            "passed": self.passed,
        }


def _shape_factorizations(x: Word, y: Word, n: int) -> list[dict]:
    """All splits x = u v s v^R u, y = u v s' v^R u with {s, s'} = {01, 10},
    u a nonempty palindrome, v nonempty."""
    out = []
    sx, sy = str(x), str(y)
    for a in range(1, n - 1):
        b = n - 1 - a
        u, v, mid = sx[:a], sx[a:a + b], sx[a + b:a + b + 2]
        if mid not in ("01", "10") or u != u[::-1]:
            continue
        other = "10" if mid == "01" else "01"
        if sx == u + v + mid + v[::-1] + u and sy == u + v + other + v[::-1] + u:
            out.append({"u": u, "v": v, "middle": mid})
    return out


def check_conjecture_2n(n: int, budget: Budget | None = None) -> Conjecture2nReport:
    """Scan all words of length 2n and test the boundary conjecture."""
    if n < 1:
        raise ValueError("order must be positive")
    t = 2 * n
    groups = group_words_by_factors(t, n, budget)
    period_violations: list[dict] = []
    conjugacy_violations: list[dict] = []
    high_pairs: list[dict] = []
    shape_misses: list[dict] = []
    law_misses: list[dict] = []
    pair_count = 0
    nontrivial = 0
    for bm in sorted(groups):
        codes = groups[bm]
        if len(codes) < 2:
            continue
        nontrivial += 1
        ws = [Word(t, c) for c in codes]
        pis = [period(w).period for w in ws]
        for (x, px), (y, py) in combinations(zip(ws, pis), 2):
            pair_count += 1
            entry = {"words": [str(x), str(y)], "periods": [px, py]}
            if px != py:
                period_violations.append(entry)
            if not are_root_conjugate(x, y):
                conjugacy_violations.append(entry)
            if px > n + 1:
                shapes = _shape_factorizations(x, y, n)
                entry = dict(entry, factorizations=shapes)
                high_pairs.append(entry)
                if not shapes:
                    shape_misses.append(entry)
                elif all(px != n + len(s["u"]) for s in shapes):
                    law_misses.append(entry)
    return Conjecture2nReport(
        n=n, t=t, pair_count=pair_count, nontrivial_classes=nontrivial,
        period_violations=tuple(period_violations),
        conjugacy_violations=tuple(conjugacy_violations),
        high_period_pairs=tuple(high_pairs),
        shape_misses=tuple(shape_misses),
        period_law_misses=tuple(law_misses))


# -- the table --------------------------------------------------------------------

@dataclass
class TTable:
    """Computed T(t, n) cells with provenance, plus emitters."""

    t_max: int
    n_max: int
    cells: dict[tuple[int, int], TCell] = field(default_factory=dict)

    def get(self, t: int, n: int) -> TCell | None:
        return self.cells.get((t, n))

    def to_csv(self) -> str:
        lines = ["n\\t," + ",".join(str(t) for t in range(1, self.t_max + 1))]
        for n in range(1, self.n_max + 1):
            row = [str(n)]
            for t in range(1, self.t_max + 1):
                cell = self.cells.get((t, n))
                row.append(str(cell.value) if cell else "")
            lines.append(",".join(row))
        return "\n".join(lines) + "\n"

    def to_markdown(self) -> str:
        header = "| n\\t | " + " | ".join(str(t) for t in range(1, self.t_max + 1)) + " |"
        sep = "|" + "---|" * (self.t_max + 1)
        lines = [header, sep]
        for n in range(1, self.n_max + 1):
            row = [f"| {n} "]
            for t in range(1, self.t_max + 1):
                cell = self.cells.get((t, n))
                row.append(f"| {cell.value} " if cell else "| ")
            lines.append("".join(row) + "|")
        return "\n".join(lines) + "\n"

    def to_json_dict(self) -> dict:
        return {
            "t_max": self.t_max,
            "n_max": self.n_max,
            "cells": [
                {"t": t, "n": n, "value": cell.value, "method": cell.method}
                for (t, n), cell in sorted(self.cells.items(),
                                           key=lambda kv: (kv[0][1], kv[0][0]))
            ],
        }


def t_table(t_max: int, n_max: int, budget: Budget | None = None) -> TTable:
    """Fill the table: brute force wherever budget allows, the closed form
    on its region; overlapping cells must agree exactly and are marked
    "both". A cell whose brute-force scan exceeds the budget stays absent
    or keeps the closed value, never a wrong value."""
    if t_max < 1 or n_max < 1:
        raise ValueError("table extents must be positive")
    budget = budget or Budget.default()
    table = TTable(t_max, n_max)
    for n in range(1, n_max + 1):
        for t in range(n, t_max + 1):
            closed = count_T_closed(t, n) if n <= t < 2 * n else None
            brute = None
            if t <= BRUTE_MAX_T:
                try:
                    brute = count_T_bruteforce(t, n, budget)
                except BudgetExceededError:
                    brute = None
            if brute and closed:
                if brute.value != closed.value:
                    raise AssertionError(
                        f"closed form disagrees with brute force at "
                        f"t={t} n={n}: {closed.value} vs {brute.value}")
                table.cells[(t, n)] = TCell(t, n, brute.value, "both")
            elif brute:
                table.cells[(t, n)] = brute
            elif closed:
                table.cells[(t, n)] = closed
    return table
