"""Bounded Todd-Coxeter coset enumeration (HLT strategy).

Certifies finite subgroup index -- in particular group order 1 for the
quotient presentations arising from Gluck blow-downs.  An Exceeded outcome
is inconclusive, never a refutation.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .words import Presentation, Word


class _TableOverflow(Exception):
    pass


class CosetTable:
    """Mutable enumeration state: one row per coset, one column per signed
    generator.  Dead cosets forward to their replacement union-find style."""

    def __init__(self, ngens: int, max_cosets: int):
        self.ngens = ngens
        self.ncols = 2 * ngens
        self.max_cosets = max_cosets
        self.table: list[list[Optional[int]]] = [[None] * self.ncols]
        self.parent: list[int] = [0]

    @staticmethod
    def col(letter: int) -> int:
        g = abs(letter) - 1
        return 2 * g if letter > 0 else 2 * g + 1

    @staticmethod
    def inv_col(col: int) -> int:
        return col ^ 1

    def is_live(self, c: int) -> bool:
        return self.parent[c] == c

    def live_cosets(self) -> list[int]:
        return [c for c in range(len(self.table)) if self.is_live(c)]

    def rep(self, c: int) -> int:
        root = c
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[c] != root:
            self.parent[c], c = root, self.parent[c]
        return root

    def define(self, c: int, col: int) -> int:
        if len(self.table) >= self.max_cosets:
            raise _TableOverflow
        d = len(self.table)
        self.table.append([None] * self.ncols)
        self.parent.append(d)
        self.table[c][col] = d
        self.table[d][self.inv_col(col)] = c
        return d

    def _merge(self, a: int, b: int, queue: list[int]) -> None:
        a, b = self.rep(a), self.rep(b)
        if a != b:
            a, b = min(a, b), max(a, b)
            self.parent[b] = a
            queue.append(b)

    def coincidence(self, a: int, b: int) -> None:
        queue: list[int] = []
        self._merge(a, b, queue)
        i = 0
        while i < len(queue):
            dead = queue[i]
            i += 1
            for col in range(self.ncols):
                d = self.table[dead][col]
                if d is None:
                    continue
                self.table[d][self.inv_col(col)] = None
                mu, nu = self.rep(dead), self.rep(d)
                if self.table[mu][col] is not None:
                    self._merge(nu, self.table[mu][col], queue)
                elif self.table[nu][self.inv_col(col)] is not None:
                    self._merge(mu, self.table[nu][self.inv_col(col)], queue)
                else:
                    self.table[mu][col] = nu
                    self.table[nu][self.inv_col(col)] = mu

    def scan_and_fill(self, start: int, word: Sequence[int]) -> None:
        cols = [self.col(a) for a in word]
        back_cols = [self.col(-a) for a in word]
        while True:
            start = self.rep(start)
            f, i = start, 0
            while i < len(cols) and self.table[f][cols[i]] is not None:
                f = self.rep(self.table[f][cols[i]])
                i += 1
            if i == len(cols):
                if f != start:
                    self.coincidence(f, start)
                return
            b, j = start, len(cols) - 1
            while j >= i and self.table[b][back_cols[j]] is not None:
                b = self.rep(self.table[b][back_cols[j]])
                j -= 1
            if j < i:
                self.coincidence(f, b)
                return
            if j == i:
                self.table[f][cols[i]] = b
                self.table[b][back_cols[i]] = f
                return
            self.define(f, cols[i])

    def compact(self) -> list[list[int]]:
        """Renumber live cosets 0..n-1 and resolve entries through reps.
        Requires a complete table."""
        live = self.live_cosets()
        index = {c: k for k, c in enumerate(live)}
        out = []
        for c in live:
            row = []
            for col in range(self.ncols):
                entry = self.table[c][col]
                if entry is None:
                    raise ValueError("table is not complete")
                row.append(index[self.rep(entry)])
            out.append(row)
        return out


@dataclass(frozen=True)
class EnumerationOutcome:
    """Result of a bounded enumeration.  `order` is the subgroup index (the
    group order for the trivial subgroup) and is set only when finite."""

    finite: bool
    order: Optional[int]
    max_cosets: int
    table: Optional[tuple[tuple[int, ...], ...]] = None


def _trace(table: list[list[int]], start: int, word: Word) -> int:
    c = start
    for a in word.letters:
        c = table[c][CosetTable.col(a)]
    return c


def _replay(
    table: list[list[int]], relators: Sequence[Word], subgroup: Sequence[Word]
) -> None:
    for c in range(len(table)):
        for r in relators:
            if _trace(table, c, r) != c:
                raise AssertionError("relator does not close on the final table")
    for w in subgroup:
        if _trace(table, 0, w) != 0:
            raise AssertionError("subgroup word moves the base coset")


def enumerate_cosets(
    p: Presentation,
    subgroup_words: Sequence[Word] = (),
    max_cosets: int = 10000,
) -> EnumerationOutcome:
    """HLT enumeration of cosets of <subgroup_words> in the presented group.

    Scans relators in presentation order from each live coset, defining new
    cosets at the first undefined slot and merging coincidences eagerly.
    Every finite outcome is replayed against the relators before returning.
    """
    if max_cosets < 1:
        raise ValueError("max_cosets must be at least 1")
    for w in subgroup_words:
        if w.max_generator() >= p.ngens:
            raise ValueError(f"subgroup word {w!r} uses an unknown generator")
    ct = CosetTable(p.ngens, max_cosets)
    try:
        for w in subgroup_words:
            ct.scan_and_fill(0, w.letters)
        while True:
            alpha = 0
            while alpha < len(ct.table):
                if not ct.is_live(alpha):
                    alpha += 1
                    continue
                for r in p.relators:
                    ct.scan_and_fill(alpha, r.letters)
                    if not ct.is_live(alpha):
                        break
                if ct.is_live(alpha):
                    for col in range(ct.ncols):
                        if ct.table[alpha][col] is None:
                            ct.define(alpha, col)
                alpha += 1
            # a late coincidence can clear an entry of an earlier live row
            if all(
                ct.table[c][col] is not None
                for c in ct.live_cosets()
                for col in range(ct.ncols)
            ):
                break
    except _TableOverflow:
        return EnumerationOutcome(finite=False, order=None, max_cosets=max_cosets)
    final = ct.compact()
    _replay(final, p.relators, subgroup_words)
    return EnumerationOutcome(
        finite=True,
        order=len(final),
        max_cosets=max_cosets,
        table=tuple(tuple(row) for row in final),
    )


@dataclass(frozen=True)
class TrivialityCertificate:
    trivial: bool
    order: Optional[int]  # finite order found, when any

    @property
    def status(self) -> str:
        return "trivial" if self.trivial else "inconclusive"


def certify_trivial(p: Presentation, max_cosets: int = 10000) -> TrivialityCertificate:
    """Certify |G| = 1 by simplification plus coset enumeration.

    A trivial verdict is a proof; an inconclusive one is not a refutation
    (though a finite order > 1, when found, is attached as evidence).
    """
    simplified = p.simplify()
    outcome = enumerate_cosets(simplified, (), max_cosets)
    if outcome.finite and outcome.order == 1:
        return TrivialityCertificate(trivial=True, order=1)
    return TrivialityCertificate(trivial=False, order=outcome.order)
