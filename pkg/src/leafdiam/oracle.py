"""Exhaustive ground truth over all labeled trees, via Prufer sequences.

Extremal statistics (leaf count, diameter) are invariant under relabeling, so
enumerating all n^(n-2) labeled trees is as strong as enumerating isomorphism
classes and far simpler.  The bulk path decodes sequences in vectorized
blocks: degree bookkeeping and the smallest-leaf rule run across a whole
block at once, distances come from a batched Floyd-Warshall on uint8 matrices,
and blocks fold into the table with an associative min/max merge, so the scan
parallelizes over index ranges.

`prufer_decode` is the one-at-a-time reference implementation of the same
bijection; tests hold the two paths against each other.
"""

from __future__ import annotations

import multiprocessing
import warnings
from dataclasses import dataclass, field

import numpy as np

from . import formulas
from .errors import CapExceeded, DegenerateOrder, EntryOutOfRange
from .tree import Tree, build_tree, write_tree

DEFAULT_CAP = 9
HARD_CAP = 11
_BLOCK = 1 << 16
_FAR = 99  # > any tree distance at HARD_CAP; saturates safely in uint8


@dataclass
class ExtremalTable:
    """Per-order extremal statistics from full enumeration.

    by_diameter maps d to (min leaves, max leaves) over trees of diameter d;
    by_leaves maps f to (min diameter, max diameter) over trees with f leaves.
    """

    n: int
    by_diameter: dict[int, tuple[int, int]] = field(default_factory=dict)
    by_leaves: dict[int, tuple[int, int]] = field(default_factory=dict)


@dataclass
class Discrepancy:
    """A formula/enumeration mismatch, with an attaining tree when one exists."""

    n: int
    quantity: str
    key: int
    formula_value: int | None
    enumerated_value: int | None
    counterexample: Tree | None

    def describe(self) -> str:
        where = f"n={self.n}, {self.quantity}({self.key})"
        if self.enumerated_value is None:
            body = f"{where}: formula gives {self.formula_value} but no tree realizes the class"
        elif self.formula_value is None:
            body = f"{where}: enumeration realized an infeasible class (extrema {self.enumerated_value})"
        else:
            body = (
                f"{where}: formula gives {self.formula_value}, "
                f"enumeration gives {self.enumerated_value}"
            )
        if self.counterexample is not None:
            body += "; attained by " + write_tree(self.counterexample).replace("\n", "; ").rstrip("; ")
        return body


@dataclass
class VerifyReport:
    """Outcome of sweeping the closed forms against enumeration."""

    max_n: int
    checks: int
    discrepancies: list[Discrepancy]
    tables: dict[int, ExtremalTable]

    @property
    def ok(self) -> bool:
        return not self.discrepancies


def prufer_decode(seq) -> Tree:
    """Decode one Prufer sequence (reference path: smallest-leaf rule)."""
    seq = list(seq)
    n = len(seq) + 2
    for x in seq:
        if not 0 <= x < n:
            raise EntryOutOfRange(f"entry {x} not in 0..{n - 1}")
    deg = [1] * n
    for x in seq:
        deg[x] += 1
    edges = []
    for x in seq:
        leaf = min(v for v in range(n) if deg[v] == 1)
        edges.append((leaf, x))
        deg[leaf] -= 1
        deg[x] -= 1
    u, w = (v for v in range(n) if deg[v] == 1)
    edges.append((u, w))
    return build_tree(n, edges)


def sequence_at(n: int, index: int) -> tuple[int, ...]:
    """The index-th Prufer sequence of length n-2, in block-scan order."""
    m = n - 2
    return tuple((index // n ** (m - 1 - j)) % n for j in range(m))


def all_trees(n: int, cap: int = DEFAULT_CAP):
    """Yield every labeled tree of order n, in sequence order."""
    _check_order(n, cap)
    for index in range(n ** (n - 2)):
        yield prufer_decode(sequence_at(n, index))


def _check_order(n: int, cap: int) -> None:
    if n < 2:
        raise DegenerateOrder(f"enumeration needs order >= 2, got {n}")
    if n > min(cap, HARD_CAP):
        raise CapExceeded(
            f"order {n} exceeds the enumeration cap {min(cap, HARD_CAP)}"
        )
    if n > DEFAULT_CAP:
        warnings.warn(
            f"enumerating {n}**{n - 2} = {n ** (n - 2)} labeled trees; "
            "expect a long run",
            RuntimeWarning,
            stacklevel=3,
        )


def _block_stats(n: int, lo: int, hi: int) -> tuple[np.ndarray, np.ndarray]:
    """Diameters and leaf counts of the trees with sequence index in [lo, hi)."""
    B = hi - lo
    m = n - 2
    idx = np.arange(lo, hi, dtype=np.int64)
    seqs = np.empty((B, m), dtype=np.int8)
    for j in range(m):
        seqs[:, j] = (idx // n ** (m - 1 - j)) % n
    rows = np.arange(B)
    flat_rows = np.repeat(rows, m)

    deg = np.ones((B, n), dtype=np.int8)
    np.add.at(deg, (flat_rows, seqs.ravel()), 1)

    appears = np.zeros((B, n), dtype=bool)
    appears[flat_rows, seqs.ravel()] = True
    leaf_counts = (n - appears.sum(axis=1)).astype(np.uint8)

    dist = np.full((B, n, n), _FAR, dtype=np.uint8)
    dist[:, np.arange(n), np.arange(n)] = 0
    for j in range(m):
        leaf = np.argmax(deg == 1, axis=1)
        v = seqs[:, j]
        dist[rows, leaf, v] = 1
        dist[rows, v, leaf] = 1
        deg[rows, leaf] -= 1
        deg[rows, v] -= 1
    u = np.argmax(deg == 1, axis=1)
    deg[rows, u] -= 1
    w = np.argmax(deg == 1, axis=1)
    dist[rows, u, w] = 1
    dist[rows, w, u] = 1

    for k in range(n):
        via = dist[:, :, k, None] + dist[:, k, None, :]
        np.minimum(dist, via, out=dist)

    diameters = dist.reshape(B, -1).max(axis=1)
    return diameters, leaf_counts


def _fold(acc: dict[int, tuple[int, int]], key: int, lo: int, hi: int) -> None:
    cur = acc.get(key)
    if cur is None:
        acc[key] = (lo, hi)
    else:
        acc[key] = (min(cur[0], lo), max(cur[1], hi))


def _table_chunk(args) -> tuple[dict, dict]:
    """Partial table over one index range (top level so pools can pickle it)."""
    n, lo, hi = args
    by_d: dict[int, tuple[int, int]] = {}
    by_f: dict[int, tuple[int, int]] = {}
    for start in range(lo, hi, _BLOCK):
        stop = min(start + _BLOCK, hi)
        d_arr, f_arr = _block_stats(n, start, stop)
        for d in np.unique(d_arr):
            fs = f_arr[d_arr == d]
            _fold(by_d, int(d), int(fs.min()), int(fs.max()))
        for f in np.unique(f_arr):
            ds = d_arr[f_arr == f]
            _fold(by_f, int(f), int(ds.min()), int(ds.max()))
    return by_d, by_f


def _merge(into: dict[int, tuple[int, int]], part: dict[int, tuple[int, int]]) -> None:
    for key, (lo, hi) in part.items():
        _fold(into, key, lo, hi)


def build_table(n: int, cap: int = DEFAULT_CAP, jobs: int = 1) -> ExtremalTable:
    """Enumerate every labeled tree of order n and fold the extremal table."""
    _check_order(n, cap)
    total = n ** (n - 2)
    table = ExtremalTable(n=n)
    if jobs <= 1 or total <= _BLOCK:
        by_d, by_f = _table_chunk((n, 0, total))
        table.by_diameter, table.by_leaves = by_d, by_f
        return table

    step = -(-total // jobs)
    tasks = [(n, lo, min(lo + step, total)) for lo in range(0, total, step)]
    with multiprocessing.Pool(processes=jobs) as pool:
        for by_d, by_f in pool.imap_unordered(_table_chunk, tasks):
            _merge(table.by_diameter, by_d)
            _merge(table.by_leaves, by_f)
    return table


def find_tree_with(
    n: int,
    diameter: int | None = None,
    leaf_count: int | None = None,
    cap: int = DEFAULT_CAP,
) -> Tree | None:
    """First enumerated tree of order n matching the given statistics."""
    _check_order(n, cap)
    total = n ** (n - 2)
    for lo in range(0, total, _BLOCK):
        hi = min(lo + _BLOCK, total)
        d_arr, f_arr = _block_stats(n, lo, hi)
        mask = np.ones(hi - lo, dtype=bool)
        if diameter is not None:
            mask &= d_arr == diameter
        if leaf_count is not None:
            mask &= f_arr == leaf_count
        hits = np.flatnonzero(mask)
        if hits.size:
            return prufer_decode(sequence_at(n, lo + int(hits[0])))
    return None


_FORMULAS = ("min_leaves", "max_leaves", "min_diameter", "max_diameter")


def verify_sweep(
    max_n: int,
    cap: int = DEFAULT_CAP,
    jobs: int = 1,
    overrides: dict | None = None,
) -> VerifyReport:
    """Check every closed form against full enumeration for 2 <= n <= max_n.

    Discrepancies are collected (with a concrete attaining tree where one
    exists), never raised.  `overrides` swaps in replacement formula
    callables; it exists for harness self-tests.
    """
    fns = {name: getattr(formulas, name) for name in _FORMULAS}
    if overrides:
        fns.update(overrides)

    report = VerifyReport(max_n=max_n, checks=0, discrepancies=[], tables={})

    for n in range(2, max_n + 1):
        table = build_table(n, cap=cap, jobs=jobs)
        report.tables[n] = table

        feasible_d = {
            d for d in range(1, n) if formulas.feasible_leaf_diameter(n, d)
        }
        for d in sorted(feasible_d):
            entry = table.by_diameter.get(d)
            if entry is None:
                report.discrepancies.append(
                    Discrepancy(n, "min_leaves", d, fns["min_leaves"](n, d), None, None)
                )
                continue
            for name, want in (("min_leaves", entry[0]), ("max_leaves", entry[1])):
                got = fns[name](n, d)
                report.checks += 1
                if got != want:
                    report.discrepancies.append(
                        Discrepancy(
                            n, name, d, got, want,
                            find_tree_with(n, diameter=d, leaf_count=want, cap=cap),
                        )
                    )
        for d in sorted(set(table.by_diameter) - feasible_d):
            report.discrepancies.append(
                Discrepancy(n, "feasible_leaf_diameter", d, None,
                            table.by_diameter[d][0],
                            find_tree_with(n, diameter=d, cap=cap))
            )

        feasible_f = {
            f for f in range(2, n) if formulas.feasible_order_leaves(n, f)
        }
        # K_2 is the lone tree with as many leaves as vertices; its class
        # sits outside the n >= f+1 domain of the D-direction formulas.
        allowed_extra = {2} if n == 2 else set()
        for f in sorted(feasible_f):
            entry = table.by_leaves.get(f)
            if entry is None:
                report.discrepancies.append(
                    Discrepancy(n, "min_diameter", f, fns["min_diameter"](n, f), None, None)
                )
                continue
            for name, want in (("min_diameter", entry[0]), ("max_diameter", entry[1])):
                got = fns[name](n, f)
                report.checks += 1
                if got != want:
                    report.discrepancies.append(
                        Discrepancy(
                            n, name, f, got, want,
                            find_tree_with(n, leaf_count=f, diameter=want, cap=cap),
                        )
                    )
        for f in sorted(set(table.by_leaves) - feasible_f - allowed_extra):
            report.discrepancies.append(
                Discrepancy(n, "feasible_order_leaves", f, None,
                            table.by_leaves[f][0],
                            find_tree_with(n, leaf_count=f, cap=cap))
            )

    return report
