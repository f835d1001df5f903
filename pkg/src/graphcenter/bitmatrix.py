"""Bit-packed symmetric boolean matrices and the reachability product kernels.

A :class:`BoolSymMatrix` holds ``R(A~^n)``: bit ``(i, j)`` is set iff nodes
``i`` and ``j`` are at most ``n`` hops apart. Rows are packed into little-endian
``uint64`` words, bit ``j`` of row ``i`` living in word ``j // 64``.

The products only evaluate entries that are still zero in the right operand,
only in the upper triangle, and stop each scalar product at the first word
holding a common bit. Both operands must be powers of the same symmetric
unit-diagonal matrix; this is what makes writing the mirrored entry valid and
guarantees the product dominates its right operand.
"""
from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import MutableMapping

import numpy as np

from .graph import Graph

WORD = 64
_U64 = np.dtype("<u8")
_CHUNK_ROWS = 64


def default_threads() -> int:
    env = os.environ.get("ECC_THREADS")
    if env:
        try:
            n = int(env)
        except ValueError:
            raise ValueError(f"ECC_THREADS must be an integer, got {env!r}") from None
        if n >= 1:
            return n
    return os.cpu_count() or 1


@dataclass(eq=False)
class BoolSymMatrix:
    width: int
    words: np.ndarray
    fill_counts: np.ndarray = field(default=None)

    def __post_init__(self):
        if self.fill_counts is None:
            self.fill_counts = self.popcounts()

    @property
    def nwords(self) -> int:
        return self.words.shape[1]

    @classmethod
    def from_dense(cls, a: np.ndarray) -> BoolSymMatrix:
        a = np.asarray(a, dtype=bool)
        n = a.shape[0]
        nwords = max(1, -(-n // WORD))
        padded = np.zeros((n, nwords * WORD), dtype=bool)
        padded[:, :n] = a
        packed = np.packbits(padded, axis=1, bitorder="little")
        return cls(n, packed.view(_U64).copy())

    @classmethod
    def identity(cls, width: int) -> BoolSymMatrix:
        return cls.from_dense(np.eye(width, dtype=bool))

    def to_dense(self) -> np.ndarray:
        return self._unpack(0, self.width)

    def _unpack(self, lo: int, hi: int) -> np.ndarray:
        raw = self.words[lo:hi].view(np.uint8)
        return np.unpackbits(raw, axis=1, count=self.width, bitorder="little").astype(bool)

    def popcounts(self) -> np.ndarray:
        return np.bitwise_count(self.words).sum(axis=1, dtype=np.int64)

    def bit(self, i: int, j: int) -> bool:
        return bool((int(self.words[i, j // WORD]) >> (j % WORD)) & 1)

    def full_rows(self) -> np.ndarray:
        return np.flatnonzero(self.fill_counts == self.width)

    def has_full_row(self) -> bool:
        """True iff some row has no zero entry."""
        return bool(np.any(self.fill_counts == self.width))

    def check_invariants(self):
        d = self.to_dense()
        assert np.array_equal(d, d.T), "not symmetric"
        assert d.diagonal().all(), "diagonal not all ones"
        assert np.array_equal(self.fill_counts, self.popcounts()), "stale fill counts"

    def __eq__(self, other):
        if not isinstance(other, BoolSymMatrix):
            return NotImplemented
        return self.width == other.width and np.array_equal(self.words, other.words)

    def __repr__(self):
        return f"BoolSymMatrix(width={self.width}, full_rows={len(self.full_rows())})"


def from_graph(g: Graph) -> BoolSymMatrix:
    """``R(A~)``: adjacency with a unit diagonal."""
    a = g.adjacency_matrix()
    np.fill_diagonal(a, True)
    return BoolSymMatrix.from_dense(a)


def has_full_row(m: BoolSymMatrix) -> bool:
    return m.has_full_row()


def _chunk_hits(m: BoolSymMatrix, m2: BoolSymMatrix, lo: int, hi: int):
    # candidates: zero bits of m2 strictly above the diagonal; full rows yield none
    zero = ~m2._unpack(lo, hi)
    cols = np.arange(m2.width)
    rows = np.arange(lo, hi)
    zero &= cols[None, :] > rows[:, None]
    ls, cs = np.nonzero(zero)
    if not len(ls):
        return ls, cs
    ls += lo
    a, b = m.words, m2.words
    hit = np.zeros(len(ls), dtype=bool)
    pending = np.arange(len(ls))
    # m2 symmetric: column c of m2 is row c, so the scalar product is an AND of rows
    for w in range(m.nwords):
        found = (a[ls[pending], w] & b[cs[pending], w]) != 0
        hit[pending[found]] = True
        pending = pending[~found]
        if not len(pending):
            break
    return ls[hit], cs[hit]


def _product_hits(m: BoolSymMatrix, m2: BoolSymMatrix, threads: int | None):
    if m.width != m2.width:
        raise ValueError(f"dimension mismatch: {m.width} vs {m2.width}")
    n = m.width
    bounds = [(lo, min(lo + _CHUNK_ROWS, n)) for lo in range(0, n, _CHUNK_ROWS)]
    threads = threads or default_threads()
    if threads == 1 or len(bounds) == 1:
        parts = [_chunk_hits(m, m2, lo, hi) for lo, hi in bounds]
    else:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            parts = list(pool.map(lambda b: _chunk_hits(m, m2, *b), bounds))
    if not parts:
        empty = np.zeros(0, dtype=np.intp)
        return empty, empty
    return np.concatenate([p[0] for p in parts]), np.concatenate([p[1] for p in parts])


def _set_symmetric(words: np.ndarray, ls: np.ndarray, cs: np.ndarray):
    one = np.uint64(1)
    np.bitwise_or.at(words, (ls, cs // WORD), one << (cs % WORD).astype(np.uint64))
    np.bitwise_or.at(words, (cs, ls // WORD), one << (ls % WORD).astype(np.uint64))


def multiply(m: BoolSymMatrix, m2: BoolSymMatrix, threads: int | None = None) -> BoolSymMatrix:
    """``R(m @ m2)`` for two powers of the same reachability matrix.

    Rows are split into fixed-size chunks scanned concurrently; each worker
    only reads the operands and returns its hits, which are merged in chunk
    order, so the result does not depend on ``threads``.
    """
    ls, cs = _product_hits(m, m2, threads)
    words = m2.words.copy()
    _set_symmetric(words, ls, cs)
    return BoolSymMatrix(m2.width, words)


def multiply_tracking(
    m: BoolSymMatrix,
    m2: BoolSymMatrix,
    round: int,
    layers: MutableMapping[int, int],
    threads: int | None = None,
) -> BoolSymMatrix:
    """Same product as :func:`multiply`, recording rows that become full.

    Every row whose fill count reaches ``width`` during this product gets
    ``layers[row] = round``. ``m2.fill_counts`` must be current; the result's
    counts are updated incrementally from the new bits.
    """
    ls, cs = _product_hits(m, m2, threads)
    words = m2.words.copy()
    _set_symmetric(words, ls, cs)
    n = m2.width
    counts = m2.fill_counts + np.bincount(ls, minlength=n) + np.bincount(cs, minlength=n)
    for row in np.flatnonzero((counts == n) & (m2.fill_counts < n)).tolist():
        if row in layers:
            raise ValueError(f"row {row} already recorded in layer {layers[row]}")
        layers[row] = round
    return BoolSymMatrix(n, words, counts)
