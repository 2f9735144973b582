"""Exact min-plus matrix algebra over the integers.

Scalars live in the tropical semiring (Z, oplus, otimes) where
``a oplus b = min(a, b)`` and ``a otimes b = a + b``.  Square matrices over
it add entrywise and multiply like ordinary matrices with (min, +) in place
of (+, *).  Entries are plain Python ints, so values hundreds of bits wide
(routine at the suggested key-exchange parameters) stay exact.  Floating
point is deliberately never used: the attack relies on exact order
comparisons, and a rounded entry could fake or hide an order relation.

Matrix addition is idempotent, which induces the partial order
``x <= y  iff  x oplus y == x``, i.e. entrywise ``<=``.  ``chain_compare``
classifies a pair of matrices under that order; elements of one monotone
power chain are always comparable.
"""

from __future__ import annotations

import re
from enum import Enum
from operator import add, le
from random import Random
from typing import Iterable


class DimensionMismatchError(ValueError):
    """Two matrices of different sizes were combined."""


class FormatError(ValueError):
    """A serialized object violates the wire format."""


def oplus(a: int, b: int) -> int:
    """Tropical sum of two scalars: min(a, b)."""
    return a if a <= b else b


def otimes(a: int, b: int) -> int:
    """Tropical product of two scalars: a + b."""
    return a + b


class ChainOrdering(Enum):
    """Outcome of comparing two matrices under the min-plus partial order."""

    LESS = "less"
    EQUAL = "equal"
    GREATER = "greater"
    INCOMPARABLE = "incomparable"


class TropicalMatrix:
    """An immutable k-by-k integer matrix under (min, +) arithmetic.

    ``rows`` is a tuple of k tuples of k ints.  Instances are values:
    equality and hashing are structural, all operations return new
    matrices, and instances may be shared freely across threads.
    """

    __slots__ = ("k", "rows", "_cols")

    k: int
    rows: tuple[tuple[int, ...], ...]

    def __init__(self, rows: Iterable[Iterable[int]]):
        rows = tuple(tuple(row) for row in rows)
        k = len(rows)
        if k == 0:
            raise ValueError("matrix needs at least one row")
        for row in rows:
            if len(row) != k:
                raise ValueError(f"expected {k} entries per row, got {len(row)}")
            for entry in row:
                if not isinstance(entry, int):
                    raise TypeError(f"entries must be int, not {type(entry).__name__}")
        object.__setattr__(self, "k", k)
        object.__setattr__(self, "rows", rows)

    @classmethod
    def _wrap(cls, rows: tuple[tuple[int, ...], ...]) -> "TropicalMatrix":
        # Internal fast path: rows must already be a square tuple-of-tuples
        # of ints.  Skips validation, which would dominate the hot loops.
        m = object.__new__(cls)
        object.__setattr__(m, "k", len(rows))
        object.__setattr__(m, "rows", rows)
        return m

    def __setattr__(self, name, value):
        raise AttributeError("TropicalMatrix is immutable")

    def __eq__(self, other):
        if not isinstance(other, TropicalMatrix):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        body = ", ".join(repr(list(row)) for row in self.rows)
        if len(body) <= 120:
            return f"TropicalMatrix([{body}])"
        return f"TropicalMatrix(k={self.k}, <{self.k * self.k} entries>)"

    def _check_dim(self, other: "TropicalMatrix") -> None:
        if self.k != other.k:
            raise DimensionMismatchError(
                f"dimension mismatch: {self.k}x{self.k} vs {other.k}x{other.k}"
            )

    def _columns(self) -> tuple[tuple[int, ...], ...]:
        # Column tuples, memoized: matrices reused as right factors across
        # many chain probes (the ladder squares) pay for the zip only once.
        try:
            return self._cols
        except AttributeError:
            cols = tuple(zip(*self.rows))
            object.__setattr__(self, "_cols", cols)
            return cols

    def oplus(self, other: "TropicalMatrix") -> "TropicalMatrix":
        """Entrywise minimum of two matrices of the same size."""
        self._check_dim(other)
        return TropicalMatrix._wrap(
            tuple(tuple(map(min, ra, rb)) for ra, rb in zip(self.rows, other.rows))
        )

    def otimes(self, other: "TropicalMatrix") -> "TropicalMatrix":
        """Min-plus matrix product: result[i][j] = min over l of a[i][l] + b[l][j]."""
        self._check_dim(other)
        cols = other._columns()
        return TropicalMatrix._wrap(
            tuple(
                tuple(min(map(add, row, col)) for col in cols)
                for row in self.rows
            )
        )

    def transpose(self) -> "TropicalMatrix":
        return TropicalMatrix._wrap(self._columns())

    def leq(self, other: "TropicalMatrix") -> bool:
        """True iff self oplus other == self, i.e. entrywise self <= other."""
        self._check_dim(other)
        return all(all(map(le, ra, rb)) for ra, rb in zip(self.rows, other.rows))


def mat_oplus(a: TropicalMatrix, b: TropicalMatrix) -> TropicalMatrix:
    return a.oplus(b)


def mat_otimes(a: TropicalMatrix, b: TropicalMatrix) -> TropicalMatrix:
    return a.otimes(b)


def mat_transpose(a: TropicalMatrix) -> TropicalMatrix:
    return a.transpose()


def mat_leq(x: TropicalMatrix, y: TropicalMatrix) -> bool:
    return x.leq(y)


def _oplus_many(*mats: TropicalMatrix) -> TropicalMatrix:
    # n-ary entrywise min in one pass; callers guarantee matching dims.
    return TropicalMatrix._wrap(
        tuple(
            tuple(map(min, *rows))
            for rows in zip(*(m.rows for m in mats))
        )
    )


def chain_compare(x: TropicalMatrix, y: TropicalMatrix) -> ChainOrdering:
    """Classify x against y under the min-plus partial order.

    INCOMPARABLE means neither x <= y nor y <= x; callers walking a
    monotone power chain treat that as evidence the inputs are not on a
    common chain, not as a value to coerce.
    """
    x._check_dim(y)
    if x.rows == y.rows:
        return ChainOrdering.EQUAL
    if x.leq(y):
        return ChainOrdering.LESS
    if y.leq(x):
        return ChainOrdering.GREATER
    return ChainOrdering.INCOMPARABLE


def random_matrix(k: int, n_bound: int, rng: Random) -> TropicalMatrix:
    """A k-by-k matrix with entries drawn uniformly from [-n_bound, n_bound].

    The caller owns the seeded ``random.Random`` instance, so runs are
    replayable; every draw consumes exactly k*k calls to ``rng.randint``.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    if n_bound < 0:
        raise ValueError("entry bound must be >= 0")
    ri = rng.randint
    return TropicalMatrix._wrap(
        tuple(tuple(ri(-n_bound, n_bound) for _ in range(k)) for _ in range(k))
    )


# Wire format: {"k": int, "entries": [[str, ...], ...]}, row-major, every
# entry a decimal string so arbitrary-precision values survive JSON intact.

_DECIMAL = re.compile(r"-?(?:0|[1-9][0-9]*)")


def matrix_to_json(m: TropicalMatrix) -> dict:
    return {"k": m.k, "entries": [[str(e) for e in row] for row in m.rows]}


def matrix_from_json(obj) -> TropicalMatrix:
    if not isinstance(obj, dict):
        raise FormatError("matrix must be a JSON object")
    if "k" not in obj or "entries" not in obj:
        raise FormatError("matrix object needs 'k' and 'entries'")
    k = obj["k"]
    entries = obj["entries"]
    if not isinstance(k, int) or isinstance(k, bool) or k < 1:
        raise FormatError("'k' must be a positive integer")
    if not isinstance(entries, list) or len(entries) != k:
        raise FormatError(f"'entries' must be a list of {k} rows")
    rows = []
    for row in entries:
        if not isinstance(row, list) or len(row) != k:
            raise FormatError(f"each row must be a list of {k} entries")
        parsed = []
        for cell in row:
            if not isinstance(cell, str) or not _DECIMAL.fullmatch(cell):
                raise FormatError(f"entry {cell!r} is not a canonical decimal string")
            parsed.append(int(cell))
        rows.append(tuple(parsed))
    return TropicalMatrix._wrap(tuple(rows))
