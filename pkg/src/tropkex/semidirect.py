"""The two pair operations the key exchange is built on.

A pair (M, G) combines with (S, H) under either of two laws:

  circ:  (M oplus S oplus H oplus (M otimes H),  G oplus H oplus (G otimes H))
  star:  ((H otimes M^T) oplus (M^T otimes H) oplus S,  G otimes H)

For both laws the first component of a product never depends on G, which
is what lets the key-exchange parties publish first components only.

circ is an honest semigroup operation: its first component applies the
map X -> X + H + (X * H) to M, and that family of maps is closed under
composition (composing the maps for H and V gives the map for
H + V + (H * V), the same law the second component follows).

star, written exactly as above, is NOT associative for k >= 2: its first
component applies X -> (H * X^T) + (X^T * H) to M, and composing two
such maps re-transposes X, producing terms no single-parameter map of
the same shape can express.  The test suite pins a concrete 2x2
counterexample.  Consequences, all exercised by tests: powers under star
depend on the multiplication order, so ``power`` (square-and-multiply)
and the two step-by-step folds can disagree for k >= 2; the key exchange
over star can fail to agree; and the chain search over star can step off
the chain.  Only the left fold base * (base * (... )) yields the
monotone first-component chain, so chain-related code uses that order
for star.  Everything is consistent for k == 1, where transposition is
trivial and star is associative.

Powering is square-and-multiply.  There is no identity pair (the
semiring has no multiplicative identity matrix), so exponents start
at 1.  A ``SquareCache`` holds the ladder base^(2^i) so that later
powers cost one operation per set bit of the exponent.

All functions that combine pairs accept an optional ``OpCounter``; each
application increments it by exactly one.  The attack's cost guarantees
are stated in these counts, so they are measured, never estimated.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from operator import add

from .tropical import DimensionMismatchError, FormatError, TropicalMatrix
from .tropical import matrix_from_json, matrix_to_json


class SemigroupOpKind(Enum):
    CIRC = "circ"
    STAR = "star"


@dataclass(frozen=True, slots=True)
class SemigroupPair:
    """A pair of equally sized matrices, the element both laws combine."""

    first: TropicalMatrix
    second: TropicalMatrix

    def __post_init__(self):
        if self.first.k != self.second.k:
            raise DimensionMismatchError(
                f"pair components differ in size: {self.first.k} vs {self.second.k}"
            )

    @property
    def k(self) -> int:
        return self.first.k


class OpCounter:
    """Mutable tally of pair-operation applications, owned by the caller."""

    __slots__ = ("count",)

    def __init__(self):
        self.count = 0

    def __repr__(self):
        return f"OpCounter(count={self.count})"


def _new_pair(first: TropicalMatrix, second: TropicalMatrix) -> SemigroupPair:
    # Internal fast constructor for results whose dimensions already match.
    pair = object.__new__(SemigroupPair)
    object.__setattr__(pair, "first", first)
    object.__setattr__(pair, "second", second)
    return pair


# The two operations fuse the entrywise minima into the product pass: a
# separate pass per oplus term would add a k^2 cost with a constant big
# enough to distort small-k timings, and the benchmark asserts that the
# attack's cost profile is k^3-shaped.


def op_circ(p: SemigroupPair, q: SemigroupPair) -> SemigroupPair:
    """First law: with p=(M,G), q=(S,H) the product is
    (M+S+H+(M*H), G+H+(G*H)) written in (min, +) arithmetic."""
    first_p = p.first
    second_q = q.second
    if first_p.k != q.first.k:
        raise DimensionMismatchError(
            f"pair dimension mismatch: {first_p.k} vs {q.first.k}"
        )
    m_rows, g_rows = first_p.rows, p.second.rows
    s_rows, h_rows = q.first.rows, second_q.rows
    h_cols = second_q._columns()
    _min, _map, _add = min, map, add
    first = tuple(
        tuple(_map(
            _min,
            [_min(_map(_add, m_row, col)) for col in h_cols],
            m_row, s_row, h_row,
        ))
        for m_row, s_row, h_row in zip(m_rows, s_rows, h_rows)
    )
    second = tuple(
        tuple(_map(
            _min,
            [_min(_map(_add, g_row, col)) for col in h_cols],
            g_row, h_row,
        ))
        for g_row, h_row in zip(g_rows, h_rows)
    )
    return _new_pair(TropicalMatrix._wrap(first), TropicalMatrix._wrap(second))


def op_star(p: SemigroupPair, q: SemigroupPair) -> SemigroupPair:
    """Second law: with p=(M,G), q=(S,H) the product is
    ((H*M^T)+(M^T*H)+S, G*H) written in (min, +) arithmetic."""
    first_p = p.first
    second_q = q.second
    if first_p.k != q.first.k:
        raise DimensionMismatchError(
            f"pair dimension mismatch: {first_p.k} vs {q.first.k}"
        )
    m_rows, g_rows = first_p.rows, p.second.rows
    s_rows, h_rows = q.first.rows, second_q.rows
    h_cols = second_q._columns()
    m_cols = first_p._columns()  # row i of M^T is column i of M
    _min, _map, _add = min, map, add
    first = tuple(
        tuple(_map(
            _min,
            [_min(_map(_add, h_row, m_row_j)) for m_row_j in m_rows],  # (H * M^T)_i*
            [_min(_map(_add, m_col_i, col)) for col in h_cols],        # (M^T * H)_i*
            s_row,
        ))
        for h_row, m_col_i, s_row in zip(h_rows, m_cols, s_rows)
    )
    second = tuple(
        tuple([_min(_map(_add, g_row, col)) for col in h_cols])
        for g_row in g_rows
    )
    return _new_pair(TropicalMatrix._wrap(first), TropicalMatrix._wrap(second))


def _op_function(op: SemigroupOpKind):
    if op is SemigroupOpKind.CIRC:
        return op_circ
    if op is SemigroupOpKind.STAR:
        return op_star
    raise ValueError(f"unknown operation kind: {op!r}")


def apply(
    op: SemigroupOpKind,
    p: SemigroupPair,
    q: SemigroupPair,
    counter: OpCounter | None = None,
) -> SemigroupPair:
    """Dispatch one pair application, bumping ``counter`` by one."""
    if counter is not None:
        counter.count += 1
    return _op_function(op)(p, q)


def power(
    op: SemigroupOpKind,
    base: SemigroupPair,
    e: int,
    counter: OpCounter | None = None,
) -> SemigroupPair:
    """base^e by square-and-multiply, most significant exponent bit first.

    Uses at most 2*(bit_length(e) - 1) applications.  e == 0 is rejected:
    without an identity pair there is nothing for it to mean.
    """
    if e < 1:
        raise ValueError("exponent must be >= 1 (the semigroup has no identity)")
    combine = _op_function(op)
    acc = base
    for bit in bin(e)[3:]:
        acc = combine(acc, acc)
        if counter is not None:
            counter.count += 1
        if bit == "1":
            acc = combine(acc, base)
            if counter is not None:
                counter.count += 1
    return acc


@dataclass(frozen=True, slots=True)
class SquareCache:
    """Ladder of repeated squares: squares[i] == base^(2^i)."""

    op: SemigroupOpKind
    base: SemigroupPair
    squares: tuple[SemigroupPair, ...]

    @property
    def levels(self) -> int:
        return len(self.squares)


def build_square_cache(
    op: SemigroupOpKind,
    base: SemigroupPair,
    levels: int,
    counter: OpCounter | None = None,
) -> SquareCache:
    """Precompute base^(2^i) for i in [0, levels); exactly levels-1 applications."""
    if levels < 1:
        raise ValueError("levels must be >= 1")
    combine = _op_function(op)
    squares = [base]
    for _ in range(levels - 1):
        squares.append(combine(squares[-1], squares[-1]))
        if counter is not None:
            counter.count += 1
    return SquareCache(op, base, tuple(squares))


def power_from_cache(
    cache: SquareCache,
    e: int,
    counter: OpCounter | None = None,
) -> SemigroupPair:
    """base^e assembled from cached squares at the set bits of e.

    Factors combine in ascending bit order with the new factor on the
    right.  Under circ any order would give the same value (powers of
    one element commute there); the fixed order makes results and op
    counts reproducible, and matters under star, whose products are
    order-dependent.  Costs popcount(e) - 1 applications.
    """
    if e < 1 or e >= (1 << cache.levels):
        raise ValueError(
            f"exponent {e} outside [1, 2^{cache.levels}) covered by the cache"
        )
    combine = _op_function(cache.op)
    acc = None
    squares = cache.squares
    for i in range(e.bit_length()):
        if (e >> i) & 1:
            if acc is None:
                acc = squares[i]
            else:
                acc = combine(acc, squares[i])
                if counter is not None:
                    counter.count += 1
    return acc


def op_kind_to_json(op: SemigroupOpKind) -> str:
    return op.value


def op_kind_from_json(value) -> SemigroupOpKind:
    if value == "circ":
        return SemigroupOpKind.CIRC
    if value == "star":
        return SemigroupOpKind.STAR
    raise FormatError(f"operation must be 'circ' or 'star', got {value!r}")


def pair_to_json(p: SemigroupPair) -> dict:
    return {"first": matrix_to_json(p.first), "second": matrix_to_json(p.second)}


def pair_from_json(obj) -> SemigroupPair:
    if not isinstance(obj, dict) or "first" not in obj or "second" not in obj:
        raise FormatError("pair must be a JSON object with 'first' and 'second'")
    return SemigroupPair(matrix_from_json(obj["first"]), matrix_from_json(obj["second"]))
