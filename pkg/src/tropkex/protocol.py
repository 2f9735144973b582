"""The two-party key exchange over the pair semigroup.

Setup publishes matrices M, H with entries in [-N, N] and an exponent
bit bound K.  Each party picks a private exponent e < 2^K, computes
(M, H)^e = (P, Q), and sends P only.  Both sides then derive the first
component of (M, H)^(m+n), each composing the partner's public matrix
(as the left factor) with its own full pair; the second component of the
partner's pair is never needed, which is the whole point of the scheme.

A ``Transcript`` is exactly what a passive eavesdropper sees: the public
parameters plus the two exchanged matrices.  Private exponents are never
serialized.

Under circ the derived keys provably agree.  Under star they need not:
star is not associative for k >= 2 (see ``semidirect``), so the two
parties' powers are not powers of a common element in any usable sense,
and ``run_exchange`` raises ``KeyAgreementError`` when the derivations
differ.  Over 1x1 matrices star behaves, since transposition is trivial
there.
"""

from __future__ import annotations

from dataclasses import dataclass
from random import Random

from .semidirect import (
    SemigroupOpKind,
    SemigroupPair,
    op_kind_from_json,
    op_kind_to_json,
    power,
)
from .tropical import (
    DimensionMismatchError,
    FormatError,
    TropicalMatrix,
    _oplus_many,
    matrix_from_json,
    matrix_to_json,
    random_matrix,
)


class KeyAgreementError(RuntimeError):
    """The two parties derived different keys; the exchange invariant broke."""


@dataclass(frozen=True, slots=True)
class ProtocolParams:
    """Public setup: dimension k, entry bound N, exponent bit bound K,
    the operation in use, and the shared matrices M and H."""

    k: int
    N: int
    K: int
    op: SemigroupOpKind
    M: TropicalMatrix
    H: TropicalMatrix

    def __post_init__(self):
        if self.k < 1:
            raise ValueError("k must be >= 1")
        if self.N < 0:
            raise ValueError("N must be >= 0")
        if self.K < 1:
            raise ValueError("K must be >= 1")
        if self.M.k != self.k or self.H.k != self.k:
            raise DimensionMismatchError("M and H must be k-by-k")
        for mat in (self.M, self.H):
            for row in mat.rows:
                for entry in row:
                    if abs(entry) > self.N:
                        raise ValueError(
                            f"entry {entry} outside [-{self.N}, {self.N}]"
                        )

    @property
    def base_pair(self) -> SemigroupPair:
        return SemigroupPair(self.M, self.H)


@dataclass(frozen=True, slots=True)
class PartyState:
    """One party's private exponent and full pair (M, H)^exponent.

    ``public_message`` is the only part that ever leaves the party.
    """

    exponent: int
    pair: SemigroupPair

    @property
    def public_message(self) -> TropicalMatrix:
        return self.pair.first


@dataclass(frozen=True, slots=True)
class Transcript:
    """What the public channel carries: params and both first components."""

    params: ProtocolParams
    alice_message: TropicalMatrix
    bob_message: TropicalMatrix


def setup(k: int, N: int, K: int, op: SemigroupOpKind, rng: Random) -> ProtocolParams:
    """Draw public matrices M then H uniformly with entries in [-N, N]."""
    m = random_matrix(k, N, rng)
    h = random_matrix(k, N, rng)
    return ProtocolParams(k=k, N=N, K=K, op=op, M=m, H=h)


def make_party(params: ProtocolParams, rng: Random) -> PartyState:
    """Pick a private exponent uniformly from [1, 2^K - 1] and power up."""
    exponent = rng.randint(1, (1 << params.K) - 1)
    pair = power(params.op, params.base_pair, exponent)
    return PartyState(exponent=exponent, pair=pair)


def derive_shared_key(
    params: ProtocolParams,
    own: PartyState,
    other_message: TropicalMatrix,
) -> TropicalMatrix:
    """First component of (partner_pair combined with own pair).

    The partner enters as the left factor, so only its public first
    component Y is needed.  With own pair (X, P):

      circ: Y + X + P + (Y * P)
      star: (P * Y^T) + (Y^T * P) + X

    in (min, +) arithmetic.  Powers of the shared base commute, so both
    parties land on the first component of (M, H)^(m+n).
    """
    if other_message.k != params.k:
        raise DimensionMismatchError(
            f"partner message is {other_message.k}x{other_message.k}, expected {params.k}"
        )
    x, p = own.pair.first, own.pair.second
    y = other_message
    if params.op is SemigroupOpKind.CIRC:
        return _oplus_many(y, x, p, y.otimes(p))
    yt = y.transpose()
    return _oplus_many(p.otimes(yt), yt.otimes(p), x)


def run_exchange(
    params: ProtocolParams, rng: Random
) -> tuple[Transcript, TropicalMatrix, TropicalMatrix]:
    """Run a full exchange; both parties draw exponents from ``rng`` in turn.

    Returns the eavesdropper-visible transcript plus both derived keys.
    Raises KeyAgreementError if the keys disagree, which would mean the
    scheme itself is broken in a way this package does not expect.
    """
    alice = make_party(params, rng)
    bob = make_party(params, rng)
    transcript = Transcript(
        params=params,
        alice_message=alice.public_message,
        bob_message=bob.public_message,
    )
    alice_key = derive_shared_key(params, alice, bob.public_message)
    bob_key = derive_shared_key(params, bob, alice.public_message)
    if alice_key != bob_key:
        raise KeyAgreementError(
            f"parties disagree on the shared key (k={params.k}, K={params.K})"
        )
    return transcript, alice_key, bob_key


def params_to_json(params: ProtocolParams) -> dict:
    return {
        "k": params.k,
        "N": params.N,
        "K": params.K,
        "op": op_kind_to_json(params.op),
        "M": matrix_to_json(params.M),
        "H": matrix_to_json(params.H),
    }


def params_from_json(obj) -> ProtocolParams:
    if not isinstance(obj, dict):
        raise FormatError("params must be a JSON object")
    missing = {"k", "N", "K", "op", "M", "H"} - obj.keys()
    if missing:
        raise FormatError(f"params object missing {sorted(missing)}")
    k, n_bound, exp_bits = obj["k"], obj["N"], obj["K"]
    for name, value in (("k", k), ("N", n_bound), ("K", exp_bits)):
        if not isinstance(value, int) or isinstance(value, bool):
            raise FormatError(f"'{name}' must be an integer")
    try:
        return ProtocolParams(
            k=k,
            N=n_bound,
            K=exp_bits,
            op=op_kind_from_json(obj["op"]),
            M=matrix_from_json(obj["M"]),
            H=matrix_from_json(obj["H"]),
        )
    except (ValueError, DimensionMismatchError) as exc:
        raise FormatError(f"invalid protocol params: {exc}") from exc


def transcript_to_json(transcript: Transcript) -> dict:
    return {
        "params": params_to_json(transcript.params),
        "alice_message": matrix_to_json(transcript.alice_message),
        "bob_message": matrix_to_json(transcript.bob_message),
    }


def transcript_from_json(obj) -> Transcript:
    if not isinstance(obj, dict):
        raise FormatError("transcript must be a JSON object")
    missing = {"params", "alice_message", "bob_message"} - obj.keys()
    if missing:
        raise FormatError(f"transcript object missing {sorted(missing)}")
    params = params_from_json(obj["params"])
    alice_message = matrix_from_json(obj["alice_message"])
    bob_message = matrix_from_json(obj["bob_message"])
    for name, mat in (("alice_message", alice_message), ("bob_message", bob_message)):
        if mat.k != params.k:
            raise FormatError(f"'{name}' is {mat.k}x{mat.k}, expected {params.k}")
    return Transcript(params=params, alice_message=alice_message, bob_message=bob_message)
