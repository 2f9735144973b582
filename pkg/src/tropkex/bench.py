"""Experiment harness: key sizes and attack timings over a grid of k.

Each trial draws fresh public matrices and private exponents, runs the
exchange, then times the eavesdropper's recovery.  A trial's timing is
recorded only after the recovered key has been checked against the
parties' shared key; a failed attack aborts the whole run, because a
single failure would falsify the break this package demonstrates.

Timing is wall clock from a monotonic high-resolution counter, taken on
the thread running the trial, with the cycle collector paused for the
timed region (the workload allocates no reference cycles, and ambient
collections would tax short runs disproportionately).  Two figures are
kept per trial: the time to find m' (doubling plus bisection), which is
the one comparable across machines via the t/k^3 and t/alpha^1.5
ratios, and the time including the final key derivation.

Key size alpha counts, for every entry, the bit length of its magnitude
plus one sign bit.  Zero therefore counts as one bit.
"""

from __future__ import annotations

import csv
import gc
import io
import time
from dataclasses import dataclass
from pathlib import Path
from random import Random
from typing import Sequence

from .attack import AttackError, find_chain_exponent
from .protocol import (
    KeyAgreementError,
    PartyState,
    derive_shared_key,
    make_party,
    setup,
)
from .semidirect import SemigroupOpKind
from .tropical import TropicalMatrix

CSV_HEADER = (
    "k",
    "alpha_bits",
    "time_mprime_s",
    "time_full_s",
    "t_over_k3",
    "t_over_alpha15",
    "trials",
    "plateau_fraction",
)


@dataclass(frozen=True, slots=True)
class ExperimentRow:
    """Averages over the trials at one matrix dimension."""

    k: int
    alpha_bits: float
    time_mprime_s: float
    time_full_s: float
    t_over_k3: float
    t_over_alpha15: float
    trials: int
    plateau_fraction: float


@dataclass(frozen=True, slots=True)
class RunConfig:
    """Benchmark grid; the defaults mirror the suggested parameter set
    (entries in [-1000, 1000], 200-bit exponents, 40 trials per k)."""

    k_list: tuple[int, ...]
    N: int = 1000
    K: int = 200
    op: SemigroupOpKind = SemigroupOpKind.CIRC
    trials: int = 40
    seed: int = 0
    output_path: str | Path | None = None

    def __post_init__(self):
        if not self.k_list:
            raise ValueError("k_list must not be empty")
        if any(k < 1 for k in self.k_list):
            raise ValueError("every k must be >= 1")
        if self.trials < 1:
            raise ValueError("trials must be >= 1")


def measure_alpha(a: TropicalMatrix) -> int:
    """Total bits to represent the matrix: per entry, magnitude bits + sign."""
    return sum(abs(e).bit_length() + 1 for row in a.rows for e in row)


def _run_trial(k: int, config: RunConfig, trial: int):
    # Per-trial seed = seed + trial, so a single trial can be replayed in
    # isolation and the same exponent stream recurs at every k.
    rng = Random(config.seed + trial)
    params = setup(k, config.N, config.K, config.op, rng)
    alice = make_party(params, rng)
    bob = make_party(params, rng)
    shared = derive_shared_key(params, alice, bob.public_message)
    bob_key = derive_shared_key(params, bob, alice.public_message)
    if shared != bob_key:
        raise KeyAgreementError(
            f"exchange disagreement at k={k}, trial={trial}, seed={config.seed + trial}"
        )

    # The recovery allocates pure object trees (no reference cycles), so the
    # cycle collector only adds ambient-heap jitter to the timed region;
    # start from a collected heap and keep it off while the clock runs.
    gc_was_enabled = gc.isenabled()
    gc.collect()
    gc.disable()
    try:
        start = time.perf_counter()
        m_prime, _, eve_pair = find_chain_exponent(
            params.op, params.M, params.H, alice.public_message, params.K
        )
        found = time.perf_counter()
        recovered = derive_shared_key(
            params, PartyState(exponent=m_prime, pair=eve_pair), bob.public_message
        )
        done = time.perf_counter()
    finally:
        if gc_was_enabled:
            gc.enable()

    if recovered != shared:
        raise AttackError(
            f"attack produced a wrong key at k={k}, trial={trial}, "
            f"seed={config.seed + trial}, m={alice.exponent}, m_prime={m_prime}"
        )
    alpha = measure_alpha(alice.public_message)
    return alpha, found - start, done - start, m_prime != alice.exponent


def run_experiment(config: RunConfig) -> list[ExperimentRow]:
    """Run the grid and average per k; deterministic given the seed except
    for the wall-clock columns.

    Trials run in trial-major order (trial 0 at every k, then trial 1,
    and so on): each dimension then samples the same stretch of machine
    load, which keeps the cross-k timing ratios stable under background
    drift.  The per-trial work itself is identical either way.
    """
    results = {k: [] for k in config.k_list}
    for trial in range(config.trials):
        for k in config.k_list:
            results[k].append(_run_trial(k, config, trial))
    rows = []
    for k in config.k_list:
        alpha_avg = sum(alpha for alpha, _, _, _ in results[k]) / config.trials
        mprime_avg = sum(t for _, t, _, _ in results[k]) / config.trials
        full_avg = sum(t for _, _, t, _ in results[k]) / config.trials
        plateaus = sum(p for _, _, _, p in results[k])
        rows.append(
            ExperimentRow(
                k=k,
                alpha_bits=alpha_avg,
                time_mprime_s=mprime_avg,
                time_full_s=full_avg,
                t_over_k3=mprime_avg / k**3,
                t_over_alpha15=mprime_avg / alpha_avg**1.5,
                trials=config.trials,
                plateau_fraction=plateaus / config.trials,
            )
        )
    return rows


def average_key_size_bits(
    k: int,
    N: int,
    K: int,
    op: SemigroupOpKind,
    trials: int,
    seed: int = 0,
) -> float:
    """Average alpha of a party's public message, without running the attack.

    Useful when only the key-size column is wanted: the message alone
    costs one powering instead of a full recovery.
    """
    total = 0
    for trial in range(trials):
        rng = Random(seed + trial)
        params = setup(k, N, K, op, rng)
        party = make_party(params, rng)
        total += measure_alpha(party.public_message)
    return total / trials


def _format_cell(value) -> str:
    if isinstance(value, float):
        return format(value, ".6g")
    return str(value)


def rows_to_csv(rows: Sequence[ExperimentRow]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for row in rows:
        writer.writerow(
            _format_cell(getattr(row, column)) for column in CSV_HEADER
        )
    return buf.getvalue()


def write_csv(rows: Sequence[ExperimentRow], path: str | Path) -> None:
    Path(path).write_text(rows_to_csv(rows))
