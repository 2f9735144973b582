#!/usr/bin/env python3
"""Recovering the shared key from the public transcript alone.

The chain of first components descends monotonically, so the hidden
exponent can be bracketed by repeated squaring and then pinned down by
bisection.  Any index whose chain element equals the intercepted matrix
works, even when the chain plateaus and it differs from the true
exponent.  The whole recovery stays within K^2 + K pair operations.
"""

import time
from random import Random

from tropkex import SemigroupOpKind, recover_key, run_exchange, setup

print("=== a small instance, step by step ===")
rng = Random(5)
params = setup(k=3, N=50, K=10, op=SemigroupOpKind.CIRC, rng=rng)
transcript, alice_key, bob_key = run_exchange(params, rng)
print("shared key (known to the parties):", alice_key.rows)

result = recover_key(transcript)
print("eavesdropper recovers           :", result.recovered_key.rows)
print(f"found exponent m' = {result.m_prime}, doubling bound t = {result.t}, "
      f"{result.op_count} pair operations (bound K^2+K = {10**2 + 10})")
assert result.recovered_key == alice_key
print()

print("=== a plateau: the recovered exponent differs, the key does not ===")
from tropkex import ProtocolParams, TropicalMatrix


class Queue:
    def __init__(self, *values):
        self.values = list(values)

    def randint(self, lo, hi):
        return self.values.pop(0)


flat = ProtocolParams(
    k=1, N=1000, K=8, op=SemigroupOpKind.CIRC,
    M=TropicalMatrix([[5]]), H=TropicalMatrix([[0]]),
)
transcript, key, _ = run_exchange(flat, Queue(7, 5))
result = recover_key(transcript)
print(f"true m = 7, recovered m' = {result.m_prime}, "
      f"recovered key {result.recovered_key.rows} == shared key {key.rows}")
assert result.recovered_key == key
print()

print("=== the suggested full-size parameters fall in seconds ===")
rng = Random(12345)
params = setup(k=10, N=1000, K=200, op=SemigroupOpKind.CIRC, rng=rng)
start = time.perf_counter()
transcript, alice_key, _ = run_exchange(params, rng)
exchanged = time.perf_counter()
result = recover_key(transcript)
done = time.perf_counter()
assert result.recovered_key == alice_key
print(f"k=10, entries in [-1000, 1000], 200-bit exponents:")
print(f"  exchange took {exchanged - start:.2f}s, "
      f"attack took {done - exchanged:.2f}s, "
      f"op_count {result.op_count} <= {200**2 + 200}")
print("  growing K only helps the attacker: the parties pay O(K) operations,")
print("  the eavesdropper O(K^2).")
