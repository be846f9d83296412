"""Deterministic 64-bit seeding shared by the Python and compiled swap kernels.

The compiled kernel re-implements the same splitmix64 stream in C; the two
must stay in lockstep so both backends produce identical rewirings.
"""

MASK64 = (1 << 64) - 1
GOLDEN = 0x9E3779B97F4A7C15


def mix64(x: int) -> int:
    """splitmix64 finalizer."""
    x &= MASK64
    x ^= x >> 30
    x = (x * 0xBF58476D1CE4E5B9) & MASK64
    x ^= x >> 27
    x = (x * 0x94D049BB133111EB) & MASK64
    x ^= x >> 31
    return x


def derive_seed(master_seed: int, index: int) -> int:
    """Per-replicate seed: a well-mixed function of (master seed, replicate index)."""
    return mix64((master_seed + GOLDEN * (index + 1)) & MASK64)
