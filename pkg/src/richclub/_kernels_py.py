"""Pure-Python degree-preserving edge-swap kernel.

Fallback twin of the compiled ``_kernels`` extension: given the same edge
arrays and seed, both produce bit-identical results. Every proposal draws
exactly three values from a splitmix64 stream (edge i, edge j, orientation),
so the random stream does not depend on accept/reject outcomes.
"""

from __future__ import annotations

from ._seed import GOLDEN, MASK64, mix64

BACKEND_NAME = "python"


def build_edge_set(us, vs) -> set[int]:
    return {(a << 32) | b if a < b else (b << 32) | a for a, b in zip(us, vs)}


def swap_attempt(us: list, vs: list, edge_set: set, state: int) -> tuple[bool, int]:
    """One swap proposal against the working edge lists.

    Picks two edges and an orientation, rewires (a,b),(c,d) to (a,d),(c,b)
    unless that would create a self-loop or duplicate edge. Returns
    (applied, advanced rng state); degrees are unchanged either way.
    """
    m = len(us)
    state = (state + GOLDEN) & MASK64
    i = (mix64(state) * m) >> 64
    state = (state + GOLDEN) & MASK64
    j = (mix64(state) * m) >> 64
    state = (state + GOLDEN) & MASK64
    side = mix64(state) & 1
    if i == j:
        return False, state
    a, b = us[i], vs[i]
    c, d = us[j], vs[j]
    if side:
        c, d = d, c
    if a == d or c == b:
        return False, state
    k1 = (a << 32) | d if a < d else (d << 32) | a
    k2 = (c << 32) | b if c < b else (b << 32) | c
    if k1 == k2 or k1 in edge_set or k2 in edge_set:
        return False, state
    edge_set.discard((a << 32) | b if a < b else (b << 32) | a)
    edge_set.discard((c << 32) | d if c < d else (d << 32) | c)
    edge_set.add(k1)
    edge_set.add(k2)
    us[i], vs[i] = a, d
    us[j], vs[j] = c, b
    return True, state


def randomize(u, v, n_nodes: int, seed: int, target_success: int, max_attempts: int) -> int:
    """Apply swaps to the int64 edge arrays in place.

    Stops after ``target_success`` applied swaps or ``max_attempts`` proposals,
    whichever comes first. Returns the number of applied swaps.
    """
    us = [int(x) for x in u]
    vs = [int(x) for x in v]
    edge_set = build_edge_set(us, vs)
    state = seed & MASK64
    success = 0
    attempts = 0
    while success < target_success and attempts < max_attempts:
        attempts += 1
        applied, state = swap_attempt(us, vs, edge_set, state)
        if applied:
            success += 1
    u[:] = us
    v[:] = vs
    return success
