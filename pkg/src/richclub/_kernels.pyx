# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled degree-preserving edge-swap kernel.

Mirrors _kernels_py exactly: same splitmix64 stream, same proposal and
accept/reject logic, so both backends yield bit-identical rewirings.
"""

from libcpp.unordered_set cimport unordered_set
from libc.stdint cimport int64_t, uint64_t

BACKEND_NAME = "compiled"

cdef extern from *:
    ctypedef unsigned long long uint128 "unsigned __int128"

cdef uint64_t GOLDEN = 0x9E3779B97F4A7C15ULL


cdef inline uint64_t mix64(uint64_t x) nogil:
    x ^= x >> 30
    x *= 0xBF58476D1CE4E5B9ULL
    x ^= x >> 27
    x *= 0x94D049BB133111EBULL
    x ^= x >> 31
    return x


cdef inline uint64_t rand_below(uint64_t x, uint64_t n) nogil:
    return <uint64_t>((<uint128>x * <uint128>n) >> 64)


cdef inline uint64_t edge_key(uint64_t a, uint64_t b) nogil:
    if a < b:
        return (a << 32) | b
    return (b << 32) | a


def randomize(int64_t[::1] u, int64_t[::1] v, int n_nodes, object seed,
              long long target_success, long long max_attempts):
    """In-place double-edge-swap randomization; see _kernels_py.randomize."""
    cdef uint64_t state = <uint64_t>(int(seed) & 0xFFFFFFFFFFFFFFFF)
    cdef uint64_t m = <uint64_t>u.shape[0]
    cdef long long success = 0, attempts = 0
    cdef uint64_t i, j, side, a, b, c, d, tmp, k1, k2
    cdef unordered_set[uint64_t] edge_set
    cdef size_t idx

    if m == 0:
        return 0
    edge_set.reserve(<size_t>(2 * m))
    for idx in range(<size_t>m):
        edge_set.insert(edge_key(<uint64_t>u[idx], <uint64_t>v[idx]))

    with nogil:
        while success < target_success and attempts < max_attempts:
            attempts += 1
            state += GOLDEN
            i = rand_below(mix64(state), m)
            state += GOLDEN
            j = rand_below(mix64(state), m)
            state += GOLDEN
            side = mix64(state) & 1
            if i == j:
                continue
            a = <uint64_t>u[i]; b = <uint64_t>v[i]
            c = <uint64_t>u[j]; d = <uint64_t>v[j]
            if side:
                tmp = c; c = d; d = tmp
            # proposal: replace (a,b),(c,d) with (a,d),(c,b)
            if a == d or c == b:
                continue
            k1 = edge_key(a, d)
            k2 = edge_key(c, b)
            if k1 == k2 or edge_set.count(k1) or edge_set.count(k2):
                continue
            edge_set.erase(edge_key(a, b))
            edge_set.erase(edge_key(c, d))
            edge_set.insert(k1)
            edge_set.insert(k2)
            u[i] = <int64_t>a; v[i] = <int64_t>d
            u[j] = <int64_t>c; v[j] = <int64_t>b
            success += 1

    return success
