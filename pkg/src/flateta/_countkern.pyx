# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled scan kernel for sign-pattern residue counting.

This is the hot loop of the whole package: a filtered scan of all 2**k
sign patterns.  Patterns are split into 16-bit halves whose popcounts and
bit-weight sums come from precomputed tables, so the per-pattern work is
constant.  The numpy twin lives in ``flateta.combinatorics``; both must
produce identical histograms.
"""

from libc.string cimport memset

DEF TABLE_SIZE = 65536

cdef int _WEIGHT16[TABLE_SIZE]
cdef int _POP16[TABLE_SIZE]
cdef bint _tables_ready = False


cdef void _build_tables() noexcept:
    # weight = sum of (j+1) over set bits j; pop = number of set bits
    global _tables_ready
    cdef int t, j, w, p
    for t in range(TABLE_SIZE):
        w = 0
        p = 0
        for j in range(16):
            if (t >> j) & 1:
                p += 1
                w += j + 1
        _WEIGHT16[t] = w
        _POP16[t] = p
    _tables_ready = True


def dplus_residue_counts(int k, int n, long long offset):
    """Histogram of (weight + offset) mod n over positive-parity patterns.

    Scans all 2**k bit patterns (bit j set means sign +1 in slot j+1),
    keeps those whose number of clear bits is even (sign product +1), and
    bins w + offset modulo n, where w is the sum of j+1 over set bits j.
    Returns a list of n non-negative counts.
    """
    if k < 1 or k > 30:
        raise ValueError("k must be in 1..30 for the compiled kernel")
    if n < 1 or n > 64:
        raise ValueError("n must be in 1..64 for the compiled kernel")
    if not _tables_ready:
        _build_tables()

    cdef long long counts[64]
    memset(counts, 0, sizeof(counts))

    cdef unsigned long long total = (<unsigned long long> 1) << k
    cdef unsigned long long b
    cdef int kpar = k & 1
    cdef unsigned int lo, hi
    cdef int pop_hi
    cdef long long w, r

    for b in range(total):
        lo = <unsigned int> (b & 0xFFFF)
        hi = <unsigned int> (b >> 16)
        pop_hi = _POP16[hi]
        # positive sign product <=> number of clear bits (k - popcount) is even
        if ((_POP16[lo] + pop_hi) & 1) != kpar:
            continue
        # high-half bits sit at positions j+16, contributing j+17 each
        w = _WEIGHT16[lo] + _WEIGHT16[hi] + 16 * pop_hi
        r = (w + offset) % n
        if r < 0:
            r += n
        counts[r] += 1

    return [counts[j] for j in range(n)]
