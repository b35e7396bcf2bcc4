# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernel for the equal-area dynamic program (hot path).

Mirrors eqbreaks._fallback exactly; see that module for the algorithm
commentary.
"""
import numpy as np

BACKEND = "cython"


def dp_equal_area_table(prefix_in, int k):
    cdef double[::1] prefix = np.ascontiguousarray(prefix_in, dtype=np.float64)
    cdef Py_ssize_t n = prefix.shape[0] - 1
    cdef double avg = prefix[n] / k

    prev_arr = np.empty(n + 1, dtype=np.float64)
    cur_arr = np.empty(n + 1, dtype=np.float64)
    # one contiguous row per break column: sequential writes, int32 halves
    # the memory traffic at n = 10^6
    table_arr = np.zeros((k - 1, n + 1), dtype=np.int32)
    cdef double[::1] prev = prev_arr
    cdef double[::1] cur = cur_arr
    cdef int[:, ::1] table = table_arr

    cdef Py_ssize_t m, b, brk
    cdef double e_lo, e_hi

    for m in range(n + 1):
        prev[m] = abs(prefix[m] - avg)

    for b in range(1, k):
        brk = n
        for m in range(n, -1, -1):
            if brk > m:
                brk = m
            while brk > 0 and prefix[m] - prefix[brk] < avg:
                brk -= 1
            if brk + 1 <= m:
                e_hi = prev[brk + 1] + abs(prefix[m] - prefix[brk + 1] - avg)
                e_lo = prev[brk] + abs(prefix[m] - prefix[brk] - avg)
                if e_hi < e_lo:
                    brk += 1
            cur[m] = prev[brk] + abs(prefix[m] - prefix[brk] - avg)
            table[b - 1, m] = brk
        prev, cur = cur, prev

    return table_arr
