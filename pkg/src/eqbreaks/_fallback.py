"""Pure-Python kernel for the equal-area dynamic program.

Same contract as the compiled module in ``_speedups.pyx``; selected at
import time by ``kernels`` when the extension is unavailable or when
EQBREAKS_PURE is set.
"""

BACKEND = "python"


def dp_equal_area_table(prefix, k):
    """Fill the last-break table for the O(n*k) equal-area DP.

    Returns table[b][m] = optimal position of break b+1 when partitioning
    the first m items with b+1 breaks.  Columns are filled back-to-front:
    within a column, m and the break cursor move backward together, so each
    column costs O(n).  Candidate comparison is strict less-than, so exact
    ties keep the lower candidate.
    """
    n = len(prefix) - 1
    avg = prefix[n] / k
    prev = [abs(prefix[m] - avg) for m in range(n + 1)]
    cur = [0.0] * (n + 1)
    table = [[0] * (n + 1) for _ in range(k - 1)]
    for b in range(1, k):
        col = table[b - 1]
        brk = n
        for m in range(n, -1, -1):
            if brk > m:
                brk = m
            while brk > 0 and prefix[m] - prefix[brk] < avg:
                brk -= 1
            if brk + 1 <= m and (
                prev[brk + 1] + abs(prefix[m] - prefix[brk + 1] - avg)
                < prev[brk] + abs(prefix[m] - prefix[brk] - avg)
            ):
                brk += 1
            cur[m] = prev[brk] + abs(prefix[m] - prefix[brk] - avg)
            col[m] = brk
        prev, cur = cur, prev
    return table
