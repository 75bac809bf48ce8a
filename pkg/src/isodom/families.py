"""Closed-form isolate secure domination numbers for named families, and the
explicit ISDS of a path.
"""
from math import ceil

INFEASIBLE = None


def _three_sevenths(n):
    return ceil(3 * n / 7)


def closed_form_isds_number(family, *sizes):
    """Value of gamma_0s for the family, or ``None`` when no ISDS exists.

    Domains: path n >= 4; cycle n >= 4; complete n >= 1; complete_bipartite
    m, n >= 1 with (m, n) != (1, 1). C_4 is K_{2,2} and has no ISDS, so it
    reports ``None`` rather than the 3n/7 value.
    """
    if family in ("path", "cycle"):
        (n,) = sizes
        if n < 4:
            raise ValueError(f"{family} closed form needs n >= 4")
        if family == "cycle" and n == 4:
            return INFEASIBLE
        return _three_sevenths(n)
    if family == "complete":
        (n,) = sizes
        if n < 1:
            raise ValueError("complete graph needs n >= 1")
        return 1
    if family == "complete_bipartite":
        m, n = sizes
        if min(m, n) < 1:
            raise ValueError("complete_bipartite needs m, n >= 1")
        if (m, n) == (1, 1):
            raise ValueError("K_{1,1} is complete; use family 'complete'")
        return INFEASIBLE
    raise ValueError(f"no closed form for family {family!r}")


def path_isds_construction(n):
    """Independent ISDS of P_n (vertices 0..n-1) of size ceil(3n/7).

    With n = 7m + r: every block of seven contributes its 2nd, 4th and 6th
    vertex, then the tail takes 1, 2 or 3 alternating vertices for
    r in {1,2}, {3,4}, {5,6}. The block rule needs m >= 1 when r = 4, so
    P_4 uses its two endpoints instead.
    """
    if n < 4:
        raise ValueError("path construction needs n >= 4")
    if n == 4:
        return (0, 3)
    m, r = divmod(n, 7)
    out = []
    for i in range(m):
        out += [7 * i + 1, 7 * i + 3, 7 * i + 5]
    tail = (r + 1) // 2
    out += [7 * m + 2 * j for j in range(tail)]
    return tuple(out)
