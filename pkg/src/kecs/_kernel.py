"""Compiled capped s-t flow on a CSR snapshot with a deleted-edge mask.

Unit-capacity undirected edges; ``flow[e]`` is the net flow from ``ea[e]``
to ``eb[e]`` and lies in {-1, 0, 1}. Augmenting paths come from a
bidirectional BFS that always grows the smaller frontier by one level, so
a query that fails is paid for by the smaller side of the cut.
"""

import numba
import numpy as np


@numba.njit(cache=True)
def _augment_once(s, t, indptr, adj_v, adj_e, ea, eb, alive, flow,
                  mark_f, mark_b, par_f, par_b, qf, qb, stamp, touched, n_touched):
    mark_f[s] = stamp
    mark_b[t] = stamp
    qf[0] = s
    qb[0] = t
    f_lo, f_hi = 0, 1
    b_lo, b_hi = 0, 1
    meet = -1
    while meet < 0:
        if f_lo == f_hi or b_lo == b_hi:
            return n_touched, False
        if f_hi - f_lo <= b_hi - b_lo:
            end = f_hi
            for i in range(f_lo, end):
                x = qf[i]
                for j in range(indptr[x], indptr[x + 1]):
                    e = adj_e[j]
                    if not alive[e]:
                        continue
                    net = flow[e] if ea[e] == x else -flow[e]
                    if net >= 1:
                        continue
                    y = adj_v[j]
                    if mark_f[y] == stamp:
                        continue
                    mark_f[y] = stamp
                    par_f[y] = e
                    qf[f_hi] = y
                    f_hi += 1
                    if mark_b[y] == stamp:
                        meet = y
                        break
                if meet >= 0:
                    break
            f_lo = end
        else:
            end = b_hi
            for i in range(b_lo, end):
                y = qb[i]
                for j in range(indptr[y], indptr[y + 1]):
                    e = adj_e[j]
                    if not alive[e]:
                        continue
                    x = adj_v[j]
                    # residual arc x -> y
                    net = flow[e] if ea[e] == x else -flow[e]
                    if net >= 1:
                        continue
                    if mark_b[x] == stamp:
                        continue
                    mark_b[x] = stamp
                    par_b[x] = e
                    qb[b_hi] = x
                    b_hi += 1
                    if mark_f[x] == stamp:
                        meet = x
                        break
                if meet >= 0:
                    break
            b_lo = end

    # push one unit s -> meet -> t
    y = meet
    while y != s:
        e = par_f[y]
        x = ea[e] + eb[e] - y
        if ea[e] == x:
            flow[e] += 1
        else:
            flow[e] -= 1
        touched[n_touched] = e
        n_touched += 1
        y = x
    x = meet
    while x != t:
        e = par_b[x]
        y = ea[e] + eb[e] - x
        if ea[e] == x:
            flow[e] += 1
        else:
            flow[e] -= 1
        touched[n_touched] = e
        n_touched += 1
        x = y
    return n_touched, True


@numba.njit(cache=True)
def capped_flow(s, t, cap, indptr, adj_v, adj_e, ea, eb, alive, flow,
                mark_f, mark_b, par_f, par_b, qf, qb, stamp, touched):
    """Return ``(min(lambda(s, t), cap), next_stamp)``; ``flow`` is left zeroed."""
    value = 0
    n_touched = 0
    while value < cap:
        stamp += 1
        n_touched, found = _augment_once(s, t, indptr, adj_v, adj_e, ea, eb, alive, flow,
                                         mark_f, mark_b, par_f, par_b, qf, qb, stamp,
                                         touched, n_touched)
        if not found:
            break
        value += 1
    for i in range(n_touched):
        flow[touched[i]] = 0
    return value, stamp


def build_csr(n, ea, eb):
    """CSR incidence arrays for ``n`` vertices and edges ``(ea[i], eb[i])``."""
    m = len(ea)
    deg = np.bincount(np.concatenate((ea, eb)), minlength=n) if m else np.zeros(n, np.int64)
    indptr = np.zeros(n + 1, np.int64)
    np.cumsum(deg, out=indptr[1:])
    ends = np.concatenate((ea, eb))
    others = np.concatenate((eb, ea))
    eidx = np.concatenate((np.arange(m), np.arange(m)))
    order = np.argsort(ends, kind="stable")
    return indptr, others[order].astype(np.int64), eidx[order].astype(np.int64)
