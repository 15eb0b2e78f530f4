"""Compiled 3^n scans over disjoint vertex-set pairs (S, T).

Every function takes adjacency ``rows`` as an int64 array and a popcount
table covering all masks below ``2**n``.
"""

import numpy as np
from numba import njit


def popcount_table(n):
    size = 1 << n
    table = np.zeros(size, dtype=np.int64)
    for i in range(1, size):
        table[i] = table[i >> 1] + (i & 1)
    return table


@njit(cache=True)
def _component(rows, n, rest):
    """Connected component of G<rest> containing the lowest vertex of ``rest``."""
    comp = rest & -rest
    frontier = comp
    while frontier:
        grow = 0
        for v in range(n):
            if frontier >> v & 1:
                grow |= rows[v]
        frontier = grow & rest & ~comp
        comp |= frontier
    return comp


@njit(cache=True)
def tutte_scan(rows, f, n, pc):
    """Disjoint (S, T) maximizing lhs - rhs of the f-factor inequality.

    Ties go to the smallest (|T|, T mask, S mask). Returns
    (S, T, lhs, rhs).
    """
    full = (1 << n) - 1
    best_diff = -(1 << 62)
    best_s = 0
    best_t = 0
    best_lhs = 0
    best_rhs = 0
    for s in range(full + 1):
        rhs = 0
        for v in range(n):
            if s >> v & 1:
                rhs += f[v]
        comp_s = full & ~s
        t = comp_s
        while True:
            # t runs over all submasks of comp_s, including 0
            lhs = 0
            for v in range(n):
                if t >> v & 1:
                    lhs += f[v] - pc[rows[v] & comp_s]
            rest = comp_s & ~t
            while rest:
                comp = _component(rows, n, rest)
                rest &= ~comp
                par = 0
                for v in range(n):
                    if comp >> v & 1:
                        par += pc[rows[v] & t] + f[v]
                if par & 1:
                    lhs += 1
            diff = lhs - rhs
            better = False
            if diff > best_diff:
                better = True
            elif diff == best_diff:
                kt, kb = pc[t], pc[best_t]
                if kt < kb or (kt == kb and (t < best_t or (t == best_t and s < best_s))):
                    better = True
            if better:
                best_diff = diff
                best_s = s
                best_t = t
                best_lhs = lhs
                best_rhs = rhs
            if t == 0:
                break
            t = (t - 1) & comp_s
    return best_s, best_t, best_lhs, best_rhs


@njit(cache=True)
def partition_scan(rows, n, pc):
    """Disjoint (S, T) optimizing the 2-factor deficiency objective w.

    Order: max w, min |T|, max |S|, min oc, then smallest (T mask, S mask).
    Works with 2w = 2|T| - 2|S| - 2e(T) - e(T, V-S-T) + oc, which is an
    integer identity. Returns (S, T, 2w, oc).
    """
    full = (1 << n) - 1
    b_w2 = -(1 << 62)
    b_s = 0
    b_t = 0
    b_oc = 0
    for s in range(full + 1):
        ks = pc[s]
        comp_s = full & ~s
        t = comp_s
        while True:
            rest = comp_s & ~t
            two_e_t = 0
            e_t_rest = 0
            for v in range(n):
                if t >> v & 1:
                    two_e_t += pc[rows[v] & t]
                    e_t_rest += pc[rows[v] & rest]
            oc = 0
            r = rest
            while r:
                comp = _component(rows, n, r)
                r &= ~comp
                par = 0
                for v in range(n):
                    if comp >> v & 1:
                        par += pc[rows[v] & t]
                if par & 1:
                    oc += 1
            kt = pc[t]
            w2 = 2 * kt - 2 * ks - two_e_t - e_t_rest + oc
            better = False
            if w2 > b_w2:
                better = True
            elif w2 == b_w2:
                kbt = pc[b_t]
                kbs = pc[b_s]
                if kt < kbt:
                    better = True
                elif kt == kbt:
                    if ks > kbs:
                        better = True
                    elif ks == kbs:
                        if oc < b_oc:
                            better = True
                        elif oc == b_oc:
                            if t < b_t or (t == b_t and s < b_s):
                                better = True
            if better:
                b_w2 = w2
                b_s = s
                b_t = t
                b_oc = oc
            if t == 0:
                break
            t = (t - 1) & comp_s
    return b_s, b_t, b_w2, b_oc
