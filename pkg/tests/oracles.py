"""Definition-literal reference implementations.

Everything here works on plain Python sets and brute force, shares no code
with the package beyond reading ``n`` and the arc/edge lists, and is only
meant for small instances.
"""

from itertools import combinations, permutations, product


def arcs_of(d):
    return {(u, v) for u, v in d.arcs()}


def out_nb(arcs, u):
    return {b for a, b in arcs if a == u}


def in_nb(arcs, u):
    return {a for a, b in arcs if b == u}


def subsets(vertices):
    vertices = list(vertices)
    for k in range(len(vertices) + 1):
        yield from combinations(vertices, k)


def is_strong(n, arcs):
    def reach(start, nb):
        seen = {start}
        stack = [start]
        while stack:
            u = stack.pop()
            for v in nb(arcs, u):
                if v not in seen:
                    seen.add(v)
                    stack.append(v)
        return seen

    return len(reach(0, out_nb)) == n and len(reach(0, in_nb)) == n


def neighbourhoods(n, arcs):
    outs = {u: set() for u in range(n)}
    ins = {u: set() for u in range(n)}
    for u, v in arcs:
        outs[u].add(v)
        ins[v].add(u)
    return outs, ins


def is_q_set(nbhd, s):
    if len(s) < 2:
        return False
    return all(any(nbhd[u] & nbhd[v] for v in s if v != u) for u in s)


def is_s_quadrangular(n, arcs):
    for nbhd in neighbourhoods(n, arcs):
        for s in subsets(range(n)):
            if not is_q_set(nbhd, s):
                continue
            union = set()
            for u, v in combinations(s, 2):
                union |= nbhd[u] & nbhd[v]
            if len(union) < len(s):
                return False
    return True


def hall_condition(n, arcs):
    """Both-sided Hall condition with loops removed."""
    outs, ins = neighbourhoods(n, {(u, v) for u, v in arcs if u != v})
    for x in subsets(range(n)):
        if not x:
            continue
        if len(set().union(*(outs[u] for u in x))) < len(x):
            return False
        if len(set().union(*(ins[u] for u in x))) < len(x):
            return False
    return True


def has_cycle_factor(n, arcs):
    """A fixed-point-free permutation sigma with every i -> sigma(i) an arc."""
    return any(
        all(p[i] != i and (i, p[i]) in arcs for i in range(n)) for p in permutations(range(n))
    )


def hamilton_cycles(n, arcs):
    """All Hamilton cycles starting at 0, in lexicographic order (n >= 2)."""
    out = []
    for rest in permutations(range(1, n)):
        cyc = (0,) + rest
        if all(cyc[i] != cyc[(i + 1) % n] and (cyc[i], cyc[(i + 1) % n]) in arcs for i in range(n)):
            out.append(list(cyc))
    return out


def kronecker_arcs(na, arcs_a, nb_, arcs_b):
    return {
        (i * nb_ + j, k * nb_ + l)
        for (i, k) in arcs_a
        for (j, l) in arcs_b
    }


def f_factors(n, edges, f):
    """Every edge subset in which vertex v has degree f[v] (small graphs only)."""
    edges = sorted(edges)
    found = []
    for pick in product((0, 1), repeat=len(edges)):
        deg = [0] * n
        chosen = [e for e, b in zip(edges, pick) if b]
        for u, v in chosen:
            deg[u] += 1
            deg[v] += 1
        if deg == list(f):
            found.append(chosen)
    return found


def components(n, edges, keep):
    keep = set(keep)
    adj = {v: set() for v in keep}
    for u, v in edges:
        if u in keep and v in keep:
            adj[u].add(v)
            adj[v].add(u)
    comps, seen = [], set()
    for v in sorted(keep):
        if v in seen:
            continue
        comp, stack = {v}, [v]
        while stack:
            u = stack.pop()
            for w in adj[u] - comp:
                comp.add(w)
                stack.append(w)
        seen |= comp
        comps.append(comp)
    return comps


def tutte_max_violation(n, edges, f):
    """max over disjoint S, T of q(S,T) + sum_T (f - d_{G-S}) - sum_S f."""
    best = None
    for labels in product((0, 1, 2), repeat=n):
        s = {v for v in range(n) if labels[v] == 1}
        t = {v for v in range(n) if labels[v] == 2}
        rest = set(range(n)) - s - t
        q = 0
        for comp in components(n, edges, rest):
            e_qt = sum(1 for u, v in edges if (u in comp and v in t) or (v in comp and u in t))
            if (e_qt + sum(f[v] for v in comp)) % 2:
                q += 1
        deg_out_s = {v: sum(1 for a, b in edges if (a == v and b not in s) or (b == v and a not in s)) for v in t}
        lhs = q + sum(f[v] - deg_out_s[v] for v in t)
        rhs = sum(f[v] for v in s)
        if best is None or lhs - rhs > best:
            best = lhs - rhs
    return best


def conjecture_counts(n):
    """(strong, squad, hamiltonian) over all loopless labeled digraphs on n vertices."""
    pairs = [(i, j) for i in range(n) for j in range(n) if i != j]
    strong = squad = ham = 0
    for pick in product((0, 1), repeat=len(pairs)):
        arcs = {p for p, b in zip(pairs, pick) if b}
        if not is_strong(n, arcs):
            continue
        strong += 1
        if not is_s_quadrangular(n, arcs):
            continue
        squad += 1
        if hamilton_cycles(n, arcs):
            ham += 1
    return strong, squad, ham
