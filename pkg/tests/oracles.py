"""Naive brute-force reference implementations used as independent oracles.

Everything here works on plain frozensets and element loops, deliberately
avoiding the package's bitmask and lattice machinery, so that agreement is a
genuine dual-route check.
"""

from itertools import combinations


def naive_closure(table, seed):
    cur = set(seed) | {0}
    while True:
        new = set(cur)
        for a in cur:
            for b in cur:
                new.add(table[a][b])
        if new == cur:
            return frozenset(cur)
        cur = new


def naive_is_subgroup(table, elems):
    s = set(elems)
    if 0 not in s:
        return False
    return all(table[a][b] in s for a in s for b in s)


def naive_inverse(table, a):
    return table[a].index(0)


def naive_conjugate(table, g, x):
    return table[table[g][x]][naive_inverse(table, g)]


def naive_is_normal(table, elems):
    n = len(table)
    s = set(elems)
    return all(naive_conjugate(table, g, x) in s for g in range(n) for x in s)


def naive_all_subgroups(table):
    """Every subgroup, found by closing every subset seed of bounded size."""
    n = len(table)
    found = {frozenset([0])}
    frontier = [frozenset([0])]
    while frontier:
        s = frontier.pop()
        for g in range(n):
            if g in s:
                continue
            c = naive_closure(table, s | {g})
            if c not in found:
                found.add(c)
                frontier.append(c)
    return sorted(found, key=lambda s: (len(s), sorted(s)))


def naive_normal_subgroups(table):
    return [s for s in naive_all_subgroups(table) if naive_is_normal(table, s)]


def naive_element_order(table, x):
    o = 1
    y = x
    while y != 0:
        y = table[y][x]
        o += 1
    return o


def naive_normal_closure(table, seed):
    n = len(table)
    conj = {naive_conjugate(table, g, x) for g in range(n) for x in seed}
    return naive_closure(table, conj)


def naive_orbit_subgroup(table, conjugators, x):
    return naive_closure(table, {naive_conjugate(table, u, x) for u in conjugators})


def naive_zero_divisor(table, conjugators):
    """First (x, y) with trivially-meeting, elementwise-commuting orbit subgroups."""
    n = len(table)
    orbits = {x: naive_orbit_subgroup(table, conjugators, x) for x in range(1, n)}
    for x in range(1, n):
        for y in range(x + 1, n):
            if orbits[x] & orbits[y] != {0}:
                continue
            if all(table[a][b] == table[b][a] for a in orbits[x] for b in orbits[y]):
                return x, y
    return None


def naive_intersection_prime(table, p_elems):
    """Elementwise intersection primality over normal closures."""
    n = len(table)
    p = set(p_elems)
    closures = {x: naive_normal_closure(table, {x}) for x in range(n)}
    for x in range(1, n):
        for y in range(1, n):
            if closures[x] & closures[y] <= p and x not in p and y not in p:
                return False
    return True


def naive_commutator_subgroup(table, left, right):
    n = len(table)
    comms = set()
    for x in left:
        for y in right:
            xy = table[x][y]
            comms.add(table[table[xy][naive_inverse(table, x)]][naive_inverse(table, y)])
    return naive_closure(table, comms)
