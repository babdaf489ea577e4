"""Brute-force reference implementations used to pin expected values.

Everything here works on explicit element sets via breadth-first closure —
no stabilizer chains, no sifting — so agreement with the library is a real
two-route check.  Only :class:`piradical.Permutation` arithmetic is shared
(and that layer is itself tested against hand-computed products).
"""

from __future__ import annotations

from sympy import factorint

from piradical import Permutation


def closure(gens: list[Permutation], degree: int) -> frozenset[Permutation]:
    """All products of the generators: breadth-first over right multiplication."""
    ident = Permutation.identity(degree)
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for a in frontier:
            for g in gens:
                b = a * g
                if b not in seen:
                    seen.add(b)
                    nxt.append(b)
        frontier = nxt
    return frozenset(seen)


def conjugacy_classes(elements: frozenset[Permutation]) -> list[frozenset[Permutation]]:
    """Partition by direct conjugation with every group element."""
    pool = set(elements)
    out = []
    while pool:
        x = min(pool)
        cls = frozenset(g.inverse() * x * g for g in elements)
        out.append(cls)
        pool -= cls
    return out


def centralizer_size(elements: frozenset[Permutation], x: Permutation) -> int:
    return sum(1 for g in elements if g * x == x * g)


def is_normal(elements: frozenset[Permutation], sub: frozenset[Permutation]) -> bool:
    return all(g.inverse() * n * g in sub for g in elements for n in sub)


def all_subgroups_two_generated(
    elements: frozenset[Permutation], degree: int
) -> set[frozenset[Permutation]]:
    """Subgroups arising as closures of one or two elements.  Complete for
    the fixture groups here (S_4, A_4, A_5, dihedral, cyclic), whose
    subgroups are all 2-generated."""
    elems = sorted(elements)
    subs: set[frozenset[Permutation]] = set()
    for i, a in enumerate(elems):
        subs.add(closure([a], degree))
        for b in elems[i + 1 :]:
            subs.add(closure([a, b], degree))
    return subs


def pi_radical_set(
    elements: frozenset[Permutation], degree: int, pi: set[int]
) -> frozenset[Permutation]:
    """Largest normal subgroup whose order's prime support lies in pi,
    found by filtering the (2-generated) subgroup list."""
    best = frozenset([Permutation.identity(degree)])
    for sub in all_subgroups_two_generated(elements, degree):
        if (
            len(sub) > len(best)
            and set(factorint(len(sub))) <= pi
            and is_normal(elements, sub)
        ):
            best = sub
    return best


def normal_subgroup_sets(
    elements: frozenset[Permutation], degree: int
) -> list[frozenset[Permutation]]:
    subs = all_subgroups_two_generated(elements, degree)
    return sorted(
        (s for s in subs if is_normal(elements, s)), key=lambda s: (len(s), sorted(s))
    )
