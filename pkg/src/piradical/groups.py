"""Permutation groups via a deterministic Schreier-Sims chain.

A group is stored as a base and strong generating set (BSGS) in the textbook
layout (Holt, *Handbook of Computational Group Theory*, ch. 4; Seress,
*Permutation Group Algorithms*): level ``i`` holds a base point ``b_i``, the
strong generators fixing ``b_0 .. b_{i-1}`` pointwise, and the orbit of
``b_i`` under those generators together with a transversal ``u_p`` mapping
``b_i`` to ``p``.  The construction is the deterministic algorithm: every
Schreier generator of every level is sifted through the deeper chain, and a
non-trivial residue is installed as a new strong generator (possibly on a
new base point), restarting verification at the deepest changed level.

Consequences used throughout the package:

* ``|G|`` is the product of the orbit lengths (kept factored, since each
  orbit length is at most the degree);
* membership testing is sifting;
* every element has a unique decomposition ``u^(k) u^(k-1) ... u^(1)`` into
  transversal representatives (deepest first under the package's
  left-to-right composition), which yields canonical element enumeration and
  exactly uniform seeded random elements.

``extend`` rebuilds a chain from an existing group's strong generators plus
new ones, reusing the parent's base; most Schreier generators then sift
instantly, which is what the width-search hot loop relies on.
"""

from __future__ import annotations

import math
import random
from functools import reduce
from typing import Iterable

from .errors import DegreeMismatch, TooLarge
from .factored import FactoredInteger
from .perms import Permutation, compose_images, inverse_images

Images = tuple[int, ...]


class _Level:
    """One stabilizer level of the chain.

    ``trans[p]`` is an element mapping the base point to ``p``;
    ``trans_inv[p]`` is its inverse (sifting multiplies by inverses only, so
    both directions are cached).
    """

    __slots__ = ("point", "gens", "orbit", "trans", "trans_inv")

    def __init__(self, point: int):
        self.point = point
        self.gens: list[Images] = []
        self.orbit: list[int] = []
        self.trans: dict[int, Images] = {}
        self.trans_inv: dict[int, Images] = {}

    def recompute(self, identity: Images) -> None:
        b = self.point
        orbit = self.orbit = [b]
        trans = self.trans = {b: identity}
        trans_inv = self.trans_inv = {b: identity}
        i = 0
        gens = self.gens
        while i < len(orbit):
            p = orbit[i]
            u = trans[p]
            for s in gens:
                q = s[p]
                if q not in trans:
                    w = tuple(s[j] for j in u)  # apply u, then s
                    trans[q] = w
                    trans_inv[q] = inverse_images(w)
                    orbit.append(q)
            i += 1


def _strip(h: Images, levels: list[_Level], start: int) -> tuple[Images, int]:
    """Sift ``h`` through levels ``start..``; return (residue, stop level)."""
    for j in range(start, len(levels)):
        lev = levels[j]
        beta = h[lev.point]
        if beta == lev.point:
            continue
        uinv = lev.trans_inv.get(beta)
        if uinv is None:
            return h, j
        h = tuple(uinv[i] for i in h)
    return h, len(levels)


def _first_moved(g: Images) -> int:
    for i, gi in enumerate(g):
        if gi != i:
            return i
    raise AssertionError("identity passed where a moved point was required")


def _build_levels(
    degree: int, gen_tuples: Iterable[Images], seed_base: Iterable[int] = ()
) -> list[_Level]:
    """Deterministic Schreier-Sims.  ``seed_base`` pre-installs base points
    (0-based) so extensions of an existing chain stay aligned with it."""
    identity = tuple(range(degree))
    levels: list[_Level] = []
    base_points: set[int] = set()

    def append_level(pt: int) -> None:
        levels.append(_Level(pt))
        base_points.add(pt)

    for b in seed_base:
        if 0 <= b < degree and b not in base_points:
            append_level(b)

    clean: list[Images] = []
    seen: set[Images] = set()
    for g in gen_tuples:
        if g != identity and g not in seen:
            seen.add(g)
            clean.append(g)

    # distribute input generators: g joins every level whose prefix of base
    # points it fixes, gaining a new base point if it fixes all of them
    for g in clean:
        idx = 0
        while idx < len(levels) and g[levels[idx].point] == levels[idx].point:
            idx += 1
        if idx == len(levels):
            append_level(_first_moved(g))
        for l in range(idx + 1):
            levels[l].gens.append(g)

    if not clean:
        return [lev for lev in levels if lev.gens]  # trivial group

    dirty = set(range(len(levels)))
    i = len(levels) - 1
    while i >= 0:
        lev = levels[i]
        if i in dirty:
            lev.recompute(identity)
            dirty.discard(i)
        jump = -1
        bpt = lev.point
        for beta in lev.orbit:
            u = lev.trans[beta]
            for x in lev.gens:
                w = tuple(x[j] for j in u)  # u then x
                tgt = w[bpt]
                if tgt != bpt:
                    uinv = lev.trans_inv[tgt]  # orbit is closed under gens
                    sg = tuple(uinv[j] for j in w)
                else:
                    sg = w
                if sg == identity:
                    continue
                h, j = _strip(sg, levels, i + 1)
                if h == identity:
                    continue
                # h fixes base points 0..j-1 and cannot be sifted at level j
                if j == len(levels):
                    append_level(_first_moved(h))
                for l in range(i + 1, j + 1):
                    if h not in levels[l].gens:
                        levels[l].gens.append(h)
                        dirty.add(l)
                jump = j
                break
            if jump >= 0:
                break
        if jump >= 0:
            i = jump  # deepest changed level; descent re-verifies the rest
        else:
            i -= 1
    return levels


class PermGroup:
    """A finite permutation group of fixed degree with a BSGS chain.

    Build with :meth:`from_generators` (or :meth:`trivial`); instances are
    immutable.  ``generators`` records the generating set the chain was built
    from (for a group made by :meth:`extend` this is the parent's strong
    generators plus the new elements).
    """

    def __init__(self, degree: int, generators: tuple[Permutation, ...], levels: list[_Level]):
        self.degree = degree
        self.generators = generators
        self._levels = levels
        self._identity: Images = tuple(range(degree))

    # -- constructors --------------------------------------------------------

    @classmethod
    def from_generators(
        cls,
        generators: Iterable[Permutation],
        degree: int | None = None,
        seed_base: Iterable[int] = (),
    ) -> "PermGroup":
        gens = tuple(generators)
        if degree is None:
            if not gens:
                raise ValueError("degree is required for an empty generating set")
            degree = gens[0].degree
        for g in gens:
            if g.degree != degree:
                raise DegreeMismatch(
                    f"generator degree {g.degree} != group degree {degree}"
                )
        levels = _build_levels(degree, (g.images for g in gens), seed_base)
        return cls(degree, gens, levels)

    @classmethod
    def trivial(cls, degree: int) -> "PermGroup":
        return cls.from_generators((), degree)

    def extend(self, *new_gens: Permutation) -> "PermGroup":
        """Group generated by this group together with ``new_gens``,
        rebuilt warm from this chain's strong generators and base."""
        gens = self.strong_generators + tuple(new_gens)
        return PermGroup.from_generators(
            gens, self.degree, seed_base=[lev.point for lev in self._levels]
        )

    # -- chain data ----------------------------------------------------------

    @property
    def base(self) -> tuple[int, ...]:
        """Base points, 1-based."""
        return tuple(lev.point + 1 for lev in self._levels)

    @property
    def strong_generators(self) -> tuple[Permutation, ...]:
        if not self._levels:
            return ()
        return tuple(Permutation(t) for t in self._levels[0].gens)

    @property
    def transversal_sizes(self) -> tuple[int, ...]:
        return tuple(len(lev.orbit) for lev in self._levels)

    @property
    def order_int(self) -> int:
        try:
            return self._order_int
        except AttributeError:
            self._order_int = math.prod(len(lev.orbit) for lev in self._levels)
            return self._order_int

    @property
    def order(self) -> FactoredInteger:
        try:
            return self._order
        except AttributeError:
            self._order = FactoredInteger.from_product(
                [len(lev.orbit) for lev in self._levels]
            )
            return self._order

    def is_trivial(self) -> bool:
        return self.order_int == 1

    # -- membership ----------------------------------------------------------

    def _sift_tuple(self, t: Images) -> Images:
        residue, _ = _strip(t, self._levels, 0)
        return residue

    def _contains_tuple(self, t: Images) -> bool:
        return self._sift_tuple(t) == self._identity

    def sift(self, p: Permutation) -> Permutation:
        """Residue of ``p`` after greedily dividing out transversal
        representatives; the identity exactly when ``p`` is a member."""
        if p.degree != self.degree:
            raise DegreeMismatch(f"degree {p.degree} vs group degree {self.degree}")
        return Permutation(self._sift_tuple(p.images))

    def contains(self, p: Permutation) -> bool:
        if p.degree != self.degree:
            raise DegreeMismatch(f"degree {p.degree} vs group degree {self.degree}")
        return self._contains_tuple(p.images)

    def __contains__(self, p: Permutation) -> bool:
        return self.contains(p)

    # -- enumeration and sampling ---------------------------------------------

    def elements(self, cap: int = 10**6) -> list[Permutation]:
        """All elements, in the canonical transversal-product order (the
        identity comes first).  Raises :class:`TooLarge` above ``cap``."""
        if self.order_int > cap:
            raise TooLarge(f"group order {self.order_int} exceeds cap {cap}")
        elems: list[Images] = [self._identity]
        for lev in reversed(self._levels):
            trans = lev.trans
            elems = [
                tuple(u[i] for i in e) for e in elems for u in map(trans.__getitem__, lev.orbit)
            ]
        return [Permutation(t) for t in elems]

    def element_tuples(self, cap: int = 10**6) -> set[Images]:
        """Image tuples of all elements, as a set (order-free fast variant)."""
        if self.order_int > cap:
            raise TooLarge(f"group order {self.order_int} exceeds cap {cap}")
        elems: list[Images] = [self._identity]
        for lev in reversed(self._levels):
            trans = lev.trans
            elems = [
                tuple(u[i] for i in e)
                for e in elems
                for u in map(trans.__getitem__, lev.orbit)
            ]
        return set(elems)

    def random_element(self, rng: random.Random | int = 0) -> Permutation:
        """Exactly uniform element from the seeded generator: one transversal
        representative is chosen per level and the unique-decomposition
        product is returned."""
        if isinstance(rng, int):
            rng = random.Random(rng)
        picks = [lev.trans[lev.orbit[rng.randrange(len(lev.orbit))]] for lev in self._levels]
        g = self._identity
        for u in reversed(picks):  # deepest level applies first
            g = tuple(u[i] for i in g)
        return Permutation(g)

    # -- structure helpers -----------------------------------------------------

    @property
    def orbit_partition(self) -> tuple[tuple[int, ...], ...]:
        """Orbits of the group on 1..degree as sorted tuples, sorted by
        least element.  Cached; used as a cheap isomorphism-invariant key."""
        try:
            return self._orbit_partition
        except AttributeError:
            parent = list(range(self.degree))

            def find(a: int) -> int:
                while parent[a] != a:
                    parent[a] = parent[parent[a]]
                    a = parent[a]
                return a

            gens = self._levels[0].gens if self._levels else []
            for g in gens:
                for i, gi in enumerate(g):
                    if gi != i:
                        ra, rb = find(i), find(gi)
                        if ra != rb:
                            parent[rb] = ra
            buckets: dict[int, list[int]] = {}
            for i in range(self.degree):
                buckets.setdefault(find(i), []).append(i + 1)
            self._orbit_partition = tuple(
                tuple(v) for v in sorted(buckets.values(), key=lambda b: b[0])
            )
            return self._orbit_partition

    def is_transitive(self) -> bool:
        return len(self.orbit_partition) == 1

    def is_subgroup_of(self, other: "PermGroup") -> bool:
        if self.degree != other.degree:
            raise DegreeMismatch(f"degree {self.degree} vs {other.degree}")
        return all(other._contains_tuple(g.images) for g in self.generators)

    def same_group_as(self, other: "PermGroup") -> bool:
        return (
            self.degree == other.degree
            and self.order_int == other.order_int
            and self.is_subgroup_of(other)
        )

    def is_normal_in(self, other: "PermGroup") -> bool:
        """True when every ``other``-conjugate of every generator of this
        group lies back in this group (so normality, given containment)."""
        if not self.is_subgroup_of(other):
            return False
        from .perms import conjugate_images

        for h in self.generators:
            for g in other.generators:
                if not self._contains_tuple(conjugate_images(h.images, g.images)):
                    return False
        return True

    def conjugated_by(self, g: Permutation) -> "PermGroup":
        from .perms import conjugate_images

        return PermGroup.from_generators(
            tuple(
                Permutation(conjugate_images(h.images, g.images))
                for h in self.generators
            ),
            self.degree,
        )

    # -- misc ------------------------------------------------------------------

    def __repr__(self) -> str:
        gens = ", ".join(str(g) for g in self.generators[:4])
        more = ", ..." if len(self.generators) > 4 else ""
        return f"<PermGroup deg {self.degree} order {self.order_int} = <{gens}{more}>>"
