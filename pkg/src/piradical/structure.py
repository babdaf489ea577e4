"""Prime sets, conjugacy classes, normal closures, and the pi-radical.

For a set of primes pi, a pi-number has all its prime divisors in pi and a
pi-group has pi-number order.  The pi-radical ``O_pi(G)`` is the largest
normal pi-subgroup of G.  It is computed here from its element
characterization: x lies in ``O_pi(G)`` exactly when the normal closure
``<x^G>`` is a pi-group, so

    O_pi(G) = join of the normal closures ``<x^G>`` that are pi-groups,
              x ranging over conjugacy class representatives.

(The join of normal pi-subgroups is again a normal pi-subgroup, every
element of O_pi contributes its whole class, and conversely each kept
closure is normal and pi, hence inside O_pi.)  ``normal_subgroups`` uses the
same building blocks: every normal subgroup is a union of classes, hence a
join of class closures, so closing the set of class closures under pairwise
join enumerates all normal subgroups exactly.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import (
    ClassTooLarge,
    InvariantViolation,
    NotAMember,
    TooLarge,
)
from .factored import FactoredInteger, is_prime
from .groups import PermGroup
from .perms import Permutation, compose_images, conjugate_images

# ---------------------------------------------------------------------------
# prime sets


@dataclass(frozen=True)
class PrimeSet:
    """A finite or cofinite set of primes.

    ``cofinite=False``: the set is exactly ``primes``.
    ``cofinite=True``: the set is all primes except ``primes``.

    Text syntax: ``"2,3,5"`` for a finite set, ``"all-except:5,7"`` for a
    cofinite one (``"all-except:"`` is the set of all primes, ``""`` the
    empty set).
    """

    primes: frozenset[int] = frozenset()
    cofinite: bool = False

    @classmethod
    def of(cls, *primes: int) -> "PrimeSet":
        return cls(cls._validate(primes), False)

    @classmethod
    def all_except(cls, *primes: int) -> "PrimeSet":
        return cls(cls._validate(primes), True)

    @staticmethod
    def _validate(primes: Iterable[int]) -> frozenset[int]:
        ps = frozenset(primes)
        for p in ps:
            if not is_prime(p):
                raise ValueError(f"{p} is not prime")
        return ps

    @classmethod
    def parse(cls, text: str) -> "PrimeSet":
        s = text.strip()
        cofinite = False
        if s.startswith("all-except:"):
            cofinite = True
            s = s[len("all-except:") :]
        parts = [t for t in s.replace(",", " ").split() if t]
        try:
            nums = [int(t) for t in parts]
        except ValueError:
            raise ValueError(f"bad prime set {text!r}: non-integer entry")
        return cls(cls._validate(nums), cofinite)

    def contains(self, p: int) -> bool:
        return (p not in self.primes) if self.cofinite else (p in self.primes)

    def __contains__(self, p: int) -> bool:
        return self.contains(p)

    def __str__(self) -> str:
        body = ",".join(str(p) for p in sorted(self.primes))
        return f"all-except:{body}" if self.cofinite else body


def is_pi_number(n: FactoredInteger, pi: PrimeSet) -> bool:
    """True when every prime divisor of ``n`` lies in ``pi``."""
    return all(pi.contains(p) for p in n.prime_support)


def is_pi_group(G: PermGroup, pi: PrimeSet) -> bool:
    return is_pi_number(G.order, pi)


# ---------------------------------------------------------------------------
# conjugacy


def conjugation_orbit(
    G: PermGroup,
    x: Permutation,
    cap: int = 10**5,
    with_witnesses: bool = True,
) -> tuple[list[Permutation], list[Permutation] | None, bool]:
    """Orbit of ``x`` under G-conjugation by breadth-first search over the
    group's generators, with conjugating witnesses: ``x ** w[i] == orbit[i]``
    and ``orbit[0] == x``, ``w[0] == identity``.

    Returns ``(members, witnesses, complete)``.  If the orbit exceeds
    ``cap`` the search stops early and ``complete`` is False (the truncated
    prefix is still a genuine subset of the class, in deterministic order).
    """
    ident = Permutation.identity(G.degree)
    members = [x]
    witnesses = [ident] if with_witnesses else None
    seen = {x.images}
    gens = [g.images for g in G.generators]
    queue_idx = 0
    while queue_idx < len(members):
        m = members[queue_idx].images
        w = witnesses[queue_idx].images if with_witnesses else None
        queue_idx += 1
        for g in gens:
            y = conjugate_images(m, g)
            if y not in seen:
                if len(members) >= cap:
                    return members, witnesses, False
                seen.add(y)
                members.append(Permutation(y))
                if with_witnesses:
                    witnesses.append(Permutation(compose_images(w, g)))
    return members, witnesses, True


@dataclass
class ConjugacyClass:
    """A (possibly truncated) conjugacy class with conjugating witnesses."""

    representative: Permutation
    members: tuple[Permutation, ...]
    witnesses: tuple[Permutation, ...]
    complete: bool

    @classmethod
    def compute(cls, G: PermGroup, x: Permutation, cap: int = 10**5) -> "ConjugacyClass":
        if not G.contains(x):
            raise NotAMember(f"{x} is not in the group")
        members, wits, complete = conjugation_orbit(G, x, cap=cap)
        return cls(x, tuple(members), tuple(wits), complete)

    @property
    def size(self) -> int:
        return len(self.members)


def centralizer_order(G: PermGroup, x: Permutation, cap: int = 10**5) -> FactoredInteger:
    """|C_G(x)| = |G| / |x^G| by orbit-stabilizer, in factored form."""
    members, _, complete = conjugation_orbit(G, x, cap=cap, with_witnesses=False)
    if not complete:
        raise ClassTooLarge(f"class of {x} exceeds cap {cap}")
    if not G.contains(x):
        raise NotAMember(f"{x} is not in the group")
    return G.order.exact_div(FactoredInteger.from_int(len(members)))


def class_representatives(
    G: PermGroup, cap: int = 10**5
) -> list[tuple[Permutation, int]]:
    """One representative per conjugacy class with its class size, found by a
    deterministic scan of the canonical element enumeration (first-seen
    element of each class represents it).  The sizes summing to |G| is a
    built-in coverage certificate.  Requires ``|G| <= cap``."""
    if G.order_int > cap:
        raise TooLarge(f"group order {G.order_int} exceeds cap {cap}")
    reps: list[tuple[Permutation, int]] = []
    assigned: set[tuple[int, ...]] = set()
    for e in G.elements(cap):
        if e.images in assigned:
            continue
        members, _, complete = conjugation_orbit(G, e, cap=G.order_int, with_witnesses=False)
        assert complete
        assigned.update(m.images for m in members)
        reps.append((e, len(members)))
    if sum(size for _, size in reps) != G.order_int:
        raise InvariantViolation("class sizes do not sum to the group order")
    return reps


def element_order_spectrum(G: PermGroup, cap: int = 10**5) -> frozenset[int]:
    """The set of element orders of G (orders are class functions, so class
    representatives suffice)."""
    return frozenset(rep.order() for rep, _ in class_representatives(G, cap))


def has_element_of_order(G: PermGroup, n: int, cap: int = 10**5) -> bool:
    return n in element_order_spectrum(G, cap)


# ---------------------------------------------------------------------------
# normal closures, normal subgroups, the radical


def normal_closure(G: PermGroup, elements: Sequence[Permutation]) -> PermGroup:
    """Smallest normal subgroup of G containing ``elements``: close the
    generating set under conjugation by G's generators, growing the chain
    incrementally."""
    for x in elements:
        if not G.contains(x):
            raise NotAMember(f"{x} is not in the group")
    seedlist = [x for x in elements if not x.is_identity()]
    H = PermGroup.from_generators(seedlist, degree=G.degree)
    queue = list(seedlist)
    gens = [g.images for g in G.generators]
    while queue:
        h = queue.pop().images
        for g in gens:
            t = conjugate_images(h, g)
            if not H._contains_tuple(t):
                tp = Permutation(t)
                H = H.extend(tp)
                queue.append(tp)
    return H


def class_closures(
    G: PermGroup, cap: int = 10**5
) -> list[tuple[Permutation, PermGroup]]:
    """(representative, normal closure of its class) for every conjugacy
    class.  The closures depend only on G, so callers sweeping many prime
    sets compute this once and reuse it."""
    return [
        (rep, normal_closure(G, [rep])) for rep, _ in class_representatives(G, cap)
    ]


def _join(G: PermGroup, parts: Sequence[PermGroup]) -> PermGroup:
    gens: list[Permutation] = []
    for part in parts:
        gens.extend(part.generators)
    return PermGroup.from_generators(gens, degree=G.degree)


def pi_radical(
    G: PermGroup,
    pi: PrimeSet,
    closures: Sequence[tuple[Permutation, PermGroup]] | None = None,
    cap: int = 10**5,
) -> PermGroup:
    """The largest normal pi-subgroup ``O_pi(G)``, as the join of the class
    closures that are pi-groups (see the module docstring for why this is
    exact).  Pass precomputed ``closures`` (from :func:`class_closures`)
    when sweeping many prime sets over one group."""
    if closures is None:
        closures = class_closures(G, cap)
    kept = [cl for _, cl in closures if is_pi_group(cl, pi)]
    radical = _join(G, kept)
    if not is_pi_group(radical, pi):
        raise InvariantViolation(
            "join of normal pi-subgroups failed to be a pi-group"
        )
    if not radical.is_normal_in(G):
        raise InvariantViolation("pi-radical candidate is not normal")
    return radical


def normal_subgroups(G: PermGroup, cap: int = 10**5) -> list[PermGroup]:
    """All normal subgroups of G (|G| <= cap), as the join-closure of the
    conjugacy-class normal closures, sorted by order.  Independent of
    :func:`pi_radical` except for sharing :func:`class_closures`."""
    closures = [cl for _, cl in class_closures(G, cap)]
    found: list[PermGroup] = [PermGroup.trivial(G.degree)]

    def known(H: PermGroup) -> bool:
        return any(H.same_group_as(K) for K in found if K.order_int == H.order_int)

    for cl in closures:
        if not known(cl):
            found.append(cl)
    while True:
        added = False
        snapshot = list(found)
        for i, A in enumerate(snapshot):
            for B in snapshot[i + 1 :]:
                J = _join(G, [A, B])
                if not known(J):
                    found.append(J)
                    added = True
        if not added:
            break
    return sorted(found, key=lambda H: (H.order_int, H.orbit_partition))


def radical_is_trivial_by_prime_degree(G: PermGroup, pi: PrimeSet) -> bool:
    """Exact certificate that the pi-radical of G is trivial, usable when
    enumeration is out of reach: G transitive and faithful of prime degree r
    with r not in pi.

    The orbits of a normal subgroup are permuted transitively by the group,
    so they share one size s dividing the degree.  For prime degree, s = 1
    forces the subgroup to fix every point (trivial, by faithfulness), and
    s = r makes it transitive, so r divides its order by orbit-stabilizer
    and it is not a pi-group.  Every nontrivial normal subgroup therefore
    has order divisible by r, and the radical is trivial.
    """
    return is_prime(G.degree) and G.degree not in pi and G.is_transitive()
