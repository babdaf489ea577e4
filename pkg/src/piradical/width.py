"""Minimal numbers of conjugates needed to generate "large" subgroups.

Setting: a socle group L and an element x normalizing it, with ambient group
A = <L, x>.  For the class x^L of L-conjugates of x this module computes

* ``alpha``: the least k such that some k of the conjugates generate all of A;
* ``beta``:  the least k such that some k of the conjugates generate a
  subgroup of order divisible by a given prime r;
* ``bs_membership``: for a group G, a prime set pi and a width m, whether
  every element all of whose m-tuples of G-conjugates generate pi-subgroups
  already lies in the pi-radical O_pi(G);
* ``baer_suzuki_check``: the classical p-group special case, as an exact
  per-class equivalence test (a failure is an implementation bug, never a
  result).

Engine.  All predicates used here depend only on the *order* of the generated
subgroup and are therefore invariant under conjugation.  The search is a
breadth-first walk over subgroup states: level 1 is <x>, and a state at level
k+1 is obtained by adjoining one conjugate not already inside a level-k state.
Two soundness notes justify the pruning:

* Pinning: a tuple (y_1, ..., y_m) of conjugates may be conjugated (by an
  element of L) so that its first entry is x; the generated subgroup maps to
  a conjugate of the same order.  Searching only tuples starting at x is
  therefore exact for order predicates.
* Skipping redundant entries: a tuple with repeated (or already-generated)
  entries generates the same subgroup as the sub-tuple of its "new" entries,
  and any shorter witness pads to any larger width by repeating entries.
  Hence minimal widths and all-width failure certificates over tuples *with*
  repetition equal those over the non-redundant chains enumerated here.

Exhausting every level below k certifies minimality of a level-k success;
an emptied frontier ("saturated") certifies that no width at all succeeds.
States are deduplicated exactly: bucket by (order, orbit partition), then
confirm equality by sifting generators, so distinct subgroups are never
merged.

Two exact fast paths, both cross-checked in the test suite against the
generic engine:

* all generators are transpositions: <T> is the direct product of symmetric
  groups on the connected components of the edge graph of T (a textbook
  fact, exposed separately as :class:`TranspositionGraph`), so states reduce
  to partitions of the point set — no chains are built at all;
* a pair of involutions <x, y> is dihedral of order 2*|xy|, so terminal
  pair scans need only a product order, not a chain.
"""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass, field, replace
from functools import lru_cache
from typing import Callable, Iterable, Sequence

from .errors import (
    BudgetExhausted,
    CentralizesSocle,
    DegreeMismatch,
    InvariantViolation,
    NotATransposition,
    NotNormalizing,
    PiContainsTwo,
    PowerIsIdentity,
    RNotDividingOrder,
    TooLarge,
)
from .factored import FactoredInteger, is_prime
from .groups import PermGroup
from .perms import Permutation, compose_images
from .structure import (
    PrimeSet,
    class_closures,
    class_representatives,
    conjugation_orbit,
    is_pi_group,
    is_pi_number,
    pi_radical,
    radical_is_trivial_by_prime_degree,
)

OrderPredicate = Callable[[int], bool]


@lru_cache(maxsize=None)
def _factored(n: int) -> FactoredInteger:
    return FactoredInteger.from_int(n)


# ---------------------------------------------------------------------------
# budgets and results


@dataclass(frozen=True)
class SearchBudget:
    """Resource limits for a width search.

    ``max_width``: deepest tuple width explored.
    ``max_states``: cap on subgroup states created across all levels.
    ``max_class_size``: conjugacy classes larger than this are truncated to a
    seeded sample and every result derived from them reports
    ``class_complete=False``.
    """

    max_width: int = 12
    max_states: int = 100_000
    max_class_size: int = 100_000
    seed: int = 0


@dataclass
class WidthResult:
    """Outcome of a width search.

    ``value`` is the minimal width at which the predicate held, or None.
    When ``value`` is None, ``explored_width`` is the deepest width whose
    states were all built and tested (so the true value, if any, exceeds
    it), and ``saturated`` reports that the state space closed with no
    further extensions — together with ``exhaustive`` that certifies failure
    at *every* width.  ``witness`` holds conjugating elements l_i with
    x ** l_i the chosen conjugates (``members``); ``certificate_order`` is
    the order of the successful subgroup.
    """

    kind: str
    value: int | None
    witness: tuple[Permutation, ...] | None
    members: tuple[Permutation, ...] | None
    certificate_order: FactoredInteger | None
    explored_width: int
    saturated: bool
    class_complete: bool
    state_budget_hit: bool
    states_visited: int
    subgroup: PermGroup | None = field(default=None, repr=False, compare=False)

    @property
    def exhaustive(self) -> bool:
        return self.class_complete and not self.state_budget_hit

    @property
    def lower_bound(self) -> int:
        """Widths up to this bound (exclusive) are certified failures."""
        return self.explored_width + 1

    def revalidate(self, order_predicate: OrderPredicate | None = None) -> bool:
        """Rebuild the witness subgroup from ``members`` and confirm the
        claimed order (and predicate, when given).  A successful result must
        always revalidate; used as an engine self-check."""
        if self.value is None or self.members is None:
            return False
        H = PermGroup.from_generators(self.members)
        if self.certificate_order is None or H.order_int != self.certificate_order.value:
            return False
        if order_predicate is not None and not order_predicate(H.order_int):
            return False
        return True

    def to_json_dict(self) -> dict:
        return {
            "kind": self.kind,
            "value": self.value,
            "witness": [str(w) for w in self.witness] if self.witness else None,
            "members": [str(m) for m in self.members] if self.members else None,
            "certificate_order": str(self.certificate_order)
            if self.certificate_order
            else None,
            "explored_width": self.explored_width,
            "saturated": self.saturated,
            "exhaustive": self.exhaustive,
            "states_visited": self.states_visited,
        }


# ---------------------------------------------------------------------------
# class tables


def _class_table(
    conjugating: PermGroup, x: Permutation, budget: SearchBudget
) -> tuple[list[Permutation], list[Permutation], bool]:
    """The orbit x^conjugating with witnesses, truncated to a seeded sample
    of size ``max_class_size`` when larger (x itself always stays first)."""
    members, wits, complete = conjugation_orbit(
        conjugating, x, cap=budget.max_class_size, with_witnesses=True
    )
    if not complete:
        rng = random.Random(budget.seed)
        idx = list(range(1, len(members)))
        rng.shuffle(idx)
        order = [0] + idx
        members = [members[i] for i in order]
        wits = [wits[i] for i in order]
    return members, wits, complete


# ---------------------------------------------------------------------------
# the generic engine


def _product_order(a: tuple[int, ...], b: tuple[int, ...]) -> int:
    """Order of the product permutation (apply a, then b), via cycle lengths."""
    n = len(a)
    seen = [False] * n
    result = 1
    for s in range(n):
        if seen[s]:
            continue
        length = 0
        p = s
        while not seen[p]:
            seen[p] = True
            p = b[a[p]]
            length += 1
        result = math.lcm(result, length)
    return result


def min_width_search(
    x: Permutation,
    conjugates: Sequence[Permutation],
    witnesses: Sequence[Permutation],
    order_predicate: OrderPredicate,
    *,
    budget: SearchBudget = SearchBudget(),
    pinned: bool = True,
    kind: str = "width",
    class_complete: bool = True,
) -> WidthResult:
    """Minimal number of the given conjugates generating a subgroup whose
    order satisfies ``order_predicate`` (see the module docstring for the
    search semantics).  ``conjugates[0]`` must be ``x`` itself and
    ``witnesses[i]`` must conjugate ``x`` to ``conjugates[i]``."""
    if not conjugates or conjugates[0] != x:
        raise ValueError("conjugates[0] must be x itself")
    if x.is_transposition():
        return _search_transpositions(
            x, conjugates, witnesses, order_predicate, budget, pinned, kind, class_complete
        )
    return _search_generic(
        x, conjugates, witnesses, order_predicate, budget, pinned, kind, class_complete
    )


def _mk_success(
    kind, width, ids, conjugates, witnesses, subgroup, states, complete, truncated
) -> WidthResult:
    return WidthResult(
        kind=kind,
        value=width,
        witness=tuple(witnesses[i] for i in ids),
        members=tuple(conjugates[i] for i in ids),
        certificate_order=subgroup.order,
        explored_width=width - 1,
        saturated=False,
        class_complete=complete,
        state_budget_hit=truncated,
        states_visited=states,
        subgroup=subgroup,
    )


def _mk_failure(kind, explored, saturated, states, complete, truncated) -> WidthResult:
    return WidthResult(
        kind=kind,
        value=None,
        witness=None,
        members=None,
        certificate_order=None,
        explored_width=explored,
        saturated=saturated,
        class_complete=complete,
        state_budget_hit=truncated,
        states_visited=states,
        subgroup=None,
    )


def _search_generic(
    x, conjugates, witnesses, pred, budget, pinned, kind, class_complete
) -> WidthResult:
    degree = x.degree
    visited: dict[tuple, list[PermGroup]] = {}
    states = 0

    def register(group: PermGroup) -> bool:
        """Record the subgroup; False when it is already known (exact test:
        equal order bucket + generator containment)."""
        key = (group.order_int, group.orbit_partition)
        bucket = visited.setdefault(key, [])
        for t in bucket:
            if all(t._contains_tuple(g.images) for g in group.generators):
                return False
        bucket.append(group)
        return True

    frontier: list[tuple[PermGroup, tuple[int, ...]]] = []
    first_ids = [0] if pinned else range(len(conjugates))
    for idx in first_ids:
        g1 = PermGroup.from_generators([conjugates[idx]], degree)
        states += 1
        if states > budget.max_states:
            return _mk_failure(kind, 0, False, states, class_complete, True)
        if not register(g1):
            continue
        if pred(g1.order_int):
            return _mk_success(
                kind, 1, (idx,), conjugates, witnesses, g1, states, class_complete, False
            )
        frontier.append((g1, (idx,)))

    x_is_involution = x.order() == 2
    width = 1
    saw_terminal_child = False
    while frontier and width < budget.max_width:
        terminal = width + 1 == budget.max_width
        new_frontier: list[tuple[PermGroup, tuple[int, ...]]] = []
        for grp, ids in frontier:
            # cheap dihedral scan: <involution, involution> has order 2|xy|
            shortcut = terminal and x_is_involution and grp.order_int == 2
            base_images = conjugates[ids[0]].images if shortcut else None
            for idx, y in enumerate(conjugates):
                if grp._contains_tuple(y.images):
                    continue
                if shortcut:
                    saw_terminal_child = True
                    states += 1
                    if not pred(2 * _product_order(base_images, y.images)):
                        continue
                    child = grp.extend(y)
                    return _mk_success(
                        kind, width + 1, ids + (idx,), conjugates, witnesses,
                        child, states, class_complete, False,
                    )
                child = grp.extend(y)
                states += 1
                if states > budget.max_states:
                    return _mk_failure(kind, width, False, states, class_complete, True)
                if not register(child):
                    continue
                nids = ids + (idx,)
                if pred(child.order_int):
                    return _mk_success(
                        kind, width + 1, nids, conjugates, witnesses,
                        child, states, class_complete, False,
                    )
                if terminal:
                    saw_terminal_child = True
                else:
                    new_frontier.append((child, nids))
        frontier = new_frontier
        width += 1
    saturated = not frontier and not saw_terminal_child
    return _mk_failure(kind, width, saturated, states, class_complete, False)


# ---------------------------------------------------------------------------
# transposition fast path: states are partitions of the point set


@lru_cache(maxsize=None)
def _factorial(n: int) -> int:
    return math.factorial(n)


def _search_transpositions(
    x, conjugates, witnesses, pred, budget, pinned, kind, class_complete
) -> WidthResult:
    """Same contract as the generic engine, for all-transposition classes:
    <T> = product of Sym(component) over the edge-graph components of T, so
    a subgroup state *is* the partition of points it glues together."""
    degree = x.degree
    edges: list[tuple[int, int]] = []
    for y in conjugates:
        if not y.is_transposition():
            # conjugates of a transposition are transpositions; reaching this
            # means the caller passed an inconsistent class
            raise NotATransposition(f"{y} in the class of transposition {x}")
        a, b = y.moved_points()
        edges.append((a - 1, b - 1))

    def mk_parent() -> list[int]:
        return list(range(degree))

    def find(parent: list[int], a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    def canonical(parent: list[int]) -> tuple[int, ...]:
        # label each point by the least point of its block: union-find roots
        # depend on merge order, so they are not usable as a dedup key
        roots = [find(parent, i) for i in range(degree)]
        least: dict[int, int] = {}
        for i, r in enumerate(roots):
            least.setdefault(r, i)
        return tuple(least[r] for r in roots)

    def order_of(parent: list[int]) -> int:
        sizes: dict[int, int] = {}
        for i in range(degree):
            r = find(parent, i)
            sizes[r] = sizes.get(r, 0) + 1
        o = 1
        for s in sizes.values():
            o *= _factorial(s)
        return o

    def build_group(ids: tuple[int, ...]) -> PermGroup:
        return PermGroup.from_generators([conjugates[i] for i in ids], degree)

    visited: set[tuple[int, ...]] = set()
    states = 0
    frontier: list[tuple[list[int], tuple[int, ...]]] = []
    first_ids = [0] if pinned else range(len(conjugates))
    for idx in first_ids:
        parent = mk_parent()
        a, b = edges[idx]
        parent[find(parent, b)] = find(parent, a)
        key = canonical(parent)
        if key in visited:
            continue
        visited.add(key)
        states += 1
        if states > budget.max_states:
            return _mk_failure(kind, 0, False, states, class_complete, True)
        if pred(order_of(parent)):
            return _mk_success(
                kind, 1, (idx,), conjugates, witnesses, build_group((idx,)),
                states, class_complete, False,
            )
        frontier.append((parent, (idx,)))

    width = 1
    saw_terminal_child = False
    while frontier and width < budget.max_width:
        terminal = width + 1 == budget.max_width
        new_frontier: list[tuple[list[int], tuple[int, ...]]] = []
        for parent, ids in frontier:
            for idx, (a, b) in enumerate(edges):
                ra, rb = find(parent, a), find(parent, b)
                if ra == rb:
                    continue  # this conjugate already lies in the subgroup
                child = list(parent)
                child[rb] = ra
                key = canonical(child)
                if key in visited:
                    continue
                visited.add(key)
                states += 1
                if states > budget.max_states:
                    return _mk_failure(kind, width, False, states, class_complete, True)
                nids = ids + (idx,)
                if pred(order_of(child)):
                    grp = build_group(nids)
                    if grp.order_int != order_of(child):  # engine self-check
                        raise InvariantViolation(
                            "partition model disagrees with the built subgroup"
                        )
                    return _mk_success(
                        kind, width + 1, nids, conjugates, witnesses, grp,
                        states, class_complete, False,
                    )
                if terminal:
                    saw_terminal_child = True
                else:
                    new_frontier.append((child, nids))
        frontier = new_frontier
        width += 1
    saturated = not frontier and not saw_terminal_child
    return _mk_failure(kind, width, saturated, states, class_complete, False)


# ---------------------------------------------------------------------------
# almost-simple contexts


def _nontrivial_centralizer_element(
    ambient: PermGroup, socle: PermGroup
) -> Permutation | None:
    """An element of C_ambient(socle) other than the identity, or None.

    For a transitive socle, a centralizing permutation is determined by the
    image of one point (semiregularity) and is found by propagating that
    image along the socle's Schreier graph; each candidate is then screened
    for ambient membership.  Intransitive socles fall back to scanning the
    ambient group's elements (TooLarge above the enumeration cap).
    """
    degree = ambient.degree
    gens = [g.images for g in socle.generators]
    if socle.is_transitive() and gens:
        for t in range(1, degree):
            c = [-1] * degree
            c[0] = t
            queue = [0]
            ok = True
            while queue and ok:
                i = queue.pop()
                for g in gens:
                    j = g[i]
                    want = g[c[i]]
                    if c[j] == -1:
                        c[j] = want
                        queue.append(j)
                    elif c[j] != want:
                        ok = False
                        break
            if not ok or -1 in c:
                continue
            if len(set(c)) != degree:
                continue
            ct = tuple(c)
            # propagation used a spanning tree; verify every constraint
            if any(g[c[i]] != c[g[i]] for g in gens for i in range(degree)):
                continue
            if ambient._contains_tuple(ct):
                return Permutation(ct)
        return None
    # intransitive fallback: direct scan
    for e in ambient.elements(10**5):
        if e.is_identity():
            continue
        if all(
            compose_images(e.images, g) == compose_images(g, e.images) for g in gens
        ):
            return e
    return None


@dataclass
class AlmostSimpleContext:
    """A socle L, an element x normalizing it, the ambient group <L, x>,
    and the class x^L with conjugating witnesses (x first).

    ``build`` validates: degrees match; x normalizes L (else
    :class:`NotNormalizing`); x does not centralize L (else
    :class:`CentralizesSocle`, unless ``allow_degenerate``); and the ambient
    centralizer of L is trivial (else :class:`InvariantViolation`), which is
    the almost-simplicity certificate for a simple socle.
    """

    socle: PermGroup
    element: Permutation
    ambient: PermGroup
    conjugates: tuple[Permutation, ...]
    witnesses: tuple[Permutation, ...]
    class_complete: bool
    degenerate: bool = False

    @classmethod
    def build(
        cls,
        socle: PermGroup,
        element: Permutation,
        *,
        allow_degenerate: bool = False,
        budget: SearchBudget = SearchBudget(),
        check_centralizer: bool = True,
    ) -> "AlmostSimpleContext":
        if element.degree != socle.degree:
            raise DegreeMismatch(
                f"element degree {element.degree} vs socle degree {socle.degree}"
            )
        for s in socle.generators:
            if not socle.contains(s ** element):
                raise NotNormalizing(f"{element} does not normalize the socle")
        centralizes = element.is_identity() or all(
            (s ** element) == s for s in socle.generators
        )
        if centralizes and not allow_degenerate:
            raise CentralizesSocle(
                f"{element} centralizes the socle; pass allow_degenerate=True to accept"
            )
        ambient = socle.extend(element)
        if check_centralizer and not centralizes:
            witness = _nontrivial_centralizer_element(ambient, socle)
            if witness is not None:
                raise InvariantViolation(
                    f"ambient centralizer of the socle contains {witness}; "
                    "the context is not almost simple"
                )
        members, wits, complete = _class_table(socle, element, budget)
        return cls(
            socle=socle,
            element=element,
            ambient=ambient,
            conjugates=tuple(members),
            witnesses=tuple(wits),
            class_complete=complete,
            degenerate=centralizes,
        )


def alpha(
    ctx: AlmostSimpleContext,
    budget: SearchBudget = SearchBudget(),
    pinned: bool = True,
) -> WidthResult:
    """Minimal number of socle-conjugates of x generating the whole ambient
    group (generated subgroups always lie inside it, so order equality is
    group equality)."""
    target = ctx.ambient.order_int
    return min_width_search(
        ctx.element,
        ctx.conjugates,
        ctx.witnesses,
        lambda o: o == target,
        budget=budget,
        pinned=pinned,
        kind="alpha",
        class_complete=ctx.class_complete,
    )


def beta(
    ctx: AlmostSimpleContext,
    r: int,
    budget: SearchBudget = SearchBudget(),
    pinned: bool = True,
) -> WidthResult:
    """Minimal number of socle-conjugates of x generating a subgroup of
    order divisible by the prime r."""
    if not is_prime(r):
        raise ValueError(f"r must be prime, got {r}")
    if not ctx.ambient.order.divisible_by(r):
        raise RNotDividingOrder(
            f"{r} does not divide the ambient order {ctx.ambient.order}"
        )
    return min_width_search(
        ctx.element,
        ctx.conjugates,
        ctx.witnesses,
        lambda o: o % r == 0,
        budget=budget,
        pinned=pinned,
        kind=f"beta[{r}]",
        class_complete=ctx.class_complete,
    )


def power_width_comparison(
    ctx: AlmostSimpleContext,
    r: int,
    exponent: int,
    budget: SearchBudget = SearchBudget(),
) -> tuple[WidthResult, WidthResult]:
    """beta of x against beta of the nontrivial power x^e.  Since conjugates
    of x^e are the e-th powers of conjugates of x, any subgroup generated by
    k conjugates of x^e embeds in one generated by k conjugates of x, so
    beta(x) <= beta(x^e); an inversion is an engine bug and raises."""
    y = ctx.element**exponent
    if y.is_identity():
        raise PowerIsIdentity(f"{ctx.element} ** {exponent} is the identity")
    ctx2 = AlmostSimpleContext.build(
        ctx.socle, y, allow_degenerate=True, budget=budget, check_centralizer=False
    )
    b1 = beta(ctx, r, budget)
    b2 = beta(ctx2, r, budget)
    if b1.value is not None and b2.value is not None and b1.value > b2.value:
        raise InvariantViolation(
            f"beta monotonicity under powers failed: {b1.value} > {b2.value}"
        )
    return b1, b2


# ---------------------------------------------------------------------------
# membership checks against the radical


@dataclass
class ClassMembershipRecord:
    representative: Permutation
    class_size: int
    in_radical: bool
    # for representatives outside the radical: the minimal width at which a
    # non-pi subgroup appeared (None when none exists up to the tested width)
    violation_width: int | None
    witness: tuple[Permutation, ...] | None
    witness_order: FactoredInteger | None
    exhaustive: bool
    states_visited: int


@dataclass
class BSMembershipResult:
    """Verdict of the width-m membership test against O_pi(G).

    ``holds`` is True when every representative outside the radical exhibits
    some <=m-tuple of conjugates generating a non-pi subgroup (then no
    element outside O_pi survives the m-tuple test).  When False,
    ``violating_element`` lies outside O_pi yet every one of its m-tuples
    generates a pi-group — its record carries the exhausted-search
    certificate.  ``witness_tuple`` is None in that case by design: a
    violation is certified by an exhaustive absence, not by a tuple.
    """

    pi: PrimeSet
    m: int
    holds: bool
    violating_element: Permutation | None
    witness_tuple: tuple[Permutation, ...] | None
    radical_order: FactoredInteger
    records: list[ClassMembershipRecord]
    exhaustive: bool


class GroupClassData:
    """Per-group cache: class representatives, class closures, radicals.

    The closures are pi-independent, so sweeps over many prime sets reuse
    one instance.
    """

    def __init__(self, G: PermGroup, cap: int = 10**5):
        self.group = G
        self.cap = cap
        self._reps: list[tuple[Permutation, int]] | None = None
        self._closures: list[tuple[Permutation, PermGroup]] | None = None
        self._radicals: dict[PrimeSet, PermGroup] = {}

    @property
    def reps(self) -> list[tuple[Permutation, int]]:
        if self._reps is None:
            self._reps = class_representatives(self.group, self.cap)
        return self._reps

    @property
    def closures(self) -> list[tuple[Permutation, PermGroup]]:
        if self._closures is None:
            reps = self.reps
            from .structure import normal_closure

            self._closures = [
                (rep, normal_closure(self.group, [rep])) for rep, _ in reps
            ]
        return self._closures

    def radical(self, pi: PrimeSet) -> PermGroup:
        if pi not in self._radicals:
            self._radicals[pi] = pi_radical(self.group, pi, self.closures)
        return self._radicals[pi]


def _non_pi_predicate(pi: PrimeSet) -> OrderPredicate:
    return lambda o: not is_pi_number(_factored(o), pi)


def bs_membership(
    G: PermGroup,
    pi: PrimeSet,
    m: int,
    budget: SearchBudget = SearchBudget(),
    data: GroupClassData | None = None,
) -> BSMembershipResult:
    """Does width m suffice for membership testing against O_pi(G)?

    For each class representative x outside the radical, search for a
    <=m-tuple of G-conjugates of x generating a non-pi subgroup (elements of
    the radical need no search: their conjugates generate subgroups of the
    radical, which are pi-groups).  Raises :class:`BudgetExhausted` if some
    representative's search was cut off before either outcome was certified.
    """
    if m < 1:
        raise ValueError(f"width m must be >= 1, got {m}")
    if data is None:
        data = GroupClassData(G)
    radical = data.radical(pi)
    pred = _non_pi_predicate(pi)
    records: list[ClassMembershipRecord] = []
    holds = True
    violating: Permutation | None = None
    all_exhaustive = True
    for rep, size in data.reps:
        if radical.contains(rep):
            records.append(
                ClassMembershipRecord(
                    representative=rep,
                    class_size=size,
                    in_radical=True,
                    violation_width=None,
                    witness=None,
                    witness_order=None,
                    exhaustive=True,
                    states_visited=0,
                )
            )
            continue
        members, wits, complete = _class_table(G, rep, budget)
        res = min_width_search(
            rep,
            members,
            wits,
            pred,
            budget=replace(budget, max_width=m),
            pinned=True,
            kind="non-pi-width",
            class_complete=complete,
        )
        records.append(
            ClassMembershipRecord(
                representative=rep,
                class_size=size,
                in_radical=False,
                violation_width=res.value,
                witness=res.members,
                witness_order=res.certificate_order,
                exhaustive=res.exhaustive,
                states_visited=res.states_visited,
            )
        )
        if res.value is None:
            if not res.exhaustive:
                raise BudgetExhausted(
                    f"search for {rep} was truncated before certification"
                )
            # x is outside O_pi yet all its m-tuples generate pi-groups
            if holds:
                violating = rep
            holds = False
        all_exhaustive = all_exhaustive and res.exhaustive
    return BSMembershipResult(
        pi=pi,
        m=m,
        holds=holds,
        violating_element=violating,
        witness_tuple=None,
        radical_order=radical.order,
        records=records,
        exhaustive=all_exhaustive,
    )


def odd_pi_two_conjugates_check(
    G: PermGroup,
    pi: PrimeSet,
    budget: SearchBudget = SearchBudget(),
    data: GroupClassData | None = None,
) -> BSMembershipResult:
    """Width 2 suffices for every prime set avoiding 2: any element outside
    O_pi has a conjugate pair generating a non-pi subgroup.  Raises
    :class:`PiContainsTwo` when 2 in pi (the premise of the two-conjugate
    argument fails there)."""
    if 2 in pi:
        raise PiContainsTwo(f"prime set {pi} contains 2")
    return bs_membership(G, pi, 2, budget=budget, data=data)


def minimal_membership_width(
    G: PermGroup,
    pi: PrimeSet,
    budget: SearchBudget = SearchBudget(),
    data: GroupClassData | None = None,
) -> tuple[int, list[tuple[Permutation, int]]]:
    """The least m for which :func:`bs_membership` holds, with the per-class
    minimal non-pi widths that determine it (max over representatives
    outside the radical; 1 when the radical is everything).

    Any representative outside the radical reaches a non-pi subgroup at some
    width (its full class generates the non-pi normal closure), so the only
    failure mode is the width/state budget, reported as
    :class:`BudgetExhausted`.
    """
    if data is None:
        data = GroupClassData(G)
    radical = data.radical(pi)
    pred = _non_pi_predicate(pi)
    per_rep: list[tuple[Permutation, int]] = []
    overall = 1
    for rep, _size in data.reps:
        if radical.contains(rep):
            continue
        members, wits, complete = _class_table(G, rep, budget)
        res = min_width_search(
            rep, members, wits, pred,
            budget=budget, pinned=True, kind="non-pi-width",
            class_complete=complete,
        )
        if res.value is None:
            raise BudgetExhausted(
                f"no non-pi width found for {rep} within budget {budget}"
            )
        per_rep.append((rep, res.value))
        overall = max(overall, res.value)
    return overall, per_rep


# ---------------------------------------------------------------------------
# classical Baer-Suzuki: exact equivalence per class


@dataclass
class ClassPairRecord:
    representative: Permutation
    in_radical: bool
    all_pairs_p_groups: bool
    witness_pair: tuple[Permutation, Permutation] | None
    witness_order: FactoredInteger | None


@dataclass
class BaerSuzukiReport:
    p: int
    radical_order: FactoredInteger
    records: list[ClassPairRecord]
    consistent: bool


def baer_suzuki_check(
    G: PermGroup,
    p: int,
    budget: SearchBudget = SearchBudget(),
    data: GroupClassData | None = None,
) -> BaerSuzukiReport:
    """The Baer-Suzuki theorem, verified per conjugacy class: x lies in
    O_p(G) exactly when every pair <x, x^g> is a p-group.  A failed
    equivalence is an implementation bug and raises
    :class:`InvariantViolation` — it is never a returned result.
    """
    if not is_prime(p):
        raise ValueError(f"p must be prime, got {p}")
    if data is None:
        data = GroupClassData(G)
    radical = data.radical(PrimeSet.of(p))
    pred = _non_pi_predicate(PrimeSet.of(p))  # order has a prime other than p
    records: list[ClassPairRecord] = []
    for rep, _size in data.reps:
        in_rad = radical.contains(rep)
        members, wits, complete = _class_table(G, rep, budget)
        res = min_width_search(
            rep, members, wits, pred,
            budget=replace(budget, max_width=2),
            pinned=True, kind="non-p-pair",
            class_complete=complete,
        )
        if res.value is None and not res.exhaustive:
            raise BudgetExhausted(f"pair scan for {rep} truncated")
        all_pairs = res.value is None
        witness_pair = None
        if res.value is not None:
            ms = res.members
            witness_pair = (ms[0], ms[-1] if len(ms) > 1 else ms[0])
        if all_pairs != in_rad:
            raise InvariantViolation(
                f"Baer-Suzuki equivalence failed for {rep} at p={p}: "
                f"in_radical={in_rad}, all pairs p-groups={all_pairs}"
            )
        records.append(
            ClassPairRecord(
                representative=rep,
                in_radical=in_rad,
                all_pairs_p_groups=all_pairs,
                witness_pair=witness_pair,
                witness_order=res.certificate_order,
            )
        )
    return BaerSuzukiReport(
        p=p, radical_order=radical.order, records=records, consistent=True
    )


# ---------------------------------------------------------------------------
# transposition graphs and the small-sweep lower-bound experiment


@dataclass
class TranspositionGraph:
    """A set of transpositions viewed as graph edges on 1..degree.

    The generated subgroup is the direct product of the symmetric groups on
    the connected components, so its order and pi-ness are read off the
    component sizes; ``check_generated_matches`` confirms that against a
    direct chain build.
    """

    degree: int
    transpositions: tuple[Permutation, ...]
    components: tuple[tuple[int, ...], ...]

    @classmethod
    def from_permutations(
        cls, perms: Sequence[Permutation], degree: int | None = None
    ) -> "TranspositionGraph":
        perms = tuple(perms)
        if degree is None:
            if not perms:
                raise ValueError("degree required for an empty transposition set")
            degree = perms[0].degree
        parent = list(range(degree))

        def find(a: int) -> int:
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        for t in perms:
            if t.degree != degree:
                raise DegreeMismatch(f"degree {t.degree} vs {degree}")
            if not t.is_transposition():
                raise NotATransposition(f"{t} is not a transposition")
            a, b = t.moved_points()
            ra, rb = find(a - 1), find(b - 1)
            if ra != rb:
                parent[rb] = ra
        buckets: dict[int, list[int]] = {}
        for i in range(degree):
            buckets.setdefault(find(i), []).append(i + 1)
        comps = tuple(tuple(v) for v in sorted(buckets.values(), key=lambda b: b[0]))
        return cls(degree=degree, transpositions=perms, components=comps)

    @property
    def generated_order(self) -> FactoredInteger:
        return FactoredInteger.from_product(
            [math.factorial(len(c)) for c in self.components]
        )

    def is_pi(self, pi: PrimeSet) -> bool:
        return is_pi_number(self.generated_order, pi)

    def generated_group(self) -> PermGroup:
        if not self.transpositions:
            return PermGroup.trivial(self.degree)
        return PermGroup.from_generators(self.transpositions, self.degree)

    def check_generated_matches(self) -> bool:
        """Cross-check the component model against a direct chain build:
        equal orders and equal orbit partitions."""
        G = self.generated_group()
        return (
            G.order_int == self.generated_order.value
            and G.orbit_partition == self.components
        )


@dataclass
class TranspositionSweepReport:
    r: int
    pi: PrimeSet
    subsets_checked: int
    all_small_subsets_pi: bool
    failing_small_subset: tuple[Permutation, ...] | None
    witness_subset: tuple[Permutation, ...]
    witness_order: FactoredInteger
    radical_order: FactoredInteger
    crosschecks: int
    exhaustive: bool
    implied_lower_bound: int  # width r-2 cannot separate transpositions from O_pi


def transposition_pi_sweep(
    r: int,
    *,
    sample: int | None = None,
    seed: int = 0,
    crosscheck_stride: int = 97,
) -> TranspositionSweepReport:
    """Sweep (r-2)-subsets of the transpositions of Sym(r) for the prime set
    pi = {primes < r}: each such subset must generate a pi-group, while some
    (r-1)-subset does not, and O_pi(Sym(r)) is trivial — together giving the
    lower bound r-1 on the width needed for membership testing against the
    radical.  Exhaustive when ``sample`` is None; otherwise a seeded sample
    of that many subsets is checked and the report says so.

    Every pi-ness verdict comes from the component model; every
    ``crosscheck_stride``-th subset (and every non-pi verdict) is re-checked
    by building the generated group directly.
    """
    if not is_prime(r) or r < 3:
        raise ValueError(f"r must be an odd prime >= 3, got {r}")
    pi = PrimeSet.of(*[p for p in range(2, r) if is_prime(p)])
    degree = r
    all_transpositions = [
        Permutation.from_cycles([(a, b)], degree=degree)
        for a in range(1, degree + 1)
        for b in range(a + 1, degree + 1)
    ]
    k = r - 2
    if sample is None:
        combos: Iterable[tuple[int, ...]] = itertools.combinations(
            range(len(all_transpositions)), k
        )
        exhaustive = True
    else:
        rng = random.Random(seed)
        idx = list(range(len(all_transpositions)))
        combos = (tuple(sorted(rng.sample(idx, k))) for _ in range(sample))
        exhaustive = False
    checked = 0
    crosschecks = 0
    all_pi = True
    failing: tuple[Permutation, ...] | None = None
    for combo in combos:
        subset = [all_transpositions[i] for i in combo]
        graph = TranspositionGraph.from_permutations(subset, degree)
        verdict = graph.is_pi(pi)
        if checked % crosscheck_stride == 0 or not verdict:
            crosschecks += 1
            if not graph.check_generated_matches():
                raise InvariantViolation(
                    "transposition component model disagreed with direct generation"
                )
        checked += 1
        if not verdict and all_pi:
            all_pi = False
            failing = tuple(subset)
    # a witness (r-1)-subset that escapes pi: the star on all r points
    star = [
        Permutation.from_cycles([(1, b)], degree=degree) for b in range(2, degree + 1)
    ]
    star_graph = TranspositionGraph.from_permutations(star, degree)
    if not star_graph.check_generated_matches():
        raise InvariantViolation("star subset cross-check failed")
    if star_graph.is_pi(pi):
        raise InvariantViolation(
            f"the star on {r} points generated a pi-group; sweep is inconsistent"
        )
    sym_r = PermGroup.from_generators(
        [
            Permutation.parse("(1 2)", degree=degree),
            Permutation.from_cycles([tuple(range(1, degree + 1))], degree=degree),
        ]
    )
    # Triviality of the radical: the prime-degree certificate applies for
    # every valid r (transitive, degree r prime, r outside pi); below the
    # enumeration cap the direct computation must agree.
    if not radical_is_trivial_by_prime_degree(sym_r, pi):
        raise InvariantViolation(
            f"prime-degree certificate unexpectedly inapplicable for r={r}"
        )
    radical_order = FactoredInteger.one()
    if sym_r.order_int <= 10**5 and not pi_radical(sym_r, pi).order.is_one():
        raise InvariantViolation(
            f"direct radical computation contradicts the prime-degree "
            f"certificate for r={r}"
        )
    return TranspositionSweepReport(
        r=r,
        pi=pi,
        subsets_checked=checked,
        all_small_subsets_pi=all_pi,
        failing_small_subset=failing,
        witness_subset=tuple(star),
        witness_order=star_graph.generated_order,
        radical_order=radical_order,
        crosschecks=crosschecks,
        exhaustive=exhaustive,
        implied_lower_bound=r - 1,
    )


# ---------------------------------------------------------------------------
# involution pair tables (certificates for width-2 failures)


def involution_pair_orders(
    members: Sequence[Permutation],
) -> list[tuple[int, int, int]]:
    """Orders of <members[i], members[j]> for all unordered pairs of
    involutions: the group is dihedral, so the order is 2*|m_i * m_j|
    (and 2 on the diagonal-degenerate pairs where the product is trivial).
    """
    for m in members:
        if m.order() != 2:
            raise ValueError(f"{m} is not an involution")
    out: list[tuple[int, int, int]] = []
    for i in range(len(members)):
        for j in range(i + 1, len(members)):
            k = _product_order(members[i].images, members[j].images)
            out.append((i, j, 2 * k if k > 1 else 2))
    return out
