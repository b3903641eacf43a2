"""Group structure on a Cayley table: identity, inverses, commutators, abelianization."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .core import (
    Congruence,
    Semigroup,
    SemigroupError,
    is_cancellative,
    is_commutative,
    quotient,
)


class NotAGroupError(SemigroupError):
    def __init__(self, reason: str):
        self.reason = reason
        super().__init__(f"group structure required: {reason}")


@dataclass(frozen=True)
class GroupStructure:
    """Identity and inverse map over a semigroup whose table is a Latin square."""

    base: Semigroup
    identity: int
    inverse: tuple[int, ...]

    def __post_init__(self):
        s = self.base
        n = s.order
        e = self.identity
        if any(s.table[e][x] != x or s.table[x][e] != x for x in range(n)):
            raise SemigroupError("identity element is not two-sided")
        for g in range(n):
            h = self.inverse[g]
            if s.table[g][h] != e or s.table[h][g] != e:
                raise SemigroupError(f"inverse map fails at element {g}")
        full = frozenset(range(n))
        for i in range(n):
            if frozenset(s.table[i]) != full:
                raise SemigroupError(f"row {i} is not a permutation")
            if {s.table[j][i] for j in range(n)} != full:
                raise SemigroupError(f"column {i} is not a permutation")

    @property
    def order(self) -> int:
        return self.base.order


def group_structure(s: Semigroup) -> GroupStructure:
    """Detect group structure, or raise NotAGroupError with the reason.

    A finite associative table is a group iff it has a two-sided identity and
    is a Latin square; inverses are then read off the identity's column.
    """
    n = s.order
    identity = None
    for e in range(n):
        if all(s.table[e][x] == x and s.table[x][e] == x for x in range(n)):
            identity = e
            break
    if identity is None:
        raise NotAGroupError("no identity element")
    full = frozenset(range(n))
    for i in range(n):
        if frozenset(s.table[i]) != full or {s.table[j][i] for j in range(n)} != full:
            raise NotAGroupError(
                f"element {s.names[i]!r} has no inverse (table is not a Latin square)"
            )
    inverse = tuple(
        next(h for h in range(n) if s.table[g][h] == identity) for g in range(n)
    )
    return GroupStructure(s, identity, inverse)


def commutator(g: GroupStructure, x: int, y: int) -> int:
    """x * y * x^-1 * y^-1."""
    t = g.base.table
    return t[t[t[x][y]][g.inverse[x]]][g.inverse[y]]


@lru_cache(maxsize=None)
def commutator_subgroup(g: GroupStructure) -> tuple[int, ...]:
    """Product closure of all commutators, as an ascending index tuple.

    The commutator set is closed under inversion and conjugation, so closing
    it under products already yields a normal subgroup; the asserts below
    re-verify that on the finished set.
    """
    n = g.order
    t = g.base.table
    members = {commutator(g, x, y) for x in range(n) for y in range(n)}
    changed = True
    while changed:
        changed = False
        for a in sorted(members):
            for b in sorted(members):
                p = t[a][b]
                if p not in members:
                    members.add(p)
                    changed = True
    result = tuple(sorted(members))
    assert g.identity in members
    assert all(g.inverse[a] in members for a in result)
    assert all(
        t[x][t[a][g.inverse[x]]] in members for a in result for x in range(n)
    )
    return result


@lru_cache(maxsize=None)
def coset_congruence(g: GroupStructure) -> Congruence:
    """Partition into cosets of the commutator subgroup: u ~ v iff u * v^-1 is in it."""
    n = g.order
    t = g.base.table
    derived = commutator_subgroup(g)
    class_of = [-1] * n
    next_id = 0
    for x in range(n):
        if class_of[x] != -1:
            continue
        for k in derived:
            class_of[t[k][x]] = next_id
        next_id += 1
    return Congruence(tuple(class_of), next_id)


def abelianization(g: GroupStructure) -> Semigroup:
    """The commutative quotient group by the coset congruence."""
    q = quotient(g.base, coset_congruence(g))
    assert is_commutative(q) and is_cancellative(q)
    assert q.order * len(commutator_subgroup(g)) == g.order
    return q
