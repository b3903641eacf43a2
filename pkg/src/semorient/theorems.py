"""Commutator decompositions, constructive equation witnesses, and verification suites.

The two central facts checked here, exactly, on concrete group tables:

* the elements satisfying a balanced one-variable equation are precisely the
  commutator subgroup, and
* relating pairs by balanced two-variable equations partitions a group into
  exactly the commutator-subgroup cosets, so the quotient is the
  abelianization.

Witnesses are built constructively from commutator decompositions, and every
claim is re-checked by the independent validators in ``equations``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Optional

from .core import (
    Congruence,
    Semigroup,
    SemigroupError,
    adjoin_identity,
    compatibility_violation,
    idempotents,
    is_cancellative,
    is_commutative,
    quotient,
)
from .equations import (
    ONE_VAR_DEFAULT_BOUND,
    TWO_VAR_DEFAULT_BOUND,
    OneVarWitness,
    TwoVarWitness,
    orientable_set,
    search_one_var,
    search_two_var,
    sigma_report,
    validate_one_var,
    validate_two_var,
)
from .groups import (
    GroupStructure,
    NotAGroupError,
    abelianization,
    commutator,
    commutator_subgroup,
    coset_congruence,
    group_structure,
)


class NotInDerivedSubgroupError(SemigroupError):
    """The element is outside the commutator subgroup, so it has no decomposition."""


class InvalidDecompositionError(SemigroupError):
    """The decomposition's pairs do not multiply to its element."""


class NotRelatedError(SemigroupError):
    """The two elements lie in different commutator-subgroup cosets."""


@dataclass(frozen=True)
class CommutatorDecomposition:
    """An element written as a left-to-right product of commutators x_i y_i x_i^-1 y_i^-1."""

    element: int
    pairs: tuple[tuple[int, int], ...]


def decomposition_product(group: GroupStructure, pairs) -> int:
    t = group.base.table
    acc = group.identity
    for x, y in pairs:
        acc = t[acc][commutator(group, x, y)]
    return acc


def commutator_decomposition(group: GroupStructure, g: int) -> CommutatorDecomposition:
    """Shortest commutator decomposition of g, by breadth-first search.

    Nodes are group elements, edges multiply on the right by one commutator
    value. Edges are tried in ascending value order and each commutator value
    is annotated with its first (x, y) preimage in lexicographic index order,
    so the result is reproducible. The identity gets the empty decomposition.
    """
    if not 0 <= g < group.order:
        raise ValueError(f"element {g} out of range")
    preimage: dict[int, tuple[int, int]] = {}
    for x in range(group.order):
        for y in range(group.order):
            c = commutator(group, x, y)
            if c not in preimage:
                preimage[c] = (x, y)
    edges = sorted(preimage)
    t = group.base.table
    parent: dict[int, Optional[tuple[int, int]]] = {group.identity: None}
    queue = deque([group.identity])
    while queue:
        h = queue.popleft()
        for c in edges:
            nxt = t[h][c]
            if nxt not in parent:
                parent[nxt] = (h, c)
                queue.append(nxt)
    if g not in parent:
        raise NotInDerivedSubgroupError(
            f"element {group.base.names[g]!r} is not in the commutator subgroup"
        )
    pairs = []
    cur = g
    while parent[cur] is not None:
        back, c = parent[cur]
        pairs.append(preimage[c])
        cur = back
    pairs.reverse()
    return CommutatorDecomposition(g, tuple(pairs))


def build_orientable_witness(
    group: GroupStructure, d: CommutatorDecomposition
) -> OneVarWitness:
    """Realize a commutator decomposition as a validated one-variable witness.

    For a single commutator g = x y x^-1 y^-1 the equation x y = t y x works,
    since x y = g y x. Each further pair (x, y) appends the trivial product
    x x^-1 y y^-1 on the left and wraps the right side in y x y^-1 x^-1,
    which keeps the factor multisets balanced and the equality intact. The
    result has |a| = 2 + 4(k - 1) for k pairs; the identity (k = 0) gets the
    canonical witness x x^-1 = x * t * x^-1 over the smallest element.
    """
    if decomposition_product(group, d.pairs) != d.element:
        raise InvalidDecompositionError("pairs do not multiply to the element")
    inv = group.inverse
    if not d.pairs:
        if d.element != group.identity:
            raise InvalidDecompositionError("only the identity has an empty decomposition")
        x = 0
        witness = OneVarWitness((x, inv[x]), (x,), (inv[x],))
    else:
        x, y = d.pairs[0]
        a: tuple[int, ...] = (x, y)
        b: tuple[int, ...] = ()
        c: tuple[int, ...] = (y, x)
        for x, y in d.pairs[1:]:
            a = a + (x, inv[x], y, inv[y])
            c = (y, x, inv[y], inv[x]) + c
        witness = OneVarWitness(a, b, c)
    problem = validate_one_var(adjoin_identity(group.base), d.element, witness)
    assert problem is None, problem
    return witness


def build_two_var_witness(group: GroupStructure, g: int, h: int) -> TwoVarWitness:
    """Construct a witness for the ordered pair (h, g) from one for g * h^-1.

    If g * h^-1 has one-variable witness (a, b, c), then a * t1 * h^-1 and
    b * t2 * h^-1 c agree under t1 = h, t2 = g and stay balanced. Raises
    NotRelatedError when g * h^-1 is outside the commutator subgroup.
    """
    t = group.base.table
    inv = group.inverse
    gh = t[g][inv[h]]
    try:
        d = commutator_decomposition(group, gh)
    except NotInDerivedSubgroupError:
        names = group.base.names
        raise NotRelatedError(
            f"{names[g]!r} and {names[h]!r} lie in different cosets"
        ) from None
    one = build_orientable_witness(group, d)
    witness = TwoVarWitness(one.a, (inv[h],), one.b, (inv[h],) + one.c)
    problem = validate_two_var(adjoin_identity(group.base), h, g, witness)
    assert problem is None, problem
    return witness


@dataclass
class CheckResult:
    check_id: str
    status: str  # pass | fail | soft-report
    details: str
    counterexample: Optional[str] = None


@dataclass
class VerificationReport:
    subject: str
    bounds: dict[str, int]
    checks: list[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.status != "fail" for c in self.checks)

    def _add(self, check_id: str, details: str, failures: list[str]) -> None:
        if failures:
            self.checks.append(
                CheckResult(check_id, "fail", details, failures[0])
            )
        else:
            self.checks.append(CheckResult(check_id, "pass", details))

    def _soft(self, check_id: str, details: str, observations: list[str]) -> None:
        if observations:
            details += (
                f"; {len(observations)} possible violation(s) within bound"
                f" (first: {observations[0]})"
            )
        else:
            details += "; no violations observed"
        self.checks.append(CheckResult(check_id, "soft-report", details))

    def to_json(self) -> dict:
        return {
            "subject": self.subject,
            "bound": dict(self.bounds),
            "checks": [
                {
                    "id": c.check_id,
                    "status": c.status,
                    "details": c.details,
                    **({"counterexample": c.counterexample} if c.counterexample else {}),
                }
                for c in self.checks
            ],
            "passed": self.passed,
        }

    def to_text(self) -> str:
        lines = [
            f"subject: {self.subject}",
            "bounds: " + ", ".join(f"{k} {v}" for k, v in self.bounds.items()),
        ]
        for c in self.checks:
            line = f"  [{c.status}] {c.check_id}: {c.details}"
            if c.counterexample:
                line += f" (counterexample: {c.counterexample})"
            lines.append(line)
        lines.append(f"result: {'pass' if self.passed else 'FAIL'}")
        return "\n".join(lines)


def _one_var_key(w: OneVarWitness):
    return (len(w.a), w.a, w.b, w.c)


def verify_orientable_is_commutator_subgroup(
    group: GroupStructure,
    bound: int = ONE_VAR_DEFAULT_BOUND,
    subject: str = "",
) -> VerificationReport:
    """Check that one-variable witnesses characterize exactly the commutator subgroup.

    Hard checks: (i) a constructed witness of the lawful size validates for
    every commutator-subgroup element; (ii) every witness found by bounded
    search validates and its element is in the subgroup; (iii) at a bound
    covering the largest construction, the searched set equals the subgroup.
    """
    s = group.base
    m = adjoin_identity(s)
    names = s.names
    report = VerificationReport(
        subject or f"group of order {s.order}", {"one-var": bound}
    )
    derived = commutator_subgroup(group)
    derived_set = set(derived)

    failures = []
    k_max = 0
    for g in derived:
        d = commutator_decomposition(group, g)
        k = len(d.pairs)
        k_max = max(k_max, k)
        w = build_orientable_witness(group, d)
        expected_size = 2 + 4 * (max(k, 1) - 1)
        problem = validate_one_var(m, g, w)
        if problem is not None:
            failures.append(f"{names[g]}: {problem}")
        elif w.size != expected_size:
            failures.append(
                f"{names[g]}: witness size {w.size}, expected {expected_size} for k = {k}"
            )
    report._add(
        "constructed-witnesses",
        f"built witnesses for all {len(derived)} commutator-subgroup elements"
        f" (max decomposition length {k_max})",
        failures,
    )

    failures = []
    found = orientable_set(m, bound)
    for g, w in found.items():
        if w is None:
            continue
        problem = validate_one_var(m, g, w)
        if problem is not None:
            failures.append(f"{names[g]}: {problem}")
        elif g not in derived_set:
            failures.append(
                f"{names[g]}: search found a witness but the element is "
                "outside the commutator subgroup"
            )
    report._add(
        "bounded-search-sound",
        f"witnesses found at bound {bound} validate and stay in the subgroup",
        failures,
    )

    big = max(bound, 2 + 4 * (max(k_max, 1) - 1))
    full = found if big == bound else orientable_set(m, big)
    got = {g for g, w in full.items() if w is not None}
    failures = (
        []
        if got == derived_set
        else [f"sets differ on elements {sorted(names[x] for x in got ^ derived_set)}"]
    )
    report._add(
        "orientable-set-equals-commutator-subgroup",
        f"searched set at bound {big} has {len(got)} elements, subgroup has {len(derived)}",
        failures,
    )
    return report


def _partitions_equal(c1: Congruence, c2: Congruence) -> bool:
    # class ids are canonical (first appearance), so equality is direct
    return c1.class_of == c2.class_of and c1.num_classes == c2.num_classes


def _tables_match_up_to_relabeling(
    c1: Congruence, c2: Congruence, q1: Semigroup, q2: Semigroup
) -> bool:
    if c1.num_classes != c2.num_classes:
        return False
    phi: dict[int, int] = {}
    for x in range(len(c1.class_of)):
        a, b = c1.class_of[x], c2.class_of[x]
        if phi.setdefault(a, b) != b:
            return False
    if len(set(phi.values())) != len(phi):
        return False
    k = c1.num_classes
    return all(
        phi[q1.table[i][j]] == q2.table[phi[i]][phi[j]]
        for i in range(k)
        for j in range(k)
    )


def verify_sigma_is_abelianization(
    group: GroupStructure,
    bound: int = TWO_VAR_DEFAULT_BOUND,
    subject: str = "",
) -> VerificationReport:
    """Check that pair-relating equations reproduce the abelianization of a group.

    Hard checks: (i) a constructed witness validates for every same-coset
    ordered pair; (ii) every pair found by bounded search lives in one coset;
    (iii) the exact classes equal the cosets; (iv) the quotient by the exact
    classes is the abelianization up to class relabeling, commutative and
    cancellative.
    """
    s = group.base
    m = adjoin_identity(s)
    names = s.names
    report = VerificationReport(
        subject or f"group of order {s.order}", {"two-var": bound}
    )
    cosets = coset_congruence(group)

    failures = []
    count = 0
    for g in range(s.order):
        for h in range(s.order):
            if cosets.class_of[g] != cosets.class_of[h]:
                continue
            count += 1
            w = build_two_var_witness(group, g, h)
            problem = validate_two_var(m, h, g, w)
            if problem is not None:
                failures.append(f"({names[h]}, {names[g]}): {problem}")
    report._add(
        "constructed-pair-witnesses",
        f"built witnesses for all {count} same-coset ordered pairs",
        failures,
    )

    failures = []
    found = 0
    for u in range(s.order):
        for v in range(s.order):
            w = search_two_var(m, u, v, bound)
            if w is None:
                continue
            found += 1
            problem = validate_two_var(m, u, v, w)
            if problem is not None:
                failures.append(f"({names[u]}, {names[v]}): {problem}")
            elif cosets.class_of[u] != cosets.class_of[v]:
                failures.append(
                    f"({names[u]}, {names[v]}): related by search but in different cosets"
                )
    report._add(
        "bounded-pair-search-sound",
        f"{found} ordered pairs found at bound {bound}, all within cosets",
        failures,
    )

    exact = sigma_report(m, bound, group_exact=True)
    failures = []
    if not _partitions_equal(exact.congruence, cosets):
        failures.append("exact classes differ from the coset partition")
    for (u, v), w in sorted(exact.pairs.items()):
        problem = validate_two_var(m, u, v, w)
        if problem is not None:
            failures.append(f"({names[u]}, {names[v]}): {problem}")
            break
    report._add(
        "sigma-classes-equal-cosets",
        f"{exact.congruence.num_classes} exact classes, all attached witnesses validate",
        failures,
    )

    q_sigma = quotient(s, exact.congruence)
    ab = abelianization(group)
    failures = []
    if not is_commutative(q_sigma):
        failures.append("quotient is not commutative")
    if not is_cancellative(q_sigma):
        failures.append("quotient is not cancellative")
    if q_sigma.order != ab.order:
        failures.append(f"quotient order {q_sigma.order} != abelianization order {ab.order}")
    elif not _tables_match_up_to_relabeling(exact.congruence, cosets, q_sigma, ab):
        failures.append("quotient table does not match the abelianization")
    report._add(
        "sigma-quotient-is-abelianization",
        f"quotient of order {q_sigma.order} matches the abelianization",
        failures,
    )
    return report


def verify_semigroup_properties(
    s: Semigroup,
    one_var_bound: int = ONE_VAR_DEFAULT_BOUND,
    two_var_bound: int = TWO_VAR_DEFAULT_BOUND,
    subject: str = "",
) -> VerificationReport:
    """Witness families that must exist on any semigroup, plus bounded soft reports.

    Hard checks cover reflexivity, commutation, idempotent witnesses, and
    search monotonicity. Claims a bounded search cannot refute (closure of
    the searched orientable set, relation laws for found pairs, identity-like
    behavior) are soft reports; on groups they are re-run through the exact
    coset path and become hard.
    """
    m = adjoin_identity(s)
    names = s.names
    n = s.order
    report = VerificationReport(
        subject or f"semigroup of order {n}",
        {"one-var": one_var_bound, "two-var": two_var_bound},
    )

    pad = TwoVarWitness((0,), (), (0,), ())
    failures = [
        f"({names[u]}, {names[u]})"
        for u in range(n)
        if validate_two_var(m, u, u, pad) is not None
    ]
    report._add(
        "reflexivity-witnesses",
        f"padding witness validates for all {n} diagonal pairs",
        failures,
    )

    failures = []
    for u in range(n):
        for v in range(n):
            w = TwoVarWitness((v,), (), (), (v,))
            problem = validate_two_var(m, s.table[u][v], s.table[v][u], w)
            if problem is not None:
                failures.append(f"({names[u]}, {names[v]}): {problem}")
    report._add(
        "commutation-witnesses",
        f"(uv, vu) witness validates for all {n * n} ordered pairs",
        failures,
    )

    idems = idempotents(s)
    failures = [
        names[e]
        for e in idems
        if validate_one_var(m, e, OneVarWitness((e, e), (e,), (e,))) is not None
    ]
    report._add(
        "idempotent-witnesses",
        f"canonical witness validates for all {len(idems)} idempotents",
        failures,
    )

    failures = []
    for g in range(n):
        w1 = search_one_var(m, g, one_var_bound)
        if w1 is None:
            continue
        w2 = search_one_var(m, g, one_var_bound + 1)
        if w2 is None:
            failures.append(f"{names[g]}: witness lost at bound {one_var_bound + 1}")
        elif _one_var_key(w2) > _one_var_key(w1):
            failures.append(f"{names[g]}: canonical witness grew at a larger bound")
    report._add(
        "search-monotonicity",
        f"witnesses found at bound {one_var_bound} persist at bound {one_var_bound + 1}",
        failures,
    )

    found = {g for g, w in orientable_set(m, one_var_bound).items() if w is not None}
    bounded = sigma_report(m, two_var_bound)
    relation = set(bounded.pairs)

    observations = [
        f"{names[u]}*{names[v]} has no witness at bound {one_var_bound}"
        for u in sorted(found)
        for v in sorted(found)
        if s.table[u][v] not in found
    ]
    report._soft(
        "orientable-product-closure",
        f"{len(found)} elements have witnesses at bound {one_var_bound}",
        observations,
    )

    observations = [
        f"({names[u]}, {names[v]})" for (u, v) in sorted(relation) if (v, u) not in relation
    ]
    report._soft(
        "sigma-relation-symmetry",
        f"{len(relation)} related pairs at bound {two_var_bound}",
        observations,
    )

    observations = []
    by_first: dict[int, list[int]] = {}
    for u, v in relation:
        by_first.setdefault(u, []).append(v)
    for u, v in sorted(relation):
        for w2 in sorted(by_first.get(v, ())):
            if (u, w2) not in relation:
                observations.append(f"({names[u]}, {names[v]}, {names[w2]})")
    report._soft(
        "sigma-relation-transitivity",
        f"composites of {len(relation)} related pairs",
        observations,
    )

    observations = []
    for u, v in sorted(relation):
        for t in range(n):
            if (s.table[t][u], s.table[t][v]) not in relation:
                observations.append(f"left translate of ({names[u]}, {names[v]}) by {names[t]}")
            if (s.table[u][t], s.table[v][t]) not in relation:
                observations.append(f"right translate of ({names[u]}, {names[v]}) by {names[t]}")
    report._soft(
        "sigma-relation-compatibility",
        f"translates of {len(relation)} related pairs",
        observations,
    )

    observations = []
    for u in sorted(found):
        for t in range(n):
            if (s.table[u][t], t) not in relation:
                observations.append(f"({names[u]}*{names[t]}, {names[t]})")
    report._soft(
        "orientable-identity-class",
        f"products of {len(found)} witnessed elements against all elements",
        observations,
    )

    try:
        group = group_structure(s)
    except NotAGroupError:
        group = None
    if group is not None:
        derived = commutator_subgroup(group)
        derived_set = set(derived)
        cosets = coset_congruence(group)
        t = s.table

        failures = [
            f"{names[u]}*{names[v]}"
            for u in derived
            for v in derived
            if t[u][v] not in derived_set
        ]
        report._add(
            "orientable-product-closure-exact",
            "the commutator subgroup is product-closed",
            failures,
        )

        failures = []
        for u in derived:
            for x in range(n):
                if cosets.class_of[t[u][x]] != cosets.class_of[x]:
                    failures.append(f"({names[u]}, {names[x]})")
        report._add(
            "orientable-identity-class-exact",
            "commutator-subgroup elements act as the identity on cosets",
            failures,
        )

        bad = compatibility_violation(s, cosets)
        report._add(
            "sigma-congruence-exact",
            "the exact class partition is compatible with multiplication",
            [] if bad is None else [str(bad)],
        )
    return report
