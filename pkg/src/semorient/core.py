"""Finite semigroups as validated Cayley tables, plus congruence and quotient machinery.

Elements are integer indices into a name list; the binary operation is an
n-by-n table of indices. Every structure is immutable after construction and
every operation here is a pure function, so values can be shared freely
between threads.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Optional, Sequence

Word = tuple[int, ...]

# characters that would collide with the table file format or CLI selectors
_RESERVED_NAME_CHARS = "#,:"


class SemigroupError(Exception):
    """Base class for table, congruence, and group-structure failures."""


class TableFormatError(SemigroupError):
    """Malformed table file or structurally invalid table."""

    def __init__(self, message: str, line: Optional[int] = None, column: Optional[int] = None):
        self.line = line
        self.column = column
        if line is not None and column is not None:
            message = f"line {line}, column {column}: {message}"
        elif line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class AssociativityError(SemigroupError):
    """A candidate table fails associativity; carries the first bad triple."""

    def __init__(self, triple: tuple[int, int, int]):
        self.triple = triple
        i, j, k = triple
        super().__init__(
            f"not associative at triple ({i}, {j}, {k}): (e{i} e{j}) e{k} != e{i} (e{j} e{k})"
        )


class CompatibilityError(SemigroupError):
    """A partition is not compatible with multiplication.

    The quadruple (u, u', v, v') has u ~ u' and v ~ v' but u*v and u'*v' in
    different classes.
    """

    def __init__(self, quadruple: tuple[int, int, int, int]):
        self.quadruple = quadruple
        u, u2, v, v2 = quadruple
        super().__init__(
            f"partition is not a congruence: {u} ~ {u2} and {v} ~ {v2} "
            "but the products land in different classes"
        )


def check_associativity(table: Sequence[Sequence[int]]) -> Optional[tuple[int, int, int]]:
    """Return the lexicographically first triple (i, j, k) that fails to associate, or None."""
    n = len(table)
    rng = range(n)
    for i in rng:
        row_i = table[i]
        for j in rng:
            row_ij = table[row_i[j]]
            row_j = table[j]
            for k in rng:
                if row_ij[k] != row_i[row_j[k]]:
                    return (i, j, k)
    return None


def _name_problem(name: str) -> Optional[str]:
    if not name:
        return "empty element name"
    if any(ch.isspace() for ch in name):
        return f"element name {name!r} contains whitespace"
    for ch in _RESERVED_NAME_CHARS:
        if ch in name:
            return f"element name {name!r} contains reserved character {ch!r}"
    return None


@dataclass(frozen=True)
class Semigroup:
    """A finite semigroup: distinct element names plus an associative Cayley table.

    ``table[i][j]`` is the index of ``names[i] * names[j]``. Associativity and
    entry ranges are verified on construction, so holding a Semigroup value is
    proof of validity.
    """

    names: tuple[str, ...]
    table: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        n = len(self.names)
        if n == 0:
            raise TableFormatError("a semigroup needs at least one element")
        seen = set()
        for name in self.names:
            problem = _name_problem(name)
            if problem:
                raise TableFormatError(problem)
            if name in seen:
                raise TableFormatError(f"duplicate element name {name!r}")
            seen.add(name)
        if len(self.table) != n:
            raise TableFormatError(f"table has {len(self.table)} rows for {n} elements")
        for i, row in enumerate(self.table):
            if len(row) != n:
                raise TableFormatError(f"table row {i} has {len(row)} entries, expected {n}")
            for e in row:
                if not 0 <= e < n:
                    raise TableFormatError(f"table entry {e} out of range in row {i}")
        violation = check_associativity(self.table)
        if violation is not None:
            raise AssociativityError(violation)

    @property
    def order(self) -> int:
        return len(self.names)

    def index_of(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise KeyError(f"unknown element name {name!r}") from None

    def mul(self, i: int, j: int) -> int:
        return self.table[i][j]


def make_semigroup(names: Iterable[str], table: Iterable[Iterable[int]]) -> Semigroup:
    """Normalize nested sequences into a validated Semigroup."""
    return Semigroup(tuple(names), tuple(tuple(row) for row in table))


def _tokenize(line: str) -> list[tuple[str, int]]:
    """Whitespace-split with 1-based start columns."""
    tokens = []
    i = 0
    while i < len(line):
        if line[i].isspace():
            i += 1
            continue
        j = i
        while j < len(line) and not line[j].isspace():
            j += 1
        tokens.append((line[i:j], i + 1))
        i = j
    return tokens


def parse_table(text: str) -> Semigroup:
    """Parse the table file format into a validated Semigroup.

    The format is line oriented: ``#`` comment lines and blank lines are
    ignored; an ``elements:`` line lists the n element names; a ``table:``
    line is followed by exactly n rows of n names, row i column j giving
    ``names[i] * names[j]``.
    """
    significant: list[tuple[int, str]] = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        significant.append((lineno, line))
    if not significant:
        raise TableFormatError("missing 'elements:' line")

    lineno, line = significant[0]
    tokens = _tokenize(line)
    if tokens[0][0] != "elements:":
        raise TableFormatError("expected 'elements:' line", line=lineno, column=tokens[0][1])
    if len(tokens) == 1:
        raise TableFormatError("no element names given", line=lineno)
    index: dict[str, int] = {}
    for tok, col in tokens[1:]:
        problem = _name_problem(tok)
        if problem:
            raise TableFormatError(problem, line=lineno, column=col)
        if tok in index:
            raise TableFormatError(f"duplicate element name {tok!r}", line=lineno, column=col)
        index[tok] = len(index)
    names = tuple(index)
    n = len(names)

    if len(significant) < 2:
        raise TableFormatError("missing 'table:' line")
    lineno, line = significant[1]
    tokens = _tokenize(line)
    if tokens[0][0] != "table:" or len(tokens) != 1:
        raise TableFormatError("expected 'table:' line", line=lineno, column=tokens[0][1])

    rows = significant[2:]
    if len(rows) < n:
        raise TableFormatError(f"expected {n} table rows, found {len(rows)}")
    if len(rows) > n:
        raise TableFormatError("unexpected content after table rows", line=rows[n][0])
    table = []
    for i, (lineno, line) in enumerate(rows):
        tokens = _tokenize(line)
        if len(tokens) != n:
            raise TableFormatError(
                f"table row {i} has {len(tokens)} entries, expected {n}", line=lineno
            )
        row = []
        for tok, col in tokens:
            if tok not in index:
                raise TableFormatError(f"unknown element name {tok!r}", line=lineno, column=col)
            row.append(index[tok])
        table.append(tuple(row))
    return Semigroup(names, tuple(table))


def serialize_table(s: Semigroup) -> str:
    """Emit the table file format: single spaces, trailing newline, no comments."""
    lines = ["elements: " + " ".join(s.names), "table:"]
    for row in s.table:
        lines.append(" ".join(s.names[e] for e in row))
    return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class Monoid1:
    """A semigroup with a fresh two-sided identity adjoined as the last element.

    The identity realizes absent equation parts: an empty factor word
    evaluates to it. It is never a legal factor inside witness words, and it
    is adjoined even if the base already has an identity, so every semigroup
    gets the same uniform shape.
    """

    base: Semigroup
    names: tuple[str, ...]
    table: tuple[tuple[int, ...], ...]
    identity_index: int

    def __post_init__(self):
        n = self.base.order
        if self.identity_index != n or len(self.names) != n + 1 or len(self.table) != n + 1:
            raise SemigroupError("malformed identity extension")
        for i in range(n):
            row = self.table[i]
            if len(row) != n + 1 or row[:n] != self.base.table[i]:
                raise SemigroupError("identity extension does not preserve base products")
        for i in range(n + 1):
            if self.table[n][i] != i or self.table[i][n] != i:
                raise SemigroupError("adjoined element is not a two-sided identity")

    @property
    def order(self) -> int:
        return self.base.order + 1


@lru_cache(maxsize=None)
def adjoin_identity(s: Semigroup) -> Monoid1:
    """Adjoin a fresh two-sided identity, displayed as "1" (primed until unused)."""
    n = s.order
    marker = "1"
    while marker in s.names:
        marker += "'"
    names = s.names + (marker,)
    table = tuple(s.table[i] + (i,) for i in range(n)) + (tuple(range(n + 1)),)
    return Monoid1(s, names, table, n)


def eval_word(m: Monoid1, word: Iterable[int]) -> int:
    """Left-to-right product of a word of element indices; the empty word is the identity."""
    acc = m.identity_index
    table = m.table
    top = m.identity_index
    for x in word:
        if not 0 <= x <= top:
            raise ValueError(f"word entry {x} out of range")
        acc = table[acc][x]
    return acc


def idempotents(s: Semigroup) -> tuple[int, ...]:
    """Indices of all elements with e*e = e, ascending."""
    return tuple(e for e in range(s.order) if s.table[e][e] == e)


@dataclass(frozen=True)
class Congruence:
    """A partition of element indices by class id, intended to respect multiplication.

    Class ids are canonical: class k first appears at the smallest element
    index not already covered, so equal partitions compare equal directly.
    Compatibility with the table is checked by consumers (see ``quotient``),
    not by this constructor.
    """

    class_of: tuple[int, ...]
    num_classes: int

    def __post_init__(self):
        next_fresh = 0
        for x, c in enumerate(self.class_of):
            if not 0 <= c < self.num_classes:
                raise SemigroupError(f"class id {c} out of range at element {x}")
            if c > next_fresh:
                raise SemigroupError("class ids must appear in first-appearance order")
            if c == next_fresh:
                next_fresh += 1
        if next_fresh != self.num_classes:
            raise SemigroupError("not every class id is used")

    def classes(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in range(self.num_classes)]
        for x, c in enumerate(self.class_of):
            out[c].append(x)
        return out

    def relates(self, u: int, v: int) -> bool:
        return self.class_of[u] == self.class_of[v]


def compatibility_violation(
    s: Semigroup, c: Congruence
) -> Optional[tuple[int, int, int, int]]:
    """Find a quadruple (u, u', v, v') witnessing incompatibility, or None.

    One-sided translation invariance is checked; together with transitivity
    that is equivalent to full two-sided compatibility.
    """
    table = s.table
    cls = c.class_of
    for members in c.classes():
        u0 = members[0]
        for u in members[1:]:
            for t in range(s.order):
                if cls[table[u0][t]] != cls[table[u][t]]:
                    return (u0, u, t, t)
                if cls[table[t][u0]] != cls[table[t][u]]:
                    return (t, t, u0, u)
    return None


def generated_congruence(s: Semigroup, pairs: Iterable[tuple[int, int]]) -> Congruence:
    """Smallest congruence containing ``pairs``.

    Union-find seeded with the pairs and saturated to fixpoint under left and
    right translation: u ~ v forces t*u ~ t*v and u*t ~ v*t for every t.
    """
    n = s.order
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    queue: deque[tuple[int, int]] = deque()

    def union(a: int, b: int) -> None:
        ra, rb = find(a), find(b)
        if ra == rb:
            return
        if rb < ra:
            ra, rb = rb, ra
        parent[rb] = ra
        queue.append((a, b))

    for a, b in pairs:
        if not (0 <= a < n and 0 <= b < n):
            raise ValueError(f"pair ({a}, {b}) out of range")
        union(a, b)
    table = s.table
    while queue:
        u, v = queue.popleft()
        for t in range(n):
            union(table[t][u], table[t][v])
            union(table[u][t], table[v][t])

    ids: dict[int, int] = {}
    class_of = []
    for x in range(n):
        r = find(x)
        if r not in ids:
            ids[r] = len(ids)
        class_of.append(ids[r])
    result = Congruence(tuple(class_of), len(ids))
    assert compatibility_violation(s, result) is None
    return result


def quotient(s: Semigroup, c: Congruence) -> Semigroup:
    """Quotient semigroup on congruence classes; compatibility is re-verified here.

    Class i is named after its smallest member, bracketed: ``[name]``.
    """
    if len(c.class_of) != s.order:
        raise ValueError("congruence does not match the semigroup's order")
    bad = compatibility_violation(s, c)
    if bad is not None:
        raise CompatibilityError(bad)
    reps = [members[0] for members in c.classes()]
    names = tuple(f"[{s.names[r]}]" for r in reps)
    cls = c.class_of
    table = tuple(tuple(cls[s.table[ri][rj]] for rj in reps) for ri in reps)
    return Semigroup(names, table)


def is_commutative(s: Semigroup) -> bool:
    t = s.table
    return all(t[i][j] == t[j][i] for i in range(s.order) for j in range(i))


def is_cancellative(s: Semigroup) -> bool:
    """True iff every row and every column of the table is injective."""
    n = s.order
    for row in s.table:
        if len(set(row)) != n:
            return False
    for j in range(n):
        if len({s.table[i][j] for i in range(n)}) != n:
            return False
    return True
