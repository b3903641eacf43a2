"""Catalog of standard finite semigroups and groups with stable element naming."""

from __future__ import annotations

from functools import lru_cache
from itertools import permutations, product

from .core import Semigroup, SemigroupError


class FamilyError(SemigroupError):
    """Unknown family name or parameter outside the supported range."""


# groups small enough for the exhaustive verification suites
GROUP_FAMILIES = tuple(f"cyclic:{n}" for n in range(1, 9)) + (
    "klein4",
    "symmetric:3",
    "dihedral:4",
    "quaternion8",
    "alternating:4",
)
NONGROUP_FAMILIES = ("leftzero:3", "rightzero:3", "null:3", "fulltransformation:2")
CATALOG_FAMILIES = GROUP_FAMILIES + NONGROUP_FAMILIES


def _table_from_op(elements, op, name_of) -> Semigroup:
    index = {e: i for i, e in enumerate(elements)}
    names = tuple(name_of(e) for e in elements)
    table = tuple(tuple(index[op(a, b)] for b in elements) for a in elements)
    return Semigroup(names, table)


def _compose(f, g):
    # (f*g)(x) = f(g(x))
    return tuple(f[g[x]] for x in range(len(f)))


def _parity(p) -> int:
    inversions = sum(
        1 for i in range(len(p)) for j in range(i + 1, len(p)) if p[i] > p[j]
    )
    return inversions % 2


def _cyclic(n: int) -> Semigroup:
    if n < 1:
        raise FamilyError("cyclic:n requires n >= 1")
    names = tuple(str(i) for i in range(n))
    table = tuple(tuple((i + j) % n for j in range(n)) for i in range(n))
    return Semigroup(names, table)


def _klein4() -> Semigroup:
    elems = [(0, 0), (1, 0), (0, 1), (1, 1)]
    names = {(0, 0): "e", (1, 0): "a", (0, 1): "b", (1, 1): "ab"}
    return _table_from_op(
        elems, lambda x, y: (x[0] ^ y[0], x[1] ^ y[1]), names.__getitem__
    )


def _symmetric(n: int) -> Semigroup:
    if not 1 <= n <= 4:
        raise FamilyError("symmetric:n supports 1 <= n <= 4")
    elems = sorted(permutations(range(n)))
    return _table_from_op(elems, _compose, lambda p: "".join(map(str, p)))


def _alternating(n: int) -> Semigroup:
    if n != 4:
        raise FamilyError("alternating:n supports only n = 4")
    elems = [p for p in sorted(permutations(range(n))) if _parity(p) == 0]
    return _table_from_op(elems, _compose, lambda p: "".join(map(str, p)))


def _dihedral(n: int) -> Semigroup:
    """Rotations r^i then reflections r^i s, with s r = r^-1 s."""
    if n < 1:
        raise FamilyError("dihedral:n requires n >= 1")
    elems = [(i, 0) for i in range(n)] + [(i, 1) for i in range(n)]

    def op(x, y):
        i, e = x
        j, f = y
        if e == 0:
            return ((i + j) % n, f)
        return ((i - j) % n, 1 - f)

    def name(x):
        i, e = x
        rot = "e" if i == 0 else ("r" if i == 1 else f"r{i}")
        if e == 0:
            return rot
        return "s" if i == 0 else ("rs" if i == 1 else f"r{i}s")

    return _table_from_op(elems, op, name)


# axis products for 1, i, j, k as (sign, axis)
_QMUL = (
    ((1, 0), (1, 1), (1, 2), (1, 3)),
    ((1, 1), (-1, 0), (1, 3), (-1, 2)),
    ((1, 2), (-1, 3), (-1, 0), (1, 1)),
    ((1, 3), (1, 2), (-1, 1), (-1, 0)),
)


def _quaternion8() -> Semigroup:
    elems = [(sign, axis) for axis in range(4) for sign in (1, -1)]

    def op(x, y):
        sm, am = _QMUL[x[1]][y[1]]
        return (x[0] * y[0] * sm, am)

    def name(x):
        base = "1ijk"[x[1]]
        return base if x[0] == 1 else "-" + base

    return _table_from_op(elems, op, name)


def _leftzero(n: int) -> Semigroup:
    if n < 1:
        raise FamilyError("leftzero:n requires n >= 1")
    names = tuple(f"x{i}" for i in range(n))
    table = tuple(tuple(i for _ in range(n)) for i in range(n))
    return Semigroup(names, table)


def _rightzero(n: int) -> Semigroup:
    if n < 1:
        raise FamilyError("rightzero:n requires n >= 1")
    names = tuple(f"x{i}" for i in range(n))
    table = tuple(tuple(range(n)) for _ in range(n))
    return Semigroup(names, table)


def _null(n: int) -> Semigroup:
    """Every product is the zero, which sits at index 0."""
    if n < 1:
        raise FamilyError("null:n requires n >= 1")
    names = ("z",) + tuple(f"x{i}" for i in range(1, n))
    table = tuple(tuple(0 for _ in range(n)) for _ in range(n))
    return Semigroup(names, table)


def _fulltransformation(n: int) -> Semigroup:
    if not 1 <= n <= 3:
        raise FamilyError("fulltransformation:n supports 1 <= n <= 3")
    elems = sorted(product(range(n), repeat=n))
    return _table_from_op(elems, _compose, lambda f: "".join(map(str, f)))


def _split_product_spec(spec: str) -> tuple[Semigroup, Semigroup]:
    # nested products contain commas themselves, so try each split point
    positions = [i for i, ch in enumerate(spec) if ch == ","]
    if not positions:
        raise FamilyError("directproduct takes two comma-separated family specs")
    for pos in positions:
        left, right = spec[:pos], spec[pos + 1 :]
        if not left or not right:
            continue
        try:
            return make_family(left), make_family(right)
        except FamilyError:
            continue
    raise FamilyError(f"cannot parse directproduct operands {spec!r}")


def _directproduct(spec: str) -> Semigroup:
    a, b = _split_product_spec(spec)
    elems = [(i, j) for i in range(a.order) for j in range(b.order)]

    def op(x, y):
        return (a.table[x[0]][y[0]], b.table[x[1]][y[1]])

    return _table_from_op(elems, op, lambda x: f"{a.names[x[0]]}|{b.names[x[1]]}")


_NO_PARAM = {"klein4": _klein4, "quaternion8": _quaternion8}
_INT_PARAM = {
    "cyclic": _cyclic,
    "symmetric": _symmetric,
    "alternating": _alternating,
    "dihedral": _dihedral,
    "leftzero": _leftzero,
    "rightzero": _rightzero,
    "null": _null,
    "fulltransformation": _fulltransformation,
}


@lru_cache(maxsize=None)
def make_family(spec: str) -> Semigroup:
    """Build a catalog semigroup from a spec string.

    Examples: ``cyclic:6``, ``klein4``, ``symmetric:3``, ``dihedral:4``,
    ``quaternion8``, ``leftzero:3``, ``null:3``, ``fulltransformation:2``,
    ``directproduct:cyclic:2,cyclic:3``.
    """
    name, sep, rest = spec.partition(":")
    if name == "directproduct":
        if not sep:
            raise FamilyError("directproduct needs two family specs")
        return _directproduct(rest)
    if name in _NO_PARAM:
        if sep:
            raise FamilyError(f"{name} takes no parameter")
        return _NO_PARAM[name]()
    if name not in _INT_PARAM:
        raise FamilyError(f"unknown family {name!r}")
    if not sep or not rest:
        raise FamilyError(f"{name} needs an integer parameter, e.g. {name}:3")
    try:
        n = int(rest)
    except ValueError:
        raise FamilyError(f"{name} parameter must be an integer, got {rest!r}") from None
    return _INT_PARAM[name](n)
