"""Small finite groups as Cayley tables.

Composition reads left to right: ``table[i, j]`` is "do i, then j".
For permutation groups that means (i * j)(x) = j(i(x)).  This is the
order that makes conjugation ``y^-1 x y`` agree with the tetrahedral
quandle table used elsewhere in the package, so don't flip it.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import permutations

import numpy as np

# validating the group laws is cubic in the order, so cap it
MAX_VALIDATED_ORDER = 120


@dataclass(frozen=True, eq=False)
class FiniteGroup:
    order: int
    table: np.ndarray
    identity: int
    inverses: tuple[int, ...]
    name: str = "G"
    element_names: tuple[str, ...] | None = None

    @cached_property
    def rows(self) -> list[list[int]]:
        """Plain nested lists, noticeably faster than ndarray indexing
        in the hom-counting inner loop."""
        return [[int(v) for v in row] for row in self.table]

    def mul(self, i: int, j: int) -> int:
        return int(self.table[i, j])

    def inv(self, i: int) -> int:
        return self.inverses[i]

    def json_dict(self) -> dict:
        return {
            "order": self.order,
            "table": [[int(v) for v in row] for row in self.table],
            "identity": self.identity,
        }


def from_table(table, name: str = "G", element_names=None) -> FiniteGroup:
    """Build a group from a Cayley table, verifying the group laws
    exhaustively (identity, inverses, associativity over all triples)."""
    arr = np.asarray(table, dtype=np.int64)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise ValueError("Cayley table must be square")
    n = arr.shape[0]
    if n == 0:
        raise ValueError("empty Cayley table")
    if n > MAX_VALIDATED_ORDER:
        raise ValueError("group order %d exceeds the validated maximum %d"
                         % (n, MAX_VALIDATED_ORDER))
    if arr.min() < 0 or arr.max() >= n:
        raise ValueError("Cayley table entries must lie in 0..%d" % (n - 1))

    rng = np.arange(n)
    ids = [i for i in range(n)
           if (arr[i] == rng).all() and (arr[:, i] == rng).all()]
    if len(ids) != 1:
        raise ValueError("table has no two-sided identity")
    e = ids[0]

    if not (arr[arr] == arr[:, arr]).all():
        raise ValueError("table is not associative")

    inverses = []
    for i in range(n):
        js = np.flatnonzero(arr[i] == e)
        if len(js) != 1 or arr[js[0], i] != e:
            raise ValueError("element %d has no two-sided inverse" % i)
        inverses.append(int(js[0]))

    arr.setflags(write=False)
    return FiniteGroup(n, arr, e, tuple(inverses), name,
                       tuple(element_names) if element_names else None)


def _perm_parity(p) -> int:
    inv = 0
    for i in range(len(p)):
        for j in range(i + 1, len(p)):
            if p[i] > p[j]:
                inv += 1
    return inv % 2


def _perm_group(perms, name: str) -> FiniteGroup:
    index = {p: i for i, p in enumerate(perms)}
    n = len(perms)
    table = np.empty((n, n), dtype=np.int64)
    for i, p in enumerate(perms):
        for j, q in enumerate(perms):
            table[i, j] = index[tuple(q[x] for x in p)]
    names = tuple("".join(map(str, p)) for p in perms)
    return from_table(table, name, names)


def symmetric_group(k: int) -> FiniteGroup:
    """S_k on {0..k-1}, elements enumerated in lexicographic one-line
    order so indices are stable across runs."""
    if not 2 <= k <= 5:
        raise ValueError("symmetric_group supports k in 2..5, got %r" % (k,))
    return _perm_group(sorted(permutations(range(k))), "S%d" % k)


def alternating_group(k: int) -> FiniteGroup:
    if not 3 <= k <= 5:
        raise ValueError("alternating_group supports k in 3..5, got %r" % (k,))
    perms = [p for p in sorted(permutations(range(k))) if _perm_parity(p) == 0]
    return _perm_group(perms, "A%d" % k)


def cyclic_group(n: int) -> FiniteGroup:
    if not 1 <= n <= MAX_VALIDATED_ORDER:
        raise ValueError("cyclic_group supports n in 1..%d, got %r"
                         % (MAX_VALIDATED_ORDER, n))
    table = (np.arange(n)[:, None] + np.arange(n)[None, :]) % n
    return from_table(table, "Z%d" % n, tuple(str(i) for i in range(n)))


def conjugate(g: FiniteGroup, x: int, y: int) -> int:
    """y^-1 x y by table lookups."""
    return g.mul(g.mul(g.inv(y), x), y)


def group_by_name(name: str) -> FiniteGroup:
    """Resolve the builtin names accepted on the command line:
    S2..S5, A3..A5, Z<n>."""
    m = name.strip().upper()
    if m.startswith("S") and m[1:].isdigit():
        return symmetric_group(int(m[1:]))
    if m.startswith("A") and m[1:].isdigit():
        return alternating_group(int(m[1:]))
    if m.startswith("Z") and m[1:].isdigit():
        return cyclic_group(int(m[1:]))
    raise ValueError("unknown group name: %r" % (name,))
