"""Finite groups given by product tables, plus a small corpus of examples."""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .exceptions import InvalidGroupError


@dataclass(frozen=True)
class GroupTable:
    """A finite group on elements ``0..order-1``.

    Build with :meth:`from_product`, which derives ``identity`` and
    ``inverse`` and validates the group axioms.
    """

    order: int
    product: np.ndarray
    identity: int
    inverse: np.ndarray
    label: str | None = None

    @classmethod
    def from_product(cls, product, label: str | None = None) -> "GroupTable":
        try:
            table = np.asarray(product, dtype=np.int64)
        except (TypeError, ValueError) as exc:
            raise InvalidGroupError("closure", f"product table is not an integer array: {exc}")
        if table.ndim != 2 or table.shape[0] != table.shape[1] or table.shape[0] == 0:
            raise InvalidGroupError("closure", f"product table must be square and nonempty, got {table.shape}")
        n = table.shape[0]
        if table.min() < 0 or table.max() >= n:
            raise InvalidGroupError("closure", "entries must lie in 0..order-1")

        # (ab)c == a(bc) for all triples
        left = table[table, :]  # left[a, b, c] = (ab)c
        right = table[:, table]  # right[a, b, c] = a(bc)
        bad = np.argwhere(left != right)
        if bad.size:
            a, b, c = bad[0]
            raise InvalidGroupError("associativity", f"({a}*{b})*{c} != {a}*({b}*{c})")

        ar = np.arange(n)
        candidates = [e for e in range(n) if np.array_equal(table[e], ar) and np.array_equal(table[:, e], ar)]
        if not candidates:
            raise InvalidGroupError("identity", "no two-sided identity element")
        e = candidates[0]

        inverse = np.full(n, -1, dtype=np.int64)
        for g in range(n):
            hits = np.flatnonzero((table[g] == e) & (table[:, g] == e))
            if hits.size == 0:
                raise InvalidGroupError("inverses", f"element {g} has no two-sided inverse")
            inverse[g] = hits[0]

        table.setflags(write=False)
        inverse.setflags(write=False)
        return cls(order=n, product=table, identity=e, inverse=inverse, label=label)

    def mul(self, g: int, h: int) -> int:
        return int(self.product[g, h])

    def inv(self, g: int) -> int:
        return int(self.inverse[g])

    def conjugate(self, h: int, g: int) -> int:
        """h g h^-1."""
        return self.mul(self.mul(h, g), self.inv(h))

    def is_abelian(self) -> bool:
        return bool(np.array_equal(self.product, self.product.T))


def cyclic(n: int) -> GroupTable:
    ar = np.arange(n)
    return GroupTable.from_product((ar[:, None] + ar[None, :]) % n, label=f"Z{n}")


def direct_product(g: GroupTable, h: GroupTable) -> GroupTable:
    n, m = g.order, h.order
    table = np.empty((n * m, n * m), dtype=np.int64)
    for (a, b), (c, d) in itertools.product(itertools.product(range(n), range(m)), repeat=2):
        table[a * m + b, c * m + d] = g.product[a, c] * m + h.product[b, d]
    label = f"{g.label}x{h.label}" if g.label and h.label else None
    return GroupTable.from_product(table, label=label)


def klein_four() -> GroupTable:
    k = direct_product(cyclic(2), cyclic(2))
    return GroupTable.from_product(k.product, label="Z2xZ2")


def _from_elements(elements: list, compose, label: str) -> GroupTable:
    index = {el: i for i, el in enumerate(elements)}
    table = [[index[compose(p, q)] for q in elements] for p in elements]
    return GroupTable.from_product(table, label=label)


def symmetric(n: int) -> GroupTable:
    """S_n acting on ``range(n)``; element 0 is the identity permutation."""
    perms = list(itertools.permutations(range(n)))
    return _from_elements(perms, lambda p, q: tuple(p[q[i]] for i in range(n)), f"S{n}")


def dihedral(n: int) -> GroupTable:
    """Dihedral group of order 2n as pairs (rotation, reflection flag)."""
    els = [(r, s) for s in (0, 1) for r in range(n)]

    def compose(x, y):
        r1, s1 = x
        r2, s2 = y
        return ((r1 + (-r2 if s1 else r2)) % n, s1 ^ s2)

    return _from_elements(els, compose, f"D{n}")


def quaternion() -> GroupTable:
    # unit quaternions {±1, ±i, ±j, ±k} as (sign, axis) with axis 0 meaning 1
    mult = {
        (0, 0): (1, 0), (0, 1): (1, 1), (0, 2): (1, 2), (0, 3): (1, 3),
        (1, 0): (1, 1), (1, 1): (-1, 0), (1, 2): (1, 3), (1, 3): (-1, 2),
        (2, 0): (1, 2), (2, 1): (-1, 3), (2, 2): (-1, 0), (2, 3): (1, 1),
        (3, 0): (1, 3), (3, 1): (1, 2), (3, 2): (-1, 1), (3, 3): (-1, 0),
    }
    els = [(s, a) for s in (1, -1) for a in range(4)]

    def compose(x, y):
        sign, axis = mult[(x[1], y[1])]
        return (x[0] * y[0] * sign, axis)

    return _from_elements(els, compose, "Q8")


def corpus() -> dict[str, GroupTable]:
    """The groups exercised by the acceptance suite and property tests."""
    return {
        "Z2": cyclic(2),
        "Z3": cyclic(3),
        "Z4": cyclic(4),
        "Z2xZ2": klein_four(),
        "S3": symmetric(3),
        "Z5": cyclic(5),
        "D4": dihedral(4),
        "Q8": quaternion(),
    }
