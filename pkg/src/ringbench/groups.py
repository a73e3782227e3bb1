"""Finite groups given by explicit operation tables.

Elements are dense indices 0..order-1 and the identity is always index 0.
Grading groups stay small, so validation is plain exhaustive search.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np


@dataclass
class FiniteGroup:
    order: int
    op: np.ndarray          # (order, order) -> element index
    inverse: np.ndarray     # (order,) -> element index
    identity: int = 0
    element_names: list[str] = field(default_factory=list)

    def __post_init__(self):
        if not self.element_names:
            self.element_names = [str(i) for i in range(self.order)]

    def mul(self, a: int, b: int) -> int:
        return int(self.op[a, b])

    def inv(self, a: int) -> int:
        return int(self.inverse[a])

    def name(self, a: int) -> str:
        return self.element_names[a]


@dataclass
class GroupValidation:
    ok: bool
    failure: str | None = None
    witness: tuple | None = None

    def __bool__(self) -> bool:
        return self.ok


def make_cyclic(n: int) -> FiniteGroup:
    """Cyclic group Z_n under addition, identity 0."""
    if n <= 0:
        raise ValueError(f"cyclic group order must be positive, got {n}")
    idx = np.arange(n, dtype=np.int64)
    op = (idx[:, None] + idx[None, :]) % n
    inverse = (-idx) % n
    return FiniteGroup(n, op.astype(np.uint16), inverse.astype(np.uint16))


def make_product_group(g1: FiniteGroup, g2: FiniteGroup) -> FiniteGroup:
    """Direct product; pair (a, b) sits at index a*|G2| + b."""
    n1, n2 = g1.order, g2.order
    n = n1 * n2
    a = np.arange(n, dtype=np.int64)
    a1, a2 = a // n2, a % n2
    op = (g1.op[a1[:, None], a1[None, :]].astype(np.int64) * n2
          + g2.op[a2[:, None], a2[None, :]])
    inverse = g1.inverse[a1].astype(np.int64) * n2 + g2.inverse[a2]
    names = [f"({g1.name(int(i))}, {g2.name(int(j))})" for i, j in zip(a1, a2)]
    return FiniteGroup(n, op.astype(np.uint16), inverse.astype(np.uint16),
                       element_names=names)


def validate_group(group: FiniteGroup) -> GroupValidation:
    """Check the group axioms on the tables; report the first violation found.

    Checks run in a fixed order (table shape, identity, inverses,
    associativity) and the witness is the lexicographically first offender.
    """
    n = group.order
    op = group.op
    if op.shape != (n, n):
        return GroupValidation(False, "op table shape", (op.shape, (n, n)))
    if op.min(initial=0) < 0 or op.max(initial=0) >= n:
        bad = np.argwhere((op < 0) | (op >= n))[0]
        return GroupValidation(False, "op entry out of range", tuple(int(v) for v in bad))
    if group.inverse.shape != (n,):
        return GroupValidation(False, "inverse table shape", (group.inverse.shape, (n,)))
    e = group.identity
    if e != 0:
        return GroupValidation(False, "identity must be index 0", (e,))
    left = op[e, :] != np.arange(n)
    if left.any():
        x = int(np.nonzero(left)[0][0])
        return GroupValidation(False, "identity", (e, x))
    right = op[:, e] != np.arange(n)
    if right.any():
        x = int(np.nonzero(right)[0][0])
        return GroupValidation(False, "identity", (x, e))
    inv_bad = op[np.arange(n), group.inverse] != e
    if inv_bad.any():
        x = int(np.nonzero(inv_bad)[0][0])
        return GroupValidation(False, "inverse", (x, int(group.inverse[x])))
    inv_bad = op[group.inverse, np.arange(n)] != e
    if inv_bad.any():
        x = int(np.nonzero(inv_bad)[0][0])
        return GroupValidation(False, "inverse", (int(group.inverse[x]), x))
    # (a b) c == a (b c), exhaustive; grading groups are tiny
    for a in range(n):
        lhs = op[op[a, :], :]          # (b, c) -> (a b) c
        rhs = op[a, op]                # (b, c) -> a (b c)
        diff = lhs != rhs
        if diff.any():
            b, c = (int(v) for v in np.argwhere(diff)[0])
            return GroupValidation(False, "associativity", (a, b, c))
    return GroupValidation(True)
