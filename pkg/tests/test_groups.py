"""Group construction and exhaustive validation."""

from __future__ import annotations

import numpy as np

from ringbench.groups import (
    FiniteGroup,
    make_cyclic,
    make_product_group,
    validate_group,
)


def test_cyclic_tables():
    g = make_cyclic(6)
    assert g.order == 6
    assert g.identity == 0
    assert g.mul(4, 5) == 3
    assert g.inv(2) == 4
    assert g.inv(0) == 0


def test_cyclic_validates():
    for n in (1, 2, 5, 8):
        check = validate_group(make_cyclic(n))
        assert check.ok, check.failure


def test_product_group():
    g = make_product_group(make_cyclic(2), make_cyclic(3))
    assert g.order == 6
    check = validate_group(g)
    assert check.ok
    # (1, 2) + (1, 2) = (0, 1) -> index 0*3 + 1
    assert g.mul(1 * 3 + 2, 1 * 3 + 2) == 1


def test_validate_rejects_broken_associativity():
    op = make_cyclic(4).op.copy()
    op[1, 2] = 0  # 1+2 = 0 breaks associativity and inverses
    g = FiniteGroup(4, op, make_cyclic(4).inverse.copy())
    check = validate_group(g)
    assert not check.ok
    assert check.failure
    assert check.witness is not None


def test_validate_rejects_bad_identity():
    op = make_cyclic(3).op.copy()
    op[0, 1] = 2
    g = FiniteGroup(3, op, make_cyclic(3).inverse.copy())
    assert not validate_group(g).ok


def test_validate_rejects_bad_inverse():
    base = make_cyclic(5)
    inv = base.inverse.copy()
    inv[2] = 2
    assert not validate_group(FiniteGroup(5, base.op.copy(), inv)).ok


def test_element_names_default():
    g = make_cyclic(3)
    assert g.name(2) == "2"
    assert np.array_equal(g.op[0], np.arange(3))
