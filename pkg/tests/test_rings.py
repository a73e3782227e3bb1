"""Ring constructors, table validation, and the reduced-check cross-oracle."""

from __future__ import annotations

import numpy as np
import pytest

from ringbench.rings import (
    FiniteRing,
    RingTooLargeError,
    additive_generators,
    find_unity,
    make_gaussian,
    make_matrix_ring,
    make_product_ring,
    make_table_ring,
    make_zn,
    validate_ring,
)


def brute_ring_ok(ring: FiniteRing) -> bool:
    """Direct evaluation of every ring axiom over all element triples."""
    n = ring.order
    add = ring.add.astype(np.int64)
    mul = ring.mul.astype(np.int64)
    neg = ring.neg.astype(np.int64)
    ids = np.arange(n)
    if (add[0] != ids).any() or (add[:, 0] != ids).any():
        return False
    if (add != add.T).any():
        return False
    if (add[neg, ids] != 0).any():
        return False
    if (add[add] != add[:, add]).any():
        return False
    if (mul[mul] != mul[:, mul]).any():
        return False
    if (mul[:, add] != add[mul[:, :, None], mul[:, None, :]]).any():
        return False
    if (mul[add] != add[mul[:, None, :], mul[None, :, :]]).any():
        return False
    return True


def test_zn_tables():
    r = make_zn(6)
    assert r.order == 6
    assert r.add[4, 5] == 3
    assert r.mul[4, 5] == 2
    assert r.neg[2] == 4
    assert r.unity == 1
    assert r.name(3) == "3"
    assert r.is_commutative()


def test_zn_one_element():
    r = make_zn(1)
    assert r.order == 1
    assert validate_ring(r).ok


def test_gaussian_layout():
    r = make_gaussian(4)
    # a+bi sits at b*4 + a
    one, i = 1, 4
    assert r.unity == one
    assert r.mul[i, i] == 3            # i*i = -1 = 3
    assert r.mul[2 + 4, 2] == 8        # (2+i)*2 = 4+2i = 2i mod 4 -> index 2*4
    assert r.name(6) == "2+i"
    assert r.name(8) == "2i"
    assert r.name(4) == "i"
    assert r.name(3) == "3"
    assert r.is_commutative()


def test_matrix_ring_digits():
    r = make_matrix_ring(make_zn(2), 2)
    assert r.order == 16
    # [[a,b],[c,d]] at index a*8 + b*4 + c*2 + d
    e01 = 0b0100
    e10 = 0b0010
    assert r.mul[e01, e10] == 0b1000   # E01*E10 = E00
    assert r.mul[e10, e01] == 0b0001   # E10*E01 = E11
    assert r.unity == 0b1001
    assert r.name(0b0110) == "[[0,1],[1,0]]"
    assert not r.is_commutative()


def test_product_ring_index():
    r = make_product_ring(make_zn(2), make_zn(3))
    assert r.order == 6
    # (1, 2) * (1, 2) = (1, 1) -> 1*3 + 1
    assert r.mul[1 * 3 + 2, 1 * 3 + 2] == 4
    assert r.unity == 1 * 3 + 1
    assert r.name(5) == "(1, 2)"


def test_cap_enforced():
    with pytest.raises(RingTooLargeError):
        make_matrix_ring(make_zn(9), 2, cap=4096)
    with pytest.raises(RingTooLargeError):
        make_zn(100, cap=64)


def test_find_unity_none_for_nonunital():
    # 2Z_4: {0, 2} under mod-4 arithmetic has no unity
    add = [[0, 1], [1, 0]]
    mul = [[0, 0], [0, 0]]
    r = make_table_ring(add, mul)
    assert r.unity is None
    assert find_unity(r) is None


def test_table_ring_rejects_malformed():
    with pytest.raises(ValueError):
        make_table_ring([[0, 1]], [[0, 0], [0, 0]])
    with pytest.raises(ValueError):
        make_table_ring([[0, 1], [1, 0]], [[0, 9], [0, 0]])
    with pytest.raises(ValueError):
        make_table_ring([[1, 1], [1, 1]], [[0, 0], [0, 0]])  # no additive inverse


def test_validator_matches_brute_force_on_valid_rings():
    rings = [make_zn(6), make_zn(8), make_gaussian(3),
             make_matrix_ring(make_zn(2), 2),
             make_product_ring(make_zn(2), make_zn(2))]
    for r in rings:
        check = validate_ring(r)
        assert check.ok == brute_ring_ok(r), r.kind
        assert check.ok


def test_validator_matches_brute_force_on_corrupted_tables():
    rng = np.random.default_rng(7)
    base = make_zn(8)
    for _ in range(25):
        add = base.add.copy()
        mul = base.mul.copy()
        which = rng.integers(0, 2)
        x, y = rng.integers(0, 8, size=2)
        delta = int(rng.integers(1, 8))
        if which == 0:
            add[x, y] = (add[x, y] + delta) % 8
        else:
            mul[x, y] = (mul[x, y] + delta) % 8
        try:
            r = make_table_ring(add, mul)
        except ValueError:
            continue
        assert validate_ring(r).ok == brute_ring_ok(r), (which, x, y, delta)


def test_validator_reports_witness():
    mul = make_zn(4).mul.copy()
    mul[2, 3] = 1   # breaks distributivity/associativity somewhere
    r = make_table_ring(make_zn(4).add.copy(), mul)
    check = validate_ring(r)
    assert not check.ok
    assert check.failure
    assert check.witness is not None


def test_additive_generators_cover():
    for r in (make_zn(8), make_gaussian(2), make_matrix_ring(make_zn(2), 2)):
        span = {0}
        frontier = list(additive_generators(r))
        while frontier:
            x = frontier.pop()
            if x in span:
                continue
            span.add(x)
            new = {int(r.add[x, s]) for s in span}
            frontier.extend(v for v in new if v not in span)
        assert span == set(range(r.order))
