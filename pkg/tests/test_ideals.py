"""Ideal generation, closure checking, and enumeration against a brute oracle."""

from __future__ import annotations

import pytest

from ringbench.bitsets import indices_from_mask, popcount
from ringbench.grading import attach_grading, make_gaussian_grading, make_trivial_grading
from ringbench.groups import make_cyclic
from ringbench.ideals import (
    LEFT,
    RIGHT,
    TWO_SIDED,
    EnumerationCapError,
    IdealSubset,
    additive_span,
    check_closure,
    enumerate_graded_ideals,
    generate_ideal,
    graded_component,
    graded_defect,
    ideal_product,
    ideal_sum,
    is_graded_ideal,
    minimal_homogeneous_generators,
)
from ringbench.rings import make_gaussian, make_matrix_ring, make_zn
from ringbench.specs import build_document, parse_document


def build(text: str):
    return build_document(parse_document(text)).graded_ring


def brute_graded_ideals(gr, sidedness=TWO_SIDED) -> list[int]:
    """Check every subset containing 0: additive closure, absorption by all
    ring elements per sidedness, and gradedness."""
    n = gr.order
    add, mul = gr.ring.add, gr.ring.mul
    left = sidedness in (TWO_SIDED, LEFT)
    right = sidedness in (TWO_SIDED, RIGHT)
    out = []
    for s in range(1, 1 << n, 2):
        idx = [x for x in range(n) if (s >> x) & 1]
        if not all((s >> add[x, y]) & 1 for x in idx for y in idx):
            continue
        if left and not all((s >> mul[r, x]) & 1
                            for x in idx for r in range(n)):
            continue
        if right and not all((s >> mul[x, r]) & 1
                             for x in idx for r in range(n)):
            continue
        if graded_defect(gr, s) is not None:
            continue
        out.append(s)
    return out


def test_generate_ideal_zn8():
    gr = build("ring: zn(8)")
    assert generate_ideal(gr, []).mask == 1
    two = generate_ideal(gr, [2])
    assert sorted(indices_from_mask(two.mask, 8)) == [0, 2, 4, 6]
    assert two.graded is True
    four = generate_ideal(gr, [4])
    assert sorted(indices_from_mask(four.mask, 8)) == [0, 4]


def test_generate_ideal_gaussian():
    gr = build("ring: gaussian(8)")
    two = generate_ideal(gr, [2])
    assert popcount(two.mask) == 16            # 2Z_8[i]
    gen_i = generate_ideal(gr, [8])            # (i) = whole ring
    assert popcount(gen_i.mask) == 64


def test_generate_ideal_matrix():
    gr = build("ring: matrix(zn(8), 2)")
    e00_2 = 2 * 512                            # [[2,0],[0,0]]
    sub = generate_ideal(gr, [e00_2])
    assert popcount(sub.mask) == 256           # M_2(2Z_8)


def test_non_homogeneous_generator_makes_ungraded_ideal():
    gr = build("ring: gaussian(2)")
    sub = generate_ideal(gr, [3])              # 1+i
    assert sub.graded is False
    assert graded_defect(gr, sub.mask) is not None


def test_check_closure_witnesses():
    gr = build("ring: zn(8)")
    ok, witness = check_closure(gr, IdealSubset(0b101), TWO_SIDED)
    assert ok is False and witness == ("add", 2, 2)
    ok, witness = check_closure(gr, IdealSubset(0b100), TWO_SIDED)
    assert ok is False and witness == ("zero missing",)
    ok, _ = check_closure(gr, generate_ideal(gr, [2]), TWO_SIDED)
    assert ok is True


def test_enumeration_matches_brute_force():
    cases = [
        "ring: zn(8)",
        "ring: zn(12)",
        "ring: zn(16)",
        "ring: gaussian(2)",
        "ring: gaussian(3)",
        "ring: gaussian(4)",
        "ring: matrix(zn(2), 2)",
        "ring: product(zn(2), zn(4))",
        "ring: idealization(zn(4), quotient([2]))",
    ]
    for text in cases:
        gr = build(text)
        assert gr.order <= 16
        expected = brute_graded_ideals(gr)
        got = [i.mask for i in enumerate_graded_ideals(gr)]
        assert got == expected, text
        assert got == sorted(got)


def test_one_sided_enumeration_matches_brute_force():
    gr = build("ring: matrix(zn(2), 2)")
    for sidedness in (LEFT, RIGHT):
        expected = brute_graded_ideals(gr, sidedness)
        got = [i.mask for i in enumerate_graded_ideals(gr, sidedness)]
        assert got == expected, sidedness
    # the matrix ring is simple: only {0} and R are two-sided,
    # but one-sided ideals are strictly more numerous
    two = len(enumerate_graded_ideals(gr, TWO_SIDED))
    left = len(enumerate_graded_ideals(gr, LEFT))
    assert two == 2 and left > two


def test_enumeration_cap():
    gr = build("ring: zn(16)")
    with pytest.raises(EnumerationCapError):
        enumerate_graded_ideals(gr, TWO_SIDED, cap=3)


def test_ideal_product_and_sum():
    gr = build("ring: zn(16)")
    two = generate_ideal(gr, [2])
    four = generate_ideal(gr, [4])
    prod = ideal_product(gr, two, two)
    assert prod.mask == four.mask
    total = ideal_sum(gr, four, generate_ideal(gr, [8]))
    assert total.mask == four.mask
    zero = generate_ideal(gr, [])
    assert ideal_product(gr, zero, two).mask == 1


def test_graded_component():
    gr = build("ring: gaussian(4)")
    two = generate_ideal(gr, [2])              # {0,2,2i,2+2i}
    comp0 = graded_component(gr, two, 0)
    assert sorted(indices_from_mask(comp0, 16)) == [0, 2]
    comp1 = graded_component(gr, two, 1)
    assert sorted(indices_from_mask(comp1, 16)) == [0, 8]


def test_minimal_generators_round_trip():
    for text in ("ring: zn(16)", "ring: gaussian(4)", "ring: matrix(zn(4), 2)"):
        gr = build(text)
        for sub in enumerate_graded_ideals(gr):
            gens = minimal_homogeneous_generators(gr, sub)
            assert all(gr.is_homogeneous(x) for x in gens)
            again = generate_ideal(gr, gens)
            assert again.mask == sub.mask, (text, gens)
    gr = build("ring: zn(4)")
    assert minimal_homogeneous_generators(gr, generate_ideal(gr, [])) == []


def test_additive_span():
    gr = build("ring: zn(8)")
    assert additive_span(gr, [2]) == generate_ideal(gr, [2]).mask
    assert additive_span(gr, []) == 1


def test_is_graded_ideal():
    gr = build("ring: gaussian(2)")
    assert is_graded_ideal(gr, 1)
    assert is_graded_ideal(gr, (1 << 4) - 1)
    assert not is_graded_ideal(gr, 0b1001)     # {0, 1+i}: ungraded
