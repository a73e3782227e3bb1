"""Shared test helpers: spec-built rings and a raw, definition-level route to
the sandwich kernels the classifier computes with its cached fast path."""

from __future__ import annotations

import numpy as np

from ringbench.bitsets import bools_from_mask
from ringbench.specs import build_document, parse_document


def build_ring(text: str):
    return build_document(parse_document(text)).graded_ring


def raw_sandwich_kernels(gr, pmask: int) -> dict:
    """Recompute the classifier's triple kernels straight from the definitions.

    For homogeneous x, y, z (indexed by position in hom_indices order):
      subseteq[i,k,m]  x*R*y*R*z lands inside P, sandwiching over EVERY ring
                       element, not just homogeneous ones
      iszero[i,k,m]    the same sandwich is identically zero
      pair_any[i,k,m]  xy, yz, or xz lands in P
      xyz[i,k,m]       the plain triple product
    """
    n = gr.order
    mul = gr.ring.mul
    H = gr.hom_indices()
    Pb = bools_from_mask(pmask, n)
    # out[a, r, z] = a*r*z for all ring elements
    out = mul[mul]
    in_p2 = Pb[out].all(axis=1)        # a*R*z inside P
    zero2 = (out == 0).all(axis=1)     # a*R*z identically zero
    mid = out[np.ix_(H, np.arange(n), H)]
    subseteq = in_p2[:, H][mid].all(axis=1)
    iszero = zero2[:, H][mid].all(axis=1)
    pp = Pb[mul[np.ix_(H, H)]]
    pair_any = pp[:, :, None] | pp[None, :, :] | pp[:, None, :]
    xyz = mul[mul[np.ix_(H, H)][:, :, None], H[None, None, :]]
    return {"H": H, "Pb": Pb, "subseteq": subseteq, "iszero": iszero,
            "pair_any": pair_any, "xyz": xyz}


def raw_triple_verdicts(gr, pmask: int) -> dict:
    """Plain/weakly/completely-weakly verdicts recomputed from the raw route."""
    k = raw_sandwich_kernels(gr, pmask)
    plain = not (k["subseteq"] & ~k["pair_any"]).any()
    weakly = not (k["subseteq"] & ~k["iszero"] & ~k["pair_any"]).any()
    cw = not (k["Pb"][k["xyz"]] & (k["xyz"] != 0) & ~k["pair_any"]).any()
    return {"graded_2_absorbing": plain,
            "graded_weakly_2_absorbing": weakly,
            "graded_completely_weakly_2_absorbing": cw}
