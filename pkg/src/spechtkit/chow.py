"""Chow rings of matroids: presentations and graded dimensions.

The ring has one generator x_F per nonempty proper-or-top flat... precisely:
generators are indexed by the nonempty flats excluding the ground set, with
relations

* x_F * x_G for incomparable flats F, G, and
* sum over flats F containing a of x_F  minus  the same sum for b,
  for every pair of non-loop elements a, b.

Graded dimensions come from a chain-counting basis: monomials
x_{F1}^{d1} ... x_{Fk}^{dk} over chains of nonempty proper flats with
0 < d_i < rank(F_i) - rank(F_{i-1}) for i < k and the top-of-chain exponent
bounded the same way against the previous flat, where the chain may also end
at the full ground set.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Hashable

from .matroid import LinearMatroid


def _flat_key(f: frozenset) -> tuple:
    return (len(f), tuple(sorted(map(str, f))))


def _element_text(e) -> str:
    if isinstance(e, tuple):
        return "".join(str(x) for x in e)
    return str(e)


def _flat_name(f: frozenset) -> str:
    return "x_" + "_".join(sorted(_element_text(e) for e in f))


@dataclass(frozen=True)
class ChowPresentation:
    generators: tuple[frozenset, ...]
    quadratic_relations: tuple[tuple[frozenset, frozenset], ...]
    linear_relations: tuple[dict, ...]  # each: {"plus": [...], "minus": [...]}

    def to_json_dict(self) -> dict:
        def flat(f):
            return sorted(_element_text(e) for e in f)

        return {
            "generators": [flat(f) for f in self.generators],
            "quadratic": [
                [flat(a), flat(b)] for a, b in self.quadratic_relations
            ],
            "linear": [
                {
                    "plus": [flat(f) for f in rel["plus"]],
                    "minus": [flat(f) for f in rel["minus"]],
                }
                for rel in self.linear_relations
            ],
        }

    def to_macaulay2(self) -> str:
        """Render as a ring presentation in Macaulay2-style syntax."""
        name = {f: _flat_name(f) for f in self.generators}
        vars_ = ", ".join(name[f] for f in self.generators)
        quads = [f"{name[a]}*{name[b]}" for a, b in self.quadratic_relations]
        lins = []
        for rel in self.linear_relations:
            plus = "+".join(name[f] for f in rel["plus"]) or "0"
            minus = "+".join(name[f] for f in rel["minus"]) or "0"
            lins.append(f"({plus})-({minus})")
        ideal = ", ".join(quads + lins)
        return f"R = QQ[{vars_}];\nI = ideal({ideal});\nA = R/I;"


def chow_presentation(m: LinearMatroid) -> ChowPresentation:
    """Generators and the complete defining relations of the Chow ring."""
    flats = [f for f in m.proper_nonempty_flats()]
    flats.sort(key=_flat_key)
    quads = []
    for i, a in enumerate(flats):
        for b in flats[i + 1 :]:
            if not (a <= b or b <= a):
                quads.append((a, b))
    loops = m.loops()
    elements = [e for e in m.labels if e not in loops]
    linear = []
    if elements:
        a0 = elements[0]
        sum0 = [f for f in flats if a0 in f]
        for b in elements[1:]:
            minus = [f for f in flats if b in f]
            if minus != sum0:
                linear.append({"plus": sum0, "minus": minus})
    return ChowPresentation(tuple(flats), tuple(quads), tuple(linear))


def _chain_monomial_data(m: LinearMatroid):
    """Flats (as masks), their ranks, and the containment order."""
    masks = m._flat_masks()
    ranks = [m._rank_mask(x) for x in masks]
    bottom = m._closure_mask(0)
    keep = [i for i, x in enumerate(masks) if x != bottom]
    return masks, ranks, keep


def chow_graded_dimensions(m: LinearMatroid) -> list[int]:
    """Dimensions of the graded pieces, computed by counting basis monomials.

    The degree-d dimension is the number of monomials supported on chains
    F1 < F2 < ... < Fk of flats strictly above the bottom (the top flat is
    allowed) with exponents d_i satisfying 0 < d_i < rank(F_i) - rank(F_{i-1})
    and total degree d.
    """
    r = m.rank()
    if r == 0:
        return [1]
    masks, ranks, keep = _chain_monomial_data(m)
    bottom_rank = m._rank_mask(m._closure_mask(0))
    dims = [0] * r
    dims[0] = 1  # the empty monomial

    # dp over flats in rank order: ways[i][d] = number of monomials of total
    # degree d whose largest chain element is flat i
    order = sorted(keep, key=lambda i: ranks[i])
    ways: dict[int, list[int]] = {}
    for i in order:
        ri = ranks[i]
        acc = [0] * r
        # chains starting at i: exponent 1..(ri - bottom_rank - 1)
        for d in range(1, ri - bottom_rank):
            if d < r:
                acc[d] += 1
        # extend chains ending at a smaller flat j
        for j in order:
            if ranks[j] >= ri:
                break
            if masks[j] & masks[i] != masks[j]:
                continue
            wj = ways.get(j)
            if not wj:
                continue
            gap = ri - ranks[j]
            for d in range(1, gap):
                for prev, cnt in enumerate(wj):
                    if cnt and prev + d < r:
                        acc[prev + d] += cnt
        ways[i] = acc
        for d, cnt in enumerate(acc):
            if cnt and d:
                dims[d] += cnt
    return dims


def fy_basis_monomials(m: LinearMatroid, degree: int) -> list[tuple[tuple[frozenset, int], ...]]:
    """Basis monomials of the given degree as ((flat, exponent), ...) chains."""
    masks, ranks, keep = _chain_monomial_data(m)
    bottom_rank = m._rank_mask(m._closure_mask(0))
    order = sorted(keep, key=lambda i: ranks[i])
    out = []

    def extend(chain, last_idx, last_rank, remaining):
        if remaining == 0:
            out.append(tuple(chain))
            return
        for i in order:
            if ranks[i] <= last_rank:
                continue
            if last_idx is not None and masks[last_idx] & masks[i] != masks[last_idx]:
                continue
            gap = ranks[i] - last_rank
            for d in range(1, min(gap - 1, remaining) + 1):
                chain.append((m._labels_of(masks[i]), d))
                extend(chain, i, ranks[i], remaining - d)
                chain.pop()

    if degree == 0:
        return [()]
    extend([], None, bottom_rank, degree)
    return out


def hilbert_series_text(dims: list[int], var: str = "T") -> str:
    """Ascending rendering like ``1+11T+T^2`` with zero terms omitted."""
    terms = []
    for d, c in enumerate(dims):
        if not c:
            continue
        if d == 0:
            terms.append(str(c))
        elif d == 1:
            terms.append(f"{c}{var}" if c != 1 else var)
        else:
            terms.append((f"{c}{var}^{d}") if c != 1 else f"{var}^{d}")
    return "+".join(terms) if terms else "0"
