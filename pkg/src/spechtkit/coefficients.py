"""Coefficient matrices for tensor-invariant dimensions.

Three constructions share one engine: a list of factor matrices together with
a finite group and a per-factor action on column labels.  The assembled matrix
has rows and columns indexed by tuples of factor labels and entries

    sum over g of  prod over factors f of  M_f[p_f, g . s_f],

so its rank is the dimension of the relevant invariant space:

* Kronecker: three factors of the same size n, the diagonal S_n action;
* Littlewood-Richardson: factors of sizes l, m, l+m with S_l x S_m acting on
  the first two separately and through the prefix embedding on the third;
* plethysm: m copies of the size-l factor plus factors of sizes m and l*m,
  with the wreath group acting slotwise, on the slot permutation, and through
  the dot-array embedding respectively.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from math import factorial
from typing import Callable, Sequence

import numpy as np

from .combinatorics import (
    Partition,
    Permutation,
    Word,
    all_permutations,
    format_word,
)
from .config import DEFAULT_LIMITS, Limits
from .errors import DomainError
from .linalg import RowSpace, affine_rank
from .specht import SpechtMatrix, specht_matrix

Label = tuple[Word, ...]


@dataclass(frozen=True)
class LabeledCoefficientMatrix:
    kind: str  # "kronecker" | "lr" | "plethysm"
    input_partitions: tuple[Partition, ...]
    row_labels: tuple[Label, ...]
    col_labels: tuple[Label, ...]
    entries: np.ndarray  # int64, shape (rows, cols)

    @property
    def shape(self) -> tuple[int, int]:
        return (len(self.row_labels), len(self.col_labels))

    def rank(self) -> int:
        space = RowSpace(self.entries.shape[1])
        for row in self.entries:
            space.add([int(x) for x in row])
        return space.rank

    def columns(self) -> list[tuple[int, ...]]:
        return [tuple(int(x) for x in self.entries[:, j]) for j in range(self.entries.shape[1])]

    def polytope_affine_dimension(self) -> int:
        """Affine dimension of the convex hull of the distinct columns."""
        distinct = sorted(set(self.columns()))
        return affine_rank(distinct)

    def to_json_dict(self) -> dict:
        return {
            "kind": self.kind,
            "partitions": [list(p.parts) for p in self.input_partitions],
            "row_labels": [[format_word(w) for w in lab] for lab in self.row_labels],
            "col_labels": [[format_word(w) for w in lab] for lab in self.col_labels],
            "entries": self.entries.tolist(),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), indent=2)


def _assemble(
    kind: str,
    partitions: tuple[Partition, ...],
    factors: Sequence,
    group: Sequence,
    actions: Sequence[Callable],
    weight: Callable,
    limits: Limits,
) -> LabeledCoefficientMatrix:
    """Sum the tensor products M_f[:, g-permuted columns] over the group.

    Each term is weighted by a +-1 character of the group chosen so that the
    pairing-value sign picked up under the column action cancels; every column
    of the sum is then an invariant vector of the natural action and the rank
    equals the invariant-space dimension.
    """
    limits.require("max_group_order", len(group))
    n_rows = 1
    n_cols = 1
    for f in factors:
        n_rows *= len(f.row_labels)
        n_cols *= len(f.col_labels)
    limits.require("max_matrix_cells", n_rows * n_cols)

    mats = [np.array(f.entries, dtype=np.int64) for f in factors]
    col_index = [
        {lab: j for j, lab in enumerate(f.col_labels)} for f in factors
    ]
    total = np.zeros((n_rows, n_cols), dtype=np.int64)
    for g in group:
        w = weight(g)
        acc = None
        for f, mat, index, act in zip(factors, mats, col_index, actions):
            perm = [index[act(g, lab)] for lab in f.col_labels]
            piece = mat[:, perm]
            acc = piece if acc is None else np.kron(acc, piece)
        total += w * acc

    row_labels = tuple(itertools.product(*(f.row_labels for f in factors)))
    col_labels = tuple(itertools.product(*(f.col_labels for f in factors)))
    return LabeledCoefficientMatrix(kind, partitions, row_labels, col_labels, total)


# reusable column-permutation tables: (factor identity, group-element key) ->
# index array sending column j to the column holding the permuted label
_perm_table_cache: dict[tuple, list[int]] = {}


def _perm_table(factor, key_part, act) -> list[int]:
    key = (factor.partition, key_part)
    cached = _perm_table_cache.get(key)
    if cached is None:
        index = {lab: j for j, lab in enumerate(factor.col_labels)}
        cached = [index[act(lab)] for lab in factor.col_labels]
        _perm_table_cache[key] = cached
    return cached


def _invariant_rank(
    factors: Sequence,
    group: Sequence,
    actions: Sequence[Callable],
    keys: Sequence[Callable],
    weight: Callable,
    limits: Limits,
) -> int:
    """Rank of the assembled matrix without materializing it.

    The weight is multiplicative in the group element, so the assembled
    columns indexed by one orbit of the column-label action all agree up to
    sign.  The rank is therefore the rank of one summed column per orbit,
    which keeps the work proportional to the number of cells of the factor
    tensor product rather than cells times group order.
    """
    limits.require("max_group_order", len(group))
    n_factors = len(factors)
    mats = [np.asarray(f.entries, dtype=np.int64) for f in factors]
    sizes = [len(f.col_labels) for f in factors]
    n_rows = 1
    for f in factors:
        n_rows *= len(f.row_labels)
    n_cols = 1
    for s in sizes:
        n_cols *= s
    limits.require("max_matrix_cells", n_cols)
    limits.require("max_matrix_cells", n_rows)

    strides = [1] * n_factors
    for f in range(n_factors - 2, -1, -1):
        strides[f] = strides[f + 1] * sizes[f + 1]
    # factors with a single column never move; drop them from the index walk
    active = [f for f in range(n_factors) if sizes[f] > 1]
    wide = [f for f in range(n_factors) if mats[f].shape[0] > 1 or sizes[f] > 1]
    scalar = 1
    for f in range(n_factors):
        if f not in wide:
            scalar *= int(mats[f][0, 0])

    weights: list[int] = []
    factor_perms: list[list] = []
    for g in group:
        row = [None] * n_factors
        for f in active:
            row[f] = _perm_table(factors[f], keys[f](g), lambda lab: actions[f](g, lab))
        weights.append(weight(g))
        factor_perms.append(row)

    visited = bytearray(n_cols)
    space = RowSpace(n_rows)
    reps = 0
    for c in range(n_cols):
        if visited[c]:
            continue
        digits = [c // strides[f] % sizes[f] for f in range(n_factors)]
        coef: dict[int, int] = {}
        for w, row in zip(weights, factor_perms):
            j = 0
            for f in active:
                j += row[f][digits[f]] * strides[f]
            visited[j] = 1
            coef[j] = coef.get(j, 0) + w
        js = [j for j, a in coef.items() if a]
        if not js:
            continue
        # col = sum over j of coef[j] * (tensor of the factor columns at j)
        chunk = max(1, 4_000_000 // max(1, n_rows))
        col = np.zeros(n_rows, dtype=np.int64)
        for start in range(0, len(js), chunk):
            part = js[start : start + chunk]
            acc = np.array([scalar * coef[j] for j in part], dtype=np.int64)[None, :]
            for f in wide:
                d = [j // strides[f] % sizes[f] for j in part]
                piece = mats[f][:, d]
                acc = (acc[:, None, :] * piece[None, :, :]).reshape(-1, len(part))
            col += acc.sum(axis=1)
        if not np.any(col):
            continue
        reps += 1
        limits.require("max_matrix_cells", n_rows * reps)
        space.add([int(x) for x in col])
    return space.rank


# ---------------------------------------------------------------------------
# Kronecker


def _kronecker_setup(lam: Partition, mu: Partition, nu: Partition, limits: Limits):
    n = lam.n
    if mu.n != n or nu.n != n:
        raise DomainError("all three partitions must have the same size")
    limits.require("max_coefficient_n", n)
    factors = [specht_matrix(p, limits) for p in (lam, mu, nu)]
    group = list(all_permutations(n))
    act = lambda g, w: g.apply(w)
    key = lambda g: g.images
    weight = lambda g: g.sign()
    return factors, group, [act, act, act], [key, key, key], weight


def kronecker_matrix(
    lam: Partition, mu: Partition, nu: Partition, limits: Limits = DEFAULT_LIMITS
) -> LabeledCoefficientMatrix:
    factors, group, actions, keys, weight = _kronecker_setup(lam, mu, nu, limits)
    return _assemble("kronecker", (lam, mu, nu), factors, group, actions, weight, limits)


def kronecker_coefficient(
    lam: Partition, mu: Partition, nu: Partition, limits: Limits = DEFAULT_LIMITS
) -> int:
    return _invariant_rank(*_kronecker_setup(lam, mu, nu, limits), limits)


# ---------------------------------------------------------------------------
# Littlewood-Richardson


def _prefix_embedding(sigma: Permutation, tau: Permutation) -> Permutation:
    """sigma x tau inside the symmetric group on 1..(l+m), sigma on 1..l."""
    l = sigma.n
    images = list(sigma.images) + [l + x for x in tau.images]
    return Permutation(tuple(images))


def _lr_setup(lam: Partition, mu: Partition, nu: Partition, limits: Limits):
    l, m = lam.n, mu.n
    if nu.n != l + m:
        raise DomainError("third partition must have size l + m")
    # guard admits one letter more than the diagonal constructions
    limits.require("max_coefficient_n", l + m - 1)
    factors = [specht_matrix(p, limits) for p in (lam, mu, nu)]
    group = [
        (s, t)
        for s in all_permutations(l)
        for t in all_permutations(m)
    ]
    actions = [
        lambda g, w: g[0].apply(w),
        lambda g, w: g[1].apply(w),
        lambda g, w: _prefix_embedding(g[0], g[1]).apply(w),
    ]
    keys = [
        lambda g: g[0].images,
        lambda g: g[1].images,
        lambda g: (g[0].images, g[1].images),
    ]
    # the two tensor-factor signs cancel against the embedded sign
    weight = lambda g: 1
    return factors, group, actions, keys, weight


def lr_matrix(
    lam: Partition, mu: Partition, nu: Partition, limits: Limits = DEFAULT_LIMITS
) -> LabeledCoefficientMatrix:
    factors, group, actions, keys, weight = _lr_setup(lam, mu, nu, limits)
    return _assemble("lr", (lam, mu, nu), factors, group, actions, weight, limits)


def lr_coefficient(
    lam: Partition, mu: Partition, nu: Partition, limits: Limits = DEFAULT_LIMITS
) -> int:
    return _invariant_rank(*_lr_setup(lam, mu, nu, limits), limits)


# ---------------------------------------------------------------------------
# wreath groups


@dataclass(frozen=True)
class WreathElement:
    """An element of the wreath subgroup on an l x m array of dots.

    Dot (i, j) sits at position (j - 1) * l + i; the element applies the
    row permutation ``rows[j-1]`` within column j of the array and then moves
    column j to column slot_perm(j).
    """

    rows: tuple[Permutation, ...]
    slot_perm: Permutation
    permutation: Permutation  # realized on {1..lm}


def wreath_elements(
    l: int, m: int, limits: Limits = DEFAULT_LIMITS
) -> list[WreathElement]:
    order = factorial(l) ** m * factorial(m)
    limits.require("max_group_order", order)
    out = []
    for tau in all_permutations(m):
        for rows in itertools.product(all_permutations(l), repeat=m):
            images = [0] * (l * m)
            for j in range(1, m + 1):
                for i in range(1, l + 1):
                    src = (j - 1) * l + i
                    images[src - 1] = (tau(j) - 1) * l + rows[j - 1](i)
            out.append(WreathElement(rows, tau, Permutation(tuple(images))))
    assert len(out) == order
    return out


@dataclass(frozen=True)
class _TensorPowerFactor:
    """The m-fold tensor power of one pairing matrix, as a single factor.

    Labels are m-tuples of the base labels; the wreath group permutes the
    columns by acting within each slot and then shuffling the slots, which is
    a genuine group action on the column labels (acting slotwise alone is
    not, because slot components compose across the slot shuffle).
    """

    partition: tuple  # identity key for the permutation-table cache
    row_labels: tuple
    col_labels: tuple
    entries: tuple


def _tensor_power_factor(base: SpechtMatrix, m: int, limits: Limits) -> _TensorPowerFactor:
    rows = len(base.row_labels) ** m
    cols = len(base.col_labels) ** m
    limits.require("max_matrix_cells", rows * cols)
    mat = np.array(base.entries, dtype=np.int64)
    acc = np.ones((1, 1), dtype=np.int64)
    for _ in range(m):
        acc = np.kron(acc, mat)
    return _TensorPowerFactor(
        partition=("tensor-power", base.partition.parts, m),
        row_labels=tuple(itertools.product(base.row_labels, repeat=m)),
        col_labels=tuple(itertools.product(base.col_labels, repeat=m)),
        entries=tuple(tuple(int(x) for x in row) for row in acc),
    )


def _plethysm_setup(lam: Partition, mu: Partition, nu: Partition, limits: Limits):
    l, m = lam.n, mu.n
    if nu.n != l * m:
        raise DomainError("third partition must have size l * m")
    factors = [
        _tensor_power_factor(specht_matrix(lam, limits), m, limits),
        specht_matrix(mu, limits),
        specht_matrix(nu, limits),
    ]
    group = wreath_elements(l, m, limits)

    def block_act(g: WreathElement, lab: tuple) -> tuple:
        # slot shuffle composed with the same handedness as the word action
        out = [None] * m
        for j in range(1, m + 1):
            s = g.slot_perm(j)
            out[s - 1] = g.rows[s - 1].apply(lab[j - 1])
        return tuple(out)

    actions = [
        block_act,
        lambda g, w: g.slot_perm.apply(w),
        lambda g, w: g.permutation.apply(w),
    ]
    keys = [
        lambda g: g.permutation.images,
        lambda g: g.slot_perm.images,
        lambda g: g.permutation.images,
    ]
    # the within-slot signs cancel against the embedded-permutation sign,
    # leaving sgn(slot shuffle)^(l+1)
    if l % 2 == 0:
        weight = lambda g: g.slot_perm.sign()
    else:
        weight = lambda g: 1
    return factors, group, actions, keys, weight


def plethysm_matrix(
    lam: Partition, mu: Partition, nu: Partition, limits: Limits = DEFAULT_LIMITS
) -> LabeledCoefficientMatrix:
    factors, group, actions, keys, weight = _plethysm_setup(lam, mu, nu, limits)
    raw = _assemble("plethysm", (lam, mu, nu), factors, group, actions, weight, limits)
    flatten = lambda lab: tuple(lab[0]) + (lab[1], lab[2])
    return LabeledCoefficientMatrix(
        raw.kind,
        raw.input_partitions,
        tuple(flatten(lab) for lab in raw.row_labels),
        tuple(flatten(lab) for lab in raw.col_labels),
        raw.entries,
    )


def plethysm_coefficient(
    lam: Partition, mu: Partition, nu: Partition, limits: Limits = DEFAULT_LIMITS
) -> int:
    return _invariant_rank(*_plethysm_setup(lam, mu, nu, limits), limits)
