"""Structural invariants of Lie tensors: centre, centraliser, index, series."""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .exact import (RatMatrix, SparsePoly, generic_rank, kernel_basis,
                    rank_exact, span_rank)
from .tensors import ad, derived, is_lie


@dataclass
class IndexReport:
    """Index of a Lie tensor with the method that produced it.

    A probabilistic result is a certificate for the rank lower bound (hence
    an index upper bound) that is correct with overwhelming probability; the
    exact-symbolic method computes the generic rank of the structure matrix
    over the rational function field.
    """

    dim: int
    rank: int
    index: int
    method: str
    samples: int = 0
    note: str = ""


def lie_centre(tensor):
    """Canonical basis of {x : [x, e_j] = 0 for all j}."""
    n = tensor.dim
    rows = []
    for j in range(n):
        for k in range(n):
            rows.append([tensor.coeff(i, j, k) for i in range(n)])
    return kernel_basis(RatMatrix(rows))


def centraliser(tensor, x):
    """Canonical basis of the kernel of ad x."""
    return kernel_basis(ad(tensor, x))


def structure_matrix(tensor):
    """The n x n matrix of linear forms B_ij = sum_k c_ij^k x_k."""
    n = tensor.dim
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            vec = tensor.bracket(i, j)
            row.append(SparsePoly.linear([vec.get(k, 0) for k in range(n)])
                       if vec else SparsePoly.zero(n))
        rows.append(row)
    return rows


def lie_index(tensor, mode="prob", samples=5, bound=10 ** 6, rng=None,
              seed=None, max_exact_dim=12):
    """dim minus the generic rank of the bracket form.

    mode "prob" samples integer covectors and takes the maximal rank of the
    evaluated structure matrix; mode "exact" runs fraction-free elimination
    over polynomial entries and refuses dimensions above max_exact_dim.
    """
    ok = is_lie(tensor)
    if not ok:
        raise ValueError("index is defined for Lie tensors only")
    n = tensor.dim
    if mode == "exact":
        if n > max_exact_dim:
            raise ValueError(
                "exact-symbolic index refused above dimension %d" % max_exact_dim)
        r = generic_rank(structure_matrix(tensor))
        return IndexReport(n, r, n - r, "exact-symbolic")
    if mode != "prob":
        raise ValueError("unknown mode %r" % (mode,))
    if rng is None:
        rng = random.Random(seed)
    best = 0
    mat = structure_matrix(tensor)
    for _ in range(samples):
        point = [Fraction(rng.randint(-bound, bound)) for _ in range(n)]
        rows = [[entry.eval_at(point) for entry in row] for row in mat]
        r = rank_exact(rows)
        if r > best:
            best = r
            if best == n:
                break
    return IndexReport(n, best, n - best, "probabilistic", samples=samples,
                       note="rank is a lower bound; index an upper bound")


def lower_central_series(tensor):
    """Dimensions of the descending series g, [g,g], [g,[g,g]], ...

    Stops when the dimension stabilises or reaches zero.
    """
    n = tensor.dim
    dims = [n]
    basis = [_unit(n, i) for i in range(n)]
    current = basis
    while True:
        vecs = []
        for x in current:
            for j in range(n):
                v = tensor.apply(x, basis[j])
                if any(v):
                    vecs.append(v)
        if not vecs:
            dims.append(0)
            break
        mat_rows = vecs
        r = rank_exact(mat_rows)
        dims.append(r)
        if r == dims[-2]:
            break
        if r == 0:
            break
        current = kernel_to_span(vecs, r)
    return dims


def kernel_to_span(vecs, r):
    """A size-r linearly independent subset of vecs (greedy)."""
    chosen = []
    for v in vecs:
        if span_rank(chosen + [v]) > len(chosen):
            chosen.append(v)
            if len(chosen) == r:
                break
    return chosen


def _unit(n, i):
    v = [Fraction(0)] * n
    v[i] = Fraction(1)
    return v


@dataclass
class IndexTheoremReport:
    """Cross-checked invariants of a derived bracket at a nilpotent square."""

    dim: int
    index_prob: int
    index_exact: int | None
    centraliser_dim: int
    centre_dim: int
    nilpotency_class: int
    consistent: bool


def nilpotency_class(tensor, max_steps=None):
    """Length of the lower central series until it hits zero.

    Abelian tensors have class 1; raises if the series stabilises above zero.
    """
    dims = lower_central_series(tensor)
    if dims[-1] != 0:
        raise ValueError("tensor is not nilpotent; series stabilises at %d"
                         % dims[-1])
    return len(dims) - 1


def verify_index_theorem(family, n, partition, seed=None):
    """Index of the derived bracket at (ad e)^2 for a standard triple.

    Builds the matrix algebra, takes the triple attached to the partition,
    forms the derived bracket, and checks that its index equals both the
    centraliser dimension of e and the dimension of its own centre, that
    the derived bracket is nilpotent of class at most two, and that the
    probabilistic and exact index calculations agree.
    """
    from .constructions import build_classical, nilpotent_square, sl2_complete

    tensor = build_classical(family, n)
    triple = sl2_complete(family, n, partition)
    op, report = nilpotent_square(tensor, triple.e)
    derived_tensor = derived(tensor, op)

    rep_p = lie_index(derived_tensor, mode="prob", seed=seed)
    rep_e = lie_index(derived_tensor, mode="exact",
                      max_exact_dim=max(15, derived_tensor.dim))
    cent = centraliser(tensor, triple.e)
    centre = lie_centre(derived_tensor)
    cls = nilpotency_class(derived_tensor)

    consistent = (rep_p.index == rep_e.index == len(cent) == len(centre)
                  and cls <= 2)
    return IndexTheoremReport(
        dim=derived_tensor.dim,
        index_prob=rep_p.index,
        index_exact=rep_e.index,
        centraliser_dim=len(cent),
        centre_dim=len(centre),
        nilpotency_class=cls,
        consistent=consistent,
    )
