"""Poisson brackets on polynomial algebras and commutative families.

A Poisson structure is stored as the bracket table {x_i, x_j} for i < j with
polynomial values; the bracket of two polynomials is the Leibniz extension

    {f, g} = sum_(i<j) {x_i, x_j} (df/dx_i dg/dx_j - df/dx_j dg/dx_i).

Linear tables come from structure tensors, constant tables from freezing a
bracket at a covector.  Operators lift to derivations of the symmetric
algebra; iterating a lifted operator on a central seed produces a
Poisson-commutative family.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations_with_replacement

from .exact import ONE, ZERO, RatMatrix, SparsePoly, kernel_basis, rank_exact


class SeedNotCentral(ValueError):
    """A proposed seed fails centrality; carries the witness generator index."""

    def __init__(self, seed_index, var_index):
        self.seed_index = seed_index
        self.var_index = var_index
        super().__init__("seed %d does not commute with generator %d"
                         % (seed_index, var_index))


@dataclass
class PoissonStructure:
    """Bracket table on n polynomial generators.

    table maps (i, j) with i < j to the polynomial {x_i, x_j}; missing pairs
    bracket to zero.  jacobi_verified records the generator-triple check.
    """

    nvars: int
    table: dict
    names: tuple | None = None
    jacobi_verified: bool = False

    def __post_init__(self):
        clean = {}
        for (i, j), p in self.table.items():
            if not (0 <= i < j < self.nvars):
                raise ValueError("table keys must satisfy i < j")
            if not p.is_zero():
                clean[(i, j)] = p
        self.table = clean
        if self.names is not None:
            self.names = tuple(self.names)

    def entry(self, i, j):
        """{x_i, x_j} for any pair order."""
        if i == j:
            return SparsePoly.zero(self.nvars)
        if i < j:
            return self.table.get((i, j), SparsePoly.zero(self.nvars))
        return -self.table.get((j, i), SparsePoly.zero(self.nvars))


def poisson_bracket(struct, f, g):
    """Leibniz-extended bracket of two polynomials."""
    n = struct.nvars
    df = [f.partial(i) for i in range(n)]
    dg = [g.partial(i) for i in range(n)]
    total = SparsePoly.zero(n)
    for (i, j), b in struct.table.items():
        piece = df[i] * dg[j] - df[j] * dg[i]
        if not piece.is_zero():
            total = total + b * piece
    return total


def from_tensor(tensor):
    """Linear Poisson structure {x_i, x_j} = sum_k c_ij^k x_k of a Lie tensor.

    Jacobi on generator triples is checked and recorded.
    """
    n = tensor.dim
    table = {}
    for i in range(n):
        for j in range(i + 1, n):
            vec = tensor.bracket(i, j)
            if vec:
                table[(i, j)] = SparsePoly.linear(
                    [vec.get(k, ZERO) for k in range(n)])
    struct = PoissonStructure(n, table, names=tensor.labels)
    struct.jacobi_verified = _jacobi_generators(struct)
    if not struct.jacobi_verified:
        raise ValueError("bracket table violates Jacobi on generators")
    return struct


def frozen_bracket(tensor, gamma):
    """Constant bracket {x, y}_gamma = gamma([x, y]) at a covector gamma."""
    from .tensors import is_lie
    if not is_lie(tensor):
        raise ValueError("frozen bracket needs a Lie tensor")
    n = tensor.dim
    gamma = [Fraction(c) for c in gamma]
    if len(gamma) != n:
        raise ValueError("covector length mismatch")
    table = {}
    for i in range(n):
        for j in range(i + 1, n):
            val = sum((c * gamma[k] for k, c in tensor.bracket(i, j).items()), ZERO)
            if val:
                table[(i, j)] = SparsePoly.const(n, val)
    struct = PoissonStructure(n, table, names=tensor.labels)
    struct.jacobi_verified = True  # constant brackets satisfy Jacobi trivially
    return struct


def _jacobi_generators(struct):
    n = struct.nvars
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                xi = SparsePoly.variable(n, i)
                xj = SparsePoly.variable(n, j)
                xk = SparsePoly.variable(n, k)
                s = (poisson_bracket(struct, poisson_bracket(struct, xi, xj), xk)
                     + poisson_bracket(struct, poisson_bracket(struct, xj, xk), xi)
                     + poisson_bracket(struct, poisson_bracket(struct, xk, xi), xj))
                if not s.is_zero():
                    return False
    return True


def lift_operator(op, f):
    """Apply the derivation of the symmetric algebra extending a linear map.

    The lift sends f to sum_i (D x_i) * df/dx_i; it preserves polynomial
    degree and restricts to D on the generators.
    """
    n = op.nrows
    if f.nvars != n:
        raise ValueError("variable count mismatch")
    total = SparsePoly.zero(n)
    for i in range(n):
        di = f.partial(i)
        if di.is_zero():
            continue
        image = SparsePoly.linear(op.col(i))
        total = total + image * di
    return total


def lifted(op):
    """The lift of a linear operator, as a polynomial endomap."""
    return lambda f: lift_operator(op, f)


def directional_derivative(gamma, f):
    """sum_i gamma_i df/dx_i (the frozen-direction derivative)."""
    gamma = [Fraction(c) for c in gamma]
    total = SparsePoly.zero(f.nvars)
    for i, gi in enumerate(gamma):
        if gi:
            total = total + f.partial(i) * gi
    return total


def directional(gamma):
    gamma = [Fraction(c) for c in gamma]
    return lambda f: directional_derivative(gamma, f)


@dataclass
class PCFamily:
    """Generators of a Poisson-commutative family with their provenance."""

    generators: list
    provenance: list
    verified: bool = False
    witness: tuple | None = None


def _monomial_union(polys):
    monos = sorted({m for p in polys for m in p.terms}, key=lambda t: (sum(t), t))
    return monos


def _independent(polys, candidate):
    monos = _monomial_union(polys + [candidate])
    rows = [p.coeff_vector(monos) for p in polys]
    cand = candidate.coeff_vector(monos)
    before = rank_exact(rows) if rows else 0
    return rank_exact(rows + [cand]) > before


def pc_generate(struct, operator, seeds, max_steps=1000):
    """Iterate a derivation on central seeds until linear dependence.

    Each seed must commute with every generator (SeedNotCentral otherwise).
    The literal operator orbit is returned, de-duplicated by linear span
    across everything collected so far.
    """
    n = struct.nvars
    gens = []
    prov = []
    for s_idx, seed in enumerate(seeds):
        if seed.nvars != n:
            raise ValueError("seed variable count mismatch")
        for i in range(n):
            if not poisson_bracket(struct, seed, SparsePoly.variable(n, i)).is_zero():
                raise SeedNotCentral(s_idx, i)
        current = seed
        power = 0
        while True:
            if power > max_steps:
                raise ValueError("orbit failed to close after %d steps" % max_steps)
            if current.is_zero() or (gens and not _independent(gens, current)):
                break
            gens.append(current)
            prov.append("seed%d" % s_idx if power == 0
                        else "seed%d:D^%d" % (s_idx, power))
            current = operator(current)
            power += 1
    return PCFamily(gens, prov)


@dataclass
class Certificate:
    ok: bool
    witness: tuple | None
    bracket: SparsePoly | None


def pc_verify(family, struct):
    """Check all generator pairs commute; stamps the family and returns a certificate."""
    gens = family.generators
    for a in range(len(gens)):
        for b in range(a + 1, len(gens)):
            br = poisson_bracket(struct, gens[a], gens[b])
            if not br.is_zero():
                family.verified = False
                family.witness = (a, b)
                return Certificate(False, (a, b), br)
    family.verified = True
    family.witness = None
    return Certificate(True, None, None)


def bihomogeneous_components(f, weights):
    """Split f by total weight of its monomials.

    Returns an ordered dict weight -> component; the components sum to f and
    each is an eigenvector of the lifted weight operator.
    """
    weights = [int(w) for w in weights]
    if len(weights) != f.nvars:
        raise ValueError("weight count mismatch")
    buckets = {}
    for e, c in f.terms.items():
        w = sum(wi * ei for wi, ei in zip(weights, e))
        buckets.setdefault(w, {})[e] = c
    return {w: SparsePoly(f.nvars, terms)
            for w, terms in sorted(buckets.items())}


def centre_candidates(struct, max_degree=2):
    """Basis of central polynomials per homogeneous degree 1..max_degree.

    Requires a linear bracket table (degree is then preserved, so centrality
    decouples by degree).  Returns the canonical kernel bases as polynomials,
    lowest degree first.
    """
    n = struct.nvars
    for p in struct.table.values():
        if any(sum(e) != 1 for e in p.terms):
            raise ValueError("centre candidates need a linear bracket table")
    out = []
    for d in range(1, max_degree + 1):
        monos = [tuple(_exps(n, combo)) for combo in
                 combinations_with_replacement(range(n), d)]
        mono_polys = [SparsePoly.monomial(n, m) for m in monos]
        brackets = [[poisson_bracket(struct, mp, SparsePoly.variable(n, i))
                     for i in range(n)] for mp in mono_polys]
        result_monos = sorted({mm for row in brackets for p in row for mm in p.terms},
                              key=lambda t: (sum(t), t))
        if not result_monos:
            out.extend(mono_polys)
            continue
        rows = []
        for i in range(n):
            for rm in result_monos:
                rows.append([brackets[c][i].terms.get(rm, ZERO)
                             for c in range(len(monos))])
        for vec in kernel_basis(RatMatrix(rows)):
            out.append(SparsePoly(n, {m: c for m, c in zip(monos, vec) if c}))
    return out


def _exps(n, combo):
    e = [0] * n
    for i in combo:
        e[i] += 1
    return e
