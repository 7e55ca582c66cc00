"""Torsion of operators on bracket algebras and the exponential identities.

The torsion of an operator N against a bracket is the bilinear map

    tau_N(x, y) = [Nx, Ny] + N(N[x, y] - [Nx, y] - [x, Ny]);

N is Nijenhuis when it vanishes.  The second derived bracket always splits as
twice the torsion minus the derived bracket along N^2, which ties torsion to
the classification machinery.  Nilpotent Nijenhuis operators and operators
with proportional first and second derived brackets both satisfy closed-form
exponential deformation identities; the checkers here verify them pointwise
with exact arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .exact import RatMatrix, mat_commutator, nilpotent_exp
from .tensors import (StructureTensor, derived, derived_iter, is_lie)


def torsion(tensor, op):
    """Torsion tensor of an operator against a bracket tensor."""
    n = tensor.dim
    if op.nrows != n or op.ncols != n:
        raise ValueError("operator shape mismatch")
    t1 = derived(tensor, op)
    cols = op.columns()
    table = {}
    skew = tensor.is_skew()

    def entry(i, j):
        direct = tensor.apply(cols[i], cols[j])
        inner = t1.bracket(i, j)
        if inner:
            dense = [inner.get(k, Fraction(0)) for k in range(n)]
            shift = op.apply(dense)
            direct = [u + v for u, v in zip(direct, shift)]
        return {k: c for k, c in enumerate(direct) if c}

    if skew:
        for i in range(n):
            for j in range(i + 1, n):
                vec = entry(i, j)
                if vec:
                    table[(i, j)] = dict(vec)
                    table[(j, i)] = {k: -c for k, c in vec.items()}
    else:
        for i in range(n):
            for j in range(n):
                vec = entry(i, j)
                if vec:
                    table[(i, j)] = vec
    return StructureTensor(n, table, tensor.labels)


def is_nijenhuis(tensor, op):
    """(vanishes, witness pair).  Cross-checks two torsion expansions."""
    n = tensor.dim
    tors = torsion(tensor, op)
    cols = op.columns()
    witness = None
    for i in range(n):
        for j in range(n):
            direct = tensor.apply(cols[i], cols[j])
            mixed = [a + b for a, b in zip(
                tensor.apply(cols[i], _unit(n, j)),
                tensor.apply(_unit(n, i), cols[j]))]
            base = tensor.apply(_unit(n, i), _unit(n, j))
            inner = [p - q for p, q in zip(op.apply(base), mixed)]
            expanded = [u + v for u, v in zip(direct, op.apply(inner))]
            vec = tors.bracket(i, j)
            got = [vec.get(k, Fraction(0)) for k in range(n)]
            if got != expanded:
                raise AssertionError("torsion expansions disagree at (%d, %d)"
                                     % (i, j))
            if witness is None and any(got):
                witness = (i, j)
    return witness is None, witness


def _unit(n, i):
    v = [Fraction(0)] * n
    v[i] = Fraction(1)
    return v


@dataclass
class TorsionSplit:
    """Second derived bracket against twice torsion minus the squared shift."""

    second: StructureTensor
    torsion: StructureTensor
    squared_shift: StructureTensor
    ok: bool


def torsion_decomposition(tensor, op):
    """Verify second-derived = 2 * torsion - derived along op^2."""
    second = derived_iter(tensor, op, 2)
    tors = torsion(tensor, op)
    shift = derived(tensor, op * op)
    return TorsionSplit(second, tors, shift,
                        second == tors.scale(Fraction(2)) - shift)


@dataclass
class NStepReport:
    k: int
    power_is_nijenhuis: bool
    iterate_matches_power: bool
    iterate_is_lie: bool


@dataclass
class NPropertiesReport:
    """Per-power behaviour of a Nijenhuis operator on a Lie tensor.

    For each k up to depth: N^k has vanishing torsion, the k-fold derived
    bracket is (-1)^(k-1) times the derived bracket along N^k, and every
    iterate is again a Lie bracket.  pairwise_compatible records that the sum
    of any two iterates still satisfies Jacobi.
    """

    steps: list
    pairwise_compatible: bool
    compat_witness: tuple | None
    ok: bool


def check_N_properties(tensor, op, depth=3):
    iterates = [tensor]
    for _ in range(depth):
        iterates.append(derived(iterates[-1], op))
    power = RatMatrix.identity(op.nrows)
    steps = []
    all_ok = True
    for k in range(1, depth + 1):
        power = power * op
        nij, _ = is_nijenhuis(tensor, power)
        sign = Fraction(1) if k % 2 == 1 else Fraction(-1)
        matches = iterates[k] == derived(tensor, power).scale(sign)
        lie = is_lie(iterates[k])
        steps.append(NStepReport(k, nij, matches, lie))
        all_ok = all_ok and nij and matches and lie
    compat = True
    witness = None
    for i in range(depth + 1):
        for j in range(i + 1, depth + 1):
            if not is_lie(iterates[i] + iterates[j]):
                compat = False
                witness = (i, j)
                break
        if not compat:
            break
    return NPropertiesReport(steps, compat, witness, all_ok and compat)


@dataclass
class ExpReport:
    ok: bool
    witness: tuple | None = None
    precondition_ok: bool = True
    points: list = field(default_factory=list)


def _conjugated(tensor, outer, inner):
    """outer . T(inner x, inner y) as a tensor over the basis."""
    n = tensor.dim
    cols = inner.columns()
    table = {}
    for i in range(n):
        for j in range(n):
            vec = outer.apply(tensor.apply(cols[i], cols[j]))
            entry = {k: c for k, c in enumerate(vec) if c}
            if entry:
                table[(i, j)] = entry
    return StructureTensor(n, table, tensor.labels)


def exp_identity_nijenhuis(tensor, op, s):
    """One-point check of the deformation identity for nilpotent Nijenhuis ops.

    exp(-sN) [exp(sN) x, exp(sN) y]
        = [exp(sN) x, y] + [x, exp(sN) y] - exp(sN) [x, y].
    """
    n = tensor.dim
    s = Fraction(s)
    E = nilpotent_exp(op, s)
    Einv = nilpotent_exp(op, -s)
    lhs = _conjugated(tensor, Einv, E)
    cols = E.columns()
    table = {}
    for i in range(n):
        for j in range(n):
            base = tensor.apply(_unit(n, i), _unit(n, j))
            vec = [a + b - c for a, b, c in zip(
                tensor.apply(cols[i], _unit(n, j)),
                tensor.apply(_unit(n, i), cols[j]),
                E.apply(base))]
            entry = {k: c for k, c in enumerate(vec) if c}
            if entry:
                table[(i, j)] = entry
    rhs = StructureTensor(n, table, tensor.labels)
    if lhs == rhs:
        return ExpReport(True, points=[s])
    witness = _first_difference(lhs, rhs)
    return ExpReport(False, witness=witness, points=[s])


def certified_exp_identity_nijenhuis(tensor, op, points=None):
    """Check at enough points to certify the polynomial identity in s.

    Both sides are polynomial in s of degree below three times the dimension,
    so agreement at 4*dim + 1 distinct rationals proves equality.
    """
    if points is None:
        points = [Fraction(k) for k in range(4 * tensor.dim + 1)]
    checked = []
    for s in points:
        rep = exp_identity_nijenhuis(tensor, op, s)
        checked.append(Fraction(s))
        if not rep.ok:
            rep.points = checked
            return rep
    return ExpReport(True, points=checked)


def exp_identity_near(tensor, op, m, value):
    """Deformation identity when the second derived bracket is m times the first.

    With T'' = m T' the flow acts by

        exp(sD) [exp(-sD) x, exp(-sD) y] = [x, y] + c(s) [x, y]'

    where c(s) = s for m = 0 (D must be nilpotent; value plays the role of s)
    and c = (v^m - 1)/m for m != 0 with v standing in for exp(s); the m != 0
    path needs an integer diagonal operator so that v^D makes exact sense.
    """
    m = Fraction(m)
    first = derived(tensor, op)
    second = derived(first, op)
    pre = second == first.scale(m)
    n = tensor.dim
    if m == 0:
        s = Fraction(value)
        E = nilpotent_exp(op, s)
        Einv = nilpotent_exp(op, -s)
        coeff = s
    else:
        if not op.is_diagonal():
            raise ValueError("nonzero m needs a diagonal operator")
        v = Fraction(value)
        if v == 0:
            raise ValueError("value must be nonzero")
        weights = []
        for i in range(n):
            w = op[i, i]
            if w.denominator != 1:
                raise ValueError("diagonal entries must be integers")
            weights.append(int(w))
        E = RatMatrix.diagonal([v ** w for w in weights])
        Einv = RatMatrix.diagonal([v ** (-w) for w in weights])
        coeff = (v ** m.numerator - 1) / m if m.denominator == 1 else None
        if coeff is None:
            raise ValueError("m must be an integer for the diagonal path")
    lhs = _conjugated(tensor, E, Einv)
    rhs = tensor + first.scale(coeff)
    if lhs == rhs:
        return ExpReport(True, precondition_ok=pre, points=[Fraction(value)])
    return ExpReport(False, witness=_first_difference(lhs, rhs),
                     precondition_ok=pre, points=[Fraction(value)])


def _first_difference(t1, t2):
    diff = t1 - t2
    for (i, j), vec in sorted(diff.table.items()):
        for k in sorted(vec):
            return (i, j, k)
    return None


def diagonal_torsion_witnesses(tensor, op):
    """Eigenvalue obstructions to a diagonal operator being Nijenhuis.

    For diagonal N the torsion entry over c_ij^k carries the factor
    (mu_k - mu_i)(mu_k - mu_j); any support triple where that factor is
    nonzero is a witness.  Empty list means N is Nijenhuis for the tensor.
    """
    if not op.is_diagonal():
        raise ValueError("diagnostic needs a diagonal operator")
    mu = [op[i, i] for i in range(op.nrows)]
    out = []
    for i, j, k, c in tensor.support():
        factor = (mu[k] - mu[i]) * (mu[k] - mu[j])
        if factor:
            out.append((i, j, k, factor * c))
    return out


@dataclass
class AssocTorsionReport:
    """Torsion of the symmetrized multiplication operator on the odd part.

    For a fixed by the involution, D_a = (L_a + R_a)/2 preserves the odd
    part and its torsion there is -1/4 [[a, x], [a, y]]; the derived bracket
    along (ad a)^2 is twice the double commutator.  nijenhuis records whether
    the torsion vanishes outright.
    """

    operator: RatMatrix
    torsion: StructureTensor
    torsion_matches: bool
    derived_matches: bool
    nijenhuis: bool
    double_commutator_zero: bool
    witness: tuple | None
    ok: bool


def assoc_torsion_formula(n, a, J=None):
    from .constructions import assoc_operators

    if J is None:
        J = RatMatrix.identity(n)
    ops = assoc_operators(n, a, J)
    split = ops.split
    odd = split.odd
    dim = len(odd)
    tors = torsion(ops.odd_tensor, ops.d_a_odd)

    quarter = Fraction(-1, 4)
    table = {}
    double_table = {}
    for i in range(dim):
        for j in range(dim):
            w = mat_commutator(mat_commutator(a, odd[i]),
                               mat_commutator(a, odd[j]))
            coords = split.odd_coords(w)
            ent = {k: quarter * c for k, c in enumerate(coords) if c}
            if ent:
                table[(i, j)] = ent
            ent2 = {k: 2 * c for k, c in enumerate(coords) if c}
            if ent2:
                double_table[(i, j)] = ent2
    expected = StructureTensor(dim, table, ops.odd_tensor.labels)
    double = StructureTensor(dim, double_table, ops.odd_tensor.labels)

    ada_cols = [split.odd_coords(mat_commutator(a, mat_commutator(a, b)))
                for b in odd]
    ada_sq = RatMatrix(ada_cols).transpose()
    derived_ok = derived(ops.odd_tensor, ada_sq) == double

    matches = tors == expected
    nij = tors.is_zero()
    witness = None if matches else _first_difference(tors, expected)
    return AssocTorsionReport(
        operator=ops.d_a_odd,
        torsion=tors,
        torsion_matches=matches,
        derived_matches=derived_ok,
        nijenhuis=nij,
        double_commutator_zero=double.is_zero(),
        witness=witness,
        ok=matches and derived_ok,
    )
