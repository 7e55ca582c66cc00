"""Builders: classical matrix algebras, gradings, contractions, deformations.

Conventions fixed here:
  * gl_n uses the unit matrices E_ij in row-major order;
  * sl_2 uses the triple (e, h, f) with [e,f] = h, [h,e] = 2e, [h,f] = -2f;
  * sl_n (n > 2) uses off-diagonal E_ij plus H_k = E_kk - E_(k+1)(k+1);
  * so_n is the set of matrices antisymmetric for a symmetric J (default the
    identity, basis F_ij = E_ij - E_ji), sp_n uses the standard skew J;
  * periodic gradings are weight assignments w_i in {0..n-1} with
    [q_i, q_j] inside q_(i+j mod n).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .exact import (ONE, ZERO, RatMatrix, kernel_basis, mat_commutator,
                    nilpotent_index, solve_columns, span_rank)
from .tensors import (StructureTensor, TAG_NEAR, ad, check_jacobi, check_skew,
                      classify_operator, derived, tensor_combination)


def unit_matrix(n, i, j):
    m = RatMatrix.zero(n)
    m.rows[i][j] = ONE
    return m


def _flat(mat):
    return [x for row in mat.rows for x in row]


def matrix_coords(basis_mats, target):
    """Coordinates of a matrix with respect to a list of basis matrices."""
    sol = solve_columns([_flat(b) for b in basis_mats], _flat(target))
    if sol is None:
        raise ValueError("matrix is not in the span of the basis")
    return sol


def tensor_from_matrix_basis(mats, labels, product="commutator", check_lie=True):
    """Structure tensor of a bilinear matrix product expanded over a basis."""
    cols = [_flat(b) for b in mats]
    dim = len(mats)
    table = {}
    for i in range(dim):
        for j in range(dim):
            if product == "commutator":
                if i == j:
                    continue
                prod = mat_commutator(mats[i], mats[j])
            else:
                prod = mats[i] * mats[j]
            coords = solve_columns(cols, _flat(prod))
            if coords is None:
                raise ValueError("product leaves the span of the basis")
            vec = {k: c for k, c in enumerate(coords) if c}
            if vec:
                table[(i, j)] = vec
    tensor = StructureTensor(dim, table, labels)
    if check_lie:
        ok, wit = check_skew(tensor)
        if not ok:
            raise ValueError("commutator tensor not skew at %r" % (wit,))
        ok, wit = check_jacobi(tensor)
        if not ok:
            raise ValueError("Jacobi fails at %r" % (wit,))
    return tensor


def standard_symplectic(n):
    if n % 2:
        raise ValueError("sp needs even size")
    m = n // 2
    J = RatMatrix.zero(n)
    for i in range(m):
        J.rows[i][m + i] = ONE
        J.rows[m + i][i] = -ONE
    return J


def basis_matrices(family, n):
    """Matrix basis and labels for a classical family."""
    if family == "gl":
        mats = [unit_matrix(n, i, j) for i in range(n) for j in range(n)]
        labels = ["E%d%d" % (i + 1, j + 1) for i in range(n) for j in range(n)]
    elif family == "sl":
        if n < 2:
            raise ValueError("sl needs n >= 2")
        if n == 2:
            mats = [unit_matrix(2, 0, 1),
                    unit_matrix(2, 0, 0) - unit_matrix(2, 1, 1),
                    unit_matrix(2, 1, 0)]
            labels = ["e", "h", "f"]
        else:
            mats, labels = [], []
            for i in range(n):
                for j in range(n):
                    if i != j:
                        mats.append(unit_matrix(n, i, j))
                        labels.append("E%d%d" % (i + 1, j + 1))
            for k in range(n - 1):
                mats.append(unit_matrix(n, k, k) - unit_matrix(n, k + 1, k + 1))
                labels.append("H%d" % (k + 1))
    elif family == "so":
        mats = [unit_matrix(n, i, j) - unit_matrix(n, j, i)
                for i in range(n) for j in range(i + 1, n)]
        labels = ["F%d%d" % (i + 1, j + 1) for i in range(n) for j in range(i + 1, n)]
    elif family == "sp":
        J = standard_symplectic(n)
        split = involution_split(n, J)
        mats = split.odd
        labels = ["S%d" % (k + 1) for k in range(len(mats))]
    else:
        raise ValueError("unknown family %r" % (family,))
    return mats, labels


def build_classical(family, n):
    """Lie structure tensor of gl/sl/so/sp on its standard basis."""
    mats, labels = basis_matrices(family, n)
    return tensor_from_matrix_basis(mats, labels)


def build_gl_associative(n):
    """Associative product tensor of the full matrix algebra on the E_ij basis."""
    mats, labels = basis_matrices("gl", n)
    return tensor_from_matrix_basis(mats, labels, product="assoc", check_lie=False)


def direct_sum(t1, t2):
    """Direct sum of two structure tensors (blocks commute)."""
    n1, n2 = t1.dim, t2.dim
    table = {}
    for (i, j), vec in t1.table.items():
        table[(i, j)] = dict(vec)
    for (i, j), vec in t2.table.items():
        table[(i + n1, j + n1)] = {k + n1: c for k, c in vec.items()}
    labels = list(t1.labels) + ["%s'" % s for s in t2.labels]
    return StructureTensor(n1 + n2, table, labels)


@dataclass(frozen=True)
class GradingSpec:
    """Weight assignment on a basis.

    kind "periodic": weights in {0..modulus-1}, brackets add mod modulus.
    kind "integer": arbitrary integer weights, brackets add in Z.
    kind "quasi": weights 0..top; the grading rule is only required for
    weight sums <= top (the shape produced by the extension construction).
    """

    weights: tuple
    kind: str = "periodic"
    modulus: int | None = None

    def __post_init__(self):
        if self.kind == "periodic":
            if self.modulus is None or self.modulus < 1:
                raise ValueError("periodic grading needs a positive modulus")
            if any(not (0 <= w < self.modulus) for w in self.weights):
                raise ValueError("periodic weights must lie in 0..modulus-1")
        elif self.kind not in ("integer", "quasi"):
            raise ValueError("unknown grading kind %r" % (self.kind,))

    @property
    def top(self):
        return max(self.weights)

    def eigenspace(self, w):
        return tuple(i for i, wi in enumerate(self.weights) if wi == w)

    def eigenspaces(self):
        return {w: self.eigenspace(w) for w in sorted(set(self.weights))}

    def validate(self, tensor):
        """Check the bracket respects the grading; returns (ok, witness)."""
        for (i, j), vec in tensor.table.items():
            s = self.weights[i] + self.weights[j]
            if self.kind == "periodic":
                want = s % self.modulus
            elif self.kind == "integer":
                want = s
            else:
                if s > self.top:
                    continue
                want = s
            for k in vec:
                if self.weights[k] != want:
                    return False, (i, j, k)
        return True, None

    def phi_matrix(self, t):
        """The basis scaling x_i -> t^w_i x_i as an exact matrix (t nonzero)."""
        t = Fraction(t)
        if not t:
            raise ValueError("t must be nonzero")
        return RatMatrix.diagonal([t ** w for w in self.weights])


def grading_operator(spec):
    """Diagonal weight operator of a grading."""
    return RatMatrix.diagonal([Fraction(w) for w in spec.weights])


def contractions_from_grading(tensor, spec):
    """Split a periodically graded bracket into its two degenerate contractions.

    T_0 keeps the pairs whose weights add to less than the modulus, T_inf the
    rest (those wrap around).  Both are Lie, they sum to T, and T_inf is
    positively graded for the reversed weights, hence nilpotent.
    """
    if spec.kind != "periodic":
        raise ValueError("contractions need a periodic grading")
    ok, wit = spec.validate(tensor)
    if not ok:
        raise ValueError("grading invalid at %r" % (wit,))
    n = spec.modulus
    low, high = {}, {}
    for (i, j), vec in tensor.table.items():
        if spec.weights[i] + spec.weights[j] < n:
            low[(i, j)] = dict(vec)
        else:
            high[(i, j)] = dict(vec)
    t0 = StructureTensor(tensor.dim, low, tensor.labels)
    tinf = StructureTensor(tensor.dim, high, tensor.labels)
    for t in (t0, tinf):
        okx, wit = check_skew(t)
        if okx:
            okx, wit = check_jacobi(t)
        if not okx:
            raise ValueError("contraction fails Lie checks at %r" % (wit,))
    if t0 + tinf != tensor:
        raise ValueError("contractions do not sum to the tensor")
    return t0, tinf


def quasi_grading_extension(tensor, spec):
    """Extend a periodically graded algebra by a second copy of its 0-part.

    The result is the direct sum q (+) q0' on the adapted basis: the diagonal
    copy {x + x' : x in q0} at weight 0, the original homogeneous parts at
    weights 1..n-1, and the original q0 (inside q) promoted to weight n.
    Bracket sums <= n then land in the expected level, and the weight operator
    is a near-derivation with coefficients (0, -n).
    """
    if spec.kind != "periodic":
        raise ValueError("extension needs a periodic grading")
    ok, wit = spec.validate(tensor)
    if not ok:
        raise ValueError("grading invalid at %r" % (wit,))
    n = spec.modulus
    dim = tensor.dim
    zero_idx = list(spec.eigenspace(0))
    if not zero_idx:
        raise ValueError("grading has no zero part to extend by")
    d0 = len(zero_idx)
    big_dim = dim + d0
    # coordinates in q (+) q0': first dim slots are q, the rest the ideal copy
    adapted = []
    labels = []
    weights = []
    for pos, i in enumerate(zero_idx):
        v = [ZERO] * big_dim
        v[i] = ONE
        v[dim + pos] = ONE
        adapted.append(v)
        labels.append("%s+%s'" % (tensor.labels[i], tensor.labels[i]))
        weights.append(0)
    for w in range(1, n):
        for i in spec.eigenspace(w):
            v = [ZERO] * big_dim
            v[i] = ONE
            adapted.append(v)
            labels.append(tensor.labels[i])
            weights.append(w)
    for i in zero_idx:
        v = [ZERO] * big_dim
        v[i] = ONE
        adapted.append(v)
        labels.append(tensor.labels[i])
        weights.append(n)
    big = direct_sum(tensor, _restrict(tensor, zero_idx))
    cols = adapted
    table = {}
    for a in range(big_dim):
        for b in range(a + 1, big_dim):
            out = big.apply(adapted[a], adapted[b])
            coords = solve_columns(cols, out)
            if coords is None:
                raise ValueError("adapted basis failed to close")
            vec = {k: c for k, c in enumerate(coords) if c}
            if vec:
                table[(a, b)] = vec
                table[(b, a)] = {k: -c for k, c in vec.items()}
    ext = StructureTensor(big_dim, table, labels)
    new_spec = GradingSpec(tuple(weights), kind="quasi")
    ok, wit = new_spec.validate(ext)
    if not ok:
        raise ValueError("extension violates the quasi-grading at %r" % (wit,))
    return ext, new_spec, grading_operator(new_spec)


def _restrict(tensor, idx):
    """Substructure tensor on a list of basis indices (must be closed)."""
    pos = {i: p for p, i in enumerate(idx)}
    table = {}
    for (i, j), vec in tensor.table.items():
        if i in pos and j in pos:
            sub = {}
            for k, c in vec.items():
                if k not in pos:
                    raise ValueError("index set is not closed under the bracket")
                sub[pos[k]] = c
            if sub:
                table[(pos[i], pos[j])] = sub
    return StructureTensor(len(idx), table, [tensor.labels[i] for i in idx])


def splitting_operators(tensor, part_a, part_b):
    """Projections onto the two parts of a vector-space splitting q = h (+) r.

    Both index sets must partition the basis and span subalgebras.  Each
    projection is then a near-derivation with coefficients (0, -1), and the
    negatives of the two derived tensors sum back to the bracket.
    """
    part_a, part_b = list(part_a), list(part_b)
    n = tensor.dim
    if sorted(part_a + part_b) != list(range(n)):
        raise ValueError("index sets do not partition the basis")
    for part in (part_a, part_b):
        pset = set(part)
        for i in part:
            for j in part:
                if any(k not in pset for k in tensor.bracket(i, j)):
                    raise ValueError("part %r is not a subalgebra" % (sorted(part),))
    d1 = RatMatrix.diagonal([ONE if i in set(part_a) else ZERO for i in range(n)])
    d2 = RatMatrix.identity(n) - d1
    s1 = derived(tensor, d1)
    s2 = derived(tensor, d2)
    if tensor_combination([(-ONE, s1), (-ONE, s2)]) != tensor:
        raise ValueError("splitting derived tensors do not recombine")
    return d1, d2


@dataclass
class DeformationTable:
    """Laurent table of a weight deformation: exponent -> tensor term."""

    weights: tuple
    terms: dict

    @property
    def is_polynomial(self):
        return all(e >= 0 for e in self.terms)

    def negative_exponents(self):
        return sorted(e for e in self.terms if e < 0)

    def at(self, t):
        """Evaluate the table at a nonzero rational t."""
        t = Fraction(t)
        return tensor_combination([(t ** e if e >= 0 else ONE / t ** (-e), term)
                                   for e, term in self.terms.items()])


def deform_bracket(tensor, weights):
    """Conjugate the bracket by the weight scaling x_i -> t^w_i x_i.

    The pair (i, j) contributes at exponent w_i + w_j - w_k for each value
    index k.  Negative exponents are legal and simply reported in the table.
    """
    if isinstance(weights, GradingSpec):
        weights = weights.weights
    weights = tuple(int(w) for w in weights)
    if len(weights) != tensor.dim:
        raise ValueError("weight count mismatch")
    buckets = {}
    for (i, j), vec in tensor.table.items():
        for k, c in vec.items():
            e = weights[i] + weights[j] - weights[k]
            buckets.setdefault(e, {}).setdefault((i, j), {})[k] = c
    terms = {e: StructureTensor(tensor.dim, tab, tensor.labels)
             for e, tab in sorted(buckets.items())}
    return DeformationTable(weights, terms)


@dataclass
class SpecialReport:
    is_special: bool
    m: int | None
    checks: dict


def check_special(table):
    """Decide whether a polynomial deformation has exactly the terms {0, m}.

    For a special table the weight operator is a semisimple near-derivation
    with coefficients (0, -m); the checks dict also records the support
    containment (every pair lands in levels i+j and i+j-m) and the maximal
    weight bounds (p <= m when the top level brackets nontrivially with
    itself, p = m when it is a non-abelian subalgebra).
    """
    if not table.is_polynomial:
        raise ValueError("table has negative exponents %r" % table.negative_exponents())
    exps = sorted(table.terms)
    if len(exps) != 2 or exps[0] != 0 or exps[1] < 1:
        top = max(exps) if exps else None
        return SpecialReport(False, top, {})
    m = exps[1]
    weights = table.weights
    total = tensor_combination([(ONE, t) for t in table.terms.values()])
    op = RatMatrix.diagonal([Fraction(w) for w in weights])
    checks = {}
    checks["derived_is_minus_m_times_tm"] = (
        derived(total, op) == table.terms[m].scale(-m))
    action = classify_operator(total, op)
    checks["classified_near_0_minus_m"] = (
        action.tag == TAG_NEAR and action.a == 0 and action.b == -m)
    support_ok = True
    for (i, j), vec in total.table.items():
        s = weights[i] + weights[j]
        for k in vec:
            if weights[k] not in (s, s - m):
                support_ok = False
    checks["support_in_two_levels"] = support_ok
    p = max(weights)
    top_idx = [i for i, w in enumerate(weights) if w == p]
    top_brackets = any(total.bracket(i, j) for i in top_idx for j in top_idx)
    top_closed = all(all(weights[k] == p for k in total.bracket(i, j))
                     for i in top_idx for j in top_idx)
    checks["top_weight_bound"] = (not top_brackets) or p <= m
    checks["top_subalgebra_forces_equality"] = (
        not (top_brackets and top_closed)) or p == m
    return SpecialReport(True, m, checks)


@dataclass
class NilpotentSquareReport:
    """Diagnostics for D = (ad e)^2."""

    ad_e: RatMatrix
    operator: RatMatrix
    derived: StructureTensor
    ad_e_cubed_zero: bool
    d_squared_zero: bool
    image_bracket_zero: bool
    image_in_kernel: bool
    formula_check: bool


def image_basis(op):
    """Canonical basis of the column space."""
    cols = op.columns()
    from .exact import rref
    red, pivots = rref(cols)
    return [red[i] for i in range(len(pivots))]


def nilpotent_square(tensor, e):
    """The operator D = (ad e)^2 together with its structural diagnostics.

    The derived bracket is cross-checked against 2[[e,x],[e,y]] on all basis
    pairs.  The three sufficient conditions reported (D^2 = 0, the image
    bracketing to zero, the image landing in the kernel) each force D to be a
    quasi-derivation when they hold.
    """
    ade = ad(tensor, e)
    op = ade * ade
    t1 = derived(tensor, op)
    n = tensor.dim
    formula_ok = True
    for i in range(n):
        for j in range(n):
            lhs = [2 * c for c in tensor.apply(ade.apply(_unit_vec(n, i)),
                                               ade.apply(_unit_vec(n, j)))]
            vec = t1.bracket(i, j)
            rhs = [ZERO] * n
            for k, c in vec.items():
                rhs[k] = c
            if lhs != rhs:
                formula_ok = False
    img = image_basis(op)
    image_abelian = all(not any(tensor.apply(u, v)) for u in img for v in img)
    kernel_ok = True
    for u in img:
        for j in range(n):
            w = tensor.apply(u, _unit_vec(n, j))
            if any(op.apply(w)):
                kernel_ok = False
    return op, NilpotentSquareReport(
        ad_e=ade,
        operator=op,
        derived=t1,
        ad_e_cubed_zero=(ade * ade * ade).is_zero(),
        d_squared_zero=(op * op).is_zero(),
        image_bracket_zero=image_abelian,
        image_in_kernel=kernel_ok,
        formula_check=formula_ok,
    )


def _unit_vec(n, i):
    v = [ZERO] * n
    v[i] = ONE
    return v


@dataclass
class Sl2Triple:
    """Coordinates of a standard triple in the ambient algebra basis."""

    e: list
    h: list
    f: list


def sl2_complete(family, n, partition):
    """Standard triple for the block-Jordan nilpotent of a partition of n.

    Only family "sl" is constructed here (blocks of size at most 2, so the
    cube of ad e vanishes); for so/sp supply the triple explicitly.
    """
    if family != "sl":
        raise ValueError("triples are built for sl only; supply e, h, f directly")
    parts = [int(p) for p in partition]
    if sum(parts) != n or any(p < 1 for p in parts):
        raise ValueError("partition %r does not sum to %d" % (parts, n))
    if max(parts) > 2:
        raise ValueError("partition %r exceeds the height criterion (parts <= 2)" % (parts,))
    e_mat = RatMatrix.zero(n)
    h_mat = RatMatrix.zero(n)
    f_mat = RatMatrix.zero(n)
    off = 0
    for p in parts:
        for i in range(p - 1):
            e_mat.rows[off + i][off + i + 1] = ONE
            f_mat.rows[off + i + 1][off + i] = Fraction((i + 1) * (p - 1 - i))
        for i in range(p):
            h_mat.rows[off + i][off + i] = Fraction(p - 1 - 2 * i)
        off += p
    mats, _ = basis_matrices("sl", n)
    triple = Sl2Triple(matrix_coords(mats, e_mat),
                       matrix_coords(mats, h_mat),
                       matrix_coords(mats, f_mat))
    tensor = build_classical("sl", n)
    if tensor.apply(triple.h, triple.e) != [2 * c for c in triple.e]:
        raise AssertionError("[h,e] != 2e")
    if tensor.apply(triple.h, triple.f) != [-2 * c for c in triple.f]:
        raise AssertionError("[h,f] != -2f")
    if tensor.apply(triple.e, triple.f) != triple.h:
        raise AssertionError("[e,f] != h")
    return triple


@dataclass
class InvolutionSplit:
    """Splitting of gl_n by the involution x -> J^-1 x^T J.

    odd is the fixed-minus part (a Lie subalgebra: so or sp depending on the
    symmetry of J), even the fixed-plus part; together they grade gl_n by Z_2.
    """

    n: int
    J: RatMatrix
    odd: list
    even: list

    def star(self, x):
        return self.J.inverse() * x.transpose() * self.J

    def odd_coords(self, x):
        return matrix_coords(self.odd, x)


def involution_split(n, J=None):
    """Compute the two eigenspaces of the adjoint involution of J."""
    if J is None:
        J = RatMatrix.identity(n)
    if J.nrows != n or J.ncols != n:
        raise ValueError("J shape mismatch")
    Jt = J.transpose()
    if not (Jt == J or Jt == -J):
        raise ValueError("J must be symmetric or skew")
    Jinv = J.inverse()
    # sigma as an n^2 x n^2 matrix acting on flattened gl
    sig_cols = []
    for i in range(n):
        for j in range(n):
            sig_cols.append(_flat(Jinv * unit_matrix(n, i, j).transpose() * J))
    sigma = RatMatrix(sig_cols).transpose()
    ident = RatMatrix.identity(n * n)
    odd_vecs = kernel_basis(sigma + ident)
    even_vecs = kernel_basis(sigma - ident)
    if len(odd_vecs) + len(even_vecs) != n * n:
        raise AssertionError("involution eigenspaces do not fill gl")

    def to_mats(vecs):
        return [RatMatrix([v[i * n:(i + 1) * n] for i in range(n)]) for v in vecs]

    split = InvolutionSplit(n, J, to_mats(odd_vecs), to_mats(even_vecs))
    # the odd part must close under the commutator
    flat_odd = [_flat(m) for m in split.odd]
    for x in split.odd:
        for y in split.odd:
            if solve_columns(flat_odd, _flat(mat_commutator(x, y))) is None:
                raise AssertionError("odd part is not a subalgebra")
    return split


@dataclass
class AssocOperators:
    """Left/right multiplications by a fixed element of a matrix algebra.

    checks holds the verified identities: minus the derived bracket along L_a
    is x a y - y a x, powers of L_a are left multiplications by powers of a,
    and (with an involution) the second derived bracket along the symmetrized
    operator D_a restricted to the odd part is the a^2 sandwich bracket.
    """

    a: RatMatrix
    left: RatMatrix
    right: RatMatrix
    gl_tensor: StructureTensor
    derived_left: StructureTensor
    checks: dict
    split: InvolutionSplit | None = None
    d_a: RatMatrix | None = None
    odd_tensor: StructureTensor | None = None
    d_a_odd: RatMatrix | None = None


def assoc_operators(n, a, J=None):
    """L_a, R_a and their derived tensors on gl_n, optionally split by J."""
    gl_mats, gl_labels = basis_matrices("gl", n)
    cols = [_flat(b) for b in gl_mats]
    left_cols = [matrix_coords(gl_mats, a * b) for b in gl_mats]
    right_cols = [matrix_coords(gl_mats, b * a) for b in gl_mats]
    left = RatMatrix(left_cols).transpose()
    right = RatMatrix(right_cols).transpose()
    gl_tensor = build_classical("gl", n)
    t1 = derived(gl_tensor, left)
    checks = {}
    sandwich_ok = True
    for i, x in enumerate(gl_mats):
        for j, y in enumerate(gl_mats):
            want = matrix_coords(gl_mats, x * a * y - y * a * x)
            vec = t1.bracket(i, j)
            got = [-vec.get(k, ZERO) for k in range(n * n)]
            if got != want:
                sandwich_ok = False
    checks["minus_derived_is_sandwich"] = sandwich_ok
    power_ok = True
    acc = a
    lp = left
    for _ in range(2, 5):
        acc = acc * a
        lp = lp * left
        la_k = RatMatrix([matrix_coords(gl_mats, acc * b) for b in gl_mats]).transpose()
        if lp != la_k:
            power_ok = False
    checks["left_powers_match"] = power_ok
    result = AssocOperators(a, left, right, gl_tensor, t1, checks)
    if J is not None:
        split = involution_split(n, J)
        if split.star(a) != a:
            raise ValueError("a must be fixed by the involution")
        result.split = split
        result.d_a = (left + right).scale(Fraction(1, 2))
        odd = split.odd
        d_odd_cols = [split.odd_coords((a * b + b * a).scale(Fraction(1, 2)))
                      for b in odd]
        result.d_a_odd = RatMatrix(d_odd_cols).transpose()
        odd_tensor = tensor_from_matrix_basis(
            odd, ["S%d" % (k + 1) for k in range(len(odd))])
        result.odd_tensor = odd_tensor
        second = derived(derived(odd_tensor, result.d_a_odd), result.d_a_odd)
        a2 = a * a
        ok2 = True
        for i, x in enumerate(odd):
            for j, y in enumerate(odd):
                want = split.odd_coords(x * a2 * y - y * a2 * x)
                vec = second.bracket(i, j)
                got = [vec.get(k, ZERO) for k in range(len(odd))]
                if got != want:
                    ok2 = False
        checks["odd_second_derived_is_a2_sandwich"] = ok2
    return result
