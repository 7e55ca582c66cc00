"""Structure tensors, derived operations, operator classification, pencils.

A structure tensor stores the constants c_ij^k of a bilinear operation
psi(x_i, x_j) = sum_k c_ij^k x_k on a fixed basis.  The derived operation of
psi along an operator D is

    psi'_D(x, y) = D(psi(x, y)) - psi(Dx, y) - psi(x, Dy),

the action of gl(V) on (1,2)-tensors.  Iterating it classifies D relative to
psi: derivations (psi' = 0), quasi-derivations (psi'' = 0), and the wider
class where psi'' = a*psi + b*psi' for scalars (a, b), which spans a pencil
of operations with exactly one or two degenerate lines.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exact import (ONE, ZERO, RatMatrix, mat_commutator, rank_exact,
                    rational_sqrt, solve_columns)

TAG_DERIVATION = "derivation"
TAG_SCALAR = "scalar-type"
TAG_QUASI = "quasi"
TAG_NEAR = "near"
TAG_NOT_NEAR = "not-near"

MODE_NILPOTENT = "nilpotent"
MODE_SEMISIMPLE = "semisimple"


class IrrationalEigenvalues(ValueError):
    """Pencil eigenvalues fall outside Q; carries the offending (a, b)."""

    def __init__(self, a, b):
        self.a = a
        self.b = b
        super().__init__(
            "discriminant b^2 + 4a = %s is not a rational square (a=%s, b=%s)"
            % (b * b + 4 * a, a, b))


class PreconditionViolated(ValueError):
    """A hypothesis check failed; carries the first failing power."""

    def __init__(self, power, side):
        self.power = power
        self.side = side
        super().__init__("vanishing hypothesis fails at D^%d on the %s argument"
                         % (power, side))


class StructureTensor:
    """Structure constants of a bilinear operation on a based vector space.

    The table maps ordered basis pairs (i, j) to sparse value vectors
    {k: c_ij^k}; zero vectors are never stored, so equality is literal
    table equality.  Instances are immutable by convention: all operations
    return new tensors.
    """

    __slots__ = ("dim", "labels", "table", "_skew")

    def __init__(self, dim, table=None, labels=None):
        self.dim = dim
        self.labels = tuple(labels) if labels else tuple("x%d" % i for i in range(dim))
        if len(self.labels) != dim:
            raise ValueError("label count mismatch")
        self.table = {}
        if table:
            for (i, j), vec in table.items():
                if not (0 <= i < dim and 0 <= j < dim):
                    raise ValueError("basis index out of range")
                clean = {}
                for k, c in vec.items():
                    c = Fraction(c)
                    if c:
                        if not 0 <= k < dim:
                            raise ValueError("value index out of range")
                        clean[k] = c
                if clean:
                    self.table[(i, j)] = clean
        self._skew = None

    @classmethod
    def zero(cls, dim, labels=None):
        return cls(dim, {}, labels)

    def bracket(self, i, j):
        """Sparse value vector of psi(x_i, x_j)."""
        return self.table.get((i, j), {})

    def coeff(self, i, j, k):
        return self.table.get((i, j), {}).get(k, ZERO)

    def apply(self, x, y):
        """Bilinear evaluation on dense coordinate vectors; returns a dense list."""
        out = [ZERO] * self.dim
        for i, xi in enumerate(x):
            if not xi:
                continue
            for j, yj in enumerate(y):
                if not yj:
                    continue
                vec = self.table.get((i, j))
                if vec:
                    c = xi * yj
                    for k, ck in vec.items():
                        out[k] += c * ck
        return out

    def apply_basis(self, i, vec):
        """psi(x_i, v) for a sparse value vector v; returns a sparse dict."""
        out = {}
        for j, vj in vec.items():
            w = self.table.get((i, j))
            if w:
                for k, ck in w.items():
                    s = out.get(k, ZERO) + vj * ck
                    if s:
                        out[k] = s
                    else:
                        out.pop(k, None)
        return out

    def is_zero(self):
        return not self.table

    def is_skew(self):
        if self._skew is None:
            ok = True
            for (i, j), vec in self.table.items():
                if i == j:
                    ok = False
                    break
                mirror = self.table.get((j, i), {})
                if mirror != {k: -c for k, c in vec.items()}:
                    ok = False
                    break
            self._skew = ok
        return self._skew

    def __eq__(self, other):
        return (isinstance(other, StructureTensor) and self.dim == other.dim
                and self.table == other.table)

    def __hash__(self):
        return hash((self.dim, tuple(sorted((ij, tuple(sorted(v.items())))
                                            for ij, v in self.table.items()))))

    def __add__(self, other):
        return tensor_combination([(ONE, self), (ONE, other)])

    def __sub__(self, other):
        return tensor_combination([(ONE, self), (-ONE, other)])

    def __neg__(self):
        return self.scale(-ONE)

    def scale(self, c):
        c = Fraction(c)
        if not c:
            return StructureTensor.zero(self.dim, self.labels)
        t = StructureTensor(self.dim, labels=self.labels)
        t.table = {ij: {k: c * v for k, v in vec.items()}
                   for ij, vec in self.table.items()}
        return t

    def support(self):
        for (i, j), vec in sorted(self.table.items()):
            for k in sorted(vec):
                yield (i, j, k, vec[k])

    def __repr__(self):
        bits = ["[%s,%s]->%s" % (self.labels[i], self.labels[j],
                                 "+".join("%s%s" % (c, self.labels[k])
                                          for k, c in sorted(vec.items())))
                for (i, j), vec in sorted(self.table.items()) if i < j or not self.is_skew()]
        return "StructureTensor(dim=%d, %s)" % (self.dim, "; ".join(bits))


def tensor_combination(pairs):
    """Exact linear combination sum_i c_i * T_i of same-dimension tensors."""
    dim = pairs[0][1].dim
    labels = pairs[0][1].labels
    acc = {}
    for c, t in pairs:
        c = Fraction(c)
        if not c or t.is_zero():
            continue
        if t.dim != dim:
            raise ValueError("dimension mismatch")
        for ij, vec in t.table.items():
            slot = acc.setdefault(ij, {})
            for k, v in vec.items():
                s = slot.get(k, ZERO) + c * v
                if s:
                    slot[k] = s
                else:
                    slot.pop(k, None)
    out = StructureTensor(dim, labels=labels)
    out.table = {ij: vec for ij, vec in acc.items() if vec}
    return out


def derived(tensor, op):
    """The derived operation rho(D).T, as a structure tensor.

    For a skew tensor only the upper triangle is computed and mirrored, since
    the derived operation of a skew operation is again skew.
    """
    n = tensor.dim
    if op.nrows != n or op.ncols != n:
        raise ValueError("operator shape mismatch")
    cols = op.columns()

    def image(vec):
        out = {}
        for k, c in vec.items():
            colk = cols[k]
            for r in range(n):
                if colk[r]:
                    s = out.get(r, ZERO) + c * colk[r]
                    if s:
                        out[r] = s
                    else:
                        out.pop(r, None)
        return out

    def entry(i, j):
        acc = dict(image(tensor.bracket(i, j)))
        coli = cols[i]
        for k in range(n):
            dk = coli[k]
            if dk:
                for m, cm in tensor.bracket(k, j).items():
                    s = acc.get(m, ZERO) - dk * cm
                    if s:
                        acc[m] = s
                    else:
                        acc.pop(m, None)
        colj = cols[j]
        for k in range(n):
            dk = colj[k]
            if dk:
                for m, cm in tensor.bracket(i, k).items():
                    s = acc.get(m, ZERO) - dk * cm
                    if s:
                        acc[m] = s
                    else:
                        acc.pop(m, None)
        return acc

    table = {}
    if tensor.is_skew():
        for i in range(n):
            for j in range(i + 1, n):
                vec = entry(i, j)
                if vec:
                    table[(i, j)] = vec
                    table[(j, i)] = {k: -c for k, c in vec.items()}
    else:
        for i in range(n):
            for j in range(n):
                vec = entry(i, j)
                if vec:
                    table[(i, j)] = vec
    out = StructureTensor(n, labels=tensor.labels)
    out.table = table
    return out


def derived_iter(tensor, op, k):
    """k-fold derived operation rho(D)^k . T."""
    if k < 0:
        raise ValueError("negative iteration count")
    t = tensor
    for _ in range(k):
        t = derived(t, op)
    return t


def is_derivation(tensor, op):
    return derived(tensor, op).is_zero()


def check_skew(tensor):
    """Antisymmetry check; returns (ok, witness pair or None)."""
    n = tensor.dim
    for i in range(n):
        if tensor.bracket(i, i):
            return False, (i, i)
        for j in range(i + 1, n):
            vec = tensor.bracket(i, j)
            mirror = tensor.bracket(j, i)
            if mirror != {k: -c for k, c in vec.items()}:
                return False, (i, j)
    return True, None


def check_jacobi(tensor):
    """Cyclic Jacobi sum over basis triples; returns (ok, witness or None).

    For a skew tensor the triples i < j < k suffice; otherwise all ordered
    triples are checked.
    """
    n = tensor.dim
    skew = tensor.is_skew()

    def jac(i, j, k):
        acc = {}
        for (a, b, c) in ((i, j, k), (j, k, i), (k, i, j)):
            inner = tensor.bracket(a, b)
            for m, cm in inner.items():
                w = tensor.bracket(m, c)
                for r, cr in w.items():
                    s = acc.get(r, ZERO) + cm * cr
                    if s:
                        acc[r] = s
                    else:
                        acc.pop(r, None)
        return acc

    if skew:
        triples = ((i, j, k) for i in range(n) for j in range(i + 1, n)
                   for k in range(j + 1, n))
    else:
        triples = ((i, j, k) for i in range(n) for j in range(n) for k in range(n))
    for (i, j, k) in triples:
        if jac(i, j, k):
            return False, (i, j, k)
    return True, None


def is_lie(tensor):
    return check_skew(tensor)[0] and check_jacobi(tensor)[0]


def ad(tensor, x):
    """Matrix of v -> psi(x, v) for a coordinate vector x."""
    n = tensor.dim
    rows = [[ZERO] * n for _ in range(n)]
    for i, xi in enumerate(x):
        if not xi:
            continue
        for j in range(n):
            vec = tensor.bracket(i, j)
            for k, c in vec.items():
                rows[k][j] += xi * c
    return RatMatrix(rows)


def _flatten(tensors):
    keys = sorted({(i, j, k) for t in tensors for (i, j), vec in t.table.items()
                   for k in vec})
    return [[t.coeff(i, j, k) for (i, j, k) in keys] for t in tensors]


@dataclass
class PencilAction:
    """Classification of an operator against a structure tensor.

    dim_u is the dimension of span{T, T'}; for tags "quasi" and "near" the
    scalars satisfy T'' = a*T + b*T' exactly, with (a, b) = (0, 0) in the
    quasi case.  For "scalar-type", scalar holds the ratio T' = scalar * T.
    """

    tensor: StructureTensor
    operator: RatMatrix
    derived: StructureTensor
    second: StructureTensor
    dim_u: int
    tag: str
    a: Fraction | None = None
    b: Fraction | None = None
    scalar: Fraction | None = None


def classify_operator(tensor, op):
    """Classify D by solving rho(D)^2.T = a*T + b*rho(D).T exactly."""
    t1 = derived(tensor, op)
    if t1.is_zero():
        return PencilAction(tensor, op, t1, t1, 1, TAG_DERIVATION)
    t2 = derived(t1, op)
    v0, v1, v2 = _flatten([tensor, t1, t2])
    if rank_exact([v0, v1]) == 1:
        idx = next(i for i, c in enumerate(v0) if c)
        return PencilAction(tensor, op, t1, t2, 1, TAG_SCALAR,
                            scalar=v1[idx] / v0[idx])
    sol = solve_columns([v0, v1], v2)
    if sol is None:
        return PencilAction(tensor, op, t1, t2, 2, TAG_NOT_NEAR)
    a, b = sol
    if a == 0 and b == 0:
        return PencilAction(tensor, op, t1, t2, 2, TAG_QUASI, a=a, b=b)
    return PencilAction(tensor, op, t1, t2, 2, TAG_NEAR, a=a, b=b)


@dataclass
class NormalizedPencil:
    """Pencil data after shifting D by the smaller root of t^2 - b*t - a.

    The normalized operator satisfies rho(D1)^2.T = (lambda2-lambda1)*rho(D1).T,
    so the new coefficient pair is (0, lambda2 - lambda1).  Nilpotent mode
    (equal roots) has a single degenerate line, spanned by rho(D1).T;
    semisimple mode adds the line of b*T - rho(D1).T.
    """

    shift: Fraction
    lambda2: Fraction
    operator: RatMatrix
    mode: str
    base: StructureTensor
    derived: StructureTensor
    b: Fraction
    degenerate_lines: list

    @property
    def eigenvalues(self):
        return (ZERO, self.b)


def normalize_pencil(action):
    """Normalize a quasi or near pencil action; may raise IrrationalEigenvalues."""
    if action.tag not in (TAG_QUASI, TAG_NEAR):
        raise ValueError("only quasi and near actions normalize (got %r)" % action.tag)
    a, b = action.a, action.b
    if a == 0:
        lam1, lam2 = ZERO, b
    else:
        disc = b * b + 4 * a
        root = rational_sqrt(disc)
        if root is None:
            raise IrrationalEigenvalues(a, b)
        lam1 = (b - root) / 2
        lam2 = (b + root) / 2
    d1 = action.operator + RatMatrix.identity(action.operator.nrows).scale(lam1)
    t1 = action.derived if lam1 == 0 else derived(action.tensor, d1)
    bnew = lam2 - lam1
    # invariant of the normalization, cheap enough to recheck every time
    assert derived(t1, d1) == t1.scale(bnew), "pencil normalization failed"
    mode = MODE_NILPOTENT if bnew == 0 else MODE_SEMISIMPLE
    lines = [t1]
    if mode == MODE_SEMISIMPLE:
        lines.append(action.tensor.scale(bnew) - t1)
    return NormalizedPencil(lam1, lam2, d1, mode, action.tensor, t1, bnew, lines)


def check_vanishing_propagation(tensor, op, x, y, n):
    """Check psi(D^i x, D^j y) = 0 for i + j <= n given the edge hypothesis.

    Hypothesis (checked, PreconditionViolated on failure): psi(D^i x, y) and
    psi(x, D^i y) vanish for all i <= n.  The conclusion is evaluated by brute
    force and returned as a boolean.
    """
    xs = [list(x)]
    ys = [list(y)]
    for _ in range(n):
        xs.append(op.apply(xs[-1]))
        ys.append(op.apply(ys[-1]))
    for i in range(n + 1):
        if any(tensor.apply(xs[i], ys[0])):
            raise PreconditionViolated(i, "left")
        if any(tensor.apply(xs[0], ys[i])):
            raise PreconditionViolated(i, "right")
    for i in range(n + 1):
        for j in range(n + 1 - i):
            if any(tensor.apply(xs[i], ys[j])):
                return False
    return True


def shift_by_derivation(tensor, op, der):
    """Derived tensors of D + d for a derivation d.

    Returns (rho(D+d).T, rho(D+d)^2.T) and checks the two shift identities:
    the first derived tensor is unchanged and the second moves by the derived
    tensor along the commutator [d, D].
    """
    if not is_derivation(tensor, der):
        raise ValueError("shift operator is not a derivation of the tensor")
    shifted = op + der
    t1 = derived(tensor, shifted)
    t2 = derived(t1, shifted)
    base1 = derived(tensor, op)
    base2 = derived(base1, op)
    assert t1 == base1, "first derived tensor moved under a derivation shift"
    corr = derived(tensor, mat_commutator(der, op))
    assert t2 == base2 + corr, "second derived shift identity failed"
    return t1, t2
