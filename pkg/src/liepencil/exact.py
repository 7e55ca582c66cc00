"""Exact rational arithmetic: matrices, ranks, kernels, sparse polynomials.

Every coefficient in this package is a `fractions.Fraction`; nothing here
ever touches floating point.  Matrices are dense row lists.  Polynomials are
sparse maps from exponent tuples to nonzero coefficients with the graded
lexicographic order fixing a canonical form.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, isqrt

Rat = Fraction

ZERO = Fraction(0)
ONE = Fraction(1)


def rat(p, q=1):
    return Fraction(p, q)


def parse_rat(text):
    """Parse a rational written as "p" or "p/q"."""
    return Fraction(str(text).strip())


def format_rat(x):
    """Render a rational as "p" or "p/q" (denominator always positive)."""
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return "%d/%d" % (x.numerator, x.denominator)


def rational_sqrt(x):
    """Exact square root of a rational, or None when no rational root exists."""
    x = Fraction(x)
    if x < 0:
        return None
    rn, rd = isqrt(x.numerator), isqrt(x.denominator)
    if rn * rn != x.numerator or rd * rd != x.denominator:
        return None
    return Fraction(rn, rd)


class RatMatrix:
    """Dense matrix over Q.  Treat instances as immutable after construction."""

    __slots__ = ("nrows", "ncols", "rows")

    def __init__(self, rows):
        self.rows = [[Fraction(x) for x in row] for row in rows]
        self.nrows = len(self.rows)
        self.ncols = len(self.rows[0]) if self.rows else 0
        for row in self.rows:
            if len(row) != self.ncols:
                raise ValueError("ragged rows")

    @classmethod
    def zero(cls, n, m=None):
        m = n if m is None else m
        return cls([[ZERO] * m for _ in range(n)])

    @classmethod
    def identity(cls, n):
        return cls([[ONE if i == j else ZERO for j in range(n)] for i in range(n)])

    @classmethod
    def diagonal(cls, entries):
        n = len(entries)
        m = cls.zero(n)
        for i, x in enumerate(entries):
            m.rows[i][i] = Fraction(x)
        return m

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __eq__(self, other):
        return isinstance(other, RatMatrix) and self.rows == other.rows

    def __hash__(self):
        return hash(tuple(tuple(r) for r in self.rows))

    def __add__(self, other):
        return RatMatrix([[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __sub__(self, other):
        return RatMatrix([[a - b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __neg__(self):
        return RatMatrix([[-a for a in r] for r in self.rows])

    def scale(self, c):
        c = Fraction(c)
        return RatMatrix([[c * a for a in r] for r in self.rows])

    def __mul__(self, other):
        if isinstance(other, RatMatrix):
            if self.ncols != other.nrows:
                raise ValueError("shape mismatch")
            cols = list(zip(*other.rows))
            return RatMatrix([[sum((a * b for a, b in zip(row, col)), ZERO)
                               for col in cols] for row in self.rows])
        return self.scale(other)

    def __rmul__(self, c):
        return self.scale(c)

    def __pow__(self, k):
        if k < 0:
            raise ValueError("negative power")
        acc = RatMatrix.identity(self.nrows)
        for _ in range(k):
            acc = acc * self
        return acc

    def apply(self, vec):
        """Matrix times column vector (a plain list)."""
        return [sum((a * x for a, x in zip(row, vec)), ZERO) for row in self.rows]

    def col(self, j):
        return [row[j] for row in self.rows]

    def columns(self):
        return [list(c) for c in zip(*self.rows)] if self.rows else []

    def transpose(self):
        return RatMatrix([list(c) for c in zip(*self.rows)])

    def is_zero(self):
        return all(not x for row in self.rows for x in row)

    def is_diagonal(self):
        return all(not self.rows[i][j] for i in range(self.nrows)
                   for j in range(self.ncols) if i != j)

    def trace(self):
        return sum((self.rows[i][i] for i in range(min(self.nrows, self.ncols))), ZERO)

    def inverse(self):
        if self.nrows != self.ncols:
            raise ValueError("not square")
        n = self.nrows
        aug = [list(row) + [ONE if i == j else ZERO for j in range(n)]
               for i, row in enumerate(self.rows)]
        red, pivots = rref(aug)
        if pivots != list(range(n)):
            raise ValueError("singular matrix")
        return RatMatrix([row[n:] for row in red])

    def __repr__(self):
        return "RatMatrix(%r)" % ([[format_rat(x) for x in row] for row in self.rows],)


def mat_commutator(a, b):
    return a * b - b * a


def rref(rows):
    """Reduced row echelon form over Q.  Returns (new rows, pivot columns)."""
    R = [[Fraction(x) for x in row] for row in rows]
    nrows = len(R)
    ncols = len(R[0]) if R else 0
    pivots = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, nrows) if R[i][c]), None)
        if p is None:
            continue
        R[r], R[p] = R[p], R[r]
        pv = R[r][c]
        if pv != 1:
            R[r] = [x / pv for x in R[r]]
        for i in range(nrows):
            if i != r and R[i][c]:
                f = R[i][c]
                R[i] = [a - f * b for a, b in zip(R[i], R[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return R, pivots


def _lcm(a, b):
    return a * b // gcd(a, b)


def rank_exact(m):
    """Rank by fraction-free (Bareiss) elimination over the integers.

    Rows are cleared of denominators first; intermediate entries stay integral
    minors of the scaled matrix, which bounds coefficient growth.
    """
    rows = m.rows if isinstance(m, RatMatrix) else m
    M = []
    for row in rows:
        den = 1
        for x in row:
            den = _lcm(den, Fraction(x).denominator)
        M.append([int(Fraction(x) * den) for x in row])
    nrows = len(M)
    ncols = len(M[0]) if M else 0
    rank = 0
    prev = 1
    for c in range(ncols):
        p = next((i for i in range(rank, nrows) if M[i][c]), None)
        if p is None:
            continue
        M[rank], M[p] = M[p], M[rank]
        piv = M[rank][c]
        for i in range(rank + 1, nrows):
            e = M[i][c]
            for j in range(c + 1, ncols):
                num = piv * M[i][j] - e * M[rank][j]
                q, rem = divmod(num, prev)
                assert rem == 0, "bareiss exact division failed"
                M[i][j] = q
            M[i][c] = 0
        prev = piv
        rank += 1
        if rank == nrows:
            break
    return rank


def kernel_basis(m):
    """Canonical basis of the right kernel (one vector per free column).

    Each basis vector carries value 1 at its free column and the solved
    pivot values elsewhere, so rank + len(kernel) = ncols exactly.
    """
    rows = m.rows if isinstance(m, RatMatrix) else m
    ncols = len(rows[0]) if rows else 0
    R, pivots = rref(rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [ZERO] * ncols
        v[fc] = ONE
        for r_idx, pc in enumerate(pivots):
            v[pc] = -R[r_idx][fc]
        basis.append(v)
    return basis


def span_rank(vectors):
    """Rank of the span of a list of coordinate vectors."""
    vecs = [v for v in vectors if any(v)]
    if not vecs:
        return 0
    return rank_exact(vecs)


def solve_columns(cols, target):
    """Solve sum_k c_k * cols[k] = target exactly.

    Returns the coefficient list (free coefficients set to 0) or None when the
    system is inconsistent.
    """
    k = len(cols)
    if k == 0:
        return [] if not any(target) else None
    nrows = len(cols[0])
    aug = [[cols[c][r] for c in range(k)] + [target[r]] for r in range(nrows)]
    R, pivots = rref(aug)
    if k in pivots:
        return None
    sol = [ZERO] * k
    for r_idx, pc in enumerate(pivots):
        sol[pc] = R[r_idx][k]
    return sol


def nilpotent_index(m):
    """Smallest k >= 1 with m^k = 0, or None if m is not nilpotent."""
    n = m.nrows
    acc = m
    for k in range(1, n + 1):
        if acc.is_zero():
            return k
        acc = acc * m
    return None


def nilpotent_exp(m, s):
    """exp(s*m) as a finite exact sum; raises ValueError unless m is nilpotent."""
    k = nilpotent_index(m)
    if k is None:
        raise ValueError("matrix is not nilpotent")
    s = Fraction(s)
    acc = RatMatrix.identity(m.nrows)
    term = RatMatrix.identity(m.nrows)
    fact = 1
    power = ONE
    for p in range(1, k):
        term = term * m
        fact *= p
        power *= s
        acc = acc + term.scale(power / fact)
    return acc


class SparsePoly:
    """Sparse multivariate polynomial over Q.

    Terms live in a dict keyed by exponent tuples; zero coefficients are never
    stored.  Printing and leading-term selection use graded lex order.

    Example: (x1 - 1)*(x1 + 1) multiplies out to x1^2 - 1::

        >>> x = SparsePoly.variable(2, 1)
        >>> one = SparsePoly.const(2, 1)
        >>> print((x - one) * (x + one))
        x1^2 - 1
    """

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars, terms=None):
        self.nvars = nvars
        self.terms = {}
        if terms:
            for exps, c in terms.items():
                c = Fraction(c)
                if not c:
                    continue
                exps = tuple(int(e) for e in exps)
                if len(exps) != nvars or any(e < 0 for e in exps):
                    raise ValueError("bad exponent vector %r" % (exps,))
                self.terms[exps] = c

    @classmethod
    def zero(cls, nvars):
        return cls(nvars)

    @classmethod
    def const(cls, nvars, c):
        return cls(nvars, {(0,) * nvars: Fraction(c)})

    @classmethod
    def variable(cls, nvars, i):
        exps = [0] * nvars
        exps[i] = 1
        return cls(nvars, {tuple(exps): ONE})

    @classmethod
    def monomial(cls, nvars, exps, c=ONE):
        return cls(nvars, {tuple(exps): Fraction(c)})

    @classmethod
    def linear(cls, coeffs):
        """Linear form sum_i coeffs[i] * x_i."""
        n = len(coeffs)
        terms = {}
        for i, c in enumerate(coeffs):
            if c:
                e = [0] * n
                e[i] = 1
                terms[tuple(e)] = Fraction(c)
        return cls(n, terms)

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return (isinstance(other, SparsePoly) and self.nvars == other.nvars
                and self.terms == other.terms)

    def __neg__(self):
        p = SparsePoly(self.nvars)
        p.terms = {e: -c for e, c in self.terms.items()}
        return p

    def __add__(self, other):
        if not isinstance(other, SparsePoly):
            other = SparsePoly.const(self.nvars, other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e, ZERO) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        p = SparsePoly(self.nvars)
        p.terms = out
        return p

    def __sub__(self, other):
        return self + (-other if isinstance(other, SparsePoly) else SparsePoly.const(self.nvars, -Fraction(other)))

    def __mul__(self, other):
        if not isinstance(other, SparsePoly):
            c = Fraction(other)
            p = SparsePoly(self.nvars)
            if c:
                p.terms = {e: c * v for e, v in self.terms.items()}
            return p
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = out.get(e, ZERO) + c1 * c2
                if s:
                    out[e] = s
                else:
                    out.pop(e, None)
        p = SparsePoly(self.nvars)
        p.terms = out
        return p

    def __rmul__(self, other):
        return self * other

    def __pow__(self, k):
        if k < 0:
            raise ValueError("negative power")
        acc = SparsePoly.const(self.nvars, 1)
        for _ in range(k):
            acc = acc * self
        return acc

    def total_degree(self):
        return max((sum(e) for e in self.terms), default=0)

    def partial(self, i):
        """Formal partial derivative with respect to variable i."""
        out = {}
        for e, c in self.terms.items():
            if e[i]:
                ne = list(e)
                ne[i] -= 1
                out[tuple(ne)] = c * e[i]
        p = SparsePoly(self.nvars)
        p.terms = out
        return p

    def eval_at(self, point):
        """Evaluate at a rational point given as a sequence."""
        point = [Fraction(x) for x in point]
        total = ZERO
        for e, c in self.terms.items():
            v = c
            for x, k in zip(point, e):
                for _ in range(k):
                    v *= x
            total += v
        return total

    def leading(self):
        """Leading (exponents, coeff) in graded lex order; None for zero."""
        if not self.terms:
            return None
        e = max(self.terms, key=lambda t: (sum(t), t))
        return e, self.terms[e]

    def exact_div(self, divisor):
        """Exact polynomial quotient; raises ArithmeticError if not divisible."""
        if divisor.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        quot = SparsePoly(self.nvars)
        rem = self
        lt_d, lc_d = divisor.leading()
        while not rem.is_zero():
            lt_r, lc_r = rem.leading()
            diff = tuple(a - b for a, b in zip(lt_r, lt_d))
            if any(d < 0 for d in diff):
                raise ArithmeticError("inexact polynomial division")
            mono = SparsePoly.monomial(self.nvars, diff, lc_r / lc_d)
            quot = quot + mono
            rem = rem - divisor * mono
        return quot

    def coeff_vector(self, monomials):
        """Coefficients with respect to an ordered monomial list."""
        return [self.terms.get(m, ZERO) for m in monomials]

    def format(self, names=None):
        if not self.terms:
            return "0"
        if names is None:
            names = ["x%d" % i for i in range(self.nvars)]
        parts = []
        for e in sorted(self.terms, key=lambda t: (sum(t), t), reverse=True):
            c = self.terms[e]
            factors = []
            for i, k in enumerate(e):
                if k == 1:
                    factors.append(names[i])
                elif k > 1:
                    factors.append("%s^%d" % (names[i], k))
            body = "*".join(factors)
            if not body:
                chunk = format_rat(abs(c))
            elif abs(c) == 1:
                chunk = body
            else:
                chunk = "%s*%s" % (format_rat(abs(c)), body)
            sign = "-" if c < 0 else "+"
            parts.append((sign, chunk))
        first_sign, first = parts[0]
        text = ("-" if first_sign == "-" else "") + first
        for sign, chunk in parts[1:]:
            text += " %s %s" % (sign, chunk)
        return text

    def __str__(self):
        return self.format()

    def __repr__(self):
        return "SparsePoly(%d, %s)" % (self.nvars, self.format())


def generic_rank(mat):
    """Rank of a matrix of SparsePoly entries over the rational function field.

    Fraction-free (Bareiss) elimination with exact polynomial division; the
    pivot with the fewest terms is chosen at each step to limit growth.
    A nonzero polynomial pivot is generically invertible, so the count of
    pivots is the generic rank.
    """
    M = [list(row) for row in mat]
    nrows = len(M)
    ncols = len(M[0]) if M else 0
    rank = 0
    prev = None
    for c in range(ncols):
        best = None
        for i in range(rank, nrows):
            if not M[i][c].is_zero():
                if best is None or len(M[i][c].terms) < len(M[best][c].terms):
                    best = i
        if best is None:
            continue
        M[rank], M[best] = M[best], M[rank]
        piv = M[rank][c]
        for i in range(rank + 1, nrows):
            e = M[i][c]
            for j in range(c + 1, ncols):
                num = piv * M[i][j] - e * M[rank][j]
                M[i][j] = num if prev is None else num.exact_div(prev)
            M[i][c] = SparsePoly.zero(piv.nvars)
        prev = piv
        rank += 1
        if rank == nrows:
            break
    return rank
