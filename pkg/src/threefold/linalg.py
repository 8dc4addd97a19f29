"""Exact dense linear algebra over Q and over prime fields F_p.

Everything here is exact: Q arithmetic uses fractions.Fraction (always lowest
terms), prime-field arithmetic uses ints in [0, p).  Matrices are dense
row-major lists.  Reduced row echelon form is canonical (first-nonzero pivot
in column order), so subspaces compare by their rref bases.

Rational elimination is fraction-free (Bareiss): rows are scaled to integers
and all intermediate entries are minors of the scaled matrix, with Fractions
appearing only in final output.  Prime fields with word-size modulus get a
vectorized numpy elimination; larger moduli fall back to pure Python.
"""

from fractions import Fraction
from math import gcd

try:
    import numpy as _np
except ImportError:  # pragma: no cover - numpy is a declared dependency
    _np = None

# int64 products a*b with a,b < 2^30 stay well below 2^63
_NUMPY_MODULUS_LIMIT = 1 << 30

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_probable_prime(n: int) -> bool:
    """Miller-Rabin with a base set that is deterministic below 3.3e24."""
    if n < 2:
        return False
    for q in _MR_BASES:
        if n % q == 0:
            return n == q
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class RationalField:
    """The field Q.  Elements are fractions.Fraction."""

    p = 0  # characteristic
    zero = Fraction(0)
    one = Fraction(1)

    def of(self, x):
        if isinstance(x, Fraction):
            return x
        if isinstance(x, int):
            return Fraction(x)
        if isinstance(x, str):
            return Fraction(x)
        raise TypeError("cannot coerce %r into Q" % (x,))

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of 0")
        return 1 / a

    def div(self, a, b):
        return a / b

    def describe(self):
        return "q"

    def __repr__(self):
        return "QQ"

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")


class PrimeField:
    """F_p for an odd prime p.  Elements are ints in [0, p)."""

    def __init__(self, p: int):
        if not is_probable_prime(p):
            raise ValueError("modulus %d is not prime" % p)
        self.p = p
        self.zero = 0
        self.one = 1 % p

    def of(self, x):
        if isinstance(x, int):
            return x % self.p
        if isinstance(x, Fraction):
            den = x.denominator % self.p
            if den == 0:
                raise ZeroDivisionError("denominator divisible by %d" % self.p)
            return x.numerator * pow(den, self.p - 2, self.p) % self.p
        raise TypeError("cannot coerce %r into F_%d" % (x, self.p))

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return a * b % self.p

    def neg(self, a):
        return -a % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError("inverse of 0 mod %d" % self.p)
        return pow(a, self.p - 2, self.p)

    def div(self, a, b):
        return a * self.inv(b) % self.p

    def describe(self):
        return "p=%d" % self.p

    def __repr__(self):
        return "GF(%d)" % self.p

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))


QQ = RationalField()

# 62-bit default prime for randomized sweeps
DEFAULT_SWEEP_PRIME = 4611686018427388039

_gf_cache = {}


def GF(p: int) -> PrimeField:
    field = _gf_cache.get(p)
    if field is None:
        field = _gf_cache[p] = PrimeField(p)
    return field


def field_from_descriptor(text: str):
    """Parse a field descriptor: "q" for Q, "p=<prime>" for F_p."""
    text = text.strip().lower()
    if text == "q":
        return QQ
    if text.startswith("p=") or text.startswith("p:"):
        return GF(int(text[2:]))
    if text == "p":
        return GF(DEFAULT_SWEEP_PRIME)
    raise ValueError("bad field descriptor %r (want 'q' or 'p=<prime>')" % text)


# ---------------------------------------------------------------------------
# matrices


class Matrix:
    """Dense matrix over a fixed field.  Treat instances as immutable."""

    __slots__ = ("field", "nrows", "ncols", "rows", "_rref")

    def __init__(self, field, rows, ncols=None):
        self.field = field
        self.rows = [[field.of(x) for x in row] for row in rows]
        self.nrows = len(self.rows)
        if self.nrows:
            self.ncols = len(self.rows[0])
            if any(len(r) != self.ncols for r in self.rows):
                raise ValueError("ragged rows")
        else:
            self.ncols = 0 if ncols is None else ncols
        self._rref = None

    @classmethod
    def zeros(cls, field, nrows, ncols):
        z = field.zero
        return cls(field, [[z] * ncols for _ in range(nrows)], ncols=ncols)

    @classmethod
    def identity(cls, field, n):
        z, o = field.zero, field.one
        return cls(field, [[o if i == j else z for j in range(n)] for i in range(n)])

    def row(self, i):
        return list(self.rows[i])

    def col(self, j):
        return [r[j] for r in self.rows]

    def transpose(self):
        return Matrix(self.field, [list(c) for c in zip(*self.rows)] if self.rows else [],
                      ncols=self.nrows)

    def mul_vec(self, vec):
        if len(vec) != self.ncols:
            raise ValueError("dimension mismatch")
        f = self.field
        out = []
        for row in self.rows:
            acc = f.zero
            for a, x in zip(row, vec):
                if a != f.zero and x != f.zero:
                    acc = f.add(acc, f.mul(a, x))
            out.append(acc)
        return out

    def mul(self, other):
        if self.ncols != other.nrows:
            raise ValueError("dimension mismatch")
        if self.field != other.field:
            raise ValueError("field mismatch")
        f = self.field
        bt = other.transpose().rows
        out = []
        for row in self.rows:
            out.append([
                _dot(f, row, col) for col in bt
            ])
        return Matrix(f, out, ncols=other.ncols)

    def stack(self, other):
        if self.ncols != other.ncols or self.field != other.field:
            raise ValueError("mismatch in stack")
        return Matrix(self.field, [list(r) for r in self.rows] + [list(r) for r in other.rows],
                      ncols=self.ncols)

    def __eq__(self, other):
        return (isinstance(other, Matrix) and self.field == other.field
                and self.nrows == other.nrows and self.ncols == other.ncols
                and self.rows == other.rows)

    def __hash__(self):  # pragma: no cover - not used as dict keys in hot paths
        return hash((self.nrows, self.ncols, tuple(tuple(r) for r in self.rows)))

    def __repr__(self):
        return "Matrix(%s, %dx%d)" % (self.field, self.nrows, self.ncols)

    # -- elimination ------------------------------------------------------

    def rref(self):
        """Return (R, rank, pivots) with R the unique reduced row echelon form."""
        if self._rref is None:
            if isinstance(self.field, PrimeField):
                rows, rank, pivots = _rref_modp(self.rows, self.nrows, self.ncols,
                                                self.field.p)
            else:
                rows, rank, pivots = _rref_rational(self.rows, self.nrows, self.ncols)
            R = Matrix(self.field, rows, ncols=self.ncols)
            R._rref = (R, rank, tuple(pivots))
            self._rref = (R, rank, tuple(pivots))
        return self._rref

    def rank(self):
        if self._rref is not None:
            return self._rref[1]
        if isinstance(self.field, PrimeField):
            return self.rref()[1]
        return _rank_rational_forward(self.rows, self.nrows, self.ncols)

    def det(self):
        if self.nrows != self.ncols:
            raise ValueError("determinant of non-square matrix")
        if self.nrows == 0:
            return self.field.one
        if isinstance(self.field, PrimeField):
            return _det_modp(self.rows, self.nrows, self.field.p)
        return _det_rational(self.rows, self.nrows)


def _dot(f, u, v):
    acc = f.zero
    for a, b in zip(u, v):
        if a != f.zero and b != f.zero:
            acc = f.add(acc, f.mul(a, b))
    return acc


# -- prime-field elimination ------------------------------------------------


def _rref_modp(rows, nrows, ncols, p):
    if _np is not None and p < _NUMPY_MODULUS_LIMIT and nrows and ncols:
        return _rref_modp_numpy(rows, nrows, ncols, p)
    M = [list(r) for r in rows]
    r = 0
    pivots = []
    for c in range(ncols):
        pr = None
        for i in range(r, nrows):
            if M[i][c]:
                pr = i
                break
        if pr is None:
            continue
        if pr != r:
            M[pr], M[r] = M[r], M[pr]
        inv = pow(M[r][c], p - 2, p)
        if inv != 1:
            M[r] = [x * inv % p for x in M[r]]
        prow = M[r]
        for j in range(nrows):
            if j != r:
                f = M[j][c]
                if f:
                    M[j] = [(x - f * y) % p for x, y in zip(M[j], prow)]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return M, r, pivots


def _rref_modp_numpy(rows, nrows, ncols, p):
    M = _np.array(rows, dtype=_np.int64) % p
    r = 0
    pivots = []
    for c in range(ncols):
        nz = _np.nonzero(M[r:, c])[0]
        if nz.size == 0:
            continue
        pr = r + int(nz[0])
        if pr != r:
            M[[r, pr]] = M[[pr, r]]
        inv = pow(int(M[r, c]), p - 2, p)
        if inv != 1:
            M[r] = M[r] * inv % p
        f = M[:, c].copy()
        f[r] = 0
        M = (M - _np.outer(f, M[r])) % p
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return M.tolist(), r, pivots


def _det_modp(rows, n, p):
    M = [list(r) for r in rows]
    det = 1
    for c in range(n):
        pr = None
        for i in range(c, n):
            if M[i][c]:
                pr = i
                break
        if pr is None:
            return 0
        if pr != c:
            M[pr], M[c] = M[c], M[pr]
            det = -det
        piv = M[c][c]
        det = det * piv % p
        inv = pow(piv, p - 2, p)
        prow = [x * inv % p for x in M[c]]
        for j in range(c + 1, n):
            f = M[j][c]
            if f:
                M[j] = [(x - f * y) % p for x, y in zip(M[j], prow)]
    return det % p


# -- rational elimination (fraction-free) ------------------------------------


def _integerize(rows):
    """Scale each row by the lcm of denominators; return (int rows, scales)."""
    out = []
    scales = []
    for row in rows:
        den = 1
        for x in row:
            d = x.denominator
            den = den // gcd(den, d) * d
        out.append([int(x * den) for x in row])
        scales.append(den)
    return out, scales


def _bareiss_forward(M, nrows, ncols):
    """In-place fraction-free forward elimination.

    Returns (rank, pivots, sign).  After the call, rows 0..rank-1 of M are in
    integer echelon form (each entry a minor of the input, up to row scaling).
    """
    prev = 1
    r = 0
    pivots = []
    sign = 1
    for c in range(ncols):
        pr = None
        for i in range(r, nrows):
            if M[i][c]:
                pr = i
                break
        if pr is None:
            continue
        if pr != r:
            M[pr], M[r] = M[r], M[pr]
            sign = -sign
        piv = M[r][c]
        prow = M[r]
        for j in range(r + 1, nrows):
            a = M[j][c]
            row = M[j]
            if a:
                M[j] = [(piv * x - a * y) // prev for x, y in zip(row, prow)]
            elif prev != 1 or piv != 1:
                M[j] = [piv * x // prev for x in row]
        prev = piv
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return r, pivots, sign


def _rank_rational_forward(rows, nrows, ncols):
    if not nrows or not ncols:
        return 0
    M, _ = _integerize(rows)
    rank, _, _ = _bareiss_forward(M, nrows, ncols)
    return rank


def _normalize_int_row(row):
    g = 0
    for x in row:
        if x:
            g = gcd(g, x)
            if g == 1:
                return row
    if g > 1:
        return [x // g for x in row]
    return row


def _rref_rational(rows, nrows, ncols):
    if not nrows or not ncols:
        return [list(r) for r in rows], 0, []
    M, _ = _integerize(rows)
    rank, pivots, _ = _bareiss_forward(M, nrows, ncols)
    # fraction-free backward pass with gcd control, then divide by pivots
    for i in range(rank - 1, -1, -1):
        ci = pivots[i]
        piv = M[i][ci]
        prow = M[i]
        for j in range(i):
            a = M[j][ci]
            if a:
                M[j] = _normalize_int_row(
                    [piv * x - a * y for x, y in zip(M[j], prow)])
    out = []
    for i in range(rank):
        piv = M[i][pivots[i]]
        out.append([Fraction(x, piv) for x in M[i]])
    zero_row = [Fraction(0)] * ncols
    for _ in range(rank, nrows):
        out.append(list(zero_row))
    return out, rank, pivots


def _det_rational(rows, n):
    M, scales = _integerize(rows)
    rank, _, sign = _bareiss_forward(M, n, n)
    if rank < n:
        return Fraction(0)
    den = 1
    for s in scales:
        den *= s
    return Fraction(sign * M[n - 1][n - 1], den)


# ---------------------------------------------------------------------------
# solving


def solve(A: Matrix, b):
    """Solve A x = b.  Returns (particular_or_None, kernel_basis).

    The kernel basis spans {x : A x = 0}; particular is None iff the system
    is inconsistent.
    """
    if len(b) != A.nrows:
        raise ValueError("right-hand side has wrong length")
    f = A.field
    aug = Matrix(f, [row + [f.of(x)] for row, x in zip(A.rows, b)]
                 if A.nrows else [], ncols=A.ncols + 1)
    R, rank, pivots = aug.rref()
    kernel = _kernel_from_rref(f, R, A.ncols,
                               [p for p in pivots if p < A.ncols])
    if pivots and pivots[-1] == A.ncols:
        return None, kernel
    x = [f.zero] * A.ncols
    for i, c in enumerate(pivots):
        x[c] = R.rows[i][A.ncols]
    return x, kernel


def nullspace(A: Matrix):
    """Basis of the right kernel of A (list of vectors)."""
    if isinstance(A.field, PrimeField):
        R, rank, pivots = A.rref()
        return _kernel_from_rref(A.field, R, A.ncols, list(pivots))
    return _nullspace_rational(A)


def _kernel_from_rref(f, R, ncols, pivots):
    pivset = set(pivots)
    free = [c for c in range(ncols) if c not in pivset]
    basis = []
    for fc in free:
        v = [f.zero] * ncols
        v[fc] = f.one
        for i, c in enumerate(pivots):
            a = R.rows[i][fc]
            if a != f.zero:
                v[c] = f.neg(a)
        basis.append(v)
    return basis


def _nullspace_rational(A: Matrix):
    """Kernel over Q via forward Bareiss + per-vector back substitution.

    Avoids the full reduced backward pass: each free column costs one
    O(rank * ncols) substitution sweep in Fractions.
    """
    if A.ncols == 0:
        return []
    if A.nrows == 0:
        return [[Fraction(int(i == j)) for j in range(A.ncols)]
                for i in range(A.ncols)]
    M, _ = _integerize(A.rows)
    rank, pivots, _ = _bareiss_forward(M, A.nrows, A.ncols)
    pivset = set(pivots)
    free = [c for c in range(A.ncols) if c not in pivset]
    basis = []
    for fc in free:
        v = [Fraction(0)] * A.ncols
        v[fc] = Fraction(1)
        for i in range(rank - 1, -1, -1):
            ci = pivots[i]
            if ci > fc:
                continue
            row = M[i]
            acc = Fraction(0)
            for k in range(ci + 1, A.ncols):
                rk = row[k]
                if rk and v[k]:
                    acc += rk * v[k]
            if acc:
                v[ci] = -acc / row[ci]
        basis.append(v)
    return basis


# ---------------------------------------------------------------------------
# subspaces


class Subspace:
    """A linear subspace of F^n in canonical form (rref basis rows)."""

    __slots__ = ("field", "ambient_dim", "basis", "pivots")

    def __init__(self, field, ambient_dim, basis_rows, pivots):
        self.field = field
        self.ambient_dim = ambient_dim
        self.basis = basis_rows          # list of rows, rref, no zero rows
        self.pivots = tuple(pivots)

    @classmethod
    def from_vectors(cls, field, ambient_dim, vectors):
        vecs = [v for v in vectors]
        if not vecs:
            return cls(field, ambient_dim, [], ())
        if any(len(v) != ambient_dim for v in vecs):
            raise ValueError("vector length != ambient dimension")
        R, rank, pivots = Matrix(field, vecs, ncols=ambient_dim).rref()
        return cls(field, ambient_dim, [list(R.rows[i]) for i in range(rank)], pivots)

    @classmethod
    def zero(cls, field, ambient_dim):
        return cls(field, ambient_dim, [], ())

    @property
    def dim(self):
        return len(self.basis)

    def reduce(self, vec):
        """Normal form of vec modulo this subspace (zero at pivot columns)."""
        if len(vec) != self.ambient_dim:
            raise ValueError("vector length != ambient dimension")
        f = self.field
        v = [f.of(x) for x in vec]
        for row, c in zip(self.basis, self.pivots):
            a = v[c]
            if a != f.zero:
                v = [f.sub(x, f.mul(a, y)) for x, y in zip(v, row)]
        return v

    def contains(self, vec):
        z = self.field.zero
        return all(x == z for x in self.reduce(vec))

    def contains_subspace(self, other):
        return all(self.contains(row) for row in other.basis)

    def add(self, other):
        if self.ambient_dim != other.ambient_dim or self.field != other.field:
            raise ValueError("subspace mismatch")
        return Subspace.from_vectors(self.field, self.ambient_dim,
                                     self.basis + other.basis)

    def intersect(self, other):
        """Intersection via kernel of the stacked relation matrix."""
        if self.ambient_dim != other.ambient_dim or self.field != other.field:
            raise ValueError("subspace mismatch")
        if self.dim == 0 or other.dim == 0:
            return Subspace.zero(self.field, self.ambient_dim)
        # columns: coefficients on self.basis then on other.basis;
        # rows: ambient coordinates of  sum a_i u_i - sum b_j w_j = 0
        f = self.field
        rows = []
        for k in range(self.ambient_dim):
            rows.append([u[k] for u in self.basis] +
                        [f.neg(w[k]) for w in other.basis])
        vecs = []
        for ker in nullspace(Matrix(f, rows)):
            coeffs = ker[:self.dim]
            v = [f.zero] * self.ambient_dim
            for a, u in zip(coeffs, self.basis):
                if a != f.zero:
                    v = [f.add(x, f.mul(a, y)) for x, y in zip(v, u)]
            vecs.append(v)
        return Subspace.from_vectors(self.field, self.ambient_dim, vecs)

    def __eq__(self, other):
        return (isinstance(other, Subspace) and self.field == other.field
                and self.ambient_dim == other.ambient_dim
                and self.basis == other.basis)

    def __repr__(self):
        return "Subspace(dim %d of %d)" % (self.dim, self.ambient_dim)


def quotient_basis(ambient_dim, sub: Subspace):
    """Coordinate indices of the canonical complement of sub (non-pivots)."""
    if sub.ambient_dim != ambient_dim:
        raise ValueError("ambient dimension mismatch")
    pivset = set(sub.pivots)
    return [i for i in range(ambient_dim) if i not in pivset]
