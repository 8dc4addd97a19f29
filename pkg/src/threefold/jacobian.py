"""Graded Jacobian rings of smooth hypersurfaces, with exact Macaulay duality.

For a degree-d form F in n+1 variables with partial derivatives F_0..F_n,
the Jacobian ideal J is generated by the F_i and R = S/J is the Jacobian
ring.  When F is smooth, R is Artinian Gorenstein with socle in degree
N = (d-2)(n+1), dim R^N = 1, and the multiplication pairing
R^k x R^(N-k) -> R^N is perfect.

Rank computations over Q use a certificate fast path: the rank of the
degree-k generator matrix is at most the complete-intersection value
(attained by any smooth form, e.g. Fermat, and an upper bound for every
form by semicontinuity), and at least its rank after reduction mod a
word-size prime.  When the two bounds meet, the rank is proved without
any fraction arithmetic; otherwise we fall back to exact Bareiss
elimination.  This is a proof, not a probabilistic check.
"""

from fractions import Fraction

from .linalg import GF, Matrix, PrimeField, Subspace, nullspace, quotient_basis
from .poly import Polynomial, graded_dim

_CERT_PRIMES = (1000000007, 998244353, 999999937)


class SingularityError(ValueError):
    """Raised when an operation requires a smooth form but the input is not.

    Carries the degree at which the Artinian/Gorenstein expectation failed,
    so callers can report the violation instead of proceeding.
    """

    def __init__(self, message, degree=None):
        super().__init__(message)
        self.degree = degree


def ci_hilbert_dims(nvars, d):
    """Hilbert function of a complete intersection of nvars forms of degree
    d-1 in nvars variables: coefficients of (1 + t + ... + t^(d-2))^nvars."""
    block = [1] * (d - 1)
    series = [1]
    for _ in range(nvars):
        out = [0] * (len(series) + len(block) - 1)
        for i, a in enumerate(series):
            for j, b in enumerate(block):
                out[i + j] += a * b
        series = out
    return tuple(series)


class JacobianRing:
    """The graded quotient of a polynomial ring by a Jacobian ideal."""

    def __init__(self, form: Polynomial):
        if form.is_zero():
            raise ValueError("zero form")
        self.ring = form.ring
        self.form = form
        self.degree = form.homogeneous_degree()
        if self.degree < 2:
            raise ValueError("need degree >= 2")
        self.nvars = self.ring.nvars
        self.partials = form.gradient()
        self.socle_degree = (self.degree - 2) * self.nvars
        self.expected_dims = ci_hilbert_dims(self.nvars, self.degree)
        self._gen_matrices = {}
        self._mod_forms = {}
        self._ranks = {}
        self._qmonos = {}
        self._ideal_subs = {}
        self._lambda = None

    # -- generator matrices --------------------------------------------------

    def generator_matrix(self, k):
        """Rows span J^k: all m * F_i with m a monomial of degree k - (d-1).

        Row order is (i ascending, m grlex-descending); columns follow the
        degree-k monomial basis.  Deterministic so reports reproduce.
        """
        cached = self._gen_matrices.get(k)
        if cached is not None:
            return cached
        basis = self.ring.basis(k)
        shift = k - (self.degree - 1)
        rows = []
        if shift >= 0:
            z = self.ring.field.zero
            for part in self.partials:
                if part.is_zero():
                    continue
                for m in self.ring.monomials(shift):
                    row = [z] * len(basis)
                    for pm, c in part.terms.items():
                        row[basis.index[tuple(a + b for a, b in zip(m, pm))]] = c
                    rows.append(row)
        mat = Matrix(self.ring.field, rows, ncols=len(basis))
        self._gen_matrices[k] = mat
        return mat

    def _generator_matrix_mod(self, k, q):
        """The degree-k generator matrix with coefficients reduced mod q.

        Raises ZeroDivisionError if q divides a coefficient denominator."""
        key = (k, q)
        cached = self._mod_forms.get(key)
        if cached is not None:
            return cached
        field = GF(q)
        M = self.generator_matrix(k)
        rows = [[field.of(c) for c in row] for row in M.rows]
        Mq = Matrix(field, rows, ncols=M.ncols)
        self._mod_forms[key] = Mq
        return Mq

    def _expected_rank(self, k):
        expected_dim = (self.expected_dims[k]
                        if 0 <= k < len(self.expected_dims) else 0)
        return graded_dim(self.nvars, k) - expected_dim

    # -- ranks and dimensions -------------------------------------------------

    def ideal_rank(self, k):
        """dim J^k, exactly.

        Over Q: certified via the complete-intersection bound squeezed
        against a mod-q rank when possible, exact Bareiss otherwise.
        """
        cached = self._ranks.get(k)
        if cached is not None:
            return cached
        M = self.generator_matrix(k)
        if M.nrows == 0:
            self._ranks[k] = 0
            return 0
        if isinstance(self.ring.field, PrimeField):
            r = M.rank()
        else:
            r = None
            bound = self._expected_rank(k)
            for q in _CERT_PRIMES:
                try:
                    if self._generator_matrix_mod(k, q).rank() == bound:
                        r = bound
                        break
                except ZeroDivisionError:
                    continue
            if r is None:
                r = M.rank()
        self._ranks[k] = r
        return r

    def ring_dim(self, k):
        if k < 0:
            return 0
        return graded_dim(self.nvars, k) - self.ideal_rank(k)

    def ring_dims(self):
        """Dimensions of R^0..R^N."""
        return tuple(self.ring_dim(k) for k in range(self.socle_degree + 1))

    def is_smooth(self):
        """Artinian test: the ideal fills everything past the socle degree."""
        return self.ring_dim(self.socle_degree + 1) == 0

    def dims_match_smooth(self):
        return self.ring_dims() == self.expected_dims and self.is_smooth()

    # -- subspaces and normal forms --------------------------------------------

    def ideal_piece(self, k):
        """J^k as an explicit Subspace of the degree-k coordinate space."""
        sub = self._ideal_subs.get(k)
        if sub is None:
            M = self.generator_matrix(k)
            sub = Subspace.from_vectors(self.ring.field, M.ncols, M.rows)
            self._ideal_subs[k] = sub
            self._ranks.setdefault(k, sub.dim)
        return sub

    def in_ideal(self, p: Polynomial):
        if p.is_zero():
            return True
        k = p.homogeneous_degree()
        basis = self.ring.basis(k)
        return self.ideal_piece(k).contains(basis.to_vector(p))

    def normal_form(self, p: Polynomial, degree=None):
        """Canonical representative of p mod J (reduction against J^k rref)."""
        if p.is_zero():
            return p
        k = p.homogeneous_degree() if degree is None else degree
        basis = self.ring.basis(k)
        red = self.ideal_piece(k).reduce(basis.to_vector(p))
        return basis.from_vector(red)

    def ring_class(self, p: Polynomial, degree=None):
        if p.is_zero() and degree is None:
            raise ValueError("need an explicit degree for the zero class")
        k = p.homogeneous_degree() if degree is None else degree
        basis = self.ring.basis(k)
        sub = self.ideal_piece(k)
        red = sub.reduce(basis.to_vector(p))
        free = quotient_basis(len(basis), sub)
        return RingClass(self, k, tuple(red[i] for i in free))

    def quotient_monomials(self, k):
        """Monomials whose classes form a basis of R^k.

        Over Q the non-pivot columns of a mod-q reduction are certified to
        work as soon as the mod-q rank equals the exact rank: the pivot
        columns stay independent over Q, so every vector reduces into the
        span of the complement, which has the right cardinality.
        """
        cached = self._qmonos.get(k)
        if cached is not None:
            return cached
        basis = self.ring.basis(k)
        r = self.ideal_rank(k)
        pivots = None
        if not isinstance(self.ring.field, PrimeField):
            for q in _CERT_PRIMES:
                try:
                    Mq = self._generator_matrix_mod(k, q)
                except ZeroDivisionError:
                    continue
                _, rank_q, piv_q = Mq.rref()
                if rank_q == r:
                    pivots = piv_q
                    break
        if pivots is None:
            _, _, pivots = self.generator_matrix(k).rref()
        pivot_set = set(pivots)
        monos = tuple(m for i, m in enumerate(basis.monomials)
                      if i not in pivot_set)
        self._qmonos[k] = monos
        return monos

    # -- Macaulay duality -------------------------------------------------------

    def macaulay_lambda(self):
        """The socle functional: the (unique up to scale) linear functional on
        degree-N forms vanishing on J^N.  Over Q it is scaled to coprime
        integers for cheap exact determinants downstream."""
        if self._lambda is not None:
            return self._lambda
        N = self.socle_degree
        if self.ring_dim(N) != 1:
            raise SingularityError(
                "dim R^%d = %d, expected 1: form is not smooth"
                % (N, self.ring_dim(N)), degree=N)
        kern = nullspace(self.generator_matrix(N))
        if len(kern) != 1:
            raise SingularityError(
                "socle functional is not unique (nullity %d)" % len(kern),
                degree=N)
        lam = kern[0]
        if not isinstance(self.ring.field, PrimeField):
            den = 1
            for c in lam:
                den = den * c.denominator // _gcd(den, c.denominator)
            ints = [int(c * den) for c in lam]
            g = 0
            for c in ints:
                g = _gcd(g, abs(c))
            lam = [Fraction(c // g) for c in ints]
        self._lambda = lam
        return lam

    def macaulay_pairing(self, j):
        """Gram matrix of R^j x R^(N-j) -> R^N ~ k on monomial quotient bases.

        Entry (s, t) is the socle functional evaluated on the product of the
        s-th degree-j and t-th degree-(N-j) basis monomials.
        """
        N = self.socle_degree
        if not 0 <= j <= N:
            raise ValueError("degree out of range")
        lam = self.macaulay_lambda()
        index_N = self.ring.basis(N).index
        A = self.quotient_monomials(j)
        B = self.quotient_monomials(N - j)
        rows = []
        for a in A:
            row = []
            for b in B:
                prod = tuple(x + y for x, y in zip(a, b))
                row.append(lam[index_N[prod]])
            rows.append(row)
        return Matrix(self.ring.field, rows, ncols=len(B))

    def pairing_perfect(self, j):
        P = self.macaulay_pairing(j)
        if P.nrows != P.ncols:
            return False
        if P.nrows == 0:
            return True
        return P.det() != self.ring.field.zero

    # -- polars ------------------------------------------------------------------

    def polar(self, point):
        """First polar of F at a point: sum_i p_i * dF/dx_i."""
        if len(point) != self.nvars:
            raise ValueError("point has wrong length")
        f = self.ring.field
        acc = self.ring.zero()
        for p_i, part in zip(point, self.partials):
            acc = acc + part.scale(f.of(p_i))
        return acc


class RingClass:
    """An element of one graded piece of a Jacobian ring, in canonical
    coordinates on the monomial quotient basis of that degree."""

    __slots__ = ("jring", "degree", "coords")

    def __init__(self, jring, degree, coords):
        self.jring = jring
        self.degree = degree
        self.coords = tuple(coords)

    def is_zero(self):
        z = self.jring.ring.field.zero
        return all(c == z for c in self.coords)

    def __eq__(self, other):
        return (isinstance(other, RingClass) and self.jring is other.jring
                and self.degree == other.degree and self.coords == other.coords)

    def __hash__(self):
        return hash((id(self.jring), self.degree, self.coords))

    def add(self, other):
        if other.jring is not self.jring or other.degree != self.degree:
            raise ValueError("mismatched classes")
        f = self.jring.ring.field
        return RingClass(self.jring, self.degree,
                         [f.add(a, b) for a, b in zip(self.coords, other.coords)])

    def scale(self, c):
        f = self.jring.ring.field
        c = f.of(c)
        return RingClass(self.jring, self.degree,
                         [f.mul(a, c) for a in self.coords])

    def __repr__(self):
        return "RingClass(deg=%d, %s)" % (self.degree, list(self.coords))


def quadric_rank(q: Polynomial):
    """Rank of the symmetric Gram matrix of a quadratic form (char != 2)."""
    ring = q.ring
    f = ring.field
    if isinstance(f, PrimeField) and f.p == 2:
        raise ValueError("Gram matrix needs an odd characteristic")
    if q.is_zero():
        return 0
    if q.homogeneous_degree() != 2:
        raise ValueError("expected a quadratic form")
    n = ring.nvars
    half = f.of(Fraction(1, 2))
    rows = [[f.zero] * n for _ in range(n)]
    for m, c in q.terms.items():
        support = [i for i, e in enumerate(m) if e]
        if len(support) == 1:
            i = support[0]
            rows[i][i] = c
        else:
            i, j = support
            rows[i][j] = rows[j][i] = f.mul(c, half)
    return Matrix(f, rows).rank()


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a
