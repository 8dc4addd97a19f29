"""Sparse multivariate polynomials over an exact field.

Terms are stored as {exponent tuple: nonzero coefficient}.  The canonical
monomial order everywhere (printing, coordinate vectors, golden files) is
graded lexicographic, listed in descending order: higher total degree first,
then larger exponent tuple.

The text format round-trips bit-exactly: terms separated by + / -, a term is
an optional integer or n/d coefficient joined by '*' to var^k powers,
whitespace insignificant.
"""

import math
import random
from fractions import Fraction

from .linalg import PrimeField


def grlex_key(mono):
    return (sum(mono), mono)


def monomials_of_degree(nvars, degree):
    """All exponent tuples of the given total degree, grlex-descending."""
    if nvars == 0:
        return [()] if degree == 0 else []
    out = []

    def rec(prefix, remaining, slots):
        if slots == 1:
            out.append(prefix + (remaining,))
            return
        for e in range(remaining, -1, -1):
            rec(prefix + (e,), remaining - e, slots - 1)

    rec((), degree, nvars)
    out.sort(key=grlex_key, reverse=True)
    return out


def graded_dim(nvars, degree):
    """dim of the space of degree-d forms in nvars variables."""
    if degree < 0:
        return 0
    return math.comb(degree + nvars - 1, nvars - 1)


class PolyRing:
    """A polynomial ring with named variables over an exact field."""

    __slots__ = ("field", "names", "nvars", "_name_index", "_bases", "_mono_cache")

    def __init__(self, field, names):
        self.field = field
        self.names = tuple(names)
        self.nvars = len(self.names)
        if len(set(self.names)) != self.nvars:
            raise ValueError("duplicate variable names")
        self._name_index = {n: i for i, n in enumerate(self.names)}
        self._bases = {}
        self._mono_cache = {}

    def zero(self):
        return Polynomial(self, {})

    def one(self):
        return Polynomial(self, {(0,) * self.nvars: self.field.one})

    def const(self, c):
        c = self.field.of(c)
        if c == self.field.zero:
            return self.zero()
        return Polynomial(self, {(0,) * self.nvars: c})

    def var(self, i):
        if not 0 <= i < self.nvars:
            raise IndexError("variable index out of range")
        e = [0] * self.nvars
        e[i] = 1
        return Polynomial(self, {tuple(e): self.field.one})

    def variable(self, name):
        return self.var(self._name_index[name])

    def monomial(self, exps, coeff=1):
        c = self.field.of(coeff)
        if c == self.field.zero:
            return self.zero()
        return Polynomial(self, {tuple(exps): c})

    def from_dict(self, terms):
        clean = {}
        z = self.field.zero
        for m, c in terms.items():
            c = self.field.of(c)
            if c != z:
                clean[tuple(m)] = c
        return Polynomial(self, clean)

    def monomials(self, degree):
        cached = self._mono_cache.get(degree)
        if cached is None:
            cached = self._mono_cache[degree] = tuple(
                monomials_of_degree(self.nvars, degree))
        return cached

    def basis(self, degree):
        b = self._bases.get(degree)
        if b is None:
            b = self._bases[degree] = MonomialBasis(self, degree)
        return b

    def parse(self, text, homogeneous=None):
        return _parse(self, text, homogeneous)

    def random_form(self, degree, rng, lo=-9, hi=9):
        """Random homogeneous form with integer coefficients in [lo, hi]."""
        terms = {}
        for m in self.monomials(degree):
            c = rng.randint(lo, hi)
            if c:
                terms[m] = c
        return self.from_dict(terms)

    def __eq__(self, other):
        return (isinstance(other, PolyRing) and self.field == other.field
                and self.names == other.names)

    def __hash__(self):
        return hash((self.field, self.names))

    def __repr__(self):
        return "PolyRing(%s; %s)" % (self.field, ",".join(self.names))


class Polynomial:
    __slots__ = ("ring", "terms")

    def __init__(self, ring, terms):
        self.ring = ring
        self.terms = terms

    # -- structure ---------------------------------------------------------

    def is_zero(self):
        return not self.terms

    def degree(self):
        """Total degree (-1 for the zero polynomial)."""
        if not self.terms:
            return -1
        return max(sum(m) for m in self.terms)

    def is_homogeneous(self, degree=None):
        if not self.terms:
            return True
        degs = {sum(m) for m in self.terms}
        if len(degs) != 1:
            return False
        return True if degree is None else degs.pop() == degree

    def homogeneous_degree(self):
        if not self.terms:
            raise ValueError("zero polynomial has no homogeneous degree")
        degs = {sum(m) for m in self.terms}
        if len(degs) != 1:
            raise ValueError("polynomial is not homogeneous")
        return degs.pop()

    def coefficient(self, mono):
        return self.terms.get(tuple(mono), self.ring.field.zero)

    def leading_monomial(self):
        if not self.terms:
            raise ValueError("zero polynomial")
        return max(self.terms, key=grlex_key)

    def iter_sorted(self):
        for m in sorted(self.terms, key=grlex_key, reverse=True):
            yield m, self.terms[m]

    # -- arithmetic --------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, Polynomial):
            if other.ring != self.ring:
                raise ValueError("ring mismatch")
            return other
        return self.ring.const(other)

    def __add__(self, other):
        other = self._coerce(other)
        f = self.ring.field
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = f.add(out.get(m, f.zero), c)
            if s == f.zero:
                out.pop(m, None)
            else:
                out[m] = s
        return Polynomial(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        f = self.ring.field
        return Polynomial(self.ring, {m: f.neg(c) for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        f = self.ring.field
        z = f.zero
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                s = f.add(out.get(m, z), f.mul(c1, c2))
                if s == z:
                    out.pop(m, None)
                else:
                    out[m] = s
        return Polynomial(self.ring, out)

    __rmul__ = __mul__

    def scale(self, c):
        f = self.ring.field
        c = f.of(c)
        if c == f.zero:
            return self.ring.zero()
        return Polynomial(self.ring, {m: f.mul(v, c) for m, v in self.terms.items()})

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative power")
        result = self.ring.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def partial(self, i):
        """Formal partial derivative with respect to variable i."""
        if not 0 <= i < self.ring.nvars:
            raise IndexError("variable index out of range")
        f = self.ring.field
        out = {}
        for m, c in self.terms.items():
            e = m[i]
            if e:
                nm = m[:i] + (e - 1,) + m[i + 1:]
                nc = f.mul(c, f.of(e))
                if nc != f.zero:
                    s = f.add(out.get(nm, f.zero), nc)
                    if s == f.zero:
                        out.pop(nm, None)
                    else:
                        out[nm] = s
        return Polynomial(self.ring, out)

    def gradient(self):
        return [self.partial(i) for i in range(self.ring.nvars)]

    def evaluate(self, point):
        if len(point) != self.ring.nvars:
            raise ValueError("point has wrong length")
        f = self.ring.field
        pt = [f.of(x) for x in point]
        acc = f.zero
        for m, c in self.terms.items():
            v = c
            for x, e in zip(pt, m):
                if e:
                    v = f.mul(v, x ** e if isinstance(x, Fraction) else pow(x, e, f.p))
            acc = f.add(acc, v)
        return acc

    def substitute(self, images, target_ring=None):
        """Substitute images[i] for variable i and expand exactly.

        Images may be Polynomials of a common ring or bare field constants;
        inhomogeneous and mixed-degree images are allowed.
        """
        if len(images) != self.ring.nvars:
            raise ValueError("need one image per variable")
        target = target_ring
        if target is None:
            for im in images:
                if isinstance(im, Polynomial):
                    target = im.ring
                    break
        if target is None:
            raise ValueError("cannot infer target ring from constant images")
        imgs = [im if isinstance(im, Polynomial) else target.const(im)
                for im in images]
        for im in imgs:
            if im.ring != target:
                raise ValueError("images live in different rings")
        powers = [[target.one(), im] for im in imgs]

        def power(i, e):
            cache = powers[i]
            while len(cache) <= e:
                cache.append(cache[-1] * cache[1])
            return cache[e]

        acc = target.zero()
        for m, c in self.terms.items():
            term = target.const(c if self.ring.field == target.field
                                else _lift_coeff(c, self.ring.field, target.field))
            for i, e in enumerate(m):
                if e:
                    term = term * power(i, e)
            acc = acc + term
        return acc

    def inject(self, target_ring, positions):
        """Re-embed into a larger ring, variable i -> positions[i]."""
        if len(positions) != self.ring.nvars:
            raise ValueError("need one position per variable")
        out = {}
        for m, c in self.terms.items():
            nm = [0] * target_ring.nvars
            for i, e in enumerate(m):
                nm[positions[i]] += e
            out[tuple(nm)] = target_ring.field.of(
                c if self.ring.field == target_ring.field
                else _lift_coeff(c, self.ring.field, target_ring.field))
        return target_ring.from_dict(out)

    def convert(self, target_ring):
        """Same variables, possibly different field (e.g. Q -> F_p)."""
        if target_ring.nvars != self.ring.nvars:
            raise ValueError("variable count mismatch")
        return self.inject(target_ring, list(range(self.ring.nvars)))

    def split_by(self, idxs, target_ring):
        """Group terms by the exponents on variables idxs.

        Returns {exponent tuple on idxs: Polynomial in target_ring}, where
        target_ring has the complementary variables in their original order.
        """
        idxs = tuple(idxs)
        rest = [i for i in range(self.ring.nvars) if i not in idxs]
        if target_ring.nvars != len(rest):
            raise ValueError("target ring has wrong variable count")
        buckets = {}
        for m, c in self.terms.items():
            key = tuple(m[i] for i in idxs)
            sub = tuple(m[i] for i in rest)
            buckets.setdefault(key, {})[sub] = c
        return {k: target_ring.from_dict(v) for k, v in buckets.items()}

    def exact_divide(self, divisor):
        """Return q with self == q * divisor, or None if not divisible."""
        if not isinstance(divisor, Polynomial) or divisor.ring != self.ring:
            raise ValueError("divisor must live in the same ring")
        if divisor.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        f = self.ring.field
        lead = divisor.leading_monomial()
        lead_c = divisor.terms[lead]
        inv_lead = f.inv(lead_c)
        rem = dict(self.terms)
        q = {}
        while rem:
            m = max(rem, key=grlex_key)
            diff = tuple(a - b for a, b in zip(m, lead))
            if any(e < 0 for e in diff):
                return None
            coeff = f.mul(rem[m], inv_lead)
            q[diff] = coeff
            for dm, dc in divisor.terms.items():
                tm = tuple(a + b for a, b in zip(diff, dm))
                s = f.sub(rem.get(tm, f.zero), f.mul(coeff, dc))
                if s == f.zero:
                    rem.pop(tm, None)
                else:
                    rem[tm] = s
        return Polynomial(self.ring, q)

    def divisible_by(self, divisor):
        return self.exact_divide(divisor) is not None

    # -- normalization -----------------------------------------------------

    def primitive_normalized(self):
        """Canonical scalar multiple: over Q, coprime integer coefficients
        with positive leading (grlex) coefficient; over F_p, monic leading 1."""
        if not self.terms:
            return self
        f = self.ring.field
        if isinstance(f, PrimeField):
            lead = self.terms[self.leading_monomial()]
            return self.scale(f.inv(lead))
        den = 1
        for c in self.terms.values():
            d = c.denominator
            den = den // math.gcd(den, d) * d
        num = 0
        for c in self.terms.values():
            num = math.gcd(num, abs(c.numerator * (den // c.denominator)))
        scale = Fraction(den, num)
        if self.terms[self.leading_monomial()] < 0:
            scale = -scale
        return self.scale(scale)

    # -- misc ----------------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            if other == 0:
                return self.is_zero()
            return self == self._coerce(other)
        return self.ring == other.ring and self.terms == other.terms

    def __hash__(self):
        return hash((self.ring, frozenset(self.terms.items())))

    def __repr__(self):
        return poly_text(self)


def _lift_coeff(c, src_field, dst_field):
    if isinstance(src_field, PrimeField):
        c = int(c)
    return dst_field.of(c)


class MonomialBasis:
    """All monomials of one degree, grlex-descending, with coordinates."""

    __slots__ = ("ring", "degree", "monomials", "index")

    def __init__(self, ring, degree):
        self.ring = ring
        self.degree = degree
        self.monomials = ring.monomials(degree)
        self.index = {m: i for i, m in enumerate(self.monomials)}

    def __len__(self):
        return len(self.monomials)

    def to_vector(self, p):
        if p.ring != self.ring:
            raise ValueError("ring mismatch")
        if not p.is_homogeneous(self.degree) and not p.is_zero():
            raise ValueError("expected a homogeneous form of degree %d" % self.degree)
        z = self.ring.field.zero
        vec = [z] * len(self.monomials)
        for m, c in p.terms.items():
            vec[self.index[m]] = c
        return vec

    def from_vector(self, vec):
        if len(vec) != len(self.monomials):
            raise ValueError("vector length mismatch")
        return self.ring.from_dict(
            {m: c for m, c in zip(self.monomials, vec)})


# ---------------------------------------------------------------------------
# text format


def _coeff_text(c):
    if isinstance(c, Fraction):
        return str(c)
    return str(c)


def poly_text(p: Polynomial) -> str:
    """Canonical text: grlex-descending terms, signs folded into separators."""
    if p.is_zero():
        return "0"
    names = p.ring.names
    rational = not isinstance(p.ring.field, PrimeField)
    pieces = []
    for m, c in p.iter_sorted():
        if rational and c < 0:
            sign = "-"
            mag = -c
        else:
            sign = "+"
            mag = c
        factors = []
        for name, e in zip(names, m):
            if e == 1:
                factors.append(name)
            elif e > 1:
                factors.append("%s^%d" % (name, e))
        if not factors:
            body = _coeff_text(mag)
        elif mag == p.ring.field.one:
            body = "*".join(factors)
        else:
            body = "*".join([_coeff_text(mag)] + factors)
        pieces.append((sign, body))
    first_sign, first_body = pieces[0]
    out = [first_body if first_sign == "+" else "-" + first_body]
    for sign, body in pieces[1:]:
        out.append(" %s %s" % (sign, body))
    return "".join(out)


class PolyParseError(ValueError):
    def __init__(self, message, pos):
        super().__init__("%s (at position %d)" % (message, pos))
        self.pos = pos


def _tokenize(text):
    tokens = []
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch in "+-*/^":
            tokens.append((ch, ch, i))
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            tokens.append(("int", text[i:j], i))
            i = j
            continue
        if ch.isalpha() or ch == "_":
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append(("name", text[i:j], i))
            i = j
            continue
        raise PolyParseError("unexpected character %r" % ch, i)
    return tokens


def _parse(ring, text, homogeneous):
    tokens = _tokenize(text)
    if not tokens:
        raise PolyParseError("empty input", 0)
    result = ring.zero()
    pos = 0
    nt = len(tokens)
    while pos < nt:
        sign = 1
        if tokens[pos][0] in "+-":
            if tokens[pos][0] == "-":
                sign = -1
            pos += 1
            if pos < nt and tokens[pos][0] in "+-":
                raise PolyParseError("doubled sign", tokens[pos][2])
        if pos >= nt:
            raise PolyParseError("dangling sign", tokens[-1][2])
        coeff = Fraction(sign)
        exps = [0] * ring.nvars
        expect_factor = True
        while pos < nt:
            kind, val, at = tokens[pos]
            if kind in "+-":
                break
            if kind == "*":
                if expect_factor:
                    raise PolyParseError("misplaced '*'", at)
                pos += 1
                expect_factor = True
                continue
            if not expect_factor:
                raise PolyParseError("missing '*' between factors", at)
            if kind == "int":
                num = int(val)
                pos += 1
                if pos < nt and tokens[pos][0] == "/":
                    pos += 1
                    if pos >= nt or tokens[pos][0] != "int":
                        raise PolyParseError("expected denominator",
                                             tokens[pos - 1][2])
                    den = int(tokens[pos][1])
                    if den == 0:
                        raise PolyParseError("zero denominator", tokens[pos][2])
                    pos += 1
                    coeff *= Fraction(num, den)
                else:
                    coeff *= num
                expect_factor = False
                continue
            if kind == "name":
                idx = ring._name_index.get(val)
                if idx is None:
                    raise PolyParseError("unknown variable %r" % val, at)
                pos += 1
                e = 1
                if pos < nt and tokens[pos][0] == "^":
                    pos += 1
                    if pos >= nt or tokens[pos][0] != "int":
                        raise PolyParseError("expected integer exponent",
                                             tokens[pos - 1][2])
                    e = int(tokens[pos][1])
                    pos += 1
                exps[idx] += e
                expect_factor = False
                continue
            raise PolyParseError("unexpected token %r" % val, at)
        if expect_factor:
            raise PolyParseError("empty term", tokens[min(pos, nt - 1)][2])
        mono = ring.monomial(exps, ring.field.of(coeff))
        result = result + mono
    if homogeneous is not None and not result.is_homogeneous(homogeneous):
        raise PolyParseError("homogeneity violation: expected degree %s"
                             % homogeneous, 0)
    return result


# ---------------------------------------------------------------------------
# binary forms: rational points of intersection cycles come from here


def _divisors(n, limit=200000):
    """All positive divisors of |n| (trial division + Pollard rho)."""
    n = abs(n)
    if n == 0:
        raise ValueError("divisors of 0")
    factors = {}

    def record(p):
        factors[p] = factors.get(p, 0) + 1

    def rho(m):
        if m == 1:
            return
        if is_prime_int(m):
            record(m)
            return
        # Pollard rho with deterministic increments
        for c in range(1, 30):
            x = y = 2
            d = 1
            while d == 1:
                x = (x * x + c) % m
                y = (y * y + c) % m
                y = (y * y + c) % m
                d = math.gcd(abs(x - y), m)
            if d != m:
                rho(d)
                rho(m // d)
                return
        raise ArithmeticError("factorization failed for %d" % m)

    m = n
    for p in (2, 3, 5, 7, 11, 13):
        while m % p == 0:
            record(p)
            m //= p
    q = 17
    while q * q <= m and q < (1 << 20):
        while m % q == 0:
            record(q)
            m //= q
        q += 2
    if m > 1:
        rho(m)
    divs = [1]
    for p, e in factors.items():
        divs = [d * p ** k for d in divs for k in range(e + 1)]
        if len(divs) > limit:
            raise ArithmeticError("too many divisors to enumerate")
    return sorted(set(divs))


def is_prime_int(n):
    from .linalg import is_probable_prime
    return is_probable_prime(n)


def _poly_trim(cs):
    while cs and cs[-1] == 0:
        cs.pop()
    return cs


def univariate_eval(cs, x):
    acc = x * 0
    for c in reversed(cs):
        acc = acc * x + c
    return acc


def _synthetic_divide(cs, r):
    """Divide by (x - r); returns (quotient, remainder)."""
    out = []
    acc = 0 * cs[-1]
    for c in reversed(cs):
        acc = acc * r + c
        out.append(acc)
    rem = out[-1]
    quot = list(reversed(out[:-1]))
    return quot, rem


def rational_roots_with_multiplicity(cs):
    """Rational roots of a Fraction-coefficient univariate polynomial.

    Returns (roots: list of (Fraction root, multiplicity), residual coeffs)
    where the residual has no rational roots.
    """
    cs = _poly_trim([Fraction(c) for c in cs])
    if not cs:
        raise ValueError("zero polynomial")
    roots = []
    # x = 0 roots
    mult0 = 0
    while cs[0] == 0:
        mult0 += 1
        cs = cs[1:]
    if mult0:
        roots.append((Fraction(0), mult0))
    if len(cs) == 1:
        return roots, cs
    den = 1
    for c in cs:
        den = den // math.gcd(den, c.denominator) * c.denominator
    ints = [int(c * den) for c in cs]
    g = 0
    for c in ints:
        g = math.gcd(g, c)
    ints = [c // g for c in ints]
    a0, an = ints[0], ints[-1]
    candidates = set()
    for pnum in _divisors(a0):
        for pden in _divisors(an):
            if math.gcd(pnum, pden) == 1:
                candidates.add(Fraction(pnum, pden))
                candidates.add(Fraction(-pnum, pden))
    work = [Fraction(c) for c in ints]
    for cand in sorted(candidates):
        if len(work) == 1:
            break
        if univariate_eval(work, cand) != 0:
            continue
        mult = 0
        while len(work) > 1:
            quot, rem = _synthetic_divide(work, cand)
            if rem != 0:
                break
            work = quot
            mult += 1
        roots.append((cand, mult))
    return roots, work


def modp_roots_with_multiplicity(cs, p, seed=0):
    """Roots in F_p with multiplicities; returns (roots, residual degree)."""
    cs = _poly_trim([c % p for c in cs])
    if not cs:
        raise ValueError("zero polynomial")
    roots = []
    mult0 = 0
    while cs[0] == 0:
        mult0 += 1
        cs = cs[1:]
    if mult0:
        roots.append((0, mult0))
    if len(cs) == 1:
        return roots, 0
    f = _modp_monic(cs, p)
    distinct = _modp_root_set(f, p, seed)
    work = cs
    for r in sorted(distinct):
        mult = 0
        while len(work) > 1:
            quot, rem = _modp_synth(work, r, p)
            if rem:
                break
            work = quot
            mult += 1
        if mult:
            roots.append((r, mult))
    return roots, len(work) - 1


def _modp_monic(cs, p):
    inv = pow(cs[-1], p - 2, p)
    return [c * inv % p for c in cs]


def _modp_synth(cs, r, p):
    out = []
    acc = 0
    for c in reversed(cs):
        acc = (acc * r + c) % p
        out.append(acc)
    rem = out[-1]
    return list(reversed(out[:-1])), rem


def _modp_polymod(a, b, p):
    a = list(a)
    db = len(b) - 1
    inv = pow(b[-1], p - 2, p)
    while len(a) - 1 >= db and any(a):
        if a[-1] == 0:
            a.pop()
            continue
        c = a[-1] * inv % p
        shift = len(a) - 1 - db
        for i in range(len(b)):
            a[shift + i] = (a[shift + i] - c * b[i]) % p
        a.pop()
    return _poly_trim(a)


def _modp_polygcd(a, b, p):
    a = _poly_trim(list(a))
    b = _poly_trim(list(b))
    while b:
        a, b = b, _modp_polymod(a, b, p)
    return _modp_monic(a, p) if a else a


def _modp_polypow_mod(base, e, mod, p):
    result = [1]
    base = _modp_polymod(base, mod, p)
    while e:
        if e & 1:
            result = _modp_polymod(_polymul_modp(result, base, p), mod, p)
        e >>= 1
        if e:
            base = _modp_polymod(_polymul_modp(base, base, p), mod, p)
    return result


def _polymul_modp(a, b, p):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] = (out[i + j] + x * y) % p
    return _poly_trim(out)


def _modp_root_set(f, p, seed):
    """Distinct roots via gcd with x^p - x and equal-degree splitting."""
    xp = _modp_polypow_mod([0, 1], p, f, p)   # x^p mod f
    xp_minus_x = list(xp)
    while len(xp_minus_x) < 2:
        xp_minus_x.append(0)
    xp_minus_x[1] = (xp_minus_x[1] - 1) % p
    g = _modp_polygcd(f, xp_minus_x, p)
    if not g or len(g) == 1:
        return []
    rng = random.Random(seed ^ 0x5eed)
    roots = []
    stack = [g]
    while stack:
        h = stack.pop()
        d = len(h) - 1
        if d == 0:
            continue
        if d == 1:
            roots.append((-h[0]) % p * pow(h[1], p - 2, p) % p)
            continue
        while True:
            c = rng.randrange(p)
            probe = _modp_polypow_mod([c, 1], (p - 1) // 2, h, p)
            probe = list(probe)
            if probe:
                probe[0] = (probe[0] - 1) % p
            else:
                probe = [p - 1]
            w = _modp_polygcd(h, _poly_trim(probe), p)
            if w and 0 < len(w) - 1 < d:
                quot = _modp_polydiv_exact(h, w, p)
                stack.append(w)
                stack.append(quot)
                break
    return roots


def _modp_polydiv_exact(a, b, p):
    a = list(a)
    db = len(b) - 1
    inv = pow(b[-1], p - 2, p)
    q = [0] * (len(a) - db)
    for shift in range(len(a) - db - 1, -1, -1):
        c = a[shift + db] * inv % p
        q[shift] = c
        if c:
            for i in range(len(b)):
                a[shift + i] = (a[shift + i] - c * b[i]) % p
    return q


def squarefree_decomposition_q(cs):
    """Yun's algorithm over Q: returns [(factor_coeffs, multiplicity)]."""
    cs = _poly_trim([Fraction(c) for c in cs])
    if len(cs) <= 1:
        return []
    def deriv(f):
        return [c * i for i, c in enumerate(f)][1:]
    def pgcd(a, b):
        a, b = list(a), list(b)
        while _poly_trim(b):
            a, b = b, _polymod_q(a, b)
        a = _poly_trim(a)
        if a:
            lead = a[-1]
            a = [c / lead for c in a]
        return a
    fp = deriv(cs)
    a = pgcd(cs, fp)
    b = _polydiv_q(cs, a)
    c = _polydiv_q(fp, a)
    d = _polysub_q(c, deriv(b))
    out = []
    i = 1
    while _poly_trim(list(b)) and len(b) > 1:
        a = pgcd(b, d)
        if len(a) > 1:
            out.append((a, i))
        b = _polydiv_q(b, a)
        c = _polydiv_q(d, a)
        d = _polysub_q(c, deriv(b))
        i += 1
    return out


def _polymod_q(a, b):
    a = list(a)
    b = _poly_trim(list(b))
    db = len(b) - 1
    while len(_poly_trim(list(a))) - 1 >= db:
        a = _poly_trim(a)
        c = a[-1] / b[-1]
        shift = len(a) - 1 - db
        for i in range(len(b)):
            a[shift + i] -= c * b[i]
        a = a[:-1]
    return _poly_trim(a)


def _polydiv_q(a, b):
    a = _poly_trim(list(a))
    b = _poly_trim(list(b))
    db = len(b) - 1
    if not a:
        return []
    q = [Fraction(0)] * (len(a) - db)
    for shift in range(len(a) - db - 1, -1, -1):
        c = a[shift + db] / b[-1]
        q[shift] = c
        if c:
            for i in range(len(b)):
                a[shift + i] -= c * b[i]
    return q


def _polysub_q(a, b):
    n = max(len(a), len(b))
    a = list(a) + [Fraction(0)] * (n - len(a))
    b = list(b) + [Fraction(0)] * (n - len(b))
    return _poly_trim([x - y for x, y in zip(a, b)])


class BinaryCycle:
    """Intersection-style cycle data for a binary form: rational projective
    roots with multiplicities plus the rational-root-free residual."""

    __slots__ = ("points", "residual")

    def __init__(self, points, residual):
        self.points = points        # list of ((a, b), multiplicity)
        self.residual = residual    # list of (degree, multiplicity, irreducible?)

    def total_degree(self):
        t = sum(m for _, m in self.points)
        t += sum(d * m for d, m, _ in self.residual)
        return t

    def rational_part_degree(self):
        return sum(m for _, m in self.points)


def binary_form_cycle(p: Polynomial, seed=0) -> BinaryCycle:
    """Factor a binary form into rational projective roots + residual.

    Roots are normalized points: (r, 1) for finite roots, (1, 0) for the
    root at infinity (in the [first:second] variable convention).
    """
    if p.ring.nvars != 2:
        raise ValueError("binary form expected")
    if p.is_zero():
        raise ValueError("zero binary form")
    d = p.homogeneous_degree()
    field = p.ring.field
    # coefficient list of f(u) = p(u, 1): index by exponent of first variable
    cs = [field.zero] * (d + 1)
    for m, c in p.terms.items():
        cs[m[0]] = c
    # multiplicity of the root at infinity [1:0] = power of second variable...
    # p = sum c_e * u^e * v^(d-e);  v | p  iff  c_d == 0
    inf_mult = 0
    work = list(cs)
    while work and work[-1] == field.zero:
        inf_mult += 1
        work.pop()
    points = []
    one = field.one
    if inf_mult:
        points.append(((one, field.zero), inf_mult))
    if isinstance(field, PrimeField):
        roots, res_deg = modp_roots_with_multiplicity(
            [int(c) for c in work], field.p, seed)
        residual = [(res_deg, 1, None)] if res_deg else []
    else:
        roots, residual_poly = rational_roots_with_multiplicity(work)
        residual = []
        if len(residual_poly) > 1:
            for fac, mult in squarefree_decomposition_q(residual_poly):
                deg = len(fac) - 1
                irr = None
                if deg == 2:
                    disc = fac[1] * fac[1] - 4 * fac[2] * fac[0]
                    irr = not _fraction_is_square(disc)
                elif deg == 1:  # pragma: no cover - linear factors were removed
                    irr = True
                residual.append((deg, mult, irr))
    for r, m in roots:
        points.append(((r, one), m))
    points.sort(key=lambda pm: (pm[0][1] == field.zero, pm[0]), reverse=False)
    return BinaryCycle(points, residual)


def _fraction_is_square(x: Fraction) -> bool:
    if x < 0:
        return False
    n, d = x.numerator, x.denominator
    return math.isqrt(n) ** 2 == n and math.isqrt(d) ** 2 == d
