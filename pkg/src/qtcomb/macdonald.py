"""A small exact symmetric-function engine.

Partitions with cell statistics, signed monomial alphabets, plethystic
evaluation of e_r/h_r, modified Macdonald polynomials in the monomial
basis (computed from the combinatorial filling formula with inv and maj
weights), Hall pairings against h-products, e-h products and hook Schur
functions, and the partition-sum evaluators used for identity
verification on the prime grid.

All identity evaluation happens at exact rational points; symbolic data
(the Macdonald monomial coefficients) are integer q,t-polynomials.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from qtcomb.qt import PoleError, QtPolynomial

DEGREE_CAP = 7


class CapacityError(RuntimeError):
    """A degree beyond the configured cap was requested."""


class DegreeMismatchError(ValueError):
    """Hall pairing of inhomogeneous degrees."""


# -- partitions ---------------------------------------------------------


class Partition(tuple):
    """A partition: weakly decreasing positive parts.

    Cells are (row, col), 0-based, row 0 at the bottom; arm/leg count
    cells strictly right/above, coarm/coleg strictly left/below.
    """

    def __new__(cls, parts=()):
        parts = tuple(int(p) for p in parts)
        if any(p < 1 for p in parts) or list(parts) != sorted(parts, reverse=True):
            raise ValueError(f"not a partition: {parts}")
        return super().__new__(cls, parts)

    @property
    def size(self):
        return sum(self)

    def cells(self):
        return [(r, c) for r, row in enumerate(self) for c in range(row)]

    def arm(self, cell):
        r, c = cell
        return self[r] - c - 1

    def coarm(self, cell):
        return cell[1]

    def leg(self, cell):
        r, c = cell
        return sum(1 for r2 in range(r + 1, len(self)) if self[r2] > c)

    def coleg(self, cell):
        return cell[0]

    def conjugate(self):
        if not self:
            return Partition()
        return Partition(
            sum(1 for p in self if p > c) for c in range(self[0])
        )

    def n_stat(self):
        """Sum of colegs."""
        return sum(i * p for i, p in enumerate(self))


@lru_cache(maxsize=None)
def partitions_of(n, max_part=None):
    """All partitions of n, in reverse lexicographic order."""
    if max_part is None:
        max_part = n
    if n == 0:
        return (Partition(),)
    out = []
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions_of(n - first, first):
            out.append(Partition((first,) + tuple(rest)))
    return tuple(out)


# -- signed monomial alphabets -------------------------------------------


class MonomialAlphabet:
    """A signed multiset of monomials eps * q^a t^b.

    Stored as {(a, b): multiplicity} with integer (possibly negative)
    multiplicities.  Supports the power map used by plethysm.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        data = {}
        if terms:
            items = terms.items() if isinstance(terms, dict) else terms
            for (a, b), mult in items:
                mult = data.get((a, b), 0) + mult
                if mult:
                    data[(a, b)] = mult
                else:
                    data.pop((a, b), None)
        self.terms = data

    @classmethod
    def unit(cls):
        return cls({(0, 0): 1})

    def __add__(self, other):
        out = dict(self.terms)
        for k, m in other.terms.items():
            m = out.get(k, 0) + m
            if m:
                out[k] = m
            else:
                out.pop(k, None)
        res = MonomialAlphabet.__new__(MonomialAlphabet)
        res.terms = out
        return res

    def __neg__(self):
        res = MonomialAlphabet.__new__(MonomialAlphabet)
        res.terms = {k: -m for k, m in self.terms.items()}
        return res

    def __sub__(self, other):
        return self + (-other)

    def minus_one(self):
        return self - MonomialAlphabet.unit()

    def __mul__(self, other):
        out = {}
        for (a1, b1), m1 in self.terms.items():
            for (a2, b2), m2 in other.terms.items():
                k = (a1 + a2, b1 + b2)
                m = out.get(k, 0) + m1 * m2
                if m:
                    out[k] = m
                else:
                    del out[k]
        res = MonomialAlphabet.__new__(MonomialAlphabet)
        res.terms = out
        return res

    def power_sum(self, j, pt):
        """p_j of the alphabet at the point: each monomial to the j-th power."""
        total = Fraction(0)
        for (a, b), mult in self.terms.items():
            total += mult * pt.q0 ** (j * a) * pt.t0 ** (j * b)
        return total

    def sum_at(self, pt):
        return self.power_sum(1, pt)

    def key(self):
        return tuple(sorted(self.terms.items()))

    def __eq__(self, other):
        if not isinstance(other, MonomialAlphabet):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return "Alphabet(%s)" % ", ".join(
            f"{m}*q^{a}t^{b}" for (a, b), m in sorted(self.terms.items())
        )


def b_alphabet(mu):
    """B_mu = sum of q^coarm t^coleg over the cells."""
    return MonomialAlphabet(
        [((mu.coarm(c), mu.coleg(c)), 1) for c in mu.cells()]
    )


def m_alphabet():
    """M = (1-q)(1-t) as an alphabet."""
    return MonomialAlphabet({(0, 0): 1, (1, 0): -1, (0, 1): -1, (1, 1): 1})


def bracket_q(r):
    """[r]_q = 1 + q + ... + q^(r-1) as an alphabet."""
    return MonomialAlphabet({(j, 0): 1 for j in range(r)})


def t_mu(mu, pt=None):
    """T_mu, the product of q^coarm t^coleg over all cells."""
    a = sum(mu.coarm(c) for c in mu.cells())
    b = sum(mu.coleg(c) for c in mu.cells())
    if pt is None:
        return QtPolynomial.monomial(1, a, b)
    return pt.q0**a * pt.t0**b


def pi_mu(mu, pt=None):
    """Pi_mu, product of 1 - q^coarm t^coleg over cells other than the corner."""
    if pt is None:
        out = QtPolynomial.one()
        for c in mu.cells():
            if c == (0, 0):
                continue
            out *= QtPolynomial.one() - QtPolynomial.monomial(
                1, mu.coarm(c), mu.coleg(c)
            )
        return out
    out = Fraction(1)
    for c in mu.cells():
        if c == (0, 0):
            continue
        out *= 1 - pt.q0 ** mu.coarm(c) * pt.t0 ** mu.coleg(c)
    return out


def w_mu(mu, pt=None):
    """w_mu, product over cells of (q^arm - t^(leg+1))(t^leg - q^(arm+1))."""
    if pt is None:
        out = QtPolynomial.one()
        for c in mu.cells():
            a, l = mu.arm(c), mu.leg(c)
            out *= (
                QtPolynomial.monomial(1, a, 0) - QtPolynomial.monomial(1, 0, l + 1)
            ) * (
                QtPolynomial.monomial(1, 0, l) - QtPolynomial.monomial(1, a + 1, 0)
            )
        return out
    out = Fraction(1)
    for c in mu.cells():
        a, l = mu.arm(c), mu.leg(c)
        out *= (pt.q0**a - pt.t0 ** (l + 1)) * (pt.t0**l - pt.q0 ** (a + 1))
    return out


def partition_invariants(mu, pt=None):
    """(B, T, Pi, w, M) for a partition; exact rationals at a point,
    polynomials/alphabets symbolically."""
    B = b_alphabet(mu)
    if pt is None:
        M = (QtPolynomial.one() - QtPolynomial.q()) * (
            QtPolynomial.one() - QtPolynomial.t()
        )
        return B, t_mu(mu), pi_mu(mu), w_mu(mu), M
    M = (1 - pt.q0) * (1 - pt.t0)
    return B, t_mu(mu, pt), pi_mu(mu, pt), w_mu(mu, pt), M


# -- plethystic e and h ---------------------------------------------------

_PLETH_CACHE = {}


def pleth_p(j, alphabet, pt):
    key = ("p", j, alphabet.key(), pt.q0, pt.t0)
    hit = _PLETH_CACHE.get(key)
    if hit is None:
        hit = _PLETH_CACHE[key] = alphabet.power_sum(j, pt)
    return hit


def pleth_e(r, alphabet, pt):
    """e_r of the alphabet via Newton's recurrence; 0 for r < 0."""
    if r < 0:
        return Fraction(0)
    key = ("e", r, alphabet.key(), pt.q0, pt.t0)
    hit = _PLETH_CACHE.get(key)
    if hit is not None:
        return hit
    e = [Fraction(1)]
    p = [None] + [pleth_p(j, alphabet, pt) for j in range(1, r + 1)]
    for i in range(1, r + 1):
        acc = Fraction(0)
        for j in range(1, i + 1):
            acc += (-1) ** (j - 1) * p[j] * e[i - j]
        e.append(acc / i)
    _PLETH_CACHE[key] = e[r]
    return e[r]


def pleth_h(r, alphabet, pt):
    """h_r of the alphabet via Newton's recurrence; 0 for r < 0."""
    if r < 0:
        return Fraction(0)
    key = ("h", r, alphabet.key(), pt.q0, pt.t0)
    hit = _PLETH_CACHE.get(key)
    if hit is not None:
        return hit
    h = [Fraction(1)]
    p = [None] + [pleth_p(j, alphabet, pt) for j in range(1, r + 1)]
    for i in range(1, r + 1):
        acc = Fraction(0)
        for j in range(1, i + 1):
            acc += p[j] * h[i - j]
        h.append(acc / i)
    _PLETH_CACHE[key] = h[r]
    return h[r]


def pleth_eh(kind, r, alphabet, pt):
    if kind == "e":
        return pleth_e(r, alphabet, pt)
    if kind == "h":
        return pleth_h(r, alphabet, pt)
    raise ValueError(f"unknown kind {kind!r}")


# -- monomial-basis machinery ---------------------------------------------


def _multiset_perms(items):
    """Distinct permutations of a sorted list."""
    items = sorted(items)
    n = len(items)
    out = []

    def rec(prefix, rest):
        if not rest:
            out.append(tuple(prefix))
            return
        last = None
        for i, x in enumerate(rest):
            if x == last:
                continue
            last = x
            rec(prefix + [x], rest[:i] + rest[i + 1 :])

    rec([], items)
    return out


@lru_cache(maxsize=None)
def _mono_times_mono(alpha, beta):
    """Expansion of m_alpha * m_beta in the monomial basis."""
    alpha, beta = Partition(alpha), Partition(beta)
    d = alpha.size + beta.size
    width = max(d, 1)
    out = {}
    a_vecs = _multiset_perms(list(alpha) + [0] * (width - len(alpha)))
    b_set = set(_multiset_perms(list(beta) + [0] * (width - len(beta))))
    for lam in partitions_of(d):
        if len(lam) > width:
            continue
        target = tuple(lam) + (0,) * (width - len(lam))
        count = 0
        for av in a_vecs:
            bv = tuple(x - y for x, y in zip(target, av))
            if any(x < 0 for x in bv):
                continue
            if bv in b_set:
                count += 1
        if count:
            out[lam] = count
    return out


def _mono_mul(expansion, beta):
    """Multiply an m-expansion {lam: coeff} by m_beta."""
    out = {}
    for lam, c in expansion.items():
        for nu, c2 in _mono_times_mono(tuple(lam), tuple(beta)).items():
            out[nu] = out.get(nu, 0) + c * c2
    return {k: v for k, v in out.items() if v}


@lru_cache(maxsize=None)
def _basis_elem_to_m(basis, lam):
    """m-expansion of h_lam, e_lam or p_lam (integer coefficients)."""
    lam = Partition(lam)
    out = {Partition(): 1}
    for part in lam:
        if basis == "h":
            factor = {nu: 1 for nu in partitions_of(part)}
        elif basis == "e":
            factor = {Partition([1] * part): 1}
        elif basis == "p":
            factor = {Partition([part]): 1}
        else:
            raise ValueError(f"unknown basis {basis!r}")
        new = {}
        for lam2, c in out.items():
            for nu, c2 in factor.items():
                for rho, c3 in _mono_times_mono(tuple(lam2), tuple(nu)).items():
                    new[rho] = new.get(rho, 0) + c * c2 * c3
        out = {k: v for k, v in new.items() if v}
    return out


@lru_cache(maxsize=None)
def _basis_to_m_matrix(basis, degree):
    """Rows: expansion of each basis element in the m-basis."""
    lams = partitions_of(degree)
    return {lam: _basis_elem_to_m(basis, tuple(lam)) for lam in lams}


@lru_cache(maxsize=None)
def _m_to_basis_matrix(basis, degree):
    """Inverse change of basis, with Fraction entries."""
    lams = list(partitions_of(degree))
    idx = {lam: i for i, lam in enumerate(lams)}
    size = len(lams)
    forward = _basis_to_m_matrix(basis, degree)
    # rows of A: coordinates (in m) of the basis elements
    a = [[Fraction(0)] * size for _ in range(size)]
    for lam, expansion in forward.items():
        for nu, c in expansion.items():
            a[idx[lam]][idx[nu]] = Fraction(c)
    inv = _invert_matrix(a)
    out = {}
    # with A[i][j] = coeff of m_j in basis_i, the expansion of m_j over
    # the basis is row j of A^{-1}
    for j, lam in enumerate(lams):
        out[lam] = {
            lams[i]: inv[j][i] for i in range(size) if inv[j][i]
        }
    return out


def _invert_matrix(a):
    n = len(a)
    aug = [row[:] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(a)]
    for col in range(n):
        piv = next(r for r in range(col, n) if aug[r][col])
        aug[col], aug[piv] = aug[piv], aug[col]
        inv_p = 1 / aug[col][col]
        aug[col] = [x * inv_p for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col]:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


class SymFun:
    """A homogeneous symmetric function as exact coordinates in one of
    the m / h / e / p bases."""

    __slots__ = ("degree", "basis", "coeffs")

    def __init__(self, degree, basis, coeffs):
        if basis not in ("m", "h", "e", "p"):
            raise ValueError(f"unknown basis {basis!r}")
        self.degree = degree
        self.basis = basis
        self.coeffs = {Partition(k): v for k, v in coeffs.items() if v}
        for lam in self.coeffs:
            if lam.size != degree:
                raise DegreeMismatchError("inhomogeneous coefficients")

    def convert_to(self, basis):
        if basis == self.basis:
            return self
        # go through the monomial basis
        if self.basis == "m":
            m_coords = self.coeffs
        else:
            matrix = _basis_to_m_matrix(self.basis, self.degree)
            m_coords = {}
            for lam, c in self.coeffs.items():
                for nu, c2 in matrix[lam].items():
                    m_coords[nu] = m_coords.get(nu, 0) + c * c2
        if basis == "m":
            return SymFun(self.degree, "m", m_coords)
        matrix = _m_to_basis_matrix(basis, self.degree)
        out = {}
        for lam, c in m_coords.items():
            for nu, c2 in matrix[lam].items():
                out[nu] = out.get(nu, 0) + c * c2
        return SymFun(self.degree, basis, out)

    def coeff(self, lam):
        return self.coeffs.get(Partition(lam), 0)

    def __eq__(self, other):
        if not isinstance(other, SymFun):
            return NotImplemented
        if self.basis != other.basis:
            other = other.convert_to(self.basis)
        return self.degree == other.degree and self.coeffs == other.coeffs

    def __repr__(self):
        body = " + ".join(
            f"{c}*{self.basis}{list(lam)}" for lam, c in sorted(self.coeffs.items())
        )
        return body or "0"


# -- modified Macdonald polynomials ----------------------------------------


@lru_cache(maxsize=None)
def _diagram_data(mu):
    """Reading-order cells with descent targets, attack pairs, arms, legs.

    Reading order: top row first, left to right.  Cells u, v attack when
    they share a row, or v is one row below u and strictly left.
    """
    mu = Partition(mu)
    cells = [
        (r, c) for r in range(len(mu) - 1, -1, -1) for c in range(mu[r])
    ]
    index = {cell: i for i, cell in enumerate(cells)}
    below = [index.get((r - 1, c), -1) for (r, c) in cells]
    arms = [mu.arm(cell) for cell in cells]
    legs = [mu.leg(cell) for cell in cells]
    attacks = []
    for i, (r, c) in enumerate(cells):
        for j, (r2, c2) in enumerate(cells):
            if j <= i:
                continue
            if (r2 == r) or (r2 == r - 1 and c2 < c):
                attacks.append((i, j))
    return cells, below, arms, legs, attacks


@lru_cache(maxsize=None)
def htilde_mcoeff(mu, lam):
    """Coefficient of m_lam in the modified Macdonald polynomial of mu,
    as a q,t-polynomial: fillings with content lam weighted q^inv t^maj."""
    mu, lam = Partition(mu), Partition(lam)
    if mu.size != lam.size:
        raise DegreeMismatchError("partition sizes differ")
    if mu.size == 0:
        return QtPolynomial.one()
    _, below, arms, legs, attacks = _diagram_data(tuple(mu))
    content = [i for i, mult in enumerate(lam, start=1) for _ in range(mult)]
    out = QtPolynomial.zero()
    for filling in _multiset_perms(content):
        maj = 0
        arm_sum = 0
        for i, b in enumerate(below):
            if b >= 0 and filling[i] > filling[b]:
                maj += legs[i] + 1
                arm_sum += arms[i]
        inv = sum(1 for i, j in attacks if filling[i] > filling[j]) - arm_sum
        if inv < 0:
            raise AssertionError("negative inv statistic; orientation broken")
        out += QtPolynomial.monomial(1, inv, maj)
    return out


def htilde(mu, pt, cap=DEGREE_CAP):
    """Monomial-basis vector of the modified Macdonald polynomial at a
    point, as a SymFun with Fraction coefficients."""
    mu = Partition(mu)
    if mu.size > cap:
        raise CapacityError(f"degree {mu.size} above the cap {cap}")
    coeffs = {
        lam: htilde_mcoeff(tuple(mu), tuple(lam)).eval(pt.q0, pt.t0)
        for lam in partitions_of(mu.size)
    }
    return SymFun(mu.size, "m", coeffs)


_P_VEC_CACHE = {}


def _htilde_p_vector(mu, pt, cap=DEGREE_CAP):
    """p-basis coordinates of the Macdonald polynomial at a point."""
    key = (tuple(mu), pt.q0, pt.t0)
    hit = _P_VEC_CACHE.get(key)
    if hit is not None:
        return hit
    vec = htilde(mu, pt, cap=cap).convert_to("p").coeffs
    _P_VEC_CACHE[key] = vec
    return vec


_AT_ALPHABET_CACHE = {}


def htilde_at_alphabet(mu, alphabet, pt, cap=DEGREE_CAP):
    """Plethystic evaluation of the Macdonald polynomial on an alphabet;
    coefficients stay fixed, only the alphabet is raised to powers."""
    mu = Partition(mu)
    if mu.size == 0:
        return Fraction(1)
    key = (tuple(mu), alphabet.key(), pt.q0, pt.t0)
    hit = _AT_ALPHABET_CACHE.get(key)
    if hit is not None:
        return hit
    total = Fraction(0)
    for rho, c in _htilde_p_vector(mu, pt, cap=cap).items():
        prod = Fraction(1)
        for part in rho:
            prod *= pleth_p(part, alphabet, pt)
        total += c * prod
    _AT_ALPHABET_CACHE[key] = total
    return total


# -- Hall pairings ----------------------------------------------------------


@lru_cache(maxsize=None)
def _e_to_h_signed(k):
    """e_k as a signed sum of h-products: compositions of k with sign
    (-1)^(k - length)."""
    if k == 0:
        return ((1, ()),)
    out = []

    def rec(remaining, parts):
        if remaining == 0:
            sign = (-1) ** (k - len(parts))
            out.append((sign, tuple(parts)))
            return
        for p in range(1, remaining + 1):
            rec(remaining - p, parts + [p])

    rec(k, [])
    return tuple(out)


def _expand_eh_to_h(e_indices, h_indices):
    """Signed h-partition expansion of a product of e's and h's."""
    base_h = tuple(x for x in h_indices if x > 0)
    terms = {tuple(sorted(base_h, reverse=True)): 1}
    for k in e_indices:
        if k == 0:
            continue
        new = {}
        for sign, comp in _e_to_h_signed(k):
            for hpart, c in terms.items():
                key = tuple(sorted(hpart + comp, reverse=True))
                new[key] = new.get(key, 0) + sign * c
        terms = {k2: v for k2, v in new.items() if v}
    return terms


_PAIR_CACHE = {}


def pair_htilde_h(mu, nu, pt, cap=DEGREE_CAP):
    """<H_mu, h_nu> = coefficient of m_nu, evaluated at the point."""
    mu, nu = Partition(mu), Partition(nu)
    if mu.size != nu.size:
        raise DegreeMismatchError("degrees differ in Hall pairing")
    key = (tuple(mu), tuple(nu), pt.q0, pt.t0)
    hit = _PAIR_CACHE.get(key)
    if hit is None:
        hit = _PAIR_CACHE[key] = htilde_mcoeff(tuple(mu), tuple(nu)).eval(
            pt.q0, pt.t0
        )
    return hit


def pair_htilde_eh(mu, e_indices, h_indices, pt, cap=DEGREE_CAP):
    """<H_mu, prod e_k prod h_a> via the signed h-expansion of the e's."""
    mu = Partition(mu)
    want = sum(e_indices) + sum(h_indices)
    if mu.size != want:
        raise DegreeMismatchError("degrees differ in Hall pairing")
    if mu.size == 0:
        return Fraction(1)
    total = Fraction(0)
    for hpart, c in _expand_eh_to_h(e_indices, h_indices).items():
        total += c * pair_htilde_h(mu, hpart, pt, cap=cap)
    return total


def pair_htilde_hook(mu, r, pt, cap=DEGREE_CAP):
    """<H_mu, s_(n-r, 1^r)> via s_(a,1^b) = sum_i (-1)^i h_(a+i) e_(b-i)."""
    mu = Partition(mu)
    n = mu.size
    if not 0 <= r < n:
        raise DegreeMismatchError("hook column length out of range")
    total = Fraction(0)
    for i in range(r + 1):
        total += (-1) ** i * pair_htilde_eh(
            mu, (r - i,), (n - r + i,), pt, cap=cap
        )
    return total


def hall_pair(mu, rhs, pt, cap=DEGREE_CAP):
    """Hall pairing of a Macdonald polynomial against a named right side:
    ("h", nu) | ("eh", e_indices, h_indices) | ("hook", r)."""
    tag = rhs[0]
    if tag == "h":
        return pair_htilde_h(mu, rhs[1], pt, cap=cap)
    if tag == "eh":
        return pair_htilde_eh(mu, rhs[1], rhs[2], pt, cap=cap)
    if tag == "hook":
        return pair_htilde_hook(mu, rhs[1], pt, cap=cap)
    raise ValueError(f"unknown pairing {tag!r}")


# -- partition-sum evaluators ------------------------------------------------


_WEIGHT_CACHE = {}


def _en_weight(mu, pt):
    """Coefficient of the Macdonald polynomial of mu in the expansion of
    e_n: M B Pi / w, with the empty partition contributing 1."""
    if mu.size == 0:
        return Fraction(1)
    key = (tuple(mu), pt.q0, pt.t0)
    hit = _WEIGHT_CACHE.get(key)
    if hit is not None:
        return hit
    B, _, Pi, w, M = partition_invariants(mu, pt)
    if w == 0:
        raise PoleError("w vanishes at the evaluation point")
    value = M * B.sum_at(pt) * Pi / w
    _WEIGHT_CACHE[key] = value
    return value


def _pair_e_column(mu, pt, cap=DEGREE_CAP):
    """<H_mu, e_n> for mu of size n (the full column hook)."""
    if mu.size == 0:
        return Fraction(1)
    return pleth_e(mu.size - 1, b_alphabet(mu).minus_one(), pt)


def lhs_delta_hh(m, n, k, pt, cap=DEGREE_CAP):
    """<Delta'_{e_(m+n-k-1)} e_(m+n), h_m h_n> as a partition sum."""
    total = Fraction(0)
    for mu in partitions_of(m + n):
        weight = _en_weight(mu, pt)
        if not weight:
            continue
        ecoef = pleth_e(m + n - k - 1, b_alphabet(mu).minus_one(), pt)
        if not ecoef:
            continue
        total += ecoef * weight * pair_htilde_eh(mu, (), (m, n), pt, cap=cap)
    return total


def mid_delta_hn(m, n, k, pt, cap=DEGREE_CAP):
    """<Delta_{h_n} Delta'_{e_(m-k)} e_(m+1), h_(m+1)> as a partition sum."""
    total = Fraction(0)
    for lam in partitions_of(m + 1):
        weight = _en_weight(lam, pt)
        if not weight:
            continue
        B = b_alphabet(lam)
        total += (
            pleth_h(n, B, pt)
            * pleth_e(m - k, B.minus_one(), pt)
            * weight
        )
    return total


def rhs_nabla_ehh(m, n, k, pt, cap=DEGREE_CAP):
    """<nabla e_(m+n-k), e_k h_(n-k) h_(m-k)> as a partition sum."""
    total = Fraction(0)
    for mu in partitions_of(m + n - k):
        weight = _en_weight(mu, pt)
        if not weight:
            continue
        total += (
            t_mu(mu, pt)
            * weight
            * pair_htilde_eh(mu, (k,), (n - k, m - k), pt, cap=cap)
        )
    return total


def sum_r_lhs(m, n, k, pt, cap=DEGREE_CAP):
    """Sum over r of t^(m-k-r+1) <Delta_{h_(m-k-r+1)} Delta_{e_k}
    e_n[X (1-q^r)/(1-q)], e_n>, expanded through the Cauchy identity."""
    M = m_alphabet()
    total = Fraction(0)
    for r in range(1, m - k + 2):
        t_pow = pt.t0 ** (m - k - r + 1)
        inner = Fraction(0)
        for mu in partitions_of(n):
            B = b_alphabet(mu)
            w = w_mu(mu, pt) if mu.size else Fraction(1)
            if w == 0:
                raise PoleError("w vanishes at the evaluation point")
            cauchy = htilde_at_alphabet(mu, M * bracket_q(r), pt, cap=cap) / w
            if not cauchy:
                continue
            inner += (
                pleth_h(m - k - r + 1, B, pt)
                * pleth_e(k, B, pt)
                * cauchy
                * _pair_e_column(mu, pt, cap=cap)
            )
        total += t_pow * inner
    return total


def delta_lhs_by_content(m, n, k, lam, pt, cap=DEGREE_CAP):
    """Coefficient of m_lam in Delta_{h_m} Delta'_{e_(n-k-1)} e_n."""
    lam = Partition(lam)
    total = Fraction(0)
    for mu in partitions_of(n):
        weight = _en_weight(mu, pt)
        if not weight:
            continue
        B = b_alphabet(mu)
        total += (
            pleth_h(m, B, pt)
            * pleth_e(n - k - 1, B.minus_one(), pt)
            * weight
            * htilde_mcoeff(tuple(mu), tuple(lam)).eval(pt.q0, pt.t0)
        )
    return total


def pair_delta_general(m, n, k, e_indices, h_indices, pt, cap=DEGREE_CAP):
    """<Delta_{h_m} Delta'_{e_(n-k-1)} e_n, prod e prod h>."""
    total = Fraction(0)
    for mu in partitions_of(n):
        weight = _en_weight(mu, pt)
        if not weight:
            continue
        B = b_alphabet(mu)
        total += (
            pleth_h(m, B, pt)
            * pleth_e(n - k - 1, B.minus_one(), pt)
            * weight
            * pair_htilde_eh(mu, e_indices, h_indices, pt, cap=cap)
        )
    return total


def pair_delta_e_d(d, n, pt, cap=DEGREE_CAP):
    """<Delta_{e_d} e_n, h_n> as a partition sum."""
    total = Fraction(0)
    for mu in partitions_of(n):
        weight = _en_weight(mu, pt)
        if not weight:
            continue
        total += pleth_e(d, b_alphabet(mu), pt) * weight
    return total


def pair_en_eh(n, d, pt):
    """<e_n, e_d h_(n-d)> from the classical h-expansion: the only
    h-product pairing nontrivially with e_n is h_(1^n)."""
    total = 0
    for hpart, c in _expand_eh_to_h((d,), (n - d,)).items():
        if hpart == tuple([1] * n):
            total += c
    return Fraction(total)


def reciprocity_check(alpha, beta, pt, cap=DEGREE_CAP):
    """H_alpha[M B_beta] / Pi_alpha == H_beta[M B_alpha] / Pi_beta."""
    alpha, beta = Partition(alpha), Partition(beta)
    M = m_alphabet()
    pa = pi_mu(alpha, pt)
    pb = pi_mu(beta, pt)
    if pa == 0 or pb == 0:
        raise PoleError("Pi vanishes at the evaluation point")
    lhs = htilde_at_alphabet(alpha, M * b_alphabet(beta), pt, cap=cap) / pa
    rhs = htilde_at_alphabet(beta, M * b_alphabet(alpha), pt, cap=cap) / pb
    return lhs == rhs
