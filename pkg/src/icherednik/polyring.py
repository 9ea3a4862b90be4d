"""Commutative polynomial machinery over an exact field.

This module provides the coordinate rings used everywhere else:

* ``matrix_coordinate_ring(n)`` -- polynomials in the n^2 coordinate
  functions e_ij on the space of n x n matrices (row-major variable
  order, fixed globally);
* ``eigenvalue_ring(n)`` -- polynomials in eigenvalue variables
  lam_1..lam_n, where symmetric polynomials live;
* ``semidirect_coordinate_ring(n)`` -- the e_ij together with vector
  coordinates u_1..u_n and covector coordinates w_1..w_n.

On top of that sit the invariant-theoretic operations: the coefficients
Q_j of det(t*Id - X), the gradient matrices B_k = X^k - Q_1 X^{k-1} + ...
+ (-1)^k Q_k, the Hessian bilinear-form identity for the Q's, the
bivariate generating series det(t - A) / ((t*tau - 1) det(1 - tau*A))
whose coefficients control the central corrections, and the conversion of
a symmetric eigenvalue polynomial into a matrix polynomial through the
elementary symmetric basis.
"""

from __future__ import annotations

from itertools import permutations

from .scalars import QQ


class PolyRing:
    """A multivariate polynomial ring with named variables over a field."""

    __slots__ = ("field", "names", "zero", "one")

    def __init__(self, field, names):
        self.field = field
        self.names = tuple(names)
        self.zero = Poly(self, {})
        self.one = Poly(self, {(0,) * len(self.names): field.one})

    @property
    def nvars(self) -> int:
        return len(self.names)

    def gen(self, i: int) -> "Poly":
        exps = [0] * self.nvars
        exps[i] = 1
        return Poly(self, {tuple(exps): self.field.one})

    def gen_named(self, name: str) -> "Poly":
        return self.gen(self.names.index(name))

    def monomial(self, exps, coeff=None) -> "Poly":
        c = self.field.one if coeff is None else self.field(coeff)
        return Poly(self, {tuple(exps): c})

    def constant(self, value) -> "Poly":
        c = self.field(value)
        if not c:
            return self.zero
        return Poly(self, {(0,) * self.nvars: c})

    def from_terms(self, terms: dict) -> "Poly":
        return Poly(self, {tuple(k): v for k, v in terms.items() if v})

    def __eq__(self, other):
        return (
            isinstance(other, PolyRing)
            and self.field == other.field
            and self.names == other.names
        )

    def __hash__(self):
        return hash((self.field, self.names))

    def __repr__(self):
        return f"PolyRing({self.field!r}, {self.names})"


class Poly:
    """Sparse polynomial: map from exponent tuples to nonzero coefficients."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring: PolyRing, terms: dict):
        self.ring = ring
        self.terms = {e: c for e, c in terms.items() if c}

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.ring == other.ring and self.terms == other.terms
        return NotImplemented

    def __hash__(self):
        return hash((self.ring, frozenset(self.terms.items())))

    def __add__(self, other):
        if not isinstance(other, Poly):
            other = self.ring.constant(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e)
            s = c if s is None else s + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return Poly(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        return Poly(self.ring, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, Poly):
            other = self.ring.constant(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, Poly):
            c = self.ring.field(other)
            if not c:
                return self.ring.zero
            return Poly(self.ring, {e: v * c for e, v in self.terms.items()})
        out: dict = {}
        for ea, ca in self.terms.items():
            for eb, cb in other.terms.items():
                e = tuple(x + y for x, y in zip(ea, eb))
                c = ca * cb
                s = out.get(e)
                s = c if s is None else s + c
                if s:
                    out[e] = s
                else:
                    out.pop(e, None)
        return Poly(self.ring, out)

    def __rmul__(self, other):
        return self.__mul__(other)

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power of a polynomial")
        result = self.ring.one
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def total_degree(self):
        """Max total degree of a term, or None for the zero polynomial."""
        if not self.terms:
            return None
        return max(sum(e) for e in self.terms)

    def homogeneous_part(self, d: int) -> "Poly":
        return Poly(self.ring, {e: c for e, c in self.terms.items() if sum(e) == d})

    def top_part(self) -> "Poly":
        d = self.total_degree()
        return self.ring.zero if d is None else self.homogeneous_part(d)

    def is_homogeneous(self) -> bool:
        degs = {sum(e) for e in self.terms}
        return len(degs) <= 1

    def derivative(self, i: int) -> "Poly":
        out = {}
        for e, c in self.terms.items():
            if e[i] == 0:
                continue
            e2 = list(e)
            e2[i] -= 1
            out[tuple(e2)] = c * e[i]
        return Poly(self.ring, out)

    def evaluate(self, values) -> object:
        """Full substitution; `values` is one scalar per variable."""
        values = [self.ring.field(v) for v in values]
        total = self.ring.field.zero
        for e, c in self.terms.items():
            term = c
            for x, k in zip(values, e):
                if k:
                    term = term * x**k
            total = total + term
        return total

    def constant_coefficient(self):
        return self.terms.get((0,) * self.ring.nvars, self.ring.field.zero)

    def __repr__(self):
        if not self.terms:
            return "0"
        bits = []
        for e in sorted(self.terms, reverse=True):
            c = self.terms[e]
            mono = "*".join(
                f"{name}^{k}" if k > 1 else name
                for name, k in zip(self.ring.names, e)
                if k
            )
            bits.append(f"({c})" + ("*" + mono if mono else ""))
        return " + ".join(bits)


# ---------------------------------------------------------------------------
# Coordinate rings.  Variable order inside exponent vectors is fixed
# globally: e_11, e_12, ..., e_1n, e_21, ..., e_nn (row-major), then any
# auxiliary variables.
# ---------------------------------------------------------------------------


def matrix_variable_names(n: int):
    return tuple(f"e_{i}{j}" for i in range(1, n + 1) for j in range(1, n + 1))


def matrix_coordinate_ring(n: int, field=QQ) -> PolyRing:
    return PolyRing(field, matrix_variable_names(n))


def eigenvalue_ring(n: int, field=QQ) -> PolyRing:
    return PolyRing(field, tuple(f"lam_{i}" for i in range(1, n + 1)))


def semidirect_coordinate_ring(n: int, field=QQ) -> PolyRing:
    names = matrix_variable_names(n)
    names += tuple(f"u_{i}" for i in range(1, n + 1))
    names += tuple(f"w_{i}" for i in range(1, n + 1))
    return PolyRing(field, names)


def matrix_entry_index(n: int, i: int, j: int) -> int:
    """Index of e_ij in the row-major variable order (1-based i, j)."""
    return (i - 1) * n + (j - 1)


def generic_matrix(n: int, ring: PolyRing):
    """The n x n matrix whose (i, j) entry is the coordinate e_ij."""
    return [
        [ring.gen(matrix_entry_index(n, i, j)) for j in range(1, n + 1)]
        for i in range(1, n + 1)
    ]


def identity_matrix(n: int, ring: PolyRing):
    return [[ring.one if i == j else ring.zero for j in range(n)] for i in range(n)]


def mat_mul(a, b):
    n, m, k = len(a), len(b[0]), len(b)
    return [
        [sum((a[i][t] * b[t][j] for t in range(k)), b[0][0].ring.zero) for j in range(m)]
        for i in range(n)
    ]


def mat_add(a, b):
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_scale(c, a):
    return [[c * x for x in row] for row in a]


def _perm_sign(perm) -> int:
    inversions = sum(
        1 for i in range(len(perm)) for j in range(i + 1, len(perm)) if perm[i] > perm[j]
    )
    return -1 if inversions % 2 else 1


# ---------------------------------------------------------------------------
# Characteristic polynomial coefficients and gradient matrices.
# ---------------------------------------------------------------------------


def char_poly_coeffs(n: int, field=QQ):
    """Coefficients [Q_0, ..., Q_n] of det(t*Id - X) = sum_j (-1)^j t^(n-j) Q_j.

    Q_0 = 1 and Q_j is homogeneous of degree j in the e_ij.  Computed by the
    permutation expansion of the determinant with the parameter t carried as
    an extra variable.
    """
    if n < 1:
        raise ValueError("rank must be >= 1")
    ring_t = PolyRing(field, matrix_variable_names(n) + ("t",))
    t = ring_t.gen(ring_t.nvars - 1)
    entries = [
        [
            (t if i == j else ring_t.zero)
            - ring_t.gen(matrix_entry_index(n, i + 1, j + 1))
            for j in range(n)
        ]
        for i in range(n)
    ]
    det = ring_t.zero
    for perm in permutations(range(n)):
        prod = ring_t.one * _perm_sign(perm)
        for i in range(n):
            prod = prod * entries[i][perm[i]]
        det = det + prod
    ring = matrix_coordinate_ring(n, field)
    qs = []
    for j in range(n + 1):
        terms = {}
        for e, c in det.terms.items():
            if e[-1] == n - j:
                terms[e[:-1]] = c if j % 2 == 0 else -c
        qs.append(Poly(ring, terms))
    return qs


def gradient_matrix(n: int, k: int, field=QQ):
    """B_k(X) = X^k - Q_1 X^{k-1} + ... + (-1)^k Q_k, for 0 <= k < n."""
    if not 0 <= k < n:
        raise ValueError(f"k must satisfy 0 <= k < n, got k={k}, n={n}")
    ring = matrix_coordinate_ring(n, field)
    qs = char_poly_coeffs(n, field)
    x = generic_matrix(n, ring)
    powers = [identity_matrix(n, ring)]
    for _ in range(k):
        powers.append(mat_mul(powers[-1], x))
    acc = [[ring.zero] * n for _ in range(n)]
    for a in range(k + 1):
        sign = field(-1) ** a
        term = mat_scale(qs[a] * sign, powers[k - a])
        acc = mat_add(acc, term)
    return acc


class HessianReport:
    """Per-(i, j) outcome of the Hessian bilinear-form identity for Q_k."""

    def __init__(self, n, k, failures):
        self.n = n
        self.k = k
        self.failures = failures  # list of (i, j) with a nonzero form

    @property
    def ok(self) -> bool:
        return not self.failures

    def __repr__(self):
        status = "ok" if self.ok else f"failures={self.failures}"
        return f"HessianReport(n={self.n}, k={self.k}, {status})"


def hessian_identity_check(n: int, k: int, field=QQ) -> HessianReport:
    """Check sum_{t,p} d^2 Q_k / (de_ip de_jt) u_t u_p = 0 for every (i, j).

    The auxiliary u variables commute, so the identity says the second-
    derivative matrix is alternating in (t, p); it holds because Q_k is a
    sum of minors, which are multilinear in matrix rows.
    """
    if not 1 <= k <= n:
        raise ValueError("need 1 <= k <= n")
    ring = semidirect_coordinate_ring(n, field)
    qk = char_poly_coeffs(n, field)[k]
    # reinterpret Q_k inside the bigger ring (e-variables come first)
    pad = ring.nvars - n * n
    qk_big = Poly(ring, {e + (0,) * pad: c for e, c in qk.terms.items()})
    u = [ring.gen(n * n + i) for i in range(n)]
    failures = []
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            form = ring.zero
            for t in range(1, n + 1):
                for p in range(1, n + 1):
                    d2 = qk_big.derivative(matrix_entry_index(n, i, p)).derivative(
                        matrix_entry_index(n, j, t)
                    )
                    if d2:
                        form = form + d2 * u[t - 1] * u[p - 1]
            if form:
                failures.append((i, j))
    return HessianReport(n, k, failures)


# ---------------------------------------------------------------------------
# Symmetric polynomials in the eigenvalue variables.
# ---------------------------------------------------------------------------


def is_symmetric(p: Poly) -> bool:
    """True iff p is invariant under every transposition of its variables."""
    nv = p.ring.nvars
    for k in range(nv - 1):
        swapped = {}
        for e, c in p.terms.items():
            e2 = list(e)
            e2[k], e2[k + 1] = e2[k + 1], e2[k]
            swapped[tuple(e2)] = c
        if swapped != p.terms:
            return False
    return True


def elementary_symmetric(n: int, k: int, ring: PolyRing) -> Poly:
    """e_k(lam_1..lam_n) inside an eigenvalue ring."""
    if k == 0:
        return ring.one
    from itertools import combinations

    terms = {}
    for combo in combinations(range(n), k):
        e = [0] * ring.nvars
        for i in combo:
            e[i] = 1
        terms[tuple(e)] = ring.field.one
    return Poly(ring, terms)


def complete_homogeneous(n: int, b: int, ring: PolyRing) -> Poly:
    """h_b(lam_1..lam_n), via the series inverse of prod (1 - tau*lam_i)."""
    es = [elementary_symmetric(n, k, ring) for k in range(n + 1)]
    hs = [ring.one]
    for deg in range(1, b + 1):
        acc = ring.zero
        for j in range(1, min(deg, n) + 1):
            sign = ring.field(-1) ** (j + 1)
            acc = acc + es[j] * hs[deg - j] * sign
        hs.append(acc)
    return hs[b]


def decompose_elementary(s: Poly) -> dict:
    """Write a symmetric polynomial in the basis of elementary symmetric
    polynomials.

    Returns a map from exponent tuples (m_1..m_n) to scalars, meaning
    sum c * e_1^{m_1} ... e_n^{m_n}.  Division-free: repeatedly strip the
    lex-leading term, whose exponent vector is weakly decreasing exactly
    when the input is symmetric.
    """
    ring = s.ring
    n = ring.nvars
    result = {}
    rem = s
    while rem:
        lead = max(rem.terms)
        alpha = list(lead) + [0]
        if any(alpha[i] < alpha[i + 1] for i in range(n)):
            raise ValueError("polynomial is not symmetric")
        c = rem.terms[lead]
        mu = tuple(alpha[i] - alpha[i + 1] for i in range(n))
        prod = ring.one
        for j, m in enumerate(mu, start=1):
            if m:
                prod = prod * elementary_symmetric(n, j, ring) ** m
        rem = rem - prod * c
        result[mu] = c
    return result


def sym_to_matrixpoly(s: Poly, n: int) -> Poly:
    """Express a symmetric eigenvalue polynomial through Q_1..Q_n.

    The result, restricted to diagonal matrices diag(lam_1..lam_n),
    reproduces the input; raises ValueError if the input is not symmetric.
    """
    if s.ring.nvars != n:
        raise ValueError("variable count does not match the rank")
    if not is_symmetric(s):
        raise ValueError("input polynomial is not symmetric")
    decomp = decompose_elementary(s)
    field = s.ring.field
    ring = matrix_coordinate_ring(n, field)
    qs = char_poly_coeffs(n, field)
    out = ring.zero
    for mu, c in decomp.items():
        prod = ring.one
        for j, m in enumerate(mu, start=1):
            if m:
                prod = prod * qs[j] ** m
        out = out + prod * c
    return out


def restrict_to_diagonal(p: Poly, n: int) -> Poly:
    """Substitute e_ii -> lam_i and e_ij -> 0 (i != j) into a matrix polynomial."""
    lring = eigenvalue_ring(n, p.ring.field)
    out = {}
    for e, c in p.terms.items():
        exps = [0] * n
        ok = True
        for idx, k in enumerate(e):
            if not k:
                continue
            i, j = divmod(idx, n)
            if i != j:
                ok = False
                break
            exps[i] += k
        if ok:
            key = tuple(exps)
            s = out.get(key)
            s = c if s is None else s + c
            if s:
                out[key] = s
            else:
                out.pop(key, None)
    return Poly(lring, out)


def gl_derivation(k: int, l: int, p: Poly, n: int) -> Poly:
    """Action of e_kl on a matrix polynomial as the derivation with
    e_ab -> delta_la e_kb - delta_bk e_al (the adjoint action on coordinates).
    """
    ring = p.ring
    out = ring.zero
    for e, c in p.terms.items():
        for idx, m in enumerate(e):
            if not m:
                continue
            a, b = divmod(idx, n)
            a += 1
            b += 1
            image = ring.zero
            if l == a:
                image = image + ring.gen(matrix_entry_index(n, k, b))
            if b == k:
                image = image - ring.gen(matrix_entry_index(n, a, l))
            if not image:
                continue
            e2 = list(e)
            e2[idx] -= 1
            rest = Poly(ring, {tuple(e2): c * m})
            out = out + rest * image
    return out


# ---------------------------------------------------------------------------
# The bivariate generating series.
# ---------------------------------------------------------------------------


class BivarSeries:
    """Truncated double series sum c_{i,j} tau^i t^j with symmetric
    eigenvalue-polynomial coefficients.

    Stored indices satisfy 0 <= i <= maxtau, 0 <= j <= maxt; every stored
    coefficient is checked to be a symmetric polynomial.
    """

    def __init__(self, ring: PolyRing, maxtau: int, maxt: int, coeffs: dict):
        self.ring = ring
        self.maxtau = maxtau
        self.maxt = maxt
        clean = {}
        for (i, j), poly in coeffs.items():
            if not 0 <= i <= maxtau or not 0 <= j <= maxt:
                raise ValueError(f"index ({i}, {j}) outside truncation window")
            if not poly:
                continue
            if not is_symmetric(poly):
                raise ValueError(f"coefficient at ({i}, {j}) is not symmetric")
            clean[(i, j)] = poly
        self.coeffs = clean

    def get(self, i: int, j: int) -> Poly:
        return self.coeffs.get((i, j), self.ring.zero)

    def row(self, i: int):
        """Coefficients of tau^i as a list indexed by the power of t."""
        return [self.get(i, j) for j in range(self.maxt + 1)]

    def __eq__(self, other):
        return (
            isinstance(other, BivarSeries)
            and self.ring == other.ring
            and self.coeffs == other.coeffs
        )


def gf_coeffs(n: int, m: int, maxt: int, field=QQ) -> BivarSeries:
    """Truncated expansion of det(t - A) / ((t*tau - 1) det(1 - tau*A)).

    The factor (t*tau - 1)^{-1} is expanded as -sum_k t^k tau^k, the branch
    on which every coefficient is polynomial.  The tau^i t^j coefficient is

        eta_i^j = - sum_k  [t^{j-k}-coefficient of det(t - A)] * h_{i-k}

    with h_b the complete homogeneous symmetric polynomial.
    """
    if m < 0 or maxt < n:
        raise ValueError("need m >= 0 and maxt >= n")
    ring = eigenvalue_ring(n, field)
    es = [elementary_symmetric(n, k, ring) for k in range(n + 1)]
    hs = [complete_homogeneous(n, b, ring) for b in range(m + 1)]

    def det_coeff(d):  # coefficient of t^d in det(t - A) = prod (t - lam_i)
        j = n - d
        if 0 <= j <= n:
            return es[j] * (field(-1) ** j)
        return ring.zero

    coeffs = {}
    for i in range(m + 1):
        for j in range(maxt + 1):
            acc = ring.zero
            for k in range(min(i, j) + 1):
                acc = acc + det_coeff(j - k) * hs[i - k]
            coeffs[(i, j)] = -acc
    return BivarSeries(ring, m, maxt, coeffs)


def lambda_identity_check(n: int, m: int, field=QQ) -> bool:
    """Check that substituting t := lam_1 kills the tau^m row of the series."""
    if m < 1:
        raise ValueError("need m >= 1")
    series = gf_coeffs(n, m, n + m, field)
    ring = series.ring
    lam1 = ring.gen(0)
    acc = ring.zero
    for j in range(series.maxt + 1):
        acc = acc + series.get(m, j) * lam1**j
    return not acc


# ---------------------------------------------------------------------------
# JSON serialization: {"vars": [...], "terms": [["coeff", [exps...]], ...]}
# with coefficients rendered "p/q" or "p".
# ---------------------------------------------------------------------------


def poly_to_json(p: Poly) -> dict:
    field = p.ring.field
    return {
        "vars": list(p.ring.names),
        "terms": [
            [field.to_str(p.terms[e]), list(e)] for e in sorted(p.terms, reverse=True)
        ],
    }


def poly_from_json(data: dict, field) -> Poly:
    ring = PolyRing(field, tuple(data["vars"]))
    terms = {}
    for coeff_str, exps in data["terms"]:
        e = tuple(int(x) for x in exps)
        if len(e) != ring.nvars:
            raise ValueError("exponent vector has wrong length")
        c = field(coeff_str)
        if c:
            terms[e] = terms.get(e, field.zero) + c
    return Poly(ring, terms)
