"""Central elements of the deformed algebras.

The center of the undeformed algebra U(gl_n x (V + V*)) is generated by

    t_i = sum_j [beta_i, Y(j)] X(j),    beta_i = symmetrization(Q_i),

and for a deformed algebra each t_i admits a unique correction
c_i in Z(U(gl_n)) (a polynomial in the beta's without constant term) such
that eta_i = t_i - c_i is central.  The correction is found by an exact
linear solve: expand [t_i - sum lambda_k M_k, Y(1)] = 0 over the PBW word
basis, where M_k runs over the monomials beta_1^{a_1} ... beta_n^{a_n} of
weighted degree sum(j * a_j) <= d.  Commuting with Y(1) suffices by
gl_n-equivariance, but `verify_central` re-checks every generator before
a CentralSet is returned.

The module also hosts the cross-checks tying the corrections to the
commutative world: the symmetrized-invariant comparison in the undeformed
algebra, and the comparison of the top symbol of c_i with the generating-
series coefficient eta_m^{n-i}.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import linalg
from .polyring import (
    Poly,
    char_poly_coeffs,
    gf_coeffs,
    gradient_matrix,
    matrix_coordinate_ring,
    semidirect_coordinate_ring,
    sym_to_matrixpoly,
)
from .pbw import (
    NCElement,
    X,
    Y,
    ZERO,
    AlgebraSpec,
    anti_involution,
    commutator,
    gen_token,
    multiply,
    nc_from_json,
    nc_to_json,
    sym_on_L,
    symmetrization,
    undeformed_spec,
)

# Empirical global convention relating the top symbol of the correction
# c_i to the generating-series coefficient: with the branch
# (t*tau - 1)^{-1} = -sum t^k tau^k used by gf_coeffs,
#     top_symbol(c_i) = (-1)^i * b_m * top(sym_to_matrixpoly(eta_m^{n-i})).
# Determined by solving instances with n <= 3, m <= 2 (monic and non-monic
# b) and asserted for every instance by top_symbol_crosscheck.


def top_symbol_factor(i: int, field):
    return field(-1) ** i


def beta(i: int, spec: AlgebraSpec) -> NCElement:
    """Symmetrization of Q_i; a standard generator of Z(U(gl_n))."""
    if not 1 <= i <= spec.n:
        raise ValueError("index out of range")
    q = char_poly_coeffs(spec.n, spec.field)[i]
    return symmetrization(q, spec)


def t_element(i: int, spec: AlgebraSpec) -> NCElement:
    """t_i = sum_j [beta_i, Y(j)] X(j); filtration degree 2, gl_n-invariant."""
    b = beta(i, spec)
    out = ZERO
    for j in range(1, spec.n + 1):
        out = out + multiply(commutator(b, spec.gen(Y(j)), spec), spec.gen(X(j)), spec)
    return out


def center_basis_monomials(spec: AlgebraSpec, d: int):
    """Monomials beta_1^{a_1}...beta_n^{a_n} with 0 < sum j*a_j <= d.

    Yields (exponents, element) pairs; the constant monomial is excluded
    (the additive-constant ambiguity of the corrections is resolved by
    normalizing it to zero).
    """
    n = spec.n
    betas = [beta(i, spec) for i in range(1, n + 1)]

    def rec(idx, weight, exps, acc):
        if idx == n:
            if any(exps):
                yield tuple(exps), acc
            return
        j = idx + 1
        a = 0
        current = acc
        while weight + j * a <= d:
            yield from rec(idx + 1, weight + j * a, exps + [a], current)
            a += 1
            if weight + j * a > d:
                break
            current = multiply(current, betas[idx], spec)

    yield from rec(0, 0, [], spec.one())


def solve_correction(i: int, spec: AlgebraSpec, d: int):
    """The unique combination c of center-basis monomials of weighted
    degree <= d with [t_i - c, Y(1)] = 0, or None when no combination
    exists at this bound (the caller escalates d)."""
    target = commutator(t_element(i, spec), spec.gen(Y(1)), spec)
    basis = list(center_basis_monomials(spec, d))
    columns = [commutator(el, spec.gen(Y(1)), spec) for _, el in basis]
    words = sorted(
        {w for col in columns for w in col.terms} | set(target.terms),
        key=lambda w: (len(w), w),
    )
    field = spec.field
    matrix = [[col.terms.get(w, field.zero) for col in columns] for w in words]
    rhs = [target.terms.get(w, field.zero) for w in words]
    if not words:
        return ZERO
    sol = linalg.solve_unique(matrix, rhs, field)
    if sol is None:
        return None
    out = ZERO
    for coeff, (_, el) in zip(sol, basis):
        if coeff:
            out = out + el.scaled(coeff)
    return out


class CentralityReport:
    """Commutators of a candidate with every generator of the algebra."""

    def __init__(self, nonzero: dict):
        self.nonzero = nonzero  # token -> offending commutator

    @property
    def ok(self) -> bool:
        return not self.nonzero

    def __repr__(self):
        if self.ok:
            return "CentralityReport(central)"
        return f"CentralityReport(nonzero against {sorted(self.nonzero)})"


def verify_central(z: NCElement, spec: AlgebraSpec) -> CentralityReport:
    """Exhaustive centrality check against all n^2 + 2n generators."""
    nonzero = {}
    for g in spec.generators():
        c = commutator(z, spec.gen(g), spec)
        if c:
            nonzero[gen_token(g)] = c
    return CentralityReport(nonzero)


@dataclass
class CentralSet:
    """The solved central generators eta_i = t_i - c_i and their data."""

    etas: list
    corrections: list
    degree_bounds: list
    b: tuple | None = None  # deformation vector, when known

    @property
    def n(self) -> int:
        return len(self.etas)


class CorrectionUnsolvable(RuntimeError):
    pass


def central_generators(
    spec: AlgebraSpec, d0: int | None = None, params=None
) -> CentralSet:
    """Solve every correction, escalating the degree bound, and verify
    full centrality of each eta_i before returning.

    The starting bound for eta_i is i + m (m = deformation order, read off
    the parameter vector when given, else the top degree of the commutator
    table); bounds double up to the cap 2*(i + m) + 4.
    """
    n = spec.n
    if params is not None:
        m = params.m
        bvec = params.b
    else:
        degrees = [
            max((len(w) for w in el.terms), default=0) for el in spec.ctable.values()
        ]
        m = max(degrees, default=0)
        bvec = None
    etas, corrections, bounds = [], [], []
    for i in range(1, n + 1):
        start = d0 if d0 is not None else i + m
        cap = 2 * (i + m) + 4
        d = min(start, cap)
        correction = None
        while True:
            correction = solve_correction(i, spec, d)
            if correction is not None:
                break
            if d >= cap:
                raise CorrectionUnsolvable(
                    f"no correction for t_{i} up to degree bound {cap};"
                    " the pairing is likely not a PBW deformation"
                )
            d = min(2 * d if d else 1, cap)
        eta = t_element(i, spec) - correction
        report = verify_central(eta, spec)
        if not report.ok:
            raise CorrectionUnsolvable(
                f"candidate eta_{i} fails centrality against {sorted(report.nonzero)}"
            )
        etas.append(eta)
        corrections.append(correction)
        bounds.append(d)
    return CentralSet(etas=etas, corrections=corrections, degree_bounds=bounds, b=bvec)


def uniqueness_relation_check(i: int, spec: AlgebraSpec, cset: CentralSet) -> bool:
    """Check [c_i, Y(j)] = [beta_i, [c_1, Y(j)]] for every j, exactly."""
    ci = cset.corrections[i - 1]
    c1 = cset.corrections[0]
    bi = beta(i, spec)
    for j in range(1, spec.n + 1):
        yj = spec.gen(Y(j))
        lhs = commutator(ci, yj, spec)
        rhs = commutator(bi, commutator(c1, yj, spec), spec)
        if lhs != rhs:
            return False
    return True


# ---------------------------------------------------------------------------
# Cross-checks against the commutative layer.
# ---------------------------------------------------------------------------


def commutative_symbol(z: NCElement, n: int, field) -> Poly:
    """Image of a pure-E element in the polynomial ring (forget the order)."""
    ring = matrix_coordinate_ring(n, field)
    out = ring.zero
    for w, c in z.terms.items():
        exps = [0] * (n * n)
        for g in w:
            if g[0] != "E":
                raise ValueError("element is not supported on E letters")
            exps[(g[1] - 1) * n + (g[2] - 1)] += 1
        out = out + ring.monomial(exps, c)
    return out


class InvariantsReport:
    """Expansion of each symmetrized invariant in the t basis.

    `expansions[k]` maps j to the coefficient of t_j in sym_on_L(f_k);
    `resolved[k]` is (leading index, leading coefficient).
    """

    def __init__(self, n, expansions, resolved, failures):
        self.n = n
        self.expansions = expansions
        self.resolved = resolved
        self.failures = failures  # k values where no expansion exists

    @property
    def ok(self) -> bool:
        """True iff every f_k symmetrizes into the span of t_1..t_{k+1}
        with leading term (-1)^k t_{k+1} (the resolved index offset)."""
        if self.failures:
            return False
        for k, (lead, coeff) in self.resolved.items():
            if lead != k + 1 or coeff != (-1) ** k:
                return False
        return True

    def __repr__(self):
        return f"InvariantsReport(n={self.n}, resolved={self.resolved}, ok={self.ok})"


def invariant_function(k: int, n: int, field) -> Poly:
    """f_k = sum_{i,j} w_i (B_k)_{ij} u_j on the semidirect product, the
    invariant pairing <covector, B_k(matrix) vector>."""
    ring = semidirect_coordinate_ring(n, field)
    bk = gradient_matrix(n, k, field)
    f = ring.zero
    for i in range(1, n + 1):
        wi = ring.gen(n * n + n + (i - 1))
        for j in range(1, n + 1):
            entry = bk[i - 1][j - 1]
            if not entry:
                continue
            uj = ring.gen(n * n + (j - 1))
            pad = Poly(ring, {e + (0,) * (2 * n): c for e, c in entry.terms.items()})
            f = f + wi * pad * uj
    return f


def symmetrized_invariants_check(
    n: int, maxk: int | None = None, field=None
) -> InvariantsReport:
    """Expand sym_on_L(f_k) in the central elements of the undeformed
    algebra and resolve the index pairing.

    The symmetrization of an invariant function is central, so each
    image must be an exact linear combination of t_1..t_n; the expansion
    is found by an exact linear solve.  The resolved pairing is
    k <-> k + 1 with sign (-1)^k: sym_on_L(f_k) = (-1)^k t_{k+1} plus a
    combination of t_1..t_k contributed by the ordering average (zero for
    k = 0, where sym_on_L(f_0) = t_1 on the nose).
    """
    from .scalars import QQ

    field = QQ if field is None else field
    maxk = n - 1 if maxk is None else maxk
    spec = undeformed_spec(n, field)
    ts = [t_element(i, spec) for i in range(1, n + 1)]
    expansions, resolved, failures = {}, {}, []
    for k in range(0, maxk + 1):
        image = sym_on_L(invariant_function(k, n, field), spec)
        words = sorted(
            {w for t in ts for w in t.terms} | set(image.terms),
            key=lambda w: (len(w), w),
        )
        matrix = [[t.terms.get(w, field.zero) for t in ts] for w in words]
        rhs = [image.terms.get(w, field.zero) for w in words]
        sol = linalg.solve_unique(matrix, rhs, field)
        if sol is None:
            failures.append(k)
            continue
        coeffs = {j: c for j, c in enumerate(sol, start=1) if c}
        expansions[k] = coeffs
        lead = max(coeffs) if coeffs else None
        resolved[k] = (lead, coeffs.get(lead)) if lead else (None, None)
    return InvariantsReport(n, expansions, resolved, failures)


def top_symbol_crosscheck(i: int, spec: AlgebraSpec, cset: CentralSet) -> bool:
    """Compare the top symbol of c_i against the generating-series side.

    With b = (b_0, ..., b_m), m >= 1, the top-degree part of the
    commutative symbol of c_i must equal
    (-1)^i * b_m * top(sym_to_matrixpoly(eta_m^{n-i})).
    Vacuous (returns True) for m = 0.
    """
    if cset.b is None:
        raise ValueError("the CentralSet does not record its parameter vector")
    m = len(cset.b) - 1
    if m < 1:
        return True
    n, field = spec.n, spec.field
    bm = cset.b[m]
    correction = cset.corrections[i - 1]
    if not correction:
        return False
    lhs = commutative_symbol(correction, n, field).top_part()
    series = gf_coeffs(n, m, n + m, field)
    eta = series.get(m, n - i)
    rhs = sym_to_matrixpoly(eta, n).top_part() * (top_symbol_factor(i, field) * bm)
    return lhs == rhs


# ---------------------------------------------------------------------------
# Serialization.
# ---------------------------------------------------------------------------


def central_set_to_json(cset: CentralSet, spec: AlgebraSpec) -> dict:
    data = {
        "etas": [nc_to_json(e, spec) for e in cset.etas],
        "corrections": [nc_to_json(c, spec) for c in cset.corrections],
        "degree_bounds": list(cset.degree_bounds),
    }
    if cset.b is not None:
        data["b"] = [spec.field.to_str(v) for v in cset.b]
    return data


def central_set_from_json(data: dict, spec: AlgebraSpec) -> CentralSet:
    b = tuple(spec.field(v) for v in data["b"]) if "b" in data else None
    return CentralSet(
        etas=[nc_from_json(d, spec) for d in data["etas"]],
        corrections=[nc_from_json(d, spec) for d in data["corrections"]],
        degree_bounds=list(data["degree_bounds"]),
        b=b,
    )
