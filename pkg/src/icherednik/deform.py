"""Construction of the PBW deformation pairings from a parameter vector.

A vector b = (b_0, ..., b_m) of scalars determines a gl_n-invariant
pairing c : V x V* -> U(gl_n) through the matrix-valued generating series

    (1 - t A)^{-1} * det(1 - t A)^{-1} = sum_k  R_k(A) t^k,

whose coefficient matrices are R_k = sum_{a+b=k} A^a h_b(A), with h_b the
series inverse of det(1 - t A) = sum_j (-1)^j Q_j t^j.  The commutator
table of the resulting algebra is

    [Y(i), X(j)] = sum_k b_k * symmetrization( (R_k)_{ij} ).

The entry orientation (i, j) vs (j, i) is fixed by requiring the table to
be gl_n-equivariant, which the tests re-verify with the engine together
with the PBW consistency of every constructed algebra.
"""

from __future__ import annotations

from dataclasses import dataclass

from .polyring import (
    Poly,
    char_poly_coeffs,
    generic_matrix,
    identity_matrix,
    mat_add,
    mat_mul,
    mat_scale,
    matrix_coordinate_ring,
)
from .pbw import AlgebraSpec, symmetrization, undeformed_spec
from .scalars import field_of_characteristic


@dataclass(frozen=True)
class DeformationParams:
    """Coefficient vector (b_0, ..., b_m), rank and characteristic."""

    n: int
    characteristic: int
    b: tuple

    def __post_init__(self):
        if not self.b:
            raise ValueError("parameter vector must be nonempty")
        fld = self.field
        object.__setattr__(self, "b", tuple(fld(v) for v in self.b))

    @property
    def field(self):
        return field_of_characteristic(self.characteristic)

    @property
    def m(self) -> int:
        return len(self.b) - 1


def r_matrix(k: int, n: int, field) -> list:
    """The degree-k coefficient matrix sum_{a+b=k} A^a h_b(A)."""
    if k < 0:
        raise ValueError("series order must be >= 0")
    ring = matrix_coordinate_ring(n, field)
    qs = char_poly_coeffs(n, field)
    a = generic_matrix(n, ring)
    powers = [identity_matrix(n, ring)]
    for _ in range(k):
        powers.append(mat_mul(powers[-1], a))
    # h_b: series inverse of det(1 - tA) = sum_j (-1)^j Q_j t^j
    hs = [ring.one]
    for deg in range(1, k + 1):
        acc = ring.zero
        for j in range(1, min(deg, n) + 1):
            acc = acc + qs[j] * hs[deg - j] * (field(-1) ** (j + 1))
        hs.append(acc)
    out = [[ring.zero] * n for _ in range(n)]
    for apow in range(k + 1):
        out = mat_add(out, mat_scale(hs[k - apow], powers[apow]))
    return out


def r_poly(k: int, i: int, j: int, n: int, field) -> Poly:
    """Coefficient of t^k in (x_i, (1 - tA)^{-1} y_j) det(1 - tA)^{-1};
    homogeneous of degree k."""
    return r_matrix(k, n, field)[i - 1][j - 1]


def pairing_from_params(params: DeformationParams) -> AlgebraSpec:
    """Build the algebra whose commutator table is the pairing of `params`.

    In characteristic p the degree bound m < p - 1 is enforced (it keeps
    the symmetrization valid and is needed by the p-center statements).
    """
    n, fld = params.n, params.field
    p = params.characteristic
    if p and params.m >= p - 1:
        raise ValueError(f"need m < p - 1 in characteristic p (m={params.m}, p={p})")
    workspace = undeformed_spec(n, fld)  # symmetrization only touches E letters
    ctable = {}
    for k, bk in enumerate(params.b):
        if not bk:
            continue
        rk = r_matrix(k, n, fld)
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                contrib = symmetrization(rk[i - 1][j - 1], workspace).scaled(bk)
                if not contrib:
                    continue
                prev = ctable.get((i, j))
                ctable[(i, j)] = contrib if prev is None else prev + contrib
    return AlgebraSpec(n, fld, ctable)


def params_to_json(params: DeformationParams) -> dict:
    fld = params.field
    return {
        "n": params.n,
        "char": params.characteristic,
        "b": [fld.to_str(v) for v in params.b],
    }


def params_from_json(data: dict) -> DeformationParams:
    return DeformationParams(
        n=int(data["n"]),
        characteristic=int(data["char"]),
        b=tuple(data["b"]),
    )
