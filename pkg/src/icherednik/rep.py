"""Highest-weight representation layer: Harish-Chandra evaluation,
truncated Verma modules, central characters and category-O blocks.

The Verma module M(lam) has PBW basis {(lowering E word)(Y word) . v} and
the action of any element is computed exactly by pushing the non-basis
letters (diagonal, raising, X) to the right until they hit the highest-
weight vector: X and raising letters kill it, diagonal E(i,i) evaluates
to lam_i.  Vectors are truncated at a configurable word length; producing
a longer basis word raises instead of silently dropping terms.

`hc_evaluate` is the UNSHIFTED Harish-Chandra evaluation: the scalar by
which a weight-zero element of U(gl_n) acts on a gl_n-highest-weight
vector of weight lam.  The classical shifted homomorphism differs by the
affine change lam -> lam - rho with rho_i = (n - 2i + 1)/2 and is provided
separately; block equality does not depend on the shift.
"""

from __future__ import annotations

from dataclasses import dataclass

from .pbw import (
    NCElement,
    AlgebraSpec,
    _bracket,
    _normal_word,
)
from .polyring import lambda_identity_check


class TruncationOverflow(RuntimeError):
    """A Verma computation produced a basis word beyond the truncation."""


def _is_basis_letter(g) -> bool:
    return g[0] == "Y" or (g[0] == "E" and g[1] > g[2])


class VermaVector:
    """Element of M(lam), truncated at word length `depth`.

    Terms map normal words in lowering-E and Y letters (the PBW basis of
    the module applied to the highest-weight vector) to scalars.
    """

    __slots__ = ("weight", "depth", "terms")

    def __init__(self, weight, depth: int, terms: dict):
        self.weight = tuple(weight)
        self.depth = depth
        clean = {}
        for w, c in terms.items():
            if not c:
                continue
            if len(w) > depth:
                raise TruncationOverflow(
                    f"basis word of length {len(w)} exceeds truncation {depth}"
                )
            if not all(_is_basis_letter(g) for g in w):
                raise ValueError("Verma basis words use lowering E and Y letters only")
            clean[w] = c
        self.terms = clean

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        return (
            isinstance(other, VermaVector)
            and self.weight == other.weight
            and self.terms == other.terms
        )

    def scalar_part(self):
        """The coefficient of the highest-weight vector itself."""
        return self.terms.get((), None)

    def is_multiple_of_highest_weight(self) -> bool:
        return set(self.terms) <= {()}

    def __repr__(self):
        return f"VermaVector(weight={self.weight}, terms={len(self.terms)})"


def vacuum_vector(weight, depth: int, spec: AlgebraSpec) -> VermaVector:
    return VermaVector(
        tuple(spec.field(v) for v in weight), depth, {(): spec.field.one}
    )


def _act_word(word: tuple, weight, spec: AlgebraSpec, depth: int) -> dict:
    """Apply a word of generators to the highest-weight vector.

    Worklist reduction: locate the rightmost non-basis letter; if it is
    adjacent to the vacuum it evaluates (diagonal) or annihilates
    (raising, X); otherwise swap it one step right, inserting the bracket.
    Terminates because a swap moves a non-basis letter toward the vacuum
    and every bracket insertion either shortens the word or strictly
    lowers the Y/X letter count (the [X, Y] rule).
    """
    field = spec.field
    out: dict = {}
    work = [(word, field.one)]
    while work:
        w, c = work.pop()
        q = None
        for idx in range(len(w) - 1, -1, -1):
            if not _is_basis_letter(w[idx]):
                q = idx
                break
        if q is None:
            for nw, k in _normal_word(w, spec).items():
                if len(nw) > depth:
                    raise TruncationOverflow(
                        f"word of length {len(nw)} exceeds truncation {depth}"
                    )
                s = out.get(nw)
                v = c * k
                s = v if s is None else s + v
                if s:
                    out[nw] = s
                else:
                    out.pop(nw, None)
            continue
        g = w[q]
        if q == len(w) - 1:
            if g[0] == "X" or g[1] < g[2]:
                continue  # annihilates the highest-weight vector
            work.append((w[:q], c * weight[g[1] - 1]))  # diagonal eigenvalue
            continue
        s0 = w[q + 1]
        work.append((w[:q] + (s0, g) + w[q + 2:], c))
        for bw, bc in _bracket(g, s0, spec).items():
            work.append((w[:q] + bw + w[q + 2:], c * bc))
    return out


def verma_act(a: NCElement, v: VermaVector, spec: AlgebraSpec) -> VermaVector:
    """The action of `a` on a truncated Verma vector (exact; overflow raises)."""
    field = spec.field
    out: dict = {}
    for bw, bc in v.terms.items():
        for mw, mc in a.terms.items():
            c = mc * bc
            for w, k in _act_word(mw + bw, v.weight, spec, v.depth).items():
                s = out.get(w)
                val = c * k
                s = val if s is None else s + val
                if s:
                    out[w] = s
                else:
                    out.pop(w, None)
    return VermaVector(v.weight, v.depth, out)


# ---------------------------------------------------------------------------
# Harish-Chandra evaluation.
# ---------------------------------------------------------------------------


def _word_weight(word, n: int):
    content = [0] * n
    for g in word:
        if g[0] == "E":
            content[g[1] - 1] += 1
            content[g[2] - 1] -= 1
        else:
            raise ValueError("element contains Y or X letters")
    return content


def hc_evaluate(z: NCElement, weight, spec: AlgebraSpec):
    """Unshifted Harish-Chandra evaluation of a weight-zero element of
    U(gl_n) at a weight: drop every word containing a raising letter,
    evaluate diagonal letters at the weight coordinates.

    Raises if z has Y/X letters or fails to commute with the diagonal
    (i.e. some word has nonzero gl_n-weight).
    """
    n = spec.n
    weight = tuple(spec.field(v) for v in weight)
    total = spec.field.zero
    for w, c in z.terms.items():
        if any(x != 0 for x in _word_weight(w, n)):
            raise ValueError("element is not of weight zero")
        if any(g[0] == "E" and g[1] < g[2] for g in w):
            continue
        # weight zero and no raising letters forces a pure diagonal word
        term = c
        for g in w:
            term = term * weight[g[1] - 1]
        total = total + term
    return total


def rho_vector(n: int, field):
    """The half-sum shift rho_i = (n - 2i + 1) / 2."""
    two = field(2)
    if not two:
        raise ValueError("the rho shift is not defined in characteristic 2")
    return tuple(field(n - 2 * i + 1) / two for i in range(1, n + 1))


def hc_evaluate_shifted(z: NCElement, weight, spec: AlgebraSpec):
    """Classical (rho-shifted) Harish-Chandra evaluation: evaluate at
    lam - rho.  Provided for comparison with Lie-theory tables."""
    rho = rho_vector(spec.n, spec.field)
    shifted = tuple(spec.field(v) - r for v, r in zip(weight, rho))
    return hc_evaluate(z, shifted, spec)


# ---------------------------------------------------------------------------
# Central characters and blocks.
# ---------------------------------------------------------------------------


def _default_depth(cset) -> int:
    longest = max(
        (len(w) for el in cset.etas for w in el.terms), default=0
    )
    return longest + 6


def central_character(weight, spec: AlgebraSpec, cset, depth: int | None = None):
    """The tuple of scalars by which eta_1..eta_n act on the Verma module
    of the given highest weight.

    Cross-checked internally: the action on the highest-weight vector must
    be an exact scalar multiple of it (anything else means the input set
    is not central and is reported as an internal error).
    """
    depth = _default_depth(cset) if depth is None else depth
    v = vacuum_vector(weight, depth, spec)
    chars = []
    for idx, eta in enumerate(cset.etas, start=1):
        image = verma_act(eta, v, spec)
        if not image.is_multiple_of_highest_weight():
            raise RuntimeError(
                f"eta_{idx} does not act by a scalar on the highest-weight vector"
            )
        c = image.scalar_part()
        chars.append(spec.field.zero if c is None else c)
    return tuple(chars)


def same_block(weight_a, weight_b, spec: AlgebraSpec, cset) -> bool:
    """Verma modules lie in the same block iff their central characters agree."""
    return central_character(weight_a, spec, cset) == central_character(
        weight_b, spec, cset
    )


def block_partition(sample, spec: AlgebraSpec, cset):
    """Partition a weight sample by central character.

    Returns a list of (character, [weights]) pairs in a deterministic
    order (sorted by the printed character).
    """
    groups: dict = {}
    for w in sample:
        weight = tuple(spec.field(v) for v in w)
        chi = central_character(weight, spec, cset)
        groups.setdefault(chi, []).append(weight)
    field = spec.field
    return sorted(
        groups.items(), key=lambda item: [field.to_str(x) for x in item[0]]
    )


def blocks_to_json(partition, spec: AlgebraSpec):
    field = spec.field
    return [
        {
            "character": [field.to_str(x) for x in chi],
            "weights": [[field.to_str(x) for x in w] for w in weights],
        }
        for chi, weights in partition
    ]


@dataclass
class FinitenessReport:
    """Fiber statistics of the character map over a weight sample."""

    skipped: bool
    reason: str | None
    fiber_sizes: list
    max_fiber: int
    identity_witness: bool | None

    @property
    def ok(self) -> bool:
        return self.skipped or self.identity_witness in (None, True)


def finiteness_probe(spec: AlgebraSpec, cset, sample) -> FinitenessReport:
    """Probe finiteness of the character map on a finite weight sample.

    Reports the fiber sizes of the sample under the central character map
    and, for deformation order m >= 1, re-runs the eigenvalue-substitution
    identity on the generating series as the finiteness witness.
    Skipped entirely for the zero pairing, where the hypothesis c != 0
    fails and all characters coincide.
    """
    if not spec.ctable:
        return FinitenessReport(
            skipped=True,
            reason="zero pairing: the finiteness hypothesis c != 0 fails",
            fiber_sizes=[],
            max_fiber=0,
            identity_witness=None,
        )
    partition = block_partition(sample, spec, cset)
    sizes = [len(ws) for _, ws in partition]
    m = len(cset.b) - 1 if cset.b is not None else None
    witness = None
    if m is not None and m >= 1:
        witness = lambda_identity_check(spec.n, m, spec.field)
    return FinitenessReport(
        skipped=False,
        reason=None,
        fiber_sizes=sizes,
        max_fiber=max(sizes, default=0),
        identity_witness=witness,
    )
