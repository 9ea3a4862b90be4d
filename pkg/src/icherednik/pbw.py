"""PBW rewriting engine for deformed semidirect-product algebras.

The algebras handled here are generated by the gl_n basis E(i,j) together
with a standard representation V with basis Y(1..n) and its dual V* with
basis X(1..n), subject to

    [E(i,j), E(k,l)] = d_jk E(i,l) - d_li E(k,j)
    [E(i,j), Y(k)]   = d_jk Y(i)
    [E(i,j), X(k)]   = -d_ik X(j)
    [Y(i), Y(j)] = [X(i), X(j)] = 0
    [Y(i), X(j)] = ctable(i, j)      (a fixed element of the E-subalgebra)

Everything is driven by rewriting words into the PBW normal form with
respect to one global generator order: all E letters first (lowering
E(i,j) with i > j, then diagonal, then raising, lex within each class),
then Y(1) < ... < Y(n), then X(1) < ... < X(n).  A word is normal iff its
letters are nondecreasing.  Each swap of an adjacent inversion either
preserves the number of Y/X letters while lowering the inversion count or
strictly drops it (the [Y, X] rule), so rewriting terminates.

Elements are `NCElement`: finite maps from normal words to nonzero
scalars.  The commutator table lives on `AlgebraSpec`, which also hosts a
normal-form cache (safe to share across threads: entries are only ever
added, and dict publication is atomic in CPython).
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations_with_replacement, permutations
from math import factorial

from .polyring import Poly


# ---------------------------------------------------------------------------
# Generators.  A generator is a plain tuple: ('E', i, j), ('Y', i), ('X', i).
# ---------------------------------------------------------------------------


def E(i: int, j: int):
    return ("E", i, j)


def Y(i: int):
    return ("Y", i)


def X(i: int):
    return ("X", i)


@lru_cache(maxsize=None)
def gen_sort_key(g):
    """Global order: lowering E < diagonal E < raising E < Y(1..n) < X(1..n)."""
    if g[0] == "E":
        i, j = g[1], g[2]
        cls = 0 if i > j else (1 if i == j else 2)
        return (0, cls, i, j)
    if g[0] == "Y":
        return (1, 0, g[1], 0)
    return (2, 0, g[1], 0)


def gen_token(g) -> str:
    if g[0] == "E":
        return f"E({g[1]},{g[2]})"
    return f"{g[0]}({g[1]})"


def parse_gen(token: str):
    kind, rest = token[0], token[1:]
    if not (rest.startswith("(") and rest.endswith(")")):
        raise ValueError(f"bad generator token {token!r}")
    body = rest[1:-1]
    if kind == "E":
        i, j = body.split(",")
        return E(int(i), int(j))
    if kind in ("Y", "X"):
        return (kind, int(body))
    raise ValueError(f"bad generator token {token!r}")


def generators(n: int):
    """All generators of the rank-n algebra, in the global order."""
    gens = [E(i, j) for i in range(1, n + 1) for j in range(1, n + 1)]
    gens += [Y(i) for i in range(1, n + 1)]
    gens += [X(i) for i in range(1, n + 1)]
    gens.sort(key=gen_sort_key)
    return gens


def is_normal_word(word) -> bool:
    keys = [gen_sort_key(g) for g in word]
    return all(keys[i] <= keys[i + 1] for i in range(len(keys) - 1))


def word_filtration(word) -> int:
    return sum(1 for g in word if g[0] != "E")


# ---------------------------------------------------------------------------
# Elements.
# ---------------------------------------------------------------------------


class NCElement:
    """Finite linear combination of PBW-normal words with nonzero scalars."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict, _validated: bool = False):
        clean = {w: c for w, c in terms.items() if c}
        if not _validated:
            for w in clean:
                if not is_normal_word(w):
                    raise ValueError(f"word {tuple(map(gen_token, w))} is not normal")
        self.terms = clean

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, NCElement):
            return self.terms == other.terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other):
        out = dict(self.terms)
        for w, c in other.terms.items():
            s = out.get(w)
            s = c if s is None else s + c
            if s:
                out[w] = s
            else:
                out.pop(w, None)
        return NCElement(out, _validated=True)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return NCElement({w: -c for w, c in self.terms.items()}, _validated=True)

    def scaled(self, c) -> "NCElement":
        if not c:
            return NCElement({}, _validated=True)
        return NCElement({w: v * c for w, v in self.terms.items()}, _validated=True)

    def __mul__(self, scalar):
        return self.scaled(scalar)

    __rmul__ = __mul__

    def __repr__(self):
        if not self.terms:
            return "0"
        bits = []
        for w in sorted(self.terms, key=lambda word: (len(word), tuple(map(gen_sort_key, word)))):
            c = self.terms[w]
            word = "*".join(gen_token(g) for g in w) if w else "1"
            bits.append(f"({c})*{word}" if w else f"({c})")
        return " + ".join(bits)


ZERO = NCElement({}, _validated=True)


def element_from_word(field, word, coeff=None) -> NCElement:
    c = field.one if coeff is None else field(coeff)
    word = tuple(word)
    if not is_normal_word(word):
        raise ValueError("word is not normal")
    return NCElement({word: c} if c else {}, _validated=True)


def scalar_element(field, value) -> NCElement:
    c = field(value)
    return NCElement({(): c} if c else {}, _validated=True)


def filtration_degree(a: NCElement):
    """Max number of Y/X letters over the words of `a`; None for the zero
    element (a distinguished marker, never an integer)."""
    if not a.terms:
        return None
    return max(word_filtration(w) for w in a.terms)


# ---------------------------------------------------------------------------
# The algebra presentation.
# ---------------------------------------------------------------------------


class AlgebraSpec:
    """Rank, coefficient field and the commutator table [Y(i), X(j)].

    The table entries must be supported on E letters only.  Instances are
    immutable; they carry caches for single-letter brackets and for normal
    forms of words.
    """

    __slots__ = ("n", "field", "ctable", "_bracket_cache", "_nf_cache")

    def __init__(self, n: int, field, ctable: dict | None = None):
        self.n = n
        self.field = field
        table = {}
        for (i, j), el in (ctable or {}).items():
            if not (1 <= i <= n and 1 <= j <= n):
                raise ValueError(f"ctable index ({i}, {j}) out of range")
            if not isinstance(el, NCElement):
                raise TypeError("ctable entries must be NCElements")
            for w, c in el.terms.items():
                if any(g[0] != "E" for g in w):
                    raise ValueError("ctable entries may contain E letters only")
                if not field.element_of(c):
                    raise ValueError("ctable coefficient not in the base field")
            if el:
                table[(i, j)] = el
        self.ctable = table
        self._bracket_cache = {}
        self._nf_cache = {}

    @property
    def characteristic(self) -> int:
        return self.field.characteristic

    def pairing(self, i: int, j: int) -> NCElement:
        return self.ctable.get((i, j), ZERO)

    def one(self) -> NCElement:
        return scalar_element(self.field, 1)

    def gen(self, g) -> NCElement:
        return element_from_word(self.field, (g,))

    def generators(self):
        return generators(self.n)

    def __repr__(self):
        deformed = "deformed" if self.ctable else "undeformed"
        return f"AlgebraSpec(n={self.n}, field={self.field!r}, {deformed})"


def undeformed_spec(n: int, field) -> AlgebraSpec:
    """The enveloping algebra of gl_n acting on V + V* (ctable = 0)."""
    return AlgebraSpec(n, field, {})


def _bracket(g1, g2, spec: AlgebraSpec) -> dict:
    """[g1, g2] as a map word -> coefficient (words already normal)."""
    cached = spec._bracket_cache.get((g1, g2))
    if cached is not None:
        return cached
    field = spec.field
    one = field.one
    out: dict = {}

    def put(word, coeff):
        if coeff:
            out[word] = out.get(word, field.zero) + coeff
            if not out[word]:
                del out[word]

    k1, k2 = g1[0], g2[0]
    if k1 == "E" and k2 == "E":
        i, j = g1[1], g1[2]
        k, l = g2[1], g2[2]
        if j == k:
            put((E(i, l),), one)
        if l == i:
            put((E(k, j),), -one)
    elif k1 == "E" and k2 == "Y":
        if g1[2] == g2[1]:
            put((Y(g1[1]),), one)
    elif k1 == "E" and k2 == "X":
        if g1[1] == g2[1]:
            put((X(g1[2]),), -one)
    elif k1 == "Y" and k2 == "E":
        if g2[2] == g1[1]:
            put((Y(g2[1]),), -one)
    elif k1 == "X" and k2 == "E":
        if g2[1] == g1[1]:
            put((X(g2[2]),), one)
    elif k1 == "Y" and k2 == "X":
        for w, c in spec.pairing(g1[1], g2[1]).terms.items():
            put(w, c)
    elif k1 == "X" and k2 == "Y":
        for w, c in spec.pairing(g2[1], g1[1]).terms.items():
            put(w, -c)
    # Y,Y and X,X commute: empty bracket.
    clean = {w: c for w, c in out.items() if c}
    spec._bracket_cache[(g1, g2)] = clean
    return clean


def _normal_word(word: tuple, spec: AlgebraSpec) -> dict:
    """Normal form of a single (arbitrary) word: map normal word -> scalar.

    Leftmost-innermost strategy: repeatedly rewrite the first adjacent
    inversion g1 g2 -> g2 g1 + [g1, g2].
    """
    cached = spec._nf_cache.get(word)
    if cached is not None:
        return cached
    field = spec.field
    result: dict = {}
    stack = [(word, field.one)]
    while stack:
        w, c = stack.pop()
        inv = None
        for i in range(len(w) - 1):
            if gen_sort_key(w[i]) > gen_sort_key(w[i + 1]):
                inv = i
                break
        if inv is None:
            s = result.get(w)
            s = c if s is None else s + c
            if s:
                result[w] = s
            else:
                result.pop(w, None)
            continue
        g1, g2 = w[inv], w[inv + 1]
        stack.append((w[:inv] + (g2, g1) + w[inv + 2:], c))
        for bw, bc in _bracket(g1, g2, spec).items():
            stack.append((w[:inv] + bw + w[inv + 2:], c * bc))
    spec._nf_cache[word] = result
    return result


def _check_compatible(a: NCElement, spec: AlgebraSpec):
    for w, c in a.terms.items():
        for g in w:
            if g[1] > spec.n or (g[0] == "E" and g[2] > spec.n):
                raise ValueError(f"generator {gen_token(g)} exceeds rank {spec.n}")
        if not spec.field.element_of(c):
            raise ValueError("coefficient does not belong to the spec's field")


def multiply(a: NCElement, b: NCElement, spec: AlgebraSpec) -> NCElement:
    """Product in normal form."""
    _check_compatible(a, spec)
    _check_compatible(b, spec)
    out: dict = {}
    for wa, ca in a.terms.items():
        for wb, cb in b.terms.items():
            c = ca * cb
            for w, k in _normal_word(wa + wb, spec).items():
                s = out.get(w)
                v = c * k
                s = v if s is None else s + v
                if s:
                    out[w] = s
                else:
                    out.pop(w, None)
    return NCElement(out, _validated=True)


def commutator(a: NCElement, b: NCElement, spec: AlgebraSpec) -> NCElement:
    return multiply(a, b, spec) - multiply(b, a, spec)


def anti_involution(a: NCElement, spec: AlgebraSpec) -> NCElement:
    """The product-reversing map E(i,j) -> E(j,i), Y(i) <-> X(i)."""

    def flip(g):
        if g[0] == "E":
            return E(g[2], g[1])
        return (("X" if g[0] == "Y" else "Y"), g[1])

    out = ZERO
    for w, c in a.terms.items():
        flipped = tuple(flip(g) for g in reversed(w))
        nf = _normal_word(flipped, spec)
        out = out + NCElement({wd: c * k for wd, k in nf.items()}, _validated=True)
    return out


# ---------------------------------------------------------------------------
# Symmetrization from commutative polynomials.
# ---------------------------------------------------------------------------


def _symmetrize_letters(letters, coeff, spec: AlgebraSpec) -> NCElement:
    """Average of all orderings of a multiset of letters, normal-ordered."""
    d = len(letters)
    p = spec.characteristic
    if p and d >= p:
        raise ValueError(
            f"symmetrization needs degree < characteristic ({d} >= {p})"
        )
    field = spec.field
    dfact = field(factorial(d))
    out: dict = {}
    seen = set()
    mult = 1
    counts: dict = {}
    for g in letters:
        counts[g] = counts.get(g, 0) + 1
    for c in counts.values():
        mult *= factorial(c)
    weight = coeff * (field(mult) / dfact)
    for perm in permutations(letters):
        if perm in seen:
            continue
        seen.add(perm)
        for w, k in _normal_word(perm, spec).items():
            s = out.get(w)
            v = weight * k
            s = v if s is None else s + v
            if s:
                out[w] = s
            else:
                out.pop(w, None)
    return NCElement(out, _validated=True)


def symmetrization(p: Poly, spec: AlgebraSpec) -> NCElement:
    """Image of a matrix polynomial under the symmetrization map into the
    enveloping algebra: each degree-d monomial goes to the average of its
    d! orderings as a word in E letters, normal-ordered.

    Requires every monomial degree < p in characteristic p (so that d! is
    invertible).
    """
    n = spec.n
    if p.ring.nvars != n * n:
        raise ValueError("polynomial does not live on n x n matrices")
    out = ZERO
    for e, c in p.terms.items():
        letters = []
        for idx, k in enumerate(e):
            i, j = divmod(idx, n)
            letters.extend([E(i + 1, j + 1)] * k)
        out = out + _symmetrize_letters(tuple(letters), c, spec)
    return out


def sym_on_L(p: Poly, spec: AlgebraSpec) -> NCElement:
    """Symmetrization over the full alphabet: e_ij -> E(i,j), u_i -> Y(i),
    w_i -> X(i).  Input lives in the semidirect coordinate ring."""
    n = spec.n
    if p.ring.nvars != n * n + 2 * n:
        raise ValueError("polynomial does not live on the semidirect product")
    out = ZERO
    for e, c in p.terms.items():
        letters = []
        for idx, k in enumerate(e):
            if idx < n * n:
                i, j = divmod(idx, n)
                letters.extend([E(i + 1, j + 1)] * k)
            elif idx < n * n + n:
                letters.extend([Y(idx - n * n + 1)] * k)
            else:
                letters.extend([X(idx - n * n - n + 1)] * k)
        out = out + _symmetrize_letters(tuple(letters), c, spec)
    return out


# ---------------------------------------------------------------------------
# Consistency of the rewriting system (diamond-lemma overlaps).
# ---------------------------------------------------------------------------


class PBWReport:
    """Outcome of the confluence and associativity checks."""

    def __init__(self):
        self.overlap_failures = []  # (g1, g2, g3) descending triples
        self.assoc_failures = []  # (word_a, word_b, word_c)
        self.overlaps_checked = 0
        self.assoc_checked = 0

    @property
    def ok(self) -> bool:
        return not self.overlap_failures and not self.assoc_failures

    def __repr__(self):
        if self.ok:
            return (
                f"PBWReport(ok, overlaps={self.overlaps_checked},"
                f" associativity={self.assoc_checked})"
            )
        return (
            f"PBWReport(FAIL, overlap_failures={len(self.overlap_failures)},"
            f" assoc_failures={len(self.assoc_failures)})"
        )


def _resolve_pair_first(w3: tuple, pos: int, spec: AlgebraSpec) -> dict:
    """Rewrite the pair at `pos` once (if inverted), then reduce fully."""
    g1, g2 = w3[pos], w3[pos + 1]
    field = spec.field
    if gen_sort_key(g1) <= gen_sort_key(g2):
        return _normal_word(w3, spec)
    out: dict = {}

    def add_all(nf, factor):
        for w, k in nf.items():
            s = out.get(w)
            v = factor * k
            s = v if s is None else s + v
            if s:
                out[w] = s
            else:
                out.pop(w, None)

    swapped = w3[:pos] + (g2, g1) + w3[pos + 2:]
    add_all(_normal_word(swapped, spec), field.one)
    for bw, bc in _bracket(g1, g2, spec).items():
        add_all(_normal_word(w3[:pos] + bw + w3[pos + 2:], spec), bc)
    return out


def _normal_words_of_length(n: int, length: int):
    return combinations_with_replacement(generators(n), length)


def check_pbw_consistency(spec: AlgebraSpec, maxdeg: int = 3) -> PBWReport:
    """Diamond-lemma style consistency of the relations.

    For every descending generator triple g1 >= g2 >= g3, the word g1 g2 g3
    is reduced two ways (resolving the left pair first vs. the right pair
    first); the results must agree.  Associativity (a*b)*c = a*(b*c) is
    then checked on all triples of normal words of total length <= maxdeg.
    Failures are returned as data, not raised.
    """
    if maxdeg < 3:
        raise ValueError("maxdeg must be >= 3")
    report = PBWReport()
    gens = generators(spec.n)
    desc = [
        (g1, g2, g3)
        for a, g1 in enumerate(gens)
        for b, g2 in enumerate(gens[: a + 1])
        for g3 in gens[: b + 1]
    ]
    for g1, g2, g3 in desc:
        left = _resolve_pair_first((g1, g2, g3), 0, spec)
        right = _resolve_pair_first((g1, g2, g3), 1, spec)
        report.overlaps_checked += 1
        if left != right:
            report.overlap_failures.append((g1, g2, g3))

    words_by_len = {
        d: [tuple(w) for w in _normal_words_of_length(spec.n, d)]
        for d in range(1, max(1, maxdeg - 2) + 1)
    }
    field = spec.field
    for la in words_by_len:
        for lb in words_by_len:
            for lc in words_by_len:
                if la + lb + lc > maxdeg:
                    continue
                for wa in words_by_len[la]:
                    ea = element_from_word(field, wa)
                    for wb in words_by_len[lb]:
                        eb = element_from_word(field, wb)
                        ab = multiply(ea, eb, spec)
                        for wc in words_by_len[lc]:
                            ec = element_from_word(field, wc)
                            report.assoc_checked += 1
                            if multiply(ab, ec, spec) != multiply(
                                ea, multiply(eb, ec, spec), spec
                            ):
                                report.assoc_failures.append((wa, wb, wc))
    return report


def check_ctable_equivariance(spec: AlgebraSpec) -> bool:
    """gl_n-equivariance of the pairing, verified with the engine:
    [E(k,l), ctable(i,j)] = d_li ctable(k,j) - d_kj ctable(i,l)."""
    field = spec.field
    n = spec.n
    for k in range(1, n + 1):
        for l in range(1, n + 1):
            ekl = spec.gen(E(k, l))
            for i in range(1, n + 1):
                for j in range(1, n + 1):
                    lhs = commutator(ekl, spec.pairing(i, j), spec)
                    rhs = ZERO
                    if l == i:
                        rhs = rhs + spec.pairing(k, j)
                    if k == j:
                        rhs = rhs - spec.pairing(i, l)
                    if lhs != rhs:
                        return False
    return True


# ---------------------------------------------------------------------------
# JSON serialization.
# ---------------------------------------------------------------------------


def nc_to_json(a: NCElement, spec: AlgebraSpec) -> dict:
    field = spec.field
    words = sorted(a.terms, key=lambda w: (len(w), tuple(map(gen_sort_key, w))))
    return {
        "n": spec.n,
        "char": spec.characteristic,
        "terms": [[field.to_str(a.terms[w]), [gen_token(g) for g in w]] for w in words],
    }


def nc_from_json(data: dict, spec: AlgebraSpec, renormalize: bool = False) -> NCElement:
    """Parse the NCElement JSON form.

    Non-normal words are rejected unless `renormalize` is set, in which
    case they are rewritten into normal form using the spec's relations.
    """
    if data.get("n") != spec.n:
        raise ValueError("rank mismatch")
    if data.get("char") != spec.characteristic:
        raise ValueError("characteristic mismatch")
    field = spec.field
    out: dict = {}
    for coeff_str, tokens in data["terms"]:
        word = tuple(parse_gen(t) for t in tokens)
        c = field(coeff_str)
        if not c:
            continue
        if is_normal_word(word):
            out[word] = out.get(word, field.zero) + c
        elif renormalize:
            for w, k in _normal_word(word, spec).items():
                out[w] = out.get(w, field.zero) + c * k
        else:
            raise ValueError(
                f"word {tokens} is not normal (pass renormalize=True to reduce)"
            )
    return NCElement(out)
