"""Tensor coalgebra machinery: deconcatenation, lifts of coderivations and
morphisms, the bar and Hochschild complexes, the bar homotopy, and the
morphism/cocycle correspondence.

Words are plain tuples of basis indices into a presentation; every chain is
a dict {word: Fraction}.  All words here live over the shifted space, so a
letter of algebra degree |a| weighs deg(a) = |a| - 1 in sign computations.
The one deliberate exception is ``classical_bar_boundary``, which implements
the unshifted alternating-sum differential (the form in which the homotopy
identity h d + d h = id holds); the lifted product coderivation equals minus
that operator on an ungraded algebra, which the tests pin down.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction

from .algebras import AlgebraPresentation, ModulePresentation, NoUnit, semidirect
from .chains import add_chain, add_term
from .linalg import SparseMap, member_of_column_space

ONE = Fraction(1)


# ---------------------------------------------------------------------------
# word spaces
# ---------------------------------------------------------------------------

class WordSpace:
    """An enumerated basis of words of a fixed length over a presentation.

    With ``module_split = d`` the space is the mixed one: words carrying
    exactly one letter with index >= d.  Mixed words are enumerated
    module-position-major, then lexicographically in the letter indices.
    """

    def __init__(self, pres: AlgebraPresentation, length: int,
                 module_split: int | None = None):
        self.pres = pres
        self.length = length
        self.module_split = module_split
        dim = pres.dim
        words: list[tuple[int, ...]] = []
        if module_split is None:
            words = list(itertools.product(range(dim), repeat=length))
        else:
            d = module_split
            for pos in range(length):
                ranges = [range(d)] * length
                ranges[pos] = range(d, dim)
                words.extend(itertools.product(*ranges))
        self.words = words
        self.index = {w: i for i, w in enumerate(words)}

    @property
    def dim(self) -> int:
        return len(self.words)

    def letter_degree(self, i: int) -> int:
        return self.pres.degree(i) - 1

    def word_degree(self, w: tuple[int, ...]) -> int:
        return sum(self.pres.degree(i) - 1 for i in w)

    def internal_degree(self, w: tuple[int, ...]) -> int:
        return sum(self.pres.degree(i) for i in w)


def matrix_between(source: "WordSpace", target: "WordSpace", image) -> SparseMap:
    """Matrix of the linear map sending each source word to image(word),
    a chain over target words."""
    entries = {}
    for j, w in enumerate(source.words):
        for out, c in image(w).items():
            entries[(target.index[out], j)] = c
    return SparseMap(target.dim, source.dim, entries)


# ---------------------------------------------------------------------------
# the coalgebra and its lifts
# ---------------------------------------------------------------------------

def deconcat(letters: tuple[int, ...]) -> list[tuple[tuple, tuple, Fraction]]:
    """All two-block splits of a word, each with coefficient +1; a single
    letter has none."""
    n = len(letters)
    return [(letters[:j], letters[j:], ONE) for j in range(1, n)]


@dataclass
class Taylor:
    """Arity-indexed family of linear maps from words to single letters.

    ``comps[r]`` maps length-r words to chains over letters of the target
    presentation.  ``degree`` is the common degree of the maps.
    """

    degree: int
    comps: dict[int, dict[tuple, dict[int, Fraction]]] = field(default_factory=dict)

    def component(self, r: int, word: tuple) -> dict[int, Fraction]:
        return self.comps.get(r, {}).get(word, {})

    def arities(self):
        return sorted(self.comps)


def product_taylor(pres: AlgebraPresentation) -> Taylor:
    """The degree-1 arity-2 coefficient m(a, b) = (-1)^{deg a} (a b)."""
    comps: dict[tuple, dict[int, Fraction]] = {}
    for (i, j), t in (pres.product or {}).items():
        sign = Fraction(-1) ** ((pres.degree(i) - 1) % 2)
        chain = {k: sign * c for k, c in t.items()}
        if chain:
            comps[(i, j)] = chain
    return Taylor(1, {2: comps})


def lift_coderivation(t: Taylor, letters: tuple, deg) -> dict:
    """The coderivation with Taylor coefficients ``t`` evaluated on a word.

    Sums sign * prefix (x) t_r(window) (x) suffix over all length-r windows,
    with sign = (-1)^{deg(t) * (degrees before the window)}.  ``deg`` maps a
    letter index to its shifted degree.
    """
    out: dict = {}
    n = len(letters)
    prefix_degs = [0] * (n + 1)
    for i, a in enumerate(letters):
        prefix_degs[i + 1] = prefix_degs[i] + deg(a)
    for r in t.arities():
        if r > n:
            continue
        for j in range(n - r + 1):
            window = letters[j:j + r]
            val = t.component(r, window)
            if not val:
                continue
            sign = Fraction(-1) ** ((t.degree * prefix_degs[j]) % 2)
            for letter, c in val.items():
                word = letters[:j] + (letter,) + letters[j + r:]
                add_term(out, word, sign * c)
    return out


def lift_morphism(t: Taylor, letters: tuple) -> dict:
    """The coalgebra morphism with Taylor coefficients ``t``: the sum over
    ordered compositions of the word into blocks, each fed to its arity
    component.  No signs enter (the components are degree 0)."""
    n = len(letters)
    out: dict = {}

    def walk(pos: int, word: tuple, coeff: Fraction):
        if pos == n:
            add_term(out, word, coeff)
            return
        for r in t.arities():
            if pos + r > n:
                continue
            val = t.component(r, letters[pos:pos + r])
            for letter, c in val.items():
                walk(pos + r, word + (letter,), coeff * c)

    walk(0, (), ONE)
    return out


def coderivation_on_chain(t: Taylor, chain: dict, deg) -> dict:
    out: dict = {}
    for w, c in chain.items():
        add_chain(out, lift_coderivation(t, w, deg), c)
    return out


def morphism_on_chain(t: Taylor, chain: dict) -> dict:
    out: dict = {}
    for w, c in chain.items():
        add_chain(out, lift_morphism(t, w), c)
    return out


# ---------------------------------------------------------------------------
# complexes
# ---------------------------------------------------------------------------

def lifted_boundary(pres: AlgebraPresentation, length: int) -> SparseMap:
    """Matrix of the lifted product coderivation on length-letter words."""
    src = WordSpace(pres, length)
    tgt = WordSpace(pres, length - 1)
    t = product_taylor(pres)
    deg = lambda i: pres.degree(i) - 1
    return matrix_between(src, tgt, lambda w: lift_coderivation(t, w, deg))


def classical_bar_boundary(pres: AlgebraPresentation, n: int) -> SparseMap:
    """The alternating-sum bar differential on C_n = (n+1)-letter words:
    sum_j (-1)^j (... a_j a_{j+1} ...), no degree signs."""
    src = WordSpace(pres, n + 1)
    tgt = WordSpace(pres, n)

    def image(w):
        out: dict = {}
        for j in range(len(w) - 1):
            sign = Fraction(-1) ** (j % 2)
            for k, c in pres.prod(w[j], w[j + 1]).items():
                add_term(out, w[:j] + (k,) + w[j + 2:], sign * c)
        return out

    return matrix_between(src, tgt, image)


def bar_homotopy(pres: AlgebraPresentation, n: int) -> SparseMap:
    """h(w) = unit (x) w, as a matrix from n-letter to (n+1)-letter words."""
    if pres.unit is None:
        raise NoUnit("bar homotopy needs a unital algebra")
    src = WordSpace(pres, n)
    tgt = WordSpace(pres, n + 1)
    e = pres.unit
    return matrix_between(src, tgt, lambda w: {(e,) + w: ONE})


def hochschild_setup(a: AlgebraPresentation, m: ModulePresentation):
    """Semidirect presentation plus the index where module letters start."""
    b = semidirect(a, m)
    return b, a.dim


def hochschild_space(a: AlgebraPresentation, m: ModulePresentation,
                     n: int) -> WordSpace:
    """C_n(A, M): n+1 letters, exactly one from the module."""
    b, d = hochschild_setup(a, m)
    return WordSpace(b, n + 1, module_split=d)


def hochschild_boundary(a: AlgebraPresentation, m: ModulePresentation,
                        n: int) -> SparseMap:
    """The lifted product coderivation of the semidirect algebra restricted
    to the one-module-letter words: C_n(A,M) -> C_{n-1}(A,M)."""
    b, d = hochschild_setup(a, m)
    src = WordSpace(b, n + 1, module_split=d)
    tgt = WordSpace(b, n, module_split=d)
    t = product_taylor(b)
    deg = lambda i: b.degree(i) - 1
    return matrix_between(src, tgt, lambda w: lift_coderivation(t, w, deg))


# ---------------------------------------------------------------------------
# cochains
# ---------------------------------------------------------------------------

class CochainSpace:
    """Maps from n-letter words over the algebra into the module: the basis
    is all pairs (word, module index)."""

    def __init__(self, a: AlgebraPresentation, m: ModulePresentation, n: int):
        self.alg = a
        self.mod = m
        self.n = n
        words = list(itertools.product(range(a.dim), repeat=n))
        self.keys = [(w, v) for w in words for v in range(m.dim)]
        self.index = {k: i for i, k in enumerate(self.keys)}

    @property
    def dim(self) -> int:
        return len(self.keys)

    def cochain_degree(self, key) -> int:
        w, v = key
        return (self.mod.degree(v) - 1) - sum(self.alg.degree(i) - 1 for i in w)


def _module_actions(a: AlgebraPresentation, m: ModulePresentation):
    from .algebras import symmetrized_right
    right = m.right
    if right is None and a.kind in ("commutative", "gerstenhaber"):
        right = symmetrized_right(a, m)
    if m.left is None or right is None:
        raise ValueError("bimodule actions missing")
    return m.left, right


def hochschild_cohomology_coboundary(a: AlgebraPresentation,
                                     m: ModulePresentation,
                                     n: int) -> SparseMap:
    """Coboundary C^n(A,M) -> C^{n+1}(A,M) in the graded commutator
    convention d(e) = m o e~ - (-1)^{deg e} e~ o m, which reduces to the
    classical alternating formula (up to a per-degree global sign) when all
    degrees vanish.  Squares to zero for coefficients of any degree."""
    left, right = _module_actions(a, m)
    src = CochainSpace(a, m, n)
    tgt = CochainSpace(a, m, n + 1)
    adeg = lambda i: a.degree(i) - 1
    entries: dict = {}

    sign = lambda e: Fraction(-1) ** (e % 2)

    for col, (w, v) in enumerate(src.keys):
        de = src.cochain_degree((w, v))
        for u in itertools.product(range(a.dim), repeat=n + 1):
            coeffs: dict[int, Fraction] = {}
            # a_0 . e(a_1 ... a_n)
            if u[1:] == w:
                s = sign(de * adeg(u[0]) + adeg(u[0]))
                add_chain(coeffs, left.get((u[0], v), {}), s)
            # e(a_0 ... a_{n-1}) . a_n
            if u[:-1] == w:
                s = sign(de + sum(adeg(x) for x in u[:-1]))
                add_chain(coeffs, right.get((v, u[-1]), {}), s)
            # - (-1)^{deg e} e(... m(a_j, a_{j+1}) ...)
            for j in range(n):
                pref = sum(adeg(x) for x in u[:j])
                for k, c in a.prod(u[j], u[j + 1]).items():
                    if u[:j] + (k,) + u[j + 2:] == w:
                        s = -sign(de) * sign(pref + adeg(u[j])) * c
                        add_term(coeffs, v, s)
            for v2, c in coeffs.items():
                if c:
                    entries[(tgt.index[(u, v2)], col)] = \
                        entries.get((tgt.index[(u, v2)], col), Fraction(0)) + c
    entries = {k: c for k, c in entries.items() if c}
    return SparseMap(tgt.dim, src.dim, entries)


# ---------------------------------------------------------------------------
# morphisms versus cocycles
# ---------------------------------------------------------------------------

@dataclass
class MorphismReport:
    is_morphism: bool
    defect_weights: list[int]
    cocycle_failures: list[int]
    agree: bool
    trivial: bool | None = None


def _taylor_from_cochains(a: AlgebraPresentation, b: AlgebraPresentation,
                          d: int, c: dict[int, dict]) -> Taylor:
    """F_1 = inclusion + c_1, F_r = c_r, as a Taylor family into the
    semidirect presentation (module letters shifted by d)."""
    comps: dict[int, dict[tuple, dict[int, Fraction]]] = {}
    comps[1] = {}
    for i in range(a.dim):
        comps[1][(i,)] = {i: ONE}
    for r, comp in c.items():
        comps.setdefault(r, {})
        for w, chain in comp.items():
            tgt = comps[r].setdefault(w, {})
            for v, x in chain.items():
                add_term(tgt, v + d, x)
    return Taylor(0, comps)


def morphism_defect_weights(a: AlgebraPresentation, m: ModulePresentation,
                            c: dict[int, dict], n_max: int) -> list[int]:
    """Weights w in 2..n_max+1 where m_B F - F m_A is nonzero on w-letter
    words; empty exactly when F is a morphism up to that scale."""
    b, d = hochschild_setup(a, m)
    taylor = _taylor_from_cochains(a, b, d, c)
    m_a = product_taylor(a)
    m_b = product_taylor(b)
    dega = lambda i: a.degree(i) - 1
    degb = lambda i: b.degree(i) - 1
    bad = []
    for length in range(2, n_max + 2):
        broken = False
        for w in itertools.product(range(a.dim), repeat=length):
            lhs = coderivation_on_chain(m_b, lift_morphism(taylor, w), degb)
            rhs = morphism_on_chain(taylor,
                                    lift_coderivation(m_a, w, dega))
            if lhs != rhs:
                broken = True
                break
        if broken:
            bad.append(length)
    return bad


def cochain_vector(space: CochainSpace, comp: dict) -> dict:
    vec: dict = {}
    for w, chain in comp.items():
        for v, x in chain.items():
            add_term(vec, space.index[(w, v)], x)
    return vec


def morphism_cocycle_check(a: AlgebraPresentation, m: ModulePresentation,
                           c: dict[int, dict], n_max: int,
                           check_trivial: bool = False) -> MorphismReport:
    """Evaluate both sides of the morphism/cocycle correspondence.

    ``c`` maps arity j to a cochain component {word: {module index: coeff}}.
    The morphism side checks m_B F = F m_A on words of length <= n_max + 1;
    the cocycle side applies the Hochschild coboundary to each c_j, j <= n_max.
    """
    defects = morphism_defect_weights(a, m, c, n_max)
    failures = []
    for j in range(1, n_max + 1):
        comp = c.get(j, {})
        space = CochainSpace(a, m, j)
        vec = cochain_vector(space, comp)
        mat = hochschild_cohomology_coboundary(a, m, j)
        if mat.apply(vec):
            failures.append(j)
    is_morphism = not defects
    agree = is_morphism == (not failures)
    trivial = None
    if check_trivial and is_morphism:
        trivial = not c.get(1)
        if trivial:
            for j in range(2, n_max + 1):
                comp = c.get(j, {})
                if not comp:
                    continue
                space = CochainSpace(a, m, j)
                vec = cochain_vector(space, comp)
                mat = hochschild_cohomology_coboundary(a, m, j - 1)
                if not member_of_column_space(mat, vec):
                    trivial = False
                    break
    return MorphismReport(is_morphism, defects, failures, agree, trivial)
