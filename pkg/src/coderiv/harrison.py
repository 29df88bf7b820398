"""Shuffle products, shuffle-quotient chain spaces, the Lie cobracket, and
the Harrison complexes of a graded commutative algebra and a symmetric
bimodule.

Quotients are realized concretely: the span of all two-block shuffle images
is echelonized inside the full word space, the quotient basis is the set of
non-pivot words, and every operator is computed on representatives and then
reduced.  Shuffle signs inside quotient constructions use the shifted
degrees deg(a) = |a| - 1; ``shuffle_product`` itself takes whatever degrees
its words carry, so unshifted golden examples stay available by passing
shift-0 words.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

from .algebras import AlgebraPresentation, ModulePresentation, semidirect
from .bar import WordSpace, Taylor, lift_coderivation, lift_morphism, product_taylor
from .chains import add_chain, add_term
from .graded import Word, enumerate_shuffles, koszul_sign
from .linalg import SparseMap, Subspace, member_of_column_space

ONE = Fraction(1)


class QuotientNotPreserved(Exception):
    """An operator expected to descend to the shuffle quotient does not."""


def shuffle_product(alpha: Word, beta: Word) -> dict:
    """Signed sum over all (p,q)-shuffles of the concatenated letters.

    Words must share basis and shift; the Koszul signs use the shift-adjusted
    letter degrees the words carry.
    """
    if alpha.basis is not beta.basis and alpha.basis != beta.basis:
        raise ValueError("words over different bases")
    if alpha.shift != beta.shift:
        raise ValueError("words with different shifts")
    letters = alpha.letters + beta.letters
    degs = alpha.letter_degrees() + beta.letter_degrees()
    p, q = len(alpha), len(beta)
    out: dict = {}
    for sigma in enumerate_shuffles(p, q):
        word = [0] * (p + q)
        for i, pos in enumerate(sigma.images):
            word[pos] = letters[i]
        add_term(out, tuple(word), koszul_sign(degs, sigma))
    return out


def _shuffle_vectors(space: WordSpace) -> list[dict]:
    """All shuffle-image vectors inside a word space (mixed or plain), as
    index vectors: for every split p + q = n and every admissible pair of
    block words."""
    n = space.length
    pres = space.pres
    d = space.module_split
    degs = [pres.degree(i) - 1 for i in range(pres.dim)]
    vectors = []
    shuffles = {p: enumerate_shuffles(p, n - p) for p in range(1, n)}
    if d is None:
        pools = {k: list(itertools.product(range(pres.dim), repeat=k))
                 for k in range(1, n)}
        pairs = ((p, a, b) for p in range(1, n)
                 for a in pools[p] for b in pools[n - p])
    else:
        def plain(k):
            return list(itertools.product(range(d), repeat=k))

        def mixed(k):
            out = []
            for pos in range(k):
                ranges = [range(d)] * k
                ranges[pos] = range(d, pres.dim)
                out.extend(itertools.product(*ranges))
            return out

        def gen():
            for p in range(1, n):
                for a in mixed(p):
                    for b in plain(n - p):
                        yield p, a, b
                for a in plain(p):
                    for b in mixed(n - p):
                        yield p, a, b
        pairs = gen()
    for p, a, b in pairs:
        letters = a + b
        ds = [degs[i] for i in letters]
        vec: dict = {}
        for sigma in shuffles[p]:
            word = [0] * n
            for i, pos in enumerate(sigma.images):
                word[pos] = letters[i]
            add_term(vec, space.index[tuple(word)], koszul_sign(ds, sigma))
        if vec:
            vectors.append(vec)
    return vectors


class ShuffleQuotient:
    """One weight of a shuffle-quotient chain space: the full word space,
    the echelonized shuffle subspace, and the non-pivot quotient basis."""

    def __init__(self, pres: AlgebraPresentation, length: int,
                 module_split: int | None = None):
        self.space = WordSpace(pres, length, module_split)
        if length >= 2:
            self.subspace = Subspace(self.space.dim,
                                     _shuffle_vectors(self.space))
        else:
            self.subspace = Subspace(self.space.dim)
        pivots = set(self.subspace.pivots)
        self.basis = [w for i, w in enumerate(self.space.words)
                      if i not in pivots]
        self.index = {w: i for i, w in enumerate(self.basis)}

    @property
    def dim(self) -> int:
        return len(self.basis)

    def reduce_chain(self, chain: dict) -> dict:
        """Word chain -> chain over the quotient basis."""
        vec = {}
        for w, c in chain.items():
            add_term(vec, self.space.index[w], c)
        red = self.subspace.reduce(vec)
        return {self.space.words[i]: c for i, c in red.items()}

    def reduce_word(self, w: tuple) -> dict:
        return self.reduce_chain({w: ONE})


def cobracket(letters: tuple, deg) -> dict:
    """The Lie cobracket: all two-block splits minus the sign-twisted
    rotations; returns a chain over ordered pairs of words."""
    out: dict = {}
    n = len(letters)
    degs = [deg(i) for i in letters]
    for j in range(1, n):
        left, right = letters[:j], letters[j:]
        add_term(out, (left, right), ONE)
        twist = Fraction(-1) ** ((sum(degs[:j]) * sum(degs[j:])) % 2)
        add_term(out, (right, left), -twist)
    return out


def harrison_chain_space(r: AlgebraPresentation, m: ModulePresentation | None,
                         n: int) -> ShuffleQuotient:
    if m is None:
        return ShuffleQuotient(r, n)
    b = semidirect(r, m)
    return ShuffleQuotient(b, n + 1, module_split=r.dim)


def _check_descends(src: ShuffleQuotient, tgt: ShuffleQuotient,
                    taylor: Taylor, deg) -> None:
    for row in src.subspace.basis:
        chain = {src.space.words[i]: c for i, c in row.items()}
        image: dict = {}
        for w, c in chain.items():
            add_chain(image, lift_coderivation(taylor, w, deg), c)
        if tgt.reduce_chain(image):
            raise QuotientNotPreserved(
                "product coderivation leaves the shuffle subspace")


def _quotient_boundary(src: ShuffleQuotient, tgt: ShuffleQuotient,
                       pres: AlgebraPresentation, check: bool = True) -> SparseMap:
    taylor = product_taylor(pres)
    deg = lambda i: pres.degree(i) - 1
    if check:
        _check_descends(src, tgt, taylor, deg)
    entries = {}
    for j, w in enumerate(src.basis):
        image = tgt.reduce_chain(lift_coderivation(taylor, w, deg))
        for out, c in image.items():
            entries[(tgt.index[out], j)] = c
    return SparseMap(tgt.dim, src.dim, entries)


def harrison_boundary(r: AlgebraPresentation, m: ModulePresentation | None,
                      n: int, check: bool = True) -> SparseMap:
    """Quotient boundary C_n -> C_{n-1}; with a module, C_n carries one
    module letter among n+1 total.  Raises QuotientNotPreserved if the
    lifted product fails to map the shuffle subspace into the target one."""
    if m is None:
        src = ShuffleQuotient(r, n)
        tgt = ShuffleQuotient(r, n - 1)
        return _quotient_boundary(src, tgt, r, check)
    b = semidirect(r, m)
    src = ShuffleQuotient(b, n + 1, module_split=r.dim)
    tgt = ShuffleQuotient(b, n, module_split=r.dim)
    return _quotient_boundary(src, tgt, b, check)


class HarrisonCochainSpace:
    """Maps from the weight-n quotient basis into the module."""

    def __init__(self, r: AlgebraPresentation, m: ModulePresentation, n: int):
        self.alg = r
        self.mod = m
        self.n = n
        self.quotient = ShuffleQuotient(r, n) if n >= 1 else None
        words = self.quotient.basis if n >= 1 else [()]
        self.keys = [(w, v) for w in words for v in range(m.dim)]
        self.index = {k: i for i, k in enumerate(self.keys)}

    @property
    def dim(self) -> int:
        return len(self.keys)

    def cochain_degree(self, key) -> int:
        w, v = key
        return (self.mod.degree(v) - 1) - sum(self.alg.degree(i) - 1 for i in w)


def harrison_cohomology_coboundary(r: AlgebraPresentation,
                                   m: ModulePresentation,
                                   n: int) -> SparseMap:
    """Coboundary on shuffle-quotient cochains, commutator convention (same
    signs as the Hochschild one, all words reduced before evaluation)."""
    from .algebras import symmetrized_right
    left = m.left or {}
    right = m.right if m.right is not None else symmetrized_right(r, m)
    src = HarrisonCochainSpace(r, m, n)
    tgt = HarrisonCochainSpace(r, m, n + 1)
    adeg = lambda i: r.degree(i) - 1
    sign = lambda e: Fraction(-1) ** (e % 2)
    reduce_cache: dict = {}

    def eval_coeff(word_chain: dict, w_key: tuple) -> Fraction:
        """Coefficient of the quotient-basis word w_key in the reduction."""
        total = Fraction(0)
        for y, c in word_chain.items():
            if y not in reduce_cache:
                reduce_cache[y] = src.quotient.reduce_word(y) if src.quotient \
                    else {y: ONE}
            total += c * reduce_cache[y].get(w_key, Fraction(0))
        return total

    entries: dict = {}
    for col, (w, v) in enumerate(src.keys):
        de = src.cochain_degree((w, v))
        for row_word in (tgt.quotient.basis if tgt.quotient else [()]):
            u = row_word
            coeffs: dict[int, Fraction] = {}
            if n >= 0 and len(u) >= 1:
                c_tail = eval_coeff({u[1:]: ONE}, w) if len(u) >= 2 else \
                    (ONE if w == () else Fraction(0))
                if c_tail:
                    s = sign(de * adeg(u[0]) + adeg(u[0])) * c_tail
                    add_chain(coeffs, left.get((u[0], v), {}), s)
                c_head = eval_coeff({u[:-1]: ONE}, w) if len(u) >= 2 else \
                    (ONE if w == () else Fraction(0))
                if c_head:
                    s = sign(de + sum(adeg(x) for x in u[:-1])) * c_head
                    add_chain(coeffs, right.get((v, u[-1]), {}), s)
                for j in range(len(u) - 1):
                    pref = sum(adeg(x) for x in u[:j])
                    merged: dict = {}
                    for k, c in r.prod(u[j], u[j + 1]).items():
                        add_term(merged, u[:j] + (k,) + u[j + 2:], c)
                    c_m = eval_coeff(merged, w)
                    if c_m:
                        s = -sign(de) * sign(pref + adeg(u[j])) * c_m
                        add_term(coeffs, v, s)
            for v2, c in coeffs.items():
                if c:
                    key = (tgt.index[(u, v2)], col)
                    entries[key] = entries.get(key, Fraction(0)) + c
    entries = {k: c for k, c in entries.items() if c}
    return SparseMap(tgt.dim, src.dim, entries)


def harrison_cochain_vector(space: HarrisonCochainSpace, comp: dict) -> dict:
    vec: dict = {}
    for w, chain in comp.items():
        for v, x in chain.items():
            add_term(vec, space.index[(w, v)], x)
    return vec


def c_infty_morphism_cocycle_check(r: AlgebraPresentation,
                                   m: ModulePresentation,
                                   c: dict[int, dict], n_max: int,
                                   check_trivial: bool = False):
    """Morphism/cocycle correspondence over the shuffle quotients.

    The morphism side compares the lifted product coderivations through the
    lifted coalgebra morphism, with every chain reduced into the target
    quotient before comparison.
    """
    from .bar import MorphismReport
    b = semidirect(r, m)
    d = r.dim
    src_quotients = {k: ShuffleQuotient(r, k) for k in range(1, n_max + 2)}
    # Taylor components live on the quotient; extend them to every word of
    # their arity through the reduction so block lookups are well defined.
    comps: dict[int, dict] = {1: {(i,): {i: ONE} for i in range(r.dim)}}
    for j, comp in c.items():
        comps.setdefault(j, {})
        for word in itertools.product(range(r.dim), repeat=j):
            chain: dict = {}
            for z, y in src_quotients[j].reduce_word(word).items():
                for v, x in comp.get(z, {}).items():
                    add_term(chain, v + d, x * y)
            if chain:
                tgtchain = comps[j].setdefault(word, {})
                for v, x in chain.items():
                    add_term(tgtchain, v, x)
    taylor = Taylor(0, comps)
    m_r = product_taylor(r)
    m_b = product_taylor(b)
    degr = lambda i: r.degree(i) - 1
    degb = lambda i: b.degree(i) - 1

    tgt_quotients = {k: ShuffleQuotient(b, k, module_split=None)
                     for k in range(1, n_max + 2)}
    # note: after applying F, module letters appear as ordinary letters of b,
    # so the target quotient is the plain one over the semidirect algebra.

    def reduce_target(chain: dict) -> dict:
        out: dict = {}
        bylen: dict[int, dict] = {}
        for w, x in chain.items():
            bylen.setdefault(len(w), {})[w] = x
        for k, ch in bylen.items():
            red = tgt_quotients[k].reduce_chain(ch)
            for w, x in red.items():
                add_term(out, w, x)
        return out

    defects = []
    for length in range(2, n_max + 2):
        broken = False
        for w in src_quotients[length].basis:
            lhs: dict = {}
            for fw, x in lift_morphism(taylor, w).items():
                add_chain(lhs, lift_coderivation(m_b, fw, degb), x)
            rhs: dict = {}
            for dw, x in lift_coderivation(m_r, w, degr).items():
                red = src_quotients[length - 1].reduce_word(dw)
                for rw, y in red.items():
                    add_chain(rhs, lift_morphism(taylor, rw), x * y)
            if reduce_target(lhs) != reduce_target(rhs):
                broken = True
                break
        if broken:
            defects.append(length)

    failures = []
    for j in range(1, n_max + 1):
        comp = c.get(j, {})
        space = HarrisonCochainSpace(r, m, j)
        vec = harrison_cochain_vector(space, comp)
        if harrison_cohomology_coboundary(r, m, j).apply(vec):
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
                space = HarrisonCochainSpace(r, m, j)
                vec = harrison_cochain_vector(space, comp)
                mat = harrison_cohomology_coboundary(r, m, j - 1)
                if not member_of_column_space(mat, vec):
                    trivial = False
                    break
    return MorphismReport(is_morphism, defects, failures, agree, trivial)
