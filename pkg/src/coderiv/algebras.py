"""Presentations of the four algebra kinds, their modules, axiom checks and
semidirect products.

Structure constants are stored sparsely: ``table[(i, j)] = {k: coeff}``.
Degrees follow the source conventions: products have degree 0 in every kind;
the bracket has degree 0 on a lie presentation and degree -1 on a
gerstenhaber one (where its signs use the shifted degree deg(a) = |a| - 1).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .chains import add_term, add_chain
from .graded import GradedBasis

KINDS = ("associative", "commutative", "lie", "gerstenhaber")

Table = dict  # {(i, j): {k: Fraction}}


class MalformedPresentation(Exception):
    pass


class InvalidInput(Exception):
    pass


class NoUnit(Exception):
    pass


@dataclass(frozen=True)
class Violation:
    axiom: str
    where: tuple[str, ...]
    detail: str = ""

    def __str__(self):
        s = f"{self.axiom} @ ({', '.join(self.where)})"
        if self.detail:
            s += f": {self.detail}"
        return s


def _check_table(table, dim, what):
    for (i, j), targets in table.items():
        if not (0 <= i < dim and 0 <= j < dim):
            raise MalformedPresentation(f"{what} entry ({i},{j}) out of range")
        for k, c in targets.items():
            if not 0 <= k < dim:
                raise MalformedPresentation(f"{what} target {k} out of range")
            if not isinstance(c, Fraction):
                raise MalformedPresentation(f"{what} coefficient must be Fraction")


@dataclass(frozen=True)
class AlgebraPresentation:
    kind: str
    basis: GradedBasis
    product: Table | None = None
    bracket: Table | None = None
    unit: int | None = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise MalformedPresentation(f"unknown kind {self.kind!r}")
        dim = len(self.basis)
        if self.kind in ("associative", "commutative", "gerstenhaber"):
            if self.product is None:
                raise MalformedPresentation(f"{self.kind} kind needs a product table")
        if self.kind in ("lie", "gerstenhaber"):
            if self.bracket is None:
                raise MalformedPresentation(f"{self.kind} kind needs a bracket table")
        if self.kind in ("associative", "commutative") and self.bracket is not None:
            raise MalformedPresentation(f"{self.kind} kind must not carry a bracket")
        if self.kind == "lie" and self.product is not None:
            raise MalformedPresentation("lie kind must not carry a product")
        if self.product is not None:
            _check_table(self.product, dim, "product")
        if self.bracket is not None:
            _check_table(self.bracket, dim, "bracket")
        if self.unit is not None and not 0 <= self.unit < dim:
            raise MalformedPresentation("unit index out of range")

    @property
    def dim(self) -> int:
        return len(self.basis)

    def degree(self, i: int) -> int:
        return self.basis.degree(i)

    def name(self, i: int) -> str:
        return self.basis.names[i]

    def prod(self, i: int, j: int) -> dict:
        if self.product is None:
            raise MalformedPresentation("presentation has no product")
        return self.product.get((i, j), {})

    def brkt(self, i: int, j: int) -> dict:
        if self.bracket is None:
            raise MalformedPresentation("presentation has no bracket")
        return self.bracket.get((i, j), {})

    def prod_chain(self, u: dict, v: dict) -> dict:
        out: dict = {}
        for i, a in u.items():
            for j, b in v.items():
                add_chain(out, self.prod(i, j), a * b)
        return out

    def brkt_chain(self, u: dict, v: dict) -> dict:
        out: dict = {}
        for i, a in u.items():
            for j, b in v.items():
                add_chain(out, self.brkt(i, j), a * b)
        return out

    def bracket_degree(self) -> int:
        return -1 if self.kind == "gerstenhaber" else 0


def _sign(exp: int) -> Fraction:
    return Fraction(-1) ** (exp % 2)


def _chain_sub(a: dict, b: dict) -> dict:
    out = dict(a)
    add_chain(out, b, Fraction(-1))
    return out


def validate(a: AlgebraPresentation) -> list[Violation]:
    """All axiom violations of the declared kind, on every basis triple."""
    out: list[Violation] = []
    dim = a.dim
    deg = a.degree
    names = a.basis.names

    def shifted(i):
        return deg(i) - 1

    if a.product is not None:
        for (i, j), targets in a.product.items():
            for k, c in targets.items():
                if c and deg(k) != deg(i) + deg(j):
                    out.append(Violation("Degree", (names[i], names[j]),
                                         f"product target {names[k]} breaks degree 0"))
    if a.bracket is not None:
        bdeg = a.bracket_degree()
        for (i, j), targets in a.bracket.items():
            for k, c in targets.items():
                if c and deg(k) != deg(i) + deg(j) + bdeg:
                    out.append(Violation("Degree", (names[i], names[j]),
                                         f"bracket target {names[k]} breaks degree {bdeg}"))
    if out:
        return out  # axiom checks below assume homogeneous tables

    if a.unit is not None:
        e = a.unit
        if deg(e) != 0:
            out.append(Violation("Unit", (names[e],), "unit degree nonzero"))
        for i in range(dim):
            if a.prod(e, i) != {i: Fraction(1)}:
                out.append(Violation("Unit", (names[e], names[i]), "left unit law"))
            if a.prod(i, e) != {i: Fraction(1)}:
                out.append(Violation("Unit", (names[i], names[e]), "right unit law"))

    if a.product is not None:
        for i in range(dim):
            for j in range(dim):
                for k in range(dim):
                    lhs = a.prod_chain({i: Fraction(1)}, a.prod(j, k))
                    rhs = a.prod_chain(a.prod(i, j), {k: Fraction(1)})
                    if lhs != rhs:
                        out.append(Violation("Ass", (names[i], names[j], names[k])))
        if a.kind in ("commutative", "gerstenhaber"):
            for i in range(dim):
                for j in range(dim):
                    lhs = a.prod(i, j)
                    rhs = {k: _sign(deg(i) * deg(j)) * c
                           for k, c in a.prod(j, i).items()}
                    if lhs != rhs:
                        out.append(Violation("Com", (names[i], names[j])))

    if a.bracket is not None:
        d = shifted if a.kind == "gerstenhaber" else deg
        for i in range(dim):
            for j in range(i, dim):
                anti = dict(a.brkt(i, j))
                add_chain(anti, a.brkt(j, i), _sign(d(i) * d(j)))
                if anti:
                    out.append(Violation("Antisym", (names[i], names[j])))
        for i in range(dim):
            for j in range(dim):
                for k in range(dim):
                    jac: dict = {}
                    add_chain(jac, a.brkt_chain(a.brkt(i, j), {k: Fraction(1)}),
                              _sign(d(i) * d(k)))
                    add_chain(jac, a.brkt_chain(a.brkt(j, k), {i: Fraction(1)}),
                              _sign(d(j) * d(i)))
                    add_chain(jac, a.brkt_chain(a.brkt(k, i), {j: Fraction(1)}),
                              _sign(d(k) * d(j)))
                    if jac:
                        out.append(Violation("Jac", (names[i], names[j], names[k])))

    if a.kind == "gerstenhaber":
        # [a1, a2 a3] = [a1, a2] a3 + (-1)^{|a2| deg(a1)} a2 [a1, a3]
        for i in range(dim):
            for j in range(dim):
                for k in range(dim):
                    lhs = a.brkt_chain({i: Fraction(1)}, a.prod(j, k))
                    rhs = a.prod_chain(a.brkt(i, j), {k: Fraction(1)})
                    add_chain(rhs, a.prod_chain({j: Fraction(1)}, a.brkt(i, k)),
                              _sign(deg(j) * shifted(i)))
                    if lhs != rhs:
                        out.append(Violation("Leibn", (names[i], names[j], names[k])))
    return out


@dataclass(frozen=True)
class ModulePresentation:
    basis: GradedBasis
    left: Table | None = None            # (algebra index, module index) -> module chain
    right: Table | None = None           # (module index, algebra index) -> module chain
    bracket_action: Table | None = None  # (algebra index, module index) -> module chain

    @property
    def dim(self) -> int:
        return len(self.basis)

    def degree(self, i: int) -> int:
        return self.basis.degree(i)

    def left_act(self, i: int, u: int) -> dict:
        return (self.left or {}).get((i, u), {})

    def right_act(self, u: int, i: int) -> dict:
        return (self.right or {}).get((u, i), {})

    def bracket_act(self, i: int, u: int) -> dict:
        return (self.bracket_action or {}).get((i, u), {})


def symmetrized_right(a: AlgebraPresentation, m: ModulePresentation) -> Table:
    """Right action forced by the symmetric-bimodule rule v.a = (-1)^{|a||v|} a.v."""
    out: Table = {}
    for u in range(m.dim):
        for i in range(a.dim):
            chain = {k: _sign(a.degree(i) * m.degree(u)) * c
                     for k, c in m.left_act(i, u).items()}
            if chain:
                out[(u, i)] = chain
    return out


def validate_module(a: AlgebraPresentation, m: ModulePresentation) -> list[Violation]:
    out: list[Violation] = []
    adeg, mdeg = a.degree, m.degree
    an, mn = a.basis.names, m.basis.names

    def ashift(i):
        return adeg(i) - 1

    right = m.right
    if a.kind in ("commutative", "gerstenhaber"):
        forced = symmetrized_right(a, m)
        if right is None:
            right = forced
        elif right != forced:
            out.append(Violation("ModSym", (), "right action breaks v.a = (-1)^{|a||v|} a.v"))
            return out
    elif a.kind == "associative" and (m.left is None or right is None):
        out.append(Violation("ModSym", (), "bimodule needs both actions"))
        return out

    mm = ModulePresentation(m.basis, m.left, right, m.bracket_action)

    def lact(i, chain):
        res: dict = {}
        for u, c in chain.items():
            add_chain(res, mm.left_act(i, u), c)
        return res

    def ract(chain, i):
        res: dict = {}
        for u, c in chain.items():
            add_chain(res, mm.right_act(u, i), c)
        return res

    def bact(i, chain):
        res: dict = {}
        for u, c in chain.items():
            add_chain(res, mm.bracket_act(i, u), c)
        return res

    # degree checks: product actions degree 0, bracket action matches the kind
    for (i, u), targets in (mm.left or {}).items():
        for k, c in targets.items():
            if c and mdeg(k) != adeg(i) + mdeg(u):
                out.append(Violation("ModDegree", (an[i], mn[u]), "left action not degree 0"))
    for (u, i), targets in (mm.right or {}).items():
        for k, c in targets.items():
            if c and mdeg(k) != adeg(i) + mdeg(u):
                out.append(Violation("ModDegree", (mn[u], an[i]), "right action not degree 0"))
    bdeg = a.bracket_degree()
    for (i, u), targets in (mm.bracket_action or {}).items():
        for k, c in targets.items():
            if c and mdeg(k) != adeg(i) + mdeg(u) + bdeg:
                out.append(Violation("ModDegree", (an[i], mn[u]),
                                     f"bracket action not degree {bdeg}"))
    if out:
        return out

    if a.kind in ("associative", "commutative", "gerstenhaber"):
        for i in range(a.dim):
            for j in range(a.dim):
                for u in range(m.dim):
                    # (ab)u = a(bu)
                    lhs: dict = {}
                    for k, c in a.prod(i, j).items():
                        add_chain(lhs, mm.left_act(k, u), c)
                    if lhs != lact(i, mm.left_act(j, u)):
                        out.append(Violation("ModAssLL", (an[i], an[j], mn[u])))
                    # u(ab) = (ua)b
                    lhs = {}
                    for k, c in a.prod(i, j).items():
                        add_chain(lhs, mm.right_act(u, k), c)
                    if lhs != ract(mm.right_act(u, i), j):
                        out.append(Violation("ModAssRR", (mn[u], an[i], an[j])))
                    # (au)b = a(ub)
                    if ract(mm.left_act(i, u), j) != lact(i, mm.right_act(u, j)):
                        out.append(Violation("ModAssLR", (an[i], mn[u], an[j])))

    if a.kind in ("lie", "gerstenhaber"):
        act = mm.bracket_act if a.kind == "gerstenhaber" else mm.left_act
        d = ashift if a.kind == "gerstenhaber" else adeg

        def theact(i, chain):
            res: dict = {}
            for u, c in chain.items():
                add_chain(res, act(i, u), c)
            return res

        for i in range(a.dim):
            for j in range(a.dim):
                for u in range(m.dim):
                    lhs = {}
                    for k, c in a.brkt(i, j).items():
                        add_chain(lhs, act(k, u), c)
                    rhs = theact(i, act(j, u))
                    add_chain(rhs, theact(j, act(i, u)), -_sign(d(i) * d(j)))
                    if lhs != rhs:
                        out.append(Violation("ModJac", (an[i], an[j], mn[u])))

    if a.kind == "gerstenhaber":
        for i in range(a.dim):
            for j in range(a.dim):
                for u in range(m.dim):
                    # [a1,a2] m = a1 . (a2 m) - (-1)^{|a2| deg(a1)} a2 (a1 . m)
                    lhs = {}
                    for k, c in a.brkt(i, j).items():
                        add_chain(lhs, mm.left_act(k, u), c)
                    rhs = bact(i, mm.left_act(j, u))
                    add_chain(rhs, lact(j, mm.bracket_act(i, u)),
                              -_sign(adeg(j) * ashift(i)))
                    if lhs != rhs:
                        out.append(Violation("ModCompat1", (an[i], an[j], mn[u])))
                    # (a1 a2) . m = a1 (a2 . m) + (-1)^{|m||a2|} a2 (a1 . m)
                    lhs = {}
                    for k, c in a.prod(i, j).items():
                        add_chain(lhs, mm.bracket_act(k, u), c)
                    rhs = lact(i, mm.bracket_act(j, u))
                    add_chain(rhs, lact(j, mm.bracket_act(i, u)),
                              _sign(mdeg(u) * adeg(j)))
                    if lhs != rhs:
                        out.append(Violation("ModCompat2", (an[i], an[j], mn[u])))
    return out


def semidirect(a: AlgebraPresentation, m: ModulePresentation) -> AlgebraPresentation:
    """The semidirect presentation on basis(a) + basis(m)."""
    va = validate(a)
    if va:
        raise InvalidInput(f"algebra fails validation: {va[0]}")
    vm = validate_module(a, m)
    if vm:
        raise InvalidInput(f"module fails validation: {vm[0]}")
    right = m.right
    if a.kind in ("commutative", "gerstenhaber") and right is None:
        right = symmetrized_right(a, m)
    d = a.dim
    names = a.basis.names + tuple(f"{n}~" if n in a.basis.names else n
                                  for n in m.basis.names)
    degrees = a.basis.degrees + m.basis.degrees
    basis = GradedBasis(names, degrees)

    product: Table | None = None
    bracket: Table | None = None

    if a.kind in ("associative", "commutative", "gerstenhaber"):
        product = {}
        for (i, j), t in a.product.items():
            product[(i, j)] = dict(t)
        for (i, u), t in (m.left or {}).items():
            product[(i, u + d)] = {k + d: c for k, c in t.items()}
        for (u, i), t in (right or {}).items():
            product[(u + d, i)] = {k + d: c for k, c in t.items()}

    if a.kind in ("lie", "gerstenhaber"):
        act = m.bracket_action if a.kind == "gerstenhaber" else m.left
        shift = 1 if a.kind == "gerstenhaber" else 0
        bracket = {}
        for (i, j), t in a.bracket.items():
            bracket[(i, j)] = dict(t)
        for (i, u), t in (act or {}).items():
            chain = {k + d: c for k, c in t.items()}
            if chain:
                bracket[(i, u + d)] = chain
                # [u, b] = -(-1)^{deg(b) deg(u)} b . u  (degrees of the bracket's home)
                s = -_sign((a.degree(i) - shift) * (m.degree(u) - shift))
                flipped = {k: s * c for k, c in chain.items()}
                bracket[(u + d, i)] = flipped

    unit = a.unit
    if unit is not None and a.kind != "lie":
        one = Fraction(1)
        for u in range(m.dim):
            if ((m.left or {}).get((unit, u), {}) != {u: one}
                    or (right or {}).get((u, unit), {}) != {u: one}):
                unit = None   # the unit of a need not act as identity on m
                break
    return AlgebraPresentation(a.kind, basis, product=product, bracket=bracket,
                               unit=unit)
