"""Small stock presentations used by the test suite and shipped fixtures."""

from __future__ import annotations

from fractions import Fraction

from .algebras import AlgebraPresentation, ModulePresentation
from .graded import GradedBasis

ONE = Fraction(1)


def _t(entries):
    """{(i, j): {k: int}} -> proper Fraction table, zeros dropped."""
    out = {}
    for key, targets in entries.items():
        chain = {k: Fraction(c) for k, c in targets.items() if c}
        if chain:
            out[key] = chain
    return out


def dual_numbers(deg_x: int = 0) -> AlgebraPresentation:
    """R[x]/(x^2) with |x| = deg_x; commutative for any parity of deg_x."""
    basis = GradedBasis(("1", "x"), (0, deg_x))
    prod = _t({(0, 0): {0: 1}, (0, 1): {1: 1}, (1, 0): {1: 1}})
    return AlgebraPresentation("commutative", basis, product=prod, unit=0)


def dual_numbers_associative() -> AlgebraPresentation:
    basis = GradedBasis(("1", "x"), (0, 0))
    prod = _t({(0, 0): {0: 1}, (0, 1): {1: 1}, (1, 0): {1: 1}})
    return AlgebraPresentation("associative", basis, product=prod, unit=0)


def group_algebra_z2() -> AlgebraPresentation:
    """R[Z/2]: basis 1, g with g^2 = 1."""
    basis = GradedBasis(("1", "g"), (0, 0))
    prod = _t({(0, 0): {0: 1}, (0, 1): {1: 1}, (1, 0): {1: 1}, (1, 1): {0: 1}})
    return AlgebraPresentation("associative", basis, product=prod, unit=0)


def upper_triangular2() -> AlgebraPresentation:
    """Upper triangular 2x2 matrices on the basis (1, E12, E22).

    The identity matrix is taken as a basis vector so the presentation has a
    unit index; the span is the same algebra as (E11, E12, E22).
    """
    basis = GradedBasis(("1", "a", "b"), (0, 0, 0))
    prod = _t({
        (0, 0): {0: 1}, (0, 1): {1: 1}, (0, 2): {2: 1},
        (1, 0): {1: 1}, (2, 0): {2: 1},
        (1, 1): {}, (1, 2): {1: 1},   # E12 E22 = E12
        (2, 1): {}, (2, 2): {2: 1},
    })
    return AlgebraPresentation("associative", basis, product=prod, unit=0)


def aff1() -> AlgebraPresentation:
    """The nonabelian 2-dimensional Lie algebra, [e, f] = f."""
    basis = GradedBasis(("e", "f"), (0, 0))
    brk = _t({(0, 1): {1: 1}, (1, 0): {1: -1}})
    return AlgebraPresentation("lie", basis, bracket=brk)


def sl2() -> AlgebraPresentation:
    """sl(2): [h,e] = 2e, [h,f] = -2f, [e,f] = h; basis order (e, f, h)."""
    basis = GradedBasis(("e", "f", "h"), (0, 0, 0))
    brk = _t({
        (0, 1): {2: 1}, (1, 0): {2: -1},
        (2, 0): {0: 2}, (0, 2): {0: -2},
        (2, 1): {1: -2}, (1, 2): {1: 2},
    })
    return AlgebraPresentation("lie", basis, bracket=brk)


def abelian(n: int) -> AlgebraPresentation:
    basis = GradedBasis(tuple(f"a{i}" for i in range(1, n + 1)), (0,) * n)
    return AlgebraPresentation("lie", basis, bracket={})


def odd_line() -> AlgebraPresentation:
    """One odd generator x, |x| = 1, [x, x] = 0."""
    basis = GradedBasis(("x",), (1,))
    return AlgebraPresentation("lie", basis, bracket={})


def graded_pair() -> AlgebraPresentation:
    """Graded Lie algebra on e (|e|=0) and x (|x|=1) with [e, x] = x."""
    basis = GradedBasis(("e", "x"), (0, 1))
    brk = _t({(0, 1): {1: 1}, (1, 0): {1: -1}})
    return AlgebraPresentation("lie", basis, bracket=brk)


def exterior_two() -> AlgebraPresentation:
    """The exterior algebra on two odd generators, as a graded commutative
    presentation; basis (1, x, y, xy)."""
    basis = GradedBasis(("1", "x", "y", "xy"), (0, 1, 1, 2))
    prod = _t({
        (0, 0): {0: 1}, (0, 1): {1: 1}, (0, 2): {2: 1}, (0, 3): {3: 1},
        (1, 0): {1: 1}, (2, 0): {2: 1}, (3, 0): {3: 1},
        (1, 2): {3: 1}, (2, 1): {3: -1},
    })
    return AlgebraPresentation("commutative", basis, product=prod, unit=0)


def exterior_aff1() -> AlgebraPresentation:
    """The Gerstenhaber algebra Lambda(aff(1)): wedge product and the
    Schouten extension of [e, f] = f.  Basis (1, e, f, ef)."""
    basis = GradedBasis(("1", "e", "f", "ef"), (0, 1, 1, 2))
    prod = _t({
        (0, 0): {0: 1}, (0, 1): {1: 1}, (0, 2): {2: 1}, (0, 3): {3: 1},
        (1, 0): {1: 1}, (2, 0): {2: 1}, (3, 0): {3: 1},
        (1, 2): {3: 1}, (2, 1): {3: -1},
    })
    brk = _t({
        (1, 2): {2: 1}, (2, 1): {2: -1},   # [e, f] = f
        (1, 3): {3: 1}, (3, 1): {3: -1},   # [e, ef] = ef
    })
    return AlgebraPresentation("gerstenhaber", basis, product=prod, bracket=brk, unit=0)


def zero_bracket_gerstenhaber() -> AlgebraPresentation:
    """Lambda(aff(1)) with the bracket dropped to zero."""
    g = exterior_aff1()
    return AlgebraPresentation("gerstenhaber", g.basis, product=g.product,
                               bracket={}, unit=g.unit)


def regular_bimodule(a: AlgebraPresentation) -> ModulePresentation:
    """The algebra over itself; for gerstenhaber kinds the bracket action is
    the bracket."""
    left = {}
    right = {}
    for (i, j), t in (a.product or {}).items():
        left[(i, j)] = dict(t)
        right[(i, j)] = dict(t)
    bact = None
    if a.kind in ("lie", "gerstenhaber"):
        bact = {k: dict(t) for k, t in (a.bracket or {}).items()}
    if a.kind == "lie":
        return ModulePresentation(a.basis, left=bact)
    return ModulePresentation(a.basis, left=left, right=right, bracket_action=bact)


def adjoint_module(g: AlgebraPresentation) -> ModulePresentation:
    assert g.kind == "lie"
    act = {k: dict(t) for k, t in (g.bracket or {}).items()}
    return ModulePresentation(g.basis, left=act)


def trivial_module(a: AlgebraPresentation, name: str = "v",
                   degree: int = 0) -> ModulePresentation:
    basis = GradedBasis((name,), (degree,))
    if a.kind == "lie":
        return ModulePresentation(basis, left={})
    if a.kind == "gerstenhaber":
        return ModulePresentation(basis, left={}, right={}, bracket_action={})
    return ModulePresentation(basis, left={}, right={})


def scalar_field(kind: str = "commutative") -> AlgebraPresentation:
    basis = GradedBasis(("1",), (0,))
    if kind == "lie":
        return AlgebraPresentation("lie", basis, bracket={})
    return AlgebraPresentation(kind, basis, product=_t({(0, 0): {0: 1}}), unit=0)
