"""Formal linear combinations over hashable basis keys.

A chain is a plain dict ``{key: Fraction}`` with no stored zeros; these
helpers keep that invariant while adding and scaling.
"""

from __future__ import annotations

from fractions import Fraction

Chain = dict


def add_term(chain: dict, key, coeff: Fraction) -> None:
    if not coeff:
        return
    s = chain.get(key, Fraction(0)) + coeff
    if s:
        chain[key] = s
    else:
        del chain[key]


def add_chain(target: dict, source: dict, coeff: Fraction = Fraction(1)) -> None:
    if not coeff:
        return
    for k, c in source.items():
        add_term(target, k, coeff * c)


def scaled(chain: dict, coeff: Fraction) -> dict:
    if not coeff:
        return {}
    return {k: coeff * c for k, c in chain.items()}


def chain_eq(a: dict, b: dict) -> bool:
    return a == b
