"""Closure into the plane: conditional expectation down one strand, the
framed Homfly polynomial of a braid closure, and the algebra-level meridian
(encircling) map.

Capping the last strand of a basis braid either removes a disjoint circle
(the permutation fixes the last position; factor delta) or removes one curl
(factor v^-1) after splitting off the single crossing that the last strand
carries.  Iterating down to width zero evaluates the Markov trace.
"""

from __future__ import annotations

from functools import lru_cache

from .braids import all_perms, coset_split
from .hecke import HeckeElement, SizeLimitError, _acc, _mul, _rmul_sigma_inv, tensor
from .scalars import RationalFunction, ZERO, delta, v_power

_COND_TABLE_MAX = 6  # widths whose capping rule is worth precomputing densely
_MERIDIAN_TABLE_MAX = 5


@lru_cache(maxsize=None)
def _cond_table(width: int) -> dict:
    """Basis image of capping the last strand, for every permutation."""
    d = delta()
    v_inv = v_power(-1)
    table = {}
    for p in all_perms(width):
        table[p] = _cond_basis(p, d, v_inv)
    return table


def _cond_basis(p, d, v_inv) -> HeckeElement:
    width = len(p)
    split = coset_split(p)
    if split is None:
        return HeckeElement.basis(width - 1, p[: width - 1]).scale(d)
    alpha, beta = split
    prod = _mul(
        HeckeElement.basis(width - 1, alpha), HeckeElement.basis(width - 1, beta)
    )
    return prod.scale(v_inv)


def cond_expect(x: HeckeElement) -> HeckeElement:
    """Linear map one width down, shadowing the capping of the last strand."""
    width = x.width
    if width < 1:
        raise ValueError("cond_expect needs width >= 1")
    acc: dict = {}
    if width <= _COND_TABLE_MAX:
        table = _cond_table(width)
        for p, c in x.coeffs.items():
            for q, k in table[p].coeffs.items():
                _acc(acc, q, c * k)
    else:
        d = delta()
        v_inv = v_power(-1)
        for p, c in x.coeffs.items():
            for q, k in _cond_basis(p, d, v_inv).coeffs.items():
                _acc(acc, q, c * k)
    return HeckeElement._raw(width - 1, acc)


def homfly(x: HeckeElement) -> RationalFunction:
    """Framed Homfly polynomial of the blackboard-framed closure of x."""
    while x.width > 0:
        x = cond_expect(x)
    return x.coeffs.get((), ZERO)


def _wrap_letters(n: int) -> list[int]:
    # all-negative wrap: sigma_n^-1 ... sigma_1^-1 sigma_1^-1 ... sigma_n^-1
    return list(range(n - 1, -1, -1)) + list(range(n))


def _meridian_direct(x: HeckeElement) -> HeckeElement:
    n = x.width
    coeffs = tensor(x, HeckeElement.identity(1)).coeffs
    for i in _wrap_letters(n):
        coeffs = _rmul_sigma_inv(coeffs, i)
    return cond_expect(HeckeElement._raw(n + 1, coeffs))


@lru_cache(maxsize=None)
def _meridian_table(width: int) -> dict:
    return {
        p: _meridian_direct(HeckeElement.basis(width, p)) for p in all_perms(width)
    }


def meridian(x: HeckeElement) -> HeckeElement:
    """Encircle the closure of x with one meridian loop, at algebra level."""
    n = x.width
    if n == 0:
        return x.scale(delta())
    if n + 1 > 7:
        raise SizeLimitError(f"meridian at width {n} needs dense width {n + 1} > 7")
    if n <= _MERIDIAN_TABLE_MAX:
        table = _meridian_table(n)
        acc: dict = {}
        for p, c in x.coeffs.items():
            for q, k in table[p].coeffs.items():
                _acc(acc, q, c * k)
        return HeckeElement._raw(n, acc)
    return _meridian_direct(x)
