"""The positive part of the annulus skein, modeled on symmetric functions:
the closure of the Young-diagram idempotent of shape lambda is the Schur
function schur_h(lambda) in this model.

expand_closure writes the closure of an arbitrary Hecke element in that
basis through meridian moments: encircling is diagonal on the basis with
pairwise-distinct eigenvalues, so the sequence of traces of iterated
encirclings determines the coefficients via a transposed Vandermonde system,
solved exactly with Lagrange polynomials.
"""

from __future__ import annotations

from functools import lru_cache

from .hecke import E_lambda, HeckeElement, SizeLimitError
from .partitions import (
    Partition,
    SymFunction,
    c_lambda,
    count_partitions,
    d_lambda,
    lr_coeffs,
    partitions_of,
    q_lambda,
    schur_expand,
    schur_h,
)
from .scalars import (
    ONE,
    RationalFunction,
    ZERO,
    from_int,
    poly_lcm,
    render_rational,
    _P_ONE,
)
from .hecke import tensor
from .trace import homfly, meridian

_EXPAND_WIDTH_MAX = 6


class ZeroReferenceTrace(ArithmeticError):
    """A closed idempotent evaluated to zero in the plane; cannot normalize."""


class SingularSystem(ArithmeticError):
    """Meridian eigenvalues collided; the moment system is not solvable."""


def gamma(x: SymFunction, degree: int) -> SymFunction:
    """The meridian map on the annulus model: scale each Schur component of
    a homogeneous element by its eigenvalue."""
    expansion = schur_expand(x, degree)
    out = SymFunction.zero()
    for shape, coeff in expansion.items():
        out = out + schur_h(shape).scale(coeff * q_lambda(shape))
    return out


@lru_cache(maxsize=None)
def reference_trace(shape: Partition) -> RationalFunction:
    """Plane evaluation of the closed idempotent of the shape."""
    value = homfly(E_lambda(shape))
    if not value:
        raise ZeroReferenceTrace(f"closed idempotent of {shape} has zero trace")
    return value


def _clear_denominators(x: HeckeElement) -> tuple[HeckeElement, RationalFunction]:
    """Scale x into denominator-free form; returns (scaled, the scalar used)."""
    lcm = _P_ONE
    for c in x.coeffs.values():
        lcm = poly_lcm(lcm, c.den)
    scalar = RationalFunction(lcm)
    return x.scale(scalar), scalar


@lru_cache(maxsize=None)
def _moment_functionals(width: int) -> tuple[dict, ...]:
    """phi_k[perm] = homfly(meridian^k(basis braid)), for k below the
    partition count.  Each step pushes the previous functional through the
    basis matrix of the meridian map; every moment of every element of the
    width is then a plain dot product against its coefficients."""
    from . import trace as _trace
    from .braids import all_perms

    order = count_partitions(width)
    phi = {p: homfly(HeckeElement.basis(width, p)) for p in all_perms(width)}
    out = [phi]
    table = _trace._meridian_table(width)
    for _ in range(1, order):
        prev = out[-1]
        nxt = {}
        for p, row in table.items():
            total = ZERO
            for q, c in row.coeffs.items():
                total = total + c * prev[q]
            nxt[p] = total
        out.append(nxt)
    return tuple(out)


def _moments(x: HeckeElement, order: int) -> list[RationalFunction]:
    """Traces of the iterated encirclings of x, exactly."""
    width = x.width
    cleared, scalar = _clear_denominators(x)
    moments = []
    if width <= 5:
        functionals = _moment_functionals(width)
        for k in range(order):
            phi = functionals[k]
            total = ZERO
            for p, c in cleared.coeffs.items():
                total = total + c * phi[p]
            moments.append(total / scalar)
    else:
        y = cleared
        for k in range(order):
            moments.append(homfly(y) / scalar)
            if k + 1 < order:
                y = meridian(y)
    return moments


def expand_closure(x: HeckeElement) -> dict[Partition, RationalFunction]:
    """Coefficients of the closure of x on the closed-idempotent basis."""
    width = x.width
    if width > _EXPAND_WIDTH_MAX:
        raise SizeLimitError(f"expand_closure capped at width {_EXPAND_WIDTH_MAX}")
    if width == 0:
        value = x.coeffs.get((), ZERO)
        return {(): value} if value else {}
    shapes = partitions_of(width)
    eigenvalues = [c_lambda(shape) for shape in shapes]
    for i in range(len(shapes)):
        for j in range(i + 1, len(shapes)):
            if eigenvalues[i] == eigenvalues[j]:
                raise SingularSystem(
                    f"eigenvalue collision between {shapes[i]} and {shapes[j]}"
                )
    moments = _moments(x, count_partitions(width))
    weights = _solve_moments(eigenvalues, moments)
    out: dict[Partition, RationalFunction] = {}
    for shape, weight in zip(shapes, weights):
        if weight:
            out[shape] = weight / reference_trace(shape)
    return out


def _solve_moments(
    eigenvalues: list[RationalFunction], moments: list[RationalFunction]
) -> list[RationalFunction]:
    """Solve sum_j e_j^k u_j = m_k exactly via Lagrange basis polynomials."""
    n = len(eigenvalues)
    out = []
    for j, e_j in enumerate(eigenvalues):
        # expand prod_{i != j} (t - e_i) into coefficients of t^k
        coeffs = [ONE]
        denom = ONE
        for i, e_i in enumerate(eigenvalues):
            if i == j:
                continue
            denom = denom * (e_j - e_i)
            nxt = [ZERO] * (len(coeffs) + 1)
            for k, c in enumerate(coeffs):
                nxt[k + 1] = nxt[k + 1] + c
                nxt[k] = nxt[k] - c * e_i
            coeffs = nxt
        total = ZERO
        for k in range(n):
            if coeffs[k]:
                total = total + coeffs[k] * moments[k]
        out.append(total / denom)
    return out


def expand_closure_projector(x: HeckeElement) -> dict[Partition, RationalFunction]:
    """Cross-check route: spectral projectors built from iterated meridians.

    Exact but heavier than the moment method; intended for small widths.
    """
    width = x.width
    if width > 3:
        raise SizeLimitError("projector cross-check is kept to width <= 3")
    if width == 0:
        return expand_closure(x)
    shapes = partitions_of(width)
    out: dict[Partition, RationalFunction] = {}
    for shape in shapes:
        y = x
        scale = ONE
        for other in shapes:
            if other == shape:
                continue
            c_other = c_lambda(other)
            y = meridian(y) - y.scale(c_other)
            scale = scale * (c_lambda(shape) - c_other)
        coeff = homfly(y) / scale / reference_trace(shape)
        if coeff:
            out[shape] = coeff
    return out


def _coeff_report(expansion: dict[Partition, RationalFunction]) -> list[dict]:
    return [
        {"partition": list(shape), "coeff": render_rational(expansion[shape])}
        for shape in sorted(expansion, reverse=True)
    ]


def verify_ringhom(lam: Partition, mu: Partition) -> dict:
    """Compare the closure expansion of a juxtaposed pair of idempotents
    against the Littlewood-Richardson oracle."""
    expansion = expand_closure(tensor(E_lambda(tuple(lam)), E_lambda(tuple(mu))))
    oracle = lr_coeffs(tuple(lam), tuple(mu))
    passed = set(expansion) == set(oracle) and all(
        expansion[shape] == from_int(oracle[shape]) for shape in oracle
    )
    return {
        "input": {"lambda": list(lam), "mu": list(mu)},
        "expansion": _coeff_report(expansion),
        "oracle": [
            {"partition": list(shape), "coeff": oracle[shape]}
            for shape in sorted(oracle, reverse=True)
        ],
        "pass": passed,
    }


def verify_identity_decomposition(n: int) -> dict:
    """The closure of the identity braid decomposes with standard-tableau
    multiplicities."""
    expansion = expand_closure(HeckeElement.identity(n))
    oracle = {shape: d_lambda(shape) for shape in partitions_of(n)}
    passed = set(expansion) == set(oracle) and all(
        expansion[shape] == from_int(oracle[shape]) for shape in oracle
    )
    return {
        "input": {"identity_width": n},
        "expansion": _coeff_report(expansion),
        "oracle": [
            {"partition": list(shape), "coeff": oracle[shape]}
            for shape in sorted(oracle, reverse=True)
        ],
        "pass": passed,
    }
