"""Named verification runs over the whole engine.

Each check function returns a list of Check records; the CLI prints them
and the acceptance test suite asserts them.  Bounds default to desk scale
(n = 5); callers opt in to larger sizes explicitly.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass

from .annulus import verify_identity_decomposition, verify_ringhom
from .braids import all_perms
from .hecke import E_lambda, HeckeElement, a_n, alpha_extract, mirror, tensor
from .partitions import (
    SymFunction,
    c_lambda,
    d_lambda,
    lr_coeffs,
    partitions_of,
    q_lambda,
    schur_expand,
    schur_h,
)
from .scalars import ONE, from_int, monomial, qint, s_power, v_power
from .trace import homfly, meridian
from . import cprime


@dataclass
class Check:
    name: str
    passed: bool
    detail: str = ""


def _all_shapes(max_cells: int, min_cells: int = 1):
    for n in range(min_cells, max_cells + 1):
        yield from partitions_of(n)


def random_element(rng: random.Random, width: int, terms: int = 4) -> HeckeElement:
    """Small random element with monomial scalars; deterministic per seed."""
    perms = all_perms(width)
    coeffs = {}
    for _ in range(terms):
        p = rng.choice(perms)
        c = monomial(rng.choice([1, -1, 2]), rng.randint(-1, 1), rng.randint(-2, 2))
        coeffs[p] = coeffs.get(p, from_int(0)) + c
    return HeckeElement(width, {p: c for p, c in coeffs.items() if c})


def check_symmetrizer_laws(max_n: int = 5) -> list[Check]:
    out = []
    for n in range(2, max_n + 1):
        a = a_n(n)
        s1 = s_power(1)
        absorbed = all(
            a * HeckeElement.sigma(n, i) == a.scale(s1)
            and HeckeElement.sigma(n, i) * a == a.scale(s1)
            for i in range(n - 1)
        )
        out.append(Check(f"a_{n} absorbs every elementary braid at cost s", absorbed))
        alpha = s_power(n * (n - 1) // 2)
        for k in range(1, n + 1):
            alpha = alpha * qint(k)
        out.append(Check(f"a_{n}^2 == s^(n(n-1)/2) [n]! a_{n}", a * a == a.scale(alpha)))
    return out


def check_mirror_invariance(max_n: int = 5) -> list[Check]:
    out = []
    for n in range(1, max_n + 1):
        a = a_n(n)
        normalized = a.scale(ONE / alpha_extract(a)) if n > 1 else a
        out.append(
            Check(f"mirror(a_{n}/alpha_{n}) == a_{n}/alpha_{n}", mirror(normalized) == normalized)
        )
    return out


def check_idempotents(max_cells: int = 5) -> list[Check]:
    out = []
    for shape in _all_shapes(max_cells):
        E = E_lambda(shape)
        out.append(Check(f"E_{shape} is idempotent", E * E == E))
    for i in range(1, max_cells + 1):
        rhs_sum = HeckeElement.identity(i + 1)
        cycle = HeckeElement.identity(i + 1)
        for j in range(1, i + 1):
            cycle = cycle * HeckeElement.sigma(i + 1, i - j)
            rhs_sum = rhs_sum + cycle.scale(s_power(j))
        lhs = a_n(i + 1)
        rhs = tensor(a_n(i), HeckeElement.identity(1)) * rhs_sum
        out.append(Check(f"a_{i + 1} splits off its last strand", lhs == rhs))
    E2, E11 = E_lambda((2,)), E_lambda((1, 1))
    out.append(Check("E_(2) + E_(1,1) == identity", E2 + E11 == HeckeElement.identity(2)))
    return out


def check_trace(pairs: int = 50, seed: int = 20250810) -> list[Check]:
    out = []
    from .scalars import delta

    out.append(Check("trace of the trivial braid is delta", homfly(HeckeElement.identity(1)) == delta()))
    rng = random.Random(seed)
    commuted = all(
        homfly(x * y) == homfly(y * x)
        for x, y in (
            (random_element(rng, 4), random_element(rng, 4)) for _ in range(pairs)
        )
    )
    out.append(Check(f"trace property on {pairs} random width-4 pairs", commuted))
    from .braids import parse_braid
    from .hecke import from_braid

    sigma_inv = from_braid(parse_braid("-3", width=4))
    stabilized = True
    for _ in range(10):
        x = random_element(rng, 3)
        wide = tensor(x, HeckeElement.identity(1))
        stabilized = (
            stabilized
            and homfly(wide * HeckeElement.sigma(4, 2)) == v_power(-1) * homfly(x)
            and homfly(wide * sigma_inv) == v_power(1) * homfly(x)
        )
    out.append(Check("Markov stabilization on random width-3 elements", stabilized))
    return out


def check_meridian_eigenvectors(max_cells: int = 5, distinct_cells: int = 8) -> list[Check]:
    out = []
    for shape in _all_shapes(max_cells):
        E = E_lambda(shape)
        out.append(
            Check(
                f"meridian(E_{shape}) == c_{shape} E_{shape}",
                meridian(E) == E.scale(c_lambda(shape)),
            )
        )
    seen = {}
    clashes = []
    for shape in _all_shapes(distinct_cells, min_cells=0):
        c = c_lambda(shape)
        key = (
            frozenset(c.num.terms.items()),
            frozenset(c.den.terms.items()),
        )
        if key in seen:
            clashes.append((seen[key], shape))
        seen[key] = shape
    out.append(
        Check(
            f"eigenvalues pairwise distinct up to {distinct_cells} cells",
            not clashes,
            detail=str(clashes) if clashes else "",
        )
    )
    return out


def check_eigenvalue_agreement(max_cells: int = 10) -> list[Check]:
    agree = all(
        q_lambda(shape) == c_lambda(shape) for shape in _all_shapes(max_cells, min_cells=0)
    )
    return [Check(f"q and c eigenvalue formulas agree up to {max_cells} cells", agree)]


def check_cprime(max_index: int = 8, ehex_window: int = 6, max_cells: int = 5) -> list[Check]:
    out = []
    out.append(
        Check(
            f"commutator identity for indices 0..{max_index}",
            all(cprime.verify_yiAia(i) for i in range(max_index + 1)),
        )
    )
    out.append(
        Check(
            f"two-row determinant identity on 0..{max_index} squared",
            all(
                cprime.verify_yiyj(i, j)
                for i in range(max_index + 1)
                for j in range(max_index + 1)
            ),
        )
    )
    ehex_ok = all(
        cprime.verify_ehex(pair)
        for pair in itertools.product(range(-1, ehex_window + 1), repeat=2)
    )
    ehex_ok = ehex_ok and all(
        cprime.verify_ehex(triple)
        for triple in [(1, 0, -1), (3, 1, 0), (4, 2, 1), (ehex_window, 2, 0)]
    )
    ehex_ok = ehex_ok and cprime.verify_ehex((3, 2, 1, 0)) and cprime.verify_ehex((ehex_window, 4, 2, 0))
    out.append(Check(f"determinant exchange up to 4x4, indices <= {ehex_window}", ehex_ok))
    that_ok = all(
        cprime.close(
            cprime.BimoduleForm.single(s_power(-i) - s_power(i), cprime.core_ha(i))
        )
        == SymFunction.h(i).scale((s_power(1 - 2 * i) - s_power(1)) * v_power(1))
        for i in range(1, max_index + 1)
    )
    out.append(Check("closed commutator matches its arc-core expression", that_ok))
    pipeline_ok = all(
        cprime.gamma_via_proof(shape) == q_lambda(shape)
        for shape in _all_shapes(max_cells, min_cells=0)
        if len(shape) <= 4
    )
    out.append(Check(f"eigenvalue pipeline reproduces the formula up to {max_cells} cells", pipeline_ok))
    return out


def check_ringhom(max_cells: int = 5) -> list[Check]:
    out = []
    for total in range(2, max_cells + 1):
        for a in range(1, total):
            for lam in partitions_of(a):
                for mu in partitions_of(total - a):
                    report = verify_ringhom(lam, mu)
                    out.append(
                        Check(
                            f"closure of E_{lam} x E_{mu} matches the LR oracle",
                            report["pass"],
                        )
                    )
    return out


def check_identity_decomposition(max_n: int = 5, h1_power_max: int = 8) -> list[Check]:
    out = []
    for n in range(1, max_n + 1):
        report = verify_identity_decomposition(n)
        out.append(Check(f"closure of the width-{n} identity has tableau multiplicities", report["pass"]))
    h1 = SymFunction.h(1)
    power = SymFunction.one()
    ok = True
    for n in range(1, h1_power_max + 1):
        power = power * h1
        expansion = schur_expand(power, n)
        want = {shape: from_int(d_lambda(shape)) for shape in partitions_of(n)}
        ok = ok and expansion == want
    out.append(Check(f"h_1^n expands with tableau counts up to n = {h1_power_max}", ok))
    return out


def check_schur_oracle(max_total: int = 7, pieri_max: int = 6) -> list[Check]:
    out = []
    ok = True
    for total in range(2, max_total + 1):
        for a in range(1, total):
            for lam in partitions_of(a):
                for mu in partitions_of(total - a):
                    product = schur_h(lam) * schur_h(mu)
                    expansion = schur_expand(product, total)
                    oracle = lr_coeffs(lam, mu)
                    if expansion != {shape: from_int(c) for shape, c in oracle.items()}:
                        ok = False
    out.append(Check(f"Schur products match the LR oracle up to {max_total} cells", ok))
    pieri_ok = True
    from .partitions import contains

    for mu in _all_shapes(pieri_max, min_cells=0):
        product = schur_h(mu) * SymFunction.h(1)
        expansion = schur_expand(product, sum(mu) + 1)
        want = {
            eta: from_int(1)
            for eta in partitions_of(sum(mu) + 1)
            if contains(eta, mu)
        }
        if expansion != want:
            pieri_ok = False
    out.append(Check(f"Pieri rule for shapes up to {pieri_max} cells", pieri_ok))
    return out


def run_all(max_n: int = 5, max_cells: int = 5) -> list[Check]:
    checks: list[Check] = []
    checks += check_symmetrizer_laws(max_n)
    checks += check_mirror_invariance(min(max_n, 5))
    checks += check_idempotents(max_cells)
    checks += check_trace()
    checks += check_meridian_eigenvectors(max_cells)
    checks += check_eigenvalue_agreement()
    checks += check_cprime(max_cells=max_cells)
    checks += check_ringhom(max_cells)
    checks += check_identity_decomposition(max_n)
    checks += check_schur_oracle()
    return checks
