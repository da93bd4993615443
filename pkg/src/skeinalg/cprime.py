"""The one-in one-out annulus skein machinery.

Identities among e*h_i, h_i*e and t_i = h_i*e - e*h_i live in a free
commutative polynomial model over the scalar field: commuting
indeterminates 'a', primed generators hp_i (with hp_0 = hp_1 = 1), and the
plain h_i.  Identities verified in the free model hold in every quotient,
so this is a conservative home for the determinant calculus.

The closure back into the annulus is defined on a small bimodule fragment:
formal sums of (above part, core, below part) where the core is the plain
arc E, a commutator core T(i), or an hp_i*a core HA(i).  Each core has an
explicit closure rule; assembling them along telescoped determinants
rederives the meridian eigenvalue of a Schur element from first principles.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .partitions import Partition, SymFunction, check_partition, schur_h
from .scalars import ONE, RationalFunction, ZERO, delta, from_int, monomial, qint, s_power, v_power

DEFAULT_INDEX_CAP = 12


class TelescopeMismatch(ArithmeticError):
    """A determinant identity in the telescoping pipeline failed."""


class NonDivisible(ArithmeticError):
    """The closed telescope sum is not a scalar multiple of the Schur element."""


class UndefinedClosure(ValueError):
    """Closure requested for a bimodule term outside the defined rules."""


# ---------------------------------------------------------------------------
# free commutative polynomials over the scalar field
# ---------------------------------------------------------------------------

Symbol = tuple
Monomial = tuple[tuple[Symbol, int], ...]


class VarPoly:
    """Sparse polynomial in commuting named indeterminates."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict[Monomial, RationalFunction] | None = None):
        self.terms = {m: c for m, c in (terms or {}).items() if c}

    @classmethod
    def _raw(cls, terms: dict) -> "VarPoly":
        p = object.__new__(cls)
        p.terms = terms
        return p

    @classmethod
    def zero(cls) -> "VarPoly":
        return cls._raw({})

    @classmethod
    def one(cls) -> "VarPoly":
        return cls._raw({(): ONE})

    @classmethod
    def constant(cls, c: RationalFunction) -> "VarPoly":
        return cls._raw({(): c} if c else {})

    @classmethod
    def var(cls, symbol: Symbol) -> "VarPoly":
        return cls._raw({((symbol, 1),): ONE})

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        return isinstance(other, VarPoly) and self.terms == other.terms

    __hash__ = None

    def __neg__(self) -> "VarPoly":
        return VarPoly._raw({m: -c for m, c in self.terms.items()})

    def __add__(self, other: "VarPoly") -> "VarPoly":
        out = dict(self.terms)
        for m, c in other.terms.items():
            r = out.get(m)
            if r is None:
                out[m] = c
            else:
                r = r + c
                if r:
                    out[m] = r
                else:
                    del out[m]
        return VarPoly._raw(out)

    def __sub__(self, other: "VarPoly") -> "VarPoly":
        return self + (-other)

    def __mul__(self, other: "VarPoly") -> "VarPoly":
        out: dict[Monomial, RationalFunction] = {}
        for ma, ca in self.terms.items():
            for mb, cb in other.terms.items():
                m = _merge_monomials(ma, mb)
                c = ca * cb
                r = out.get(m)
                if r is None:
                    out[m] = c
                else:
                    r = r + c
                    if r:
                        out[m] = r
                    else:
                        del out[m]
        return VarPoly._raw(out)

    def scale(self, c: RationalFunction) -> "VarPoly":
        if not c:
            return VarPoly._raw({})
        return VarPoly._raw({m: k * c for m, k in self.terms.items()})

    def __repr__(self) -> str:
        return f"VarPoly({len(self.terms)} terms)"


def _merge_monomials(a: Monomial, b: Monomial) -> Monomial:
    if not a:
        return b
    if not b:
        return a
    exps: dict[Symbol, int] = dict(a)
    for sym, e in b:
        exps[sym] = exps.get(sym, 0) + e
    return tuple(sorted(exps.items()))


def determinant(matrix: list[list[VarPoly]]) -> VarPoly:
    """Permutation expansion; fine for the small sizes used here."""
    n = len(matrix)
    total = VarPoly.zero()
    for perm in itertools.permutations(range(n)):
        inversions = sum(
            1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j]
        )
        prod = VarPoly.one() if inversions % 2 == 0 else -VarPoly.one()
        for i in range(n):
            prod = prod * matrix[i][perm[i]]
            if not prod:
                break
        total = total + prod
    return total


# ---------------------------------------------------------------------------
# the h'/h/a generators and their relations
# ---------------------------------------------------------------------------

SYM_A: Symbol = ("a",)


def sym_a() -> VarPoly:
    return VarPoly.var(SYM_A)


def sym_h(i: int) -> VarPoly:
    if i < 0:
        return VarPoly.zero()
    if i == 0:
        return VarPoly.one()
    return VarPoly.var(("h", i))


def sym_hp(i: int, cap: int = DEFAULT_INDEX_CAP) -> VarPoly:
    if i < 0:
        return VarPoly.zero()
    if i <= 1:
        return VarPoly.one()
    if i > cap:
        raise ValueError(f"primed generator index {i} beyond the cap {cap}")
    return VarPoly.var(("hp", i))


def eh(i: int, cap: int = DEFAULT_INDEX_CAP) -> VarPoly:
    """The arc with h_i below, written on the primed generators."""
    if i < 0:
        return VarPoly.zero()
    return sym_hp(i + 1, cap).scale(qint(i + 1)) - (
        sym_hp(i, cap) * sym_a()
    ).scale(qint(i) * s_power(-1))


def he(i: int, cap: int = DEFAULT_INDEX_CAP) -> VarPoly:
    """The arc with h_i above: the mirror image of eh(i)."""
    if i < 0:
        return VarPoly.zero()
    return sym_hp(i + 1, cap).scale(qint(i + 1)) - (
        sym_hp(i, cap) * sym_a()
    ).scale(qint(i) * s_power(1))


def t(i: int, cap: int = DEFAULT_INDEX_CAP) -> VarPoly:
    """The commutator h_i above minus h_i below; zero for i <= 0."""
    if i <= 0:
        return VarPoly.zero()
    return he(i, cap) - eh(i, cap)


def verify_yiAia(i: int, cap: int = DEFAULT_INDEX_CAP) -> bool:
    """t_i equals (s^-i - s^i) hp_i a."""
    rhs = (sym_hp(i, cap) * sym_a()).scale(s_power(-i) - s_power(i))
    return t(i, cap) == rhs


def verify_yiyj(i: int, j: int, cap: int = DEFAULT_INDEX_CAP) -> bool:
    """det[[t_i, t_{i+1}], [t_j, t_{j+1}]] equals
    (s^2 - 1) det[[eh_i, t_{i+1}], [eh_j, t_{j+1}]]."""
    lhs = determinant([[t(i, cap), t(i + 1, cap)], [t(j, cap), t(j + 1, cap)]])
    rhs = determinant([[eh(i, cap), t(i + 1, cap)], [eh(j, cap), t(j + 1, cap)]])
    return lhs == rhs.scale(s_power(2) - ONE)


def verify_ehex(indices, cap: int = DEFAULT_INDEX_CAP) -> bool:
    """The r x r determinant with h.e columns and a final t column equals
    s^(2(r-1)) times its all-below version."""
    indices = tuple(indices)
    r = len(indices)
    if r < 2:
        raise ValueError("verify_ehex needs at least two row indices")
    above = [
        [he(base + j, cap) for j in range(r - 1)] + [t(base + r - 1, cap)]
        for base in indices
    ]
    below = [
        [eh(base + j, cap) for j in range(r - 1)] + [t(base + r - 1, cap)]
        for base in indices
    ]
    return determinant(above) == determinant(below).scale(s_power(2 * (r - 1)))


# ---------------------------------------------------------------------------
# the bimodule fragment and its closure
# ---------------------------------------------------------------------------

CORE_E = ("E",)


def core_t(i: int):
    if i < 1:
        raise ValueError("T core index must be >= 1")
    return ("T", i)


def core_ha(i: int):
    if i < 1:
        raise ValueError("HA core index must be >= 1")
    return ("HA", i)


@dataclass(frozen=True)
class BimoduleForm:
    """Formal sum of (coefficient, above part, core, below part) terms."""

    terms: tuple[tuple[RationalFunction, SymFunction, tuple, SymFunction], ...]

    @classmethod
    def zero(cls) -> "BimoduleForm":
        return cls(())

    @classmethod
    def single(
        cls,
        coeff: RationalFunction,
        core: tuple = CORE_E,
        above: SymFunction | None = None,
        below: SymFunction | None = None,
    ) -> "BimoduleForm":
        if not coeff:
            return cls(())
        above = SymFunction.one() if above is None else above
        below = SymFunction.one() if below is None else below
        if not above or not below:
            return cls(())
        return cls(((coeff, above, core, below),))

    def __add__(self, other: "BimoduleForm") -> "BimoduleForm":
        return BimoduleForm(self.terms + other.terms)

    def __neg__(self) -> "BimoduleForm":
        return BimoduleForm(tuple((-c, a, core, b) for c, a, core, b in self.terms))

    def __sub__(self, other: "BimoduleForm") -> "BimoduleForm":
        return self + (-other)

    def scale(self, c: RationalFunction) -> "BimoduleForm":
        if not c:
            return BimoduleForm(())
        return BimoduleForm(
            tuple((k * c, a, core, b) for k, a, core, b in self.terms)
        )

    def __mul__(self, other: "BimoduleForm") -> "BimoduleForm":
        """(g1, E, d1) * (g2, core, d2) = (g1 g2, core, d1 d2); at most one
        factor may carry a non-trivial core."""
        out = []
        for c1, a1, core1, b1 in self.terms:
            for c2, a2, core2, b2 in other.terms:
                if core1 != CORE_E and core2 != CORE_E:
                    raise ValueError("cannot multiply two non-arc cores")
                core = core2 if core1 == CORE_E else core1
                coeff = c1 * c2
                above = a1 * a2
                below = b1 * b2
                if coeff and above and below:
                    out.append((coeff, above, core, below))
        return BimoduleForm(tuple(out))


def _gamma_all(f: SymFunction) -> SymFunction:
    from .annulus import gamma

    out = SymFunction.zero()
    for degree in sorted(f.degrees()):
        out = out + gamma(f.homogeneous_part(degree), degree)
    return out


def close(form: BimoduleForm) -> SymFunction:
    """Close the extra arc of each term back into the annulus.

    Arc cores close through the meridian map of the above part (a bare arc
    contributes a circle factor).  T and HA cores require a trivial above
    part: T(i) closes to (s^(1-2i) - s) v h_i, HA(i) to v s^(1-i) h_i.
    """
    total = SymFunction.zero()
    one = SymFunction.one()
    for coeff, above, core, below in form.terms:
        if core == CORE_E:
            if above == one:
                closed = below.scale(delta())
            else:
                closed = _gamma_all(above) * below
        elif core[0] == "T":
            if above != one:
                raise UndefinedClosure("T core with a non-trivial above part")
            i = core[1]
            closed = (SymFunction.h(i) * below).scale(
                (s_power(1 - 2 * i) - s_power(1)) * v_power(1)
            )
        elif core[0] == "HA":
            if above != one:
                raise UndefinedClosure("HA core with a non-trivial above part")
            i = core[1]
            closed = (SymFunction.h(i) * below).scale(v_power(1) * s_power(1 - i))
        else:
            raise UndefinedClosure(f"unknown core {core}")
        total = total + closed.scale(coeff)
    return total


# ---------------------------------------------------------------------------
# the eigenvalue pipeline along the telescoped determinants
# ---------------------------------------------------------------------------


def _entry_index(shape: Partition, i: int, j: int) -> int:
    return shape[i] + j - i


def _bimodule_determinant(shape: Partition, k: int) -> BimoduleForm:
    """Expansion of the all-below determinant with the t column at k,
    directly as a bimodule form: each term is one T core over a product of
    below parts."""
    n = len(shape)
    acc = BimoduleForm.zero()
    for perm in itertools.permutations(range(n)):
        inversions = sum(
            1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j]
        )
        sign = -1 if inversions % 2 else 1
        below = SymFunction.one()
        core_index = None
        dead = False
        for i in range(n):
            j = perm[i]
            m = _entry_index(shape, i, j)
            if j == k:
                if m <= 0:
                    dead = True
                    break
                core_index = m
            else:
                if m < 0:
                    dead = True
                    break
                if m > 0:
                    below = below * SymFunction.h(m)
        if dead:
            continue
        acc = acc + BimoduleForm.single(
            from_int(sign), core_t(core_index), below=below
        )
    return acc


def gamma_via_proof(shape: Partition, cap: int = DEFAULT_INDEX_CAP) -> RationalFunction:
    """Recompute the meridian eigenvalue of a Schur element by running the
    telescoping argument end to end.

    Steps: (1) telescope the difference of the above/below determinants into
    n determinants with one t column; (2) check each against s^(2(k-1))
    times its all-below version, in the free commutative model; (3) expand
    those as bimodule forms and close them; (4) divide the closed sum by the
    Schur element, checking exactness.
    """
    shape = check_partition(shape) if shape else ()
    if not shape:
        return delta()
    n = len(shape)
    if shape[0] + n > cap:
        raise ValueError(
            f"shape {shape} needs primed generators beyond the cap {cap}"
        )

    he_mat = [[he(_entry_index(shape, i, j), cap) for j in range(n)] for i in range(n)]
    eh_mat = [[eh(_entry_index(shape, i, j), cap) for j in range(n)] for i in range(n)]
    above_det = determinant(he_mat)
    below_det = determinant(eh_mat)

    telescoped = []
    for k in range(n):
        mat = [
            [
                he_mat[i][j] if j < k else (t(_entry_index(shape, i, k), cap) if j == k else eh_mat[i][j])
                for j in range(n)
            ]
            for i in range(n)
        ]
        telescoped.append(determinant(mat))
    total = VarPoly.zero()
    for det in telescoped:
        total = total + det
    if total != above_det - below_det:
        raise TelescopeMismatch("telescope sum differs from the determinant difference")

    all_below = []
    for k in range(n):
        mat = [
            [
                eh_mat[i][j] if j != k else t(_entry_index(shape, i, k), cap)
                for j in range(n)
            ]
            for i in range(n)
        ]
        all_below.append(determinant(mat))
        if telescoped[k] != all_below[k].scale(s_power(2 * k)):
            raise TelescopeMismatch(
                f"column {k} does not carry the factor s^{2 * k}"
            )

    closed_sum = SymFunction.zero()
    for k in range(n):
        closed_sum = closed_sum + close(_bimodule_determinant(shape, k)).scale(
            s_power(2 * k)
        )

    schur = schur_h(shape)
    ratio = closed_sum.coeffs.get(tuple(shape), ZERO)
    if closed_sum != schur.scale(ratio):
        raise NonDivisible("closed telescope sum is not a multiple of the Schur element")
    return delta() + ratio
