"""Young diagram combinatorics and the ring of symmetric functions modeled
on the complete symmetric functions h_1, h_2, ...

Partitions are tuples of weakly decreasing positive integers (no trailing
zeros).  A SymFunction is a sparse polynomial in the h_i with rational
function coefficients; monomial keys are the multiset of indices written as
a weakly decreasing tuple, so the key of h_3*h_1^2 is (3, 1, 1).
"""

from __future__ import annotations

import itertools
from functools import lru_cache

from .scalars import ONE, ZERO, RationalFunction, delta, from_int, monomial, render_rational

Partition = tuple[int, ...]


def check_partition(shape) -> Partition:
    shape = tuple(shape)
    for i, part in enumerate(shape):
        if part <= 0:
            raise ValueError(f"partition parts must be positive: {shape}")
        if i and shape[i - 1] < part:
            raise ValueError(f"partition parts must be weakly decreasing: {shape}")
    return shape


def parse_partition(text: str) -> Partition:
    text = text.strip()
    if not text:
        return ()
    return check_partition(int(tok) for tok in text.split(","))


def render_partition(shape: Partition) -> str:
    return ",".join(str(part) for part in shape)


def conjugate(shape: Partition) -> Partition:
    if not shape:
        return ()
    return tuple(
        sum(1 for part in shape if part > c) for c in range(shape[0])
    )


def contains(outer: Partition, inner: Partition) -> bool:
    """Whether the diagram of inner is a subset of the diagram of outer."""
    if len(inner) > len(outer):
        return False
    return all(inner[i] <= outer[i] for i in range(len(inner)))


@lru_cache(maxsize=None)
def partitions_of(n: int) -> tuple[Partition, ...]:
    """All partitions of n, in descending lexicographic order."""
    if n < 0:
        return ()
    if n == 0:
        return ((),)

    def build(remaining: int, cap: int):
        if remaining == 0:
            yield ()
            return
        for first in range(min(cap, remaining), 0, -1):
            for rest in build(remaining - first, first):
                yield (first,) + rest

    return tuple(build(n, n))


def count_partitions(n: int) -> int:
    return len(partitions_of(n))


Tableau = tuple[tuple[int, ...], ...]


@lru_cache(maxsize=None)
def standard_tableaux(shape: Partition) -> tuple[Tableau, ...]:
    """All standard tableaux of the given shape: fillings with 1..n that
    increase along rows and down columns, found by exhaustive placement."""
    n = sum(shape)
    if n == 0:
        return ((),)
    rows = len(shape)
    results: list[Tableau] = []
    filled = [[0] * part for part in shape]
    counts = [0] * rows

    def place(value: int):
        if value > n:
            results.append(tuple(tuple(row) for row in filled))
            return
        for r in range(rows):
            c = counts[r]
            if c >= shape[r]:
                continue
            if r > 0 and counts[r - 1] <= c:
                continue
            filled[r][c] = value
            counts[r] += 1
            place(value + 1)
            counts[r] -= 1
        return

    place(1)
    return tuple(results)


def d_lambda(shape: Partition) -> int:
    """Number of standard tableaux of the shape, by enumeration."""
    return len(standard_tableaux(tuple(shape)))


# ---------------------------------------------------------------------------
# symmetric functions in the h-basis
# ---------------------------------------------------------------------------


class SymFunction:
    """Polynomial in the complete symmetric functions h_1, h_2, ... with
    RationalFunction coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: dict[Partition, RationalFunction] | None = None):
        self.coeffs = {m: c for m, c in (coeffs or {}).items() if c}

    @classmethod
    def _raw(cls, coeffs: dict) -> "SymFunction":
        f = object.__new__(cls)
        f.coeffs = coeffs
        return f

    @classmethod
    def zero(cls) -> "SymFunction":
        return cls._raw({})

    @classmethod
    def one(cls) -> "SymFunction":
        return cls._raw({(): ONE})

    @classmethod
    def h(cls, i: int) -> "SymFunction":
        """The complete symmetric function h_i (h_0 = 1, h_i = 0 for i < 0)."""
        if i < 0:
            return cls.zero()
        if i == 0:
            return cls.one()
        return cls._raw({(i,): ONE})

    @classmethod
    def constant(cls, c: RationalFunction) -> "SymFunction":
        if not c:
            return cls.zero()
        return cls._raw({(): c})

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        return isinstance(other, SymFunction) and self.coeffs == other.coeffs

    __hash__ = None

    def __neg__(self) -> "SymFunction":
        return SymFunction._raw({m: -c for m, c in self.coeffs.items()})

    def __add__(self, other: "SymFunction") -> "SymFunction":
        out = dict(self.coeffs)
        for m, c in other.coeffs.items():
            r = out.get(m)
            if r is None:
                out[m] = c
            else:
                r = r + c
                if r:
                    out[m] = r
                else:
                    del out[m]
        return SymFunction._raw(out)

    def __sub__(self, other: "SymFunction") -> "SymFunction":
        return self + (-other)

    def __mul__(self, other: "SymFunction") -> "SymFunction":
        out: dict[Partition, RationalFunction] = {}
        for ma, ca in self.coeffs.items():
            for mb, cb in other.coeffs.items():
                m = tuple(sorted(ma + mb, reverse=True))
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
        return SymFunction._raw(out)

    def scale(self, c: RationalFunction) -> "SymFunction":
        if not c:
            return SymFunction._raw({})
        return SymFunction._raw({m: k * c for m, k in self.coeffs.items()})

    def degrees(self) -> set[int]:
        return {sum(m) for m in self.coeffs}

    def is_homogeneous(self, degree: int) -> bool:
        return all(sum(m) == degree for m in self.coeffs)

    def homogeneous_part(self, degree: int) -> "SymFunction":
        return SymFunction._raw(
            {m: c for m, c in self.coeffs.items() if sum(m) == degree}
        )

    def __repr__(self) -> str:
        return f"SymFunction({render_symfunction(self)!r})"


def render_symfunction(f: SymFunction) -> str:
    if not f.coeffs:
        return "0"
    pieces = []
    for m in sorted(f.coeffs, key=lambda m: (sum(m), m), reverse=True):
        c = f.coeffs[m]
        body = "*".join(
            f"h{idx}" if mult == 1 else f"h{idx}^{mult}"
            for idx, mult in sorted(
                ((idx, m.count(idx)) for idx in set(m)), reverse=True
            )
        )
        cs = render_rational(c)
        if body:
            if cs == "1":
                pieces.append(body)
            elif cs == "-1":
                pieces.append(f"-{body}")
            elif "+" in cs or " - " in cs or "/" in cs:
                pieces.append(f"({cs})*{body}")
            else:
                pieces.append(f"{cs}*{body}")
        else:
            pieces.append(cs if ("+" not in cs and " - " not in cs) else f"({cs})")
    return " + ".join(pieces).replace("+ -", "- ")


def _perm_sign(perm: tuple[int, ...]) -> int:
    n = len(perm)
    inv = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
    return -1 if inv % 2 else 1


@lru_cache(maxsize=None)
def schur_h(shape: Partition) -> SymFunction:
    """Schur function as the determinant det(h_{shape_i + j - i})."""
    shape = check_partition(shape) if shape else ()
    rows = len(shape)
    if rows == 0:
        return SymFunction.one()
    total = SymFunction.zero()
    for perm in itertools.permutations(range(rows)):
        indices = [shape[i] + perm[i] - i for i in range(rows)]
        if any(idx < 0 for idx in indices):
            continue
        key = tuple(sorted((idx for idx in indices if idx > 0), reverse=True))
        coeff = from_int(_perm_sign(perm))
        total = total + SymFunction._raw({key: coeff})
    return total


def schur_expand(f: SymFunction, degree: int) -> dict[Partition, RationalFunction]:
    """Coefficients of a homogeneous SymFunction in the Schur basis.

    The h-expansion of a Schur function is unitriangular: besides its own
    key it only contains lexicographically larger monomials.  Eliminating in
    ascending lexicographic order therefore reads each coefficient off the
    residual directly.
    """
    if not f.is_homogeneous(degree):
        raise ValueError("schur_expand requires a homogeneous input")
    residual = f
    out: dict[Partition, RationalFunction] = {}
    for shape in reversed(partitions_of(degree)):
        c = residual.coeffs.get(shape)
        if c:
            out[shape] = c
            residual = residual - schur_h(shape).scale(c)
    if residual:
        raise ArithmeticError("h-monomials left over after Schur elimination")
    return out


def lr_coeffs(lam: Partition, mu: Partition) -> dict[Partition, int]:
    """Littlewood-Richardson coefficients of schur(lam)*schur(mu).

    Counts skew semistandard tableaux of shape nu/lam with content mu whose
    reverse reading word is a lattice word.  Pure combinatorics, sharing no
    code with the Schur-function arithmetic it cross-checks.
    """
    lam = check_partition(lam) if lam else ()
    mu = check_partition(mu) if mu else ()
    total = sum(lam) + sum(mu)
    out: dict[Partition, int] = {}
    for nu in partitions_of(total):
        if not contains(nu, lam):
            continue
        count = _lr_fillings(nu, lam, mu)
        if count:
            out[nu] = count
    return out


def _lr_fillings(nu: Partition, lam: Partition, mu: Partition) -> int:
    rows = len(nu)
    lam_padded = tuple(lam) + (0,) * (rows - len(lam))
    cells = []
    for r in range(rows):
        for c in range(nu[r] - 1, lam_padded[r] - 1, -1):
            cells.append((r, c))  # reverse reading order: right to left, top down
    if not cells:
        return 1 if not mu else 0
    values = len(mu)
    grid = [[0] * nu[r] for r in range(rows)]
    remaining = list(mu)
    lattice = [0] * (values + 1)
    count = 0

    def place(pos: int):
        nonlocal count
        if pos == len(cells):
            count += 1
            return
        r, c = cells[pos]
        right = grid[r][c + 1] if c + 1 < nu[r] else values
        above = grid[r - 1][c] if r > 0 and c < nu[r - 1] and c >= lam_padded[r - 1] else 0
        for val in range(1, values + 1):
            if remaining[val - 1] == 0:
                continue
            if val > right:
                break
            if val <= above:
                continue
            if val > 1 and lattice[val] + 1 > lattice[val - 1]:
                continue
            grid[r][c] = val
            remaining[val - 1] -= 1
            lattice[val] += 1
            place(pos + 1)
            lattice[val] -= 1
            remaining[val - 1] += 1
            grid[r][c] = 0

    place(0)
    return count


# ---------------------------------------------------------------------------
# meridian eigenvalue scalars
# ---------------------------------------------------------------------------


def _eigenvalue(shape: Partition) -> RationalFunction:
    total = delta()
    v_s_inv = monomial(1, 1, -1)
    for k, part in enumerate(shape, start=1):
        total = total + v_s_inv * (monomial(1, 0, 2 * (k - part)) - monomial(1, 0, 2 * k))
    return total


@lru_cache(maxsize=None)
def c_lambda(shape: Partition) -> RationalFunction:
    """Meridian eigenvalue of the closed idempotent indexed by the shape."""
    return _eigenvalue(check_partition(shape) if shape else ())


@lru_cache(maxsize=None)
def q_lambda(shape: Partition) -> RationalFunction:
    """Meridian eigenvalue of the Schur element indexed by the shape."""
    return _eigenvalue(check_partition(shape) if shape else ())
