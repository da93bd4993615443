"""The Hecke algebra of width n on the basis of positive permutation braids.

Elements are sparse maps from permutations to scalars.  The product is the
bilinear extension of the basis rule for appending one elementary braid:
when the Coxeter length rises the basis element just moves, otherwise the
quadratic skein relation contributes an extra (s - s^-1) term.
"""

from __future__ import annotations

from functools import lru_cache

from .braids import BraidWord, Perm, all_perms, descent_word, identity_perm, length
from .partitions import Partition, check_partition, conjugate
from .scalars import ONE, RationalFunction, bar, from_int, monomial, render_rational, s_power

WIDTH_CAP = 7  # factorial-size dense supports beyond this are refused


class SizeLimitError(ValueError):
    """Raised when an operation would require a dense basis beyond the cap."""


class NotProportional(ArithmeticError):
    """Raised when x*x is not a scalar multiple of x."""


def _check_cap(n: int):
    if n > WIDTH_CAP:
        raise SizeLimitError(
            f"width {n} exceeds the dense-computation cap of {WIDTH_CAP}"
        )


_SMS = s_power(1) - s_power(-1)  # the skein scalar s - s^-1


def _acc(out: dict, key, c):
    r = out.get(key)
    if r is None:
        out[key] = c
    else:
        r = r + c
        if r:
            out[key] = r
        else:
            del out[key]


def _rmul_sigma(coeffs: dict, i: int) -> dict:
    """Right-multiply a coefficient dict by the elementary braid at i."""
    out: dict = {}
    for p, c in coeffs.items():
        q = p[:i] + (p[i + 1], p[i]) + p[i + 2 :]
        _acc(out, q, c)
        if p[i] > p[i + 1]:
            _acc(out, p, c * _SMS)
    return out


def _rmul_sigma_inv(coeffs: dict, i: int) -> dict:
    out: dict = {}
    for p, c in coeffs.items():
        q = p[:i] + (p[i + 1], p[i]) + p[i + 2 :]
        _acc(out, q, c)
        if p[i] < p[i + 1]:
            _acc(out, p, -(c * _SMS))
    return out


class HeckeElement:
    __slots__ = ("width", "coeffs")

    def __init__(self, width: int, coeffs: dict[Perm, RationalFunction] | None = None):
        self.width = width
        self.coeffs = {}
        for p, c in (coeffs or {}).items():
            if len(p) != width:
                raise ValueError(f"permutation {p} does not have width {width}")
            if c:
                self.coeffs[p] = c

    @classmethod
    def _raw(cls, width: int, coeffs: dict) -> "HeckeElement":
        x = object.__new__(cls)
        x.width = width
        x.coeffs = coeffs
        return x

    @classmethod
    def zero(cls, width: int) -> "HeckeElement":
        return cls._raw(width, {})

    @classmethod
    def identity(cls, width: int) -> "HeckeElement":
        return cls._raw(width, {identity_perm(width): ONE})

    @classmethod
    def basis(cls, width: int, perm: Perm) -> "HeckeElement":
        return cls._raw(width, {tuple(perm): ONE})

    @classmethod
    def sigma(cls, width: int, i: int) -> "HeckeElement":
        """The elementary braid with a positive crossing at 0-based slot i."""
        q, _ = _swap(identity_perm(width), i)
        return cls._raw(width, {q: ONE})

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, HeckeElement)
            and self.width == other.width
            and self.coeffs == other.coeffs
        )

    __hash__ = None

    def __neg__(self) -> "HeckeElement":
        return HeckeElement._raw(self.width, {p: -c for p, c in self.coeffs.items()})

    def __add__(self, other: "HeckeElement") -> "HeckeElement":
        self._check_width(other)
        out = dict(self.coeffs)
        for p, c in other.coeffs.items():
            _acc(out, p, c)
        return HeckeElement._raw(self.width, out)

    def __sub__(self, other: "HeckeElement") -> "HeckeElement":
        return self + (-other)

    def scale(self, c: RationalFunction) -> "HeckeElement":
        if not c:
            return HeckeElement._raw(self.width, {})
        return HeckeElement._raw(self.width, {p: k * c for p, k in self.coeffs.items()})

    def __rmul__(self, other):
        if isinstance(other, RationalFunction):
            return self.scale(other)
        if isinstance(other, int):
            return self.scale(from_int(other))
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, RationalFunction):
            return self.scale(other)
        if isinstance(other, int):
            return self.scale(from_int(other))
        if not isinstance(other, HeckeElement):
            return NotImplemented
        self._check_width(other)
        return _mul(self, other)

    def _check_width(self, other: "HeckeElement"):
        if self.width != other.width:
            raise ValueError(
                f"width mismatch: {self.width} vs {other.width}"
            )

    def __repr__(self) -> str:
        return f"HeckeElement(width={self.width}, terms={len(self.coeffs)})"


def _swap(p: Perm, i: int) -> tuple[Perm, bool]:
    return p[:i] + (p[i + 1], p[i]) + p[i + 2 :], p[i] < p[i + 1]


def _mul(x: HeckeElement, y: HeckeElement) -> HeckeElement:
    """Product via a prefix trie of canonical reduced words of y's support,
    so long shared prefixes are multiplied once."""
    if not x.coeffs or not y.coeffs:
        return HeckeElement._raw(x.width, {})
    root: dict = {}
    for p, c in y.coeffs.items():
        node = root
        for letter in descent_word(p):
            node = node.setdefault(letter, {})
        node["#"] = c
    acc: dict = {}

    def walk(node: dict, cur: dict):
        c = node.get("#")
        if c is not None:
            if c is ONE or c == ONE:
                for p, w in cur.items():
                    _acc(acc, p, w)
            else:
                for p, w in cur.items():
                    _acc(acc, p, w * c)
        for letter, child in node.items():
            if letter == "#":
                continue
            walk(child, _rmul_sigma(cur, letter))

    walk(root, x.coeffs)
    return HeckeElement._raw(x.width, acc)


def from_braid(word: BraidWord) -> HeckeElement:
    """Image of a braid word; negative letters expand the inverse crossing."""
    coeffs: dict = {identity_perm(word.width): ONE}
    for letter in word.letters:
        i = abs(letter) - 1
        coeffs = _rmul_sigma(coeffs, i) if letter > 0 else _rmul_sigma_inv(coeffs, i)
    return HeckeElement._raw(word.width, coeffs)


def tensor(x: HeckeElement, y: HeckeElement) -> HeckeElement:
    """Juxtaposition: y's strands are shifted past x's."""
    m = x.width
    out: dict = {}
    for p, c in x.coeffs.items():
        for q, d in y.coeffs.items():
            out[p + tuple(m + v for v in q)] = c * d
    return HeckeElement._raw(m + y.width, out)


def a_n(n: int) -> HeckeElement:
    """The row quasi-idempotent: sum of s^length over all permutation braids."""
    _check_cap(n)
    return HeckeElement._raw(n, {p: s_power(length(p)) for p in all_perms(n)})


def b_n(n: int) -> HeckeElement:
    """The column variant: sum of (-1/s)^length over all permutation braids."""
    _check_cap(n)
    return HeckeElement._raw(
        n,
        {
            p: monomial(-1 if length(p) % 2 else 1, 0, -length(p))
            for p in all_perms(n)
        },
    )


def _basis_inverse(width: int, perm: Perm) -> HeckeElement:
    """Inverse of a positive permutation braid, expanded on the basis."""
    coeffs: dict = {identity_perm(width): ONE}
    for letter in reversed(descent_word(perm)):
        coeffs = _rmul_sigma_inv(coeffs, letter)
    return HeckeElement._raw(width, coeffs)


def _column_to_row_perm(shape: Partition) -> Perm:
    """Permutation sending column-reading positions of the diagram's cells
    to their row-reading positions."""
    row_index = {}
    idx = 0
    for r, row_len in enumerate(shape):
        for c in range(row_len):
            row_index[(r, c)] = idx
            idx += 1
    images = []
    for c in range(shape[0]):
        for r in range(len(shape)):
            if shape[r] > c:
                images.append(row_index[(r, c)])
    return tuple(images)


def e_lambda(shape: Partition) -> HeckeElement:
    """Quasi-idempotent of a Young diagram: row symmetrizers times the
    column antisymmetrizers conjugated onto the column strands."""
    shape = check_partition(shape)
    n = sum(shape)
    if n < 1:
        raise ValueError("e_lambda needs a nonempty shape")
    _check_cap(n)
    rows = a_n(shape[0])
    for part in shape[1:]:
        rows = tensor(rows, a_n(part))
    cols_shape = conjugate(shape)
    cols = b_n(cols_shape[0])
    for part in cols_shape[1:]:
        cols = tensor(cols, b_n(part))
    p = _column_to_row_perm(shape)
    w_p = HeckeElement.basis(n, p)
    w_p_inv = _basis_inverse(n, p)
    return rows * w_p * cols * w_p_inv


def alpha_extract(x: HeckeElement) -> RationalFunction:
    """The unique scalar with x*x == scalar*x; NotProportional otherwise."""
    if not x.coeffs:
        raise ValueError("alpha_extract of zero")
    square = x * x
    p0 = min(x.coeffs)
    alpha = square.coeffs.get(p0)
    if alpha is None:
        raise NotProportional("x*x has no overlap with x on its first term")
    alpha = alpha / x.coeffs[p0]
    if square != x.scale(alpha):
        raise NotProportional("x*x is not proportional to x")
    return alpha


@lru_cache(maxsize=None)
def E_lambda(shape: Partition) -> HeckeElement:
    """The idempotent of a Young diagram: e_lambda over its normalizer."""
    e = e_lambda(shape)
    return e.scale(ONE / alpha_extract(e))


def mirror(x: HeckeElement) -> HeckeElement:
    """Switch every crossing and conjugate every scalar by v,s -> inverses.

    On a basis braid this expands the product of inverse elementary braids
    along any reduced word; multiplicative, and an involution.
    """
    out = HeckeElement._raw(x.width, {})
    ident = identity_perm(x.width)
    for p, c in x.coeffs.items():
        coeffs: dict = {ident: bar(c)}
        for letter in descent_word(p):
            coeffs = _rmul_sigma_inv(coeffs, letter)
        out = out + HeckeElement._raw(x.width, coeffs)
    return out


def render_hecke(x: HeckeElement) -> str:
    """Lines of 'one-line permutation : coefficient', sorted by permutation."""
    if not x.coeffs:
        return "0"
    lines = []
    for p in sorted(x.coeffs):
        one_line = " ".join(str(v + 1) for v in p)
        lines.append(f"[{one_line}] : {render_rational(x.coeffs[p])}")
    return "\n".join(lines)
