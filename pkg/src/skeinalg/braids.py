"""Permutations of positions 0..n-1, their Coxeter word combinatorics, and
braid word parsing.

Permutations are one-line tuples: ``p[j]`` is the image of position j.
Multiplying on the right by the transposition ``s_i`` swaps the entries at
positions i and i+1, matching the convention that appending an elementary
braid at the bottom of a positive permutation braid multiplies on the right.
Generator indices are 0-based internally; braid-word text uses the 1-based
indices of the elementary braids.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

Perm = tuple[int, ...]


def identity_perm(n: int) -> Perm:
    return tuple(range(n))


def all_perms(n: int) -> list[Perm]:
    return [tuple(p) for p in itertools.permutations(range(n))]


def length(p: Perm) -> int:
    """Number of inversions; the writhe of the positive permutation braid."""
    n = len(p)
    return sum(1 for i in range(n) for j in range(i + 1, n) if p[i] > p[j])


def mul_transposition(p: Perm, i: int) -> tuple[Perm, int]:
    """Right-multiply by s_i; returns (p * s_i, length change of +1 or -1)."""
    if not 0 <= i < len(p) - 1:
        raise ValueError(f"generator index {i} out of range for width {len(p)}")
    q = p[:i] + (p[i + 1], p[i]) + p[i + 2 :]
    return q, (1 if p[i] < p[i + 1] else -1)


def compose(p: Perm, q: Perm) -> Perm:
    """(p . q)[j] = p[q[j]]."""
    return tuple(p[j] for j in q)


def inverse_perm(p: Perm) -> Perm:
    out = [0] * len(p)
    for j, v in enumerate(p):
        out[v] = j
    return tuple(out)


def descent_word(p: Perm) -> tuple[int, ...]:
    """A canonical reduced word for p (prefix-closed across all of S_n).

    Built by repeatedly sliding the largest not-yet-placed value to its
    final position; the resulting family of words is closed under taking
    prefixes, which lets products share partial computations.
    """
    work = list(p)
    peeled: list[int] = []
    for top in range(len(p) - 1, 0, -1):
        pos = work.index(top)
        for i in range(pos, top):
            work[i], work[i + 1] = work[i + 1], work[i]
            peeled.append(i)
    peeled.reverse()
    return tuple(peeled)


def coset_split(p: Perm) -> tuple[Perm, Perm] | None:
    """Write p in S_n as alpha * s_{n-2} * beta with alpha, beta fixing the
    last position, lengths adding up; both are returned restricted to width
    n-1.  Returns None when p already fixes the last position.

    beta is the minimal-length permutation carrying the preimage of the
    last position into place, which makes the split deterministic.
    """
    n = len(p)
    last = n - 1
    if p[last] == last:
        return None
    b = p.index(last)
    beta = list(range(n))
    beta[b] = n - 2
    for j in range(b + 1, n - 1):
        beta[j] = j - 1
    beta_t = tuple(beta)
    s_m = identity_perm(n)[: n - 2] + (n - 1, n - 2)
    alpha = compose(p, compose(inverse_perm(beta_t), s_m))
    return alpha[: n - 1], beta_t[: n - 1]


@dataclass(frozen=True)
class BraidWord:
    """A word in the elementary braids: letters are signed 1-based indices."""

    width: int
    letters: tuple[int, ...]

    def __post_init__(self):
        for letter in self.letters:
            if letter == 0:
                raise ValueError("braid letter 0 is not a generator")
            if abs(letter) >= self.width:
                raise ValueError(
                    f"braid letter {letter} out of range for width {self.width}"
                )


def parse_braid(text: str, width: int | None = None) -> BraidWord:
    """Parse whitespace-separated letters: signed integers, or ``s<i>`` with
    an optional trailing apostrophe for the inverse.  Width defaults to one
    more than the largest index used.
    """
    letters: list[int] = []
    for token in text.split():
        if token.startswith("s"):
            body = token[1:]
            inverse = body.endswith("'")
            if inverse:
                body = body[:-1]
            if not body.isdigit():
                raise ValueError(f"malformed braid token: {token!r}")
            idx = int(body)
            letters.append(-idx if inverse else idx)
        else:
            try:
                letters.append(int(token))
            except ValueError:
                raise ValueError(f"malformed braid token: {token!r}") from None
    for letter in letters:
        if letter == 0:
            raise ValueError("braid letter 0 is not a generator")
    if width is None:
        width = 1 + max((abs(letter) for letter in letters), default=1)
    return BraidWord(width, tuple(letters))
