"""Pairing, diagonal and block codings.

Covers the diagonal pairing of the grid with its snake enumeration, verticals
and odd parts of binary sequences, the 2/3-adic valuations, the geometric
block coding g with ratio 6, and the separator-structured prefix sets K_l
with their block-concatenation map phi.

Separator letters default to "0","1","2","3" but every operation that adjoins
them to a base alphabet accepts a `markers` tuple so pipelines can pick fresh
letters when the base alphabet already uses digits.
"""

from dataclasses import dataclass
from math import isqrt


# -- pairing --------------------------------------------------------------

def pair(n, p):
    """Diagonal pairing; the diagonal n+p is walked in alternating direction."""
    s = n + p
    base = s * (s + 1) // 2
    return base + (n if s % 2 == 0 else p)


def _diag_index(q):
    # largest d with d(d+1)/2 <= q
    d = (isqrt(8 * q + 1) - 1) // 2
    while d * (d + 1) // 2 > q:
        d -= 1
    while (d + 1) * (d + 2) // 2 <= q:
        d += 1
    return d


def unpair(q):
    d = _diag_index(q)
    off = q - d * (d + 1) // 2
    if d % 2 == 0:
        n = off
    else:
        n = d - off
    return (n, d - n)


def vertical(alpha_prefix, M):
    """Longest determined prefix of the column M subsequence."""
    out = []
    p = 0
    while True:
        idx = pair(M, p)
        if idx >= len(alpha_prefix):
            break
        out.append(alpha_prefix[idx])
        p += 1
    return "".join(out)


def odd_part(w):
    return w[1::2]


def c_map(x, out_len):
    """The reduction map from double sequences to binary words.

    x is a finite map (m, n) -> bit given as a dict; position q of the output
    is 0 unless the first unpaired coordinate is even and the second odd, in
    which case it is 1 - x(first/2, (second-1)/2).
    """
    out = []
    for q in range(out_len):
        a, b = unpair(q)
        if a % 2 == 1 or b % 2 == 0:
            out.append("0")
        else:
            key = (a // 2, (b - 1) // 2)
            if key not in x:
                raise KeyError("c_map needs x%r" % (key,))
            out.append("1" if x[key] == 0 else "0")
    return "".join(out)


# -- valuations -----------------------------------------------------------

def valuations_23(m):
    """(M2, M3) with m = n * 2^M2 * 3^M3 and n coprime to 6."""
    if m <= 0:
        raise ValueError("need a positive integer")
    m2 = 0
    while m % 2 == 0:
        m //= 2
        m2 += 1
    m3 = 0
    while m % 3 == 0:
        m //= 3
        m3 += 1
    return (m2, m3)


# -- the geometric block coding ------------------------------------------

@dataclass(frozen=True)
class GParams:
    N: int
    l: int

    def __post_init__(self):
        if self.N <= 0 or self.N % 6 == 0:
            raise ValueError("N must be positive and not divisible by 6")
        if self.l < 0:
            raise ValueError("l must be nonnegative")


class NotInRange:
    def __repr__(self):
        return "NotInRange"

    def __bool__(self):
        return False


NOT_IN_RANGE = NotInRange()


def encode_g(p, sigma_prefix, markers=("0", "1", "2")):
    """Block coding: 0-run of length 1, then per input letter a_i the group
    a_i 1 0^(N*6^(l+i)) 2 0^(N*6^(l+i))."""
    z, o, t = markers
    parts = [z]
    run = p.N * 6 ** p.l
    for ch in sigma_prefix:
        if ch in markers:
            raise ValueError("input letter %r collides with a marker" % ch)
        parts.append(ch + o + z * run + t + z * run)
        run *= 6
    return "".join(parts)


def decode_g(w, markers=("0", "1", "2")):
    """Inverse of encode_g on its image; NOT_IN_RANGE otherwise.

    Partial trailing groups are refused rather than guessed.
    """
    z, o, t = markers
    if not w or w[0] != z:
        return NOT_IN_RANGE
    i = 1
    letters = []
    runs = []
    n = len(w)
    while i < n:
        ch = w[i]
        if ch in markers:
            return NOT_IN_RANGE
        i += 1
        if i >= n or w[i] != o:
            return NOT_IN_RANGE
        i += 1
        r1 = 0
        while i < n and w[i] == z:
            r1 += 1
            i += 1
        if i >= n or w[i] != t:
            return NOT_IN_RANGE
        i += 1
        r2 = 0
        while i < n and w[i] == z:
            r2 += 1
            i += 1
        if r1 != r2 or r1 == 0:
            return NOT_IN_RANGE
        letters.append(ch)
        runs.append(r1)
    if not letters:
        return NOT_IN_RANGE
    for j in range(1, len(runs)):
        if runs[j] != 6 * runs[j - 1]:
            return NOT_IN_RANGE
    first = runs[0]
    l = 0
    base = first
    while base % 6 == 0:
        base //= 6
        l += 1
    # smallest l with N = first / 6^l not divisible by 6; N > 0 automatically
    N = base
    if N % 6 == 0:
        return NOT_IN_RANGE
    return (GParams(N, l), "".join(letters))


# -- K_l prefixes and phi -------------------------------------------------

@dataclass(frozen=True)
class DiagonalPrefix:
    """A finite list of blocks with the K_l length discipline.

    l = 0: blocks s_0, s_1, ... with |s_m| = m, separators 2,3 alternating
    starting with 2.  l >= 1: blocks s_1, s_2, ... with |s_m| = 2(l-1)+2+m,
    separators alternating starting with 3.
    """
    l: int
    blocks: tuple

    def __post_init__(self):
        if self.l < 0:
            raise ValueError("l must be nonnegative")
        for j, s in enumerate(self.blocks):
            m = j if self.l == 0 else j + 1
            if len(s) != block_length(self.l, m):
                raise ValueError("block %d has length %d, expected %d"
                                 % (m, len(s), block_length(self.l, m)))
            if set(s) - {"0", "1"}:
                raise ValueError("non-binary block %r" % s)


def block_length(l, m):
    if l == 0:
        return m
    return 2 * (l - 1) + 2 + m


def _first_block_index(l):
    return 0 if l == 0 else 1


def _separator(l, m, markers4=("0", "1", "2", "3")):
    # the separator written before block s_m
    two, three = markers4[2], markers4[3]
    if l == 0:
        return two if m % 2 == 0 else three
    return three if m % 2 == 1 else two


def serialize_k_prefix(d, markers4=("0", "1", "2", "3")):
    out = []
    m = _first_block_index(d.l)
    for s in d.blocks:
        out.append(_separator(d.l, m, markers4))
        out.append(s)
        m += 1
    return "".join(out)


def k_prefix_check(w, l, markers4=("0", "1", "2", "3")):
    """Is w a prefix of an element of K_l (partial final block allowed)?"""
    two, three = markers4[2], markers4[3]
    binary = {markers4[0], markers4[1]}
    i = 0
    m = _first_block_index(l)
    n = len(w)
    while i < n:
        sep = _separator(l, m, markers4)
        if w[i] != sep:
            return False
        i += 1
        want = block_length(l, m)
        taken = 0
        while taken < want and i < n:
            if w[i] not in binary:
                return False
            i += 1
            taken += 1
        if taken < want:
            return True  # ran out inside a block: still a prefix
        m += 1
    return True


def phi_forward(d, markers4=("0", "1", "2", "3")):
    """Concatenate the blocks, reversing every odd-indexed one.

    The reversal follows the snake direction of the diagonal enumeration, so
    that for l = 0 the result is the binary sequence whose diagonals are the
    blocks.
    """
    out = []
    m = _first_block_index(d.l)
    for s in d.blocks:
        out.append(s[::-1] if m % 2 == 1 else s)
        m += 1
    return "".join(out)


def phi_inverse(w, l):
    """Cut w into blocks per the K_l discipline; w must end on a block
    boundary."""
    blocks = []
    i = 0
    m = _first_block_index(l)
    n = len(w)
    while i < n:
        want = block_length(l, m)
        if i + want > n:
            raise ValueError("length %d does not fall on a block boundary" % n)
        chunk = w[i:i + want]
        blocks.append(chunk[::-1] if m % 2 == 1 else chunk)
        i += want
        m += 1
    return DiagonalPrefix(l, tuple(blocks))
