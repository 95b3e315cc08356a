"""Lyndon-word kernel.

Words are tuples of non-negative int letters compared in their natural order;
Python's tuple comparison is exactly the lexicographic order with the
proper-prefix-is-smaller rule.

Besides factorizations this module holds the successiveness monomials
(``BMonomial``), a bijection ``phi`` carrying the ``beta_dec`` statistic to the
``beta_vert`` statistic, and the sign-reversing involution on monomials of
distinct Lyndon words.
"""

from __future__ import annotations

import itertools
from collections import Counter, defaultdict, deque
from dataclasses import dataclass
from typing import Callable, Iterable, Iterator, Sequence

from .errors import GoodMonomial, NotLyndon, TooShort

Word = tuple


def as_word(letters: Iterable[int]) -> Word:
    return tuple(letters)


def rotations(w: Sequence[int]) -> list[Word]:
    w = tuple(w)
    return [w[k:] + w[:k] for k in range(len(w))] if w else []


def is_primitive(w: Sequence[int]) -> bool:
    """True iff ``w`` is nonempty and not a proper power."""
    w = tuple(w)
    n = len(w)
    if n == 0:
        return False
    # w is a power iff it occurs inside ww at a position strictly between 0 and n
    return _find(w + w, w, 1) == n


def _find(hay: tuple, needle: tuple, start: int) -> int:
    n = len(needle)
    for k in range(start, len(hay) - n + 1):
        if hay[k : k + n] == needle:
            return k
    return -1


def is_lyndon(w: Sequence[int], key: Callable | None = None) -> bool:
    """Nonempty and strictly smaller than each of its proper right factors."""
    w = tuple(w)
    if not w:
        return False
    kw = _keyed(w, key)
    return all(kw < kw[k:] for k in range(1, len(w)))


def _keyed(w: Word, key: Callable | None) -> tuple:
    return w if key is None else tuple(key(x) for x in w)


def lyndon_rotation(w: Sequence[int]) -> Word:
    """The Lyndon word conjugate to a primitive word ``w``."""
    w = tuple(w)
    if not is_primitive(w):
        raise NotLyndon(f"{format_word(w)} is not primitive, so no rotation is Lyndon")
    return min(rotations(w))


def lyndon_factorization(w: Sequence[int]) -> list[Word]:
    """Nonincreasing factorization into Lyndon words (Duval's algorithm)."""
    w = tuple(w)
    n = len(w)
    out = []
    i = 0
    while i < n:
        j, k = i + 1, i
        while j < n and w[k] <= w[j]:
            k = i if w[k] < w[j] else k + 1
            j += 1
        while i <= k:
            out.append(w[i : i + j - k])
            i += j - k
    return out


def decreasing_factorization(w: Sequence[int]) -> list[Word]:
    """Cut before every letter that is <= each letter to its left."""
    out: list[list[int]] = []
    low = None
    for x in w:
        if low is None or x <= low:
            out.append([x])
            low = x
        else:
            out[-1].append(x)
    return [tuple(d) for d in out]


def standard_factorization(l: Sequence[int]) -> tuple[Word, Word]:
    l = tuple(l)
    if not is_lyndon(l):
        raise NotLyndon(f"{format_word(l)} is not a Lyndon word")
    if len(l) < 2:
        raise TooShort("standard factorization needs length >= 2")
    for k in range(1, len(l)):
        if is_lyndon(l[k:]):
            return l[:k], l[k:]
    raise AssertionError("unreachable: the last letter is always Lyndon")


def donlyn(l: Sequence[int]) -> Word:
    l0, m0 = standard_factorization(l)
    return m0 + l0


# ---------------------------------------------------------------------------
# successiveness monomials


class BMonomial:
    """A monomial in the commuting variables ``b(x, x')``."""

    __slots__ = ("exponents",)

    def __init__(self, exponents: dict | Counter | None = None):
        self.exponents = {k: v for k, v in (exponents or {}).items() if v}

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[int, int]]) -> "BMonomial":
        return cls(Counter(pairs))

    def __mul__(self, other: "BMonomial") -> "BMonomial":
        out = Counter(self.exponents)
        out.update(other.exponents)
        return BMonomial(out)

    def __eq__(self, other):
        return isinstance(other, BMonomial) and self.exponents == other.exponents

    def __hash__(self):
        return hash(frozenset(self.exponents.items()))

    @property
    def degree(self) -> int:
        return sum(self.exponents.values())

    def items(self):
        return sorted(self.exponents.items())

    def format(self, letter: Callable[[int], str] = str) -> str:
        if not self.exponents:
            return "1"
        return " ".join(
            f"b({letter(x)},{letter(y)})" + (f"^{k}" if k > 1 else "") for (x, y), k in self.items()
        )

    def __str__(self):
        return self.format()

    def __repr__(self):
        return f"BMonomial({self.format()})"


def product(monos: Iterable[BMonomial]) -> BMonomial:
    out = Counter()
    for m in monos:
        out.update(m.exponents)
    return BMonomial(out)


def beta_circ(w: Sequence[int]) -> BMonomial:
    w = tuple(w)
    return BMonomial.from_pairs((w[k], w[(k + 1) % len(w)]) for k in range(len(w)))


def beta_dec(w: Sequence[int]) -> BMonomial:
    return product(beta_circ(l) for l in lyndon_factorization(w))


def beta_vert(w: Sequence[int]) -> BMonomial:
    w = tuple(w)
    return BMonomial.from_pairs(zip(sorted(w), w))


# ---------------------------------------------------------------------------
# the bijection Phi


Biword = tuple  # (top_row, bottom_row)


@dataclass(frozen=True)
class CircuitWalkthrough:
    """Intermediate biwords of the dominated-circuit rearrangement of a word."""

    circuits: tuple[Biword, ...]  # one (shifted, d_j) block per decreasing factor
    by_top_desc: Biword
    swapped_reversed: Biword
    by_top_asc: Biword

    @property
    def image(self) -> Word:
        return self.by_top_asc[1]


def circuit_walkthrough(w: Sequence[int]) -> CircuitWalkthrough:
    """Replay the column-sorting construction step by step.

    Each decreasing factor ``d`` is written as a two-row block with ``d`` at the
    bottom and its right-to-left cyclic shift on top; the columns are stably
    sorted by top (nonincreasing), the rows swapped and the column sequence
    reversed, then stably sorted by top (nondecreasing).

    The final bottom row has the right ``beta_vert``, but it only records how
    many times each pair of letters occurs (inside each top block the bottom
    entries come out sorted), so distinct words can collide. ``phi`` is the
    injective variant.
    """
    blocks = []
    cols = []
    for d in decreasing_factorization(w):
        top = d[1:] + d[:1]
        blocks.append((top, d))
        cols += list(zip(top, d))

    def biword(cs):
        return (tuple(c[0] for c in cs), tuple(c[1] for c in cs))

    cols.sort(key=lambda c: -c[0])
    step_c = biword(cols)
    cols = [(b, t) for t, b in reversed(cols)]
    step_d = biword(cols)
    cols.sort(key=lambda c: c[0])
    return CircuitWalkthrough(tuple(blocks), step_c, step_d, biword(cols))


def successor_queues(w: Sequence[int]) -> dict[int, list[int]]:
    """For each letter, the successors it receives in the dominated circuits.

    Circuits are visited from the last decreasing factor to the first, each
    one read from its (minimal, leading) letter around to the wrap-around.
    """
    queues: dict[int, list[int]] = defaultdict(list)
    for d in reversed(decreasing_factorization(w)):
        for k, x in enumerate(d):
            queues[x].append(d[(k + 1) % len(d)])
    return queues


def phi(w: Sequence[int]) -> Word:
    """Rearrangement of ``w`` with ``beta_vert(phi(w)) == beta_dec(w)``.

    Block ``x`` of the output (the positions where the sorted word holds
    ``x``) lists the successors of ``x`` in the dominated circuits of ``w``.
    Sorting each block gives ``circuit_walkthrough(w).image``.
    """
    queues = successor_queues(w)
    return tuple(y for x in sorted(queues) for y in queues[x])


def phi_inverse(w: Sequence[int]) -> Word:
    w = tuple(w)
    queues: dict[int, deque] = {}
    pos = 0
    for x, c in sorted(Counter(w).items()):
        queues[x] = deque(w[pos : pos + c])
        pos += c
    circuits = []
    for a in sorted(queues):
        while queues[a]:
            circuit = [a]
            cur = a
            while True:
                nxt = queues[cur].popleft()
                if nxt == a:
                    break
                circuit.append(nxt)
                cur = nxt
            circuits.append(tuple(circuit))
    return tuple(x for d in reversed(circuits) for x in d)


# ---------------------------------------------------------------------------
# monomials of distinct Lyndon words and the involution


@dataclass(frozen=True)
class LyndonMonomial:
    """A commutative product of distinct Lyndon words, stored sorted."""

    factors: tuple[Word, ...]

    def __post_init__(self):
        fs = tuple(sorted(tuple(f) for f in self.factors))
        for f in fs:
            if not is_lyndon(f):
                raise NotLyndon(f"factor {format_word(f)} is not a Lyndon word")
        if len(set(fs)) != len(fs):
            raise ValueError("factors of a monomial in D must be distinct")
        object.__setattr__(self, "factors", fs)

    @classmethod
    def of(cls, *factors: Sequence[int]) -> "LyndonMonomial":
        return cls(tuple(tuple(f) for f in factors))

    @property
    def degree(self) -> int:
        return len(self.factors)

    @property
    def size(self) -> int:
        """Total letter count."""
        return sum(len(f) for f in self.factors)

    def letters(self) -> Counter:
        return Counter(x for f in self.factors for x in f)

    def content(self) -> set[int]:
        return set(self.letters())

    def beta(self) -> BMonomial:
        return product(beta_circ(f) for f in self.factors)

    def sign(self) -> int:
        return -1 if self.degree % 2 else 1

    def __str__(self):
        return "".join(f"[{format_word(f)}]" for f in self.factors) or "1"


def is_good(pi: LyndonMonomial) -> bool:
    return all(c == 1 for c in pi.letters().values())


def involution_step(pi: LyndonMonomial) -> LyndonMonomial:
    """Split or merge on the smallest repeated letter; flips the degree parity."""
    repeated = [x for x, c in pi.letters().items() if c > 1]
    if not repeated:
        raise GoodMonomial(f"{pi} has no repeated letter")
    x = min(repeated)

    def key(y):
        # x first, the remaining letters in their original order
        return (y != x, y)

    entries = []
    for i, f in enumerate(pi.factors):
        for k in range(len(f)):
            if f[k] == x:
                r = f[k:] + f[:k]
                entries.append((_keyed(r, key), i, k, r))
    entries.sort()
    (_, i1, k1, xu1), (_, i2, k2, xu2) = entries[0], entries[1]
    rest = [f for i, f in enumerate(pi.factors) if i not in (i1, i2)]
    if i1 == i2:
        cut = (k2 - k1) % len(xu1)
        xv, xw = xu1[:cut], xu1[cut:]
        new = [lyndon_rotation(xv), lyndon_rotation(xw)]
        return LyndonMonomial(tuple(rest + new))
    return LyndonMonomial(tuple(rest + [lyndon_rotation(xu1 + xu2)]))


# ---------------------------------------------------------------------------
# enumeration


def enumerate_lyndon(n: int, max_len: int) -> list[Word]:
    """All Lyndon words over ``0..n-1`` of length <= ``max_len`` in lexicographic order."""
    if n < 1 or max_len < 0:
        raise ValueError("need n >= 1 and max_len >= 0")
    out = []
    if max_len == 0:
        return out
    w = [-1]
    while w:
        w[-1] += 1
        out.append(tuple(w))
        period = len(w)
        while len(w) < max_len:
            w.append(w[len(w) - period])
        while w and w[-1] == n - 1:
            w.pop()
    return out


def all_words(n: int, max_len: int) -> Iterator[Word]:
    for m in range(max_len + 1):
        yield from itertools.product(range(n), repeat=m)


def lyndon_monomials(n: int, max_size: int) -> list[LyndonMonomial]:
    """Every product of distinct Lyndon words with total letter count <= ``max_size``."""
    lyn = sorted(enumerate_lyndon(n, max_size), key=lambda l: (len(l), l))
    out = []

    def rec(start, chosen, size):
        out.append(LyndonMonomial(tuple(chosen)))
        for k in range(start, len(lyn)):
            if size + len(lyn[k]) > max_size:
                break
            chosen.append(lyn[k])
            rec(k + 1, chosen, size + len(lyn[k]))
            chosen.pop()

    rec(0, [], 0)
    return out


# ---------------------------------------------------------------------------
# text form


def format_word(w: Sequence[int], letter: Callable[[int], str] = str) -> str:
    return ",".join(letter(x) for x in w)


def parse_word(text: str) -> Word:
    text = text.strip()
    if not text:
        return ()
    return tuple(int(tok) for tok in text.split(","))
