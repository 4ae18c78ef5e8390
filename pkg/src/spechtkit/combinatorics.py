"""Partitions, diagrams, words, permutations, and ordered set partitions.

Conventions used throughout the package:

* boxes of a diagram are 1-based (row, column) pairs in matrix orientation;
* a word is a tuple of positive integers;
* a permutation acts on a word by position pullback, ``(s * w)[i] = w[s(i)]``,
  so applying ``s`` then ``t`` equals applying ``s * t`` on the right.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import factorial, prod
from typing import Iterator, Sequence

from .config import DEFAULT_LIMITS, Limits
from .errors import DomainError

Word = tuple[int, ...]
Box = tuple[int, int]


# ---------------------------------------------------------------------------
# partitions and diagrams


@dataclass(frozen=True, order=True)
class Partition:
    parts: tuple[int, ...]

    def __post_init__(self):
        p = tuple(self.parts)
        object.__setattr__(self, "parts", p)
        if any(x <= 0 for x in p):
            raise DomainError(f"partition parts must be positive: {p}")
        if any(p[i] < p[i + 1] for i in range(len(p) - 1)):
            raise DomainError(f"partition parts must be weakly decreasing: {p}")

    @property
    def n(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    def __str__(self) -> str:
        return ",".join(str(x) for x in self.parts)

    @staticmethod
    def parse(text: str) -> "Partition":
        try:
            parts = tuple(int(tok) for tok in text.split(",") if tok.strip())
        except ValueError as exc:
            raise DomainError(f"cannot parse partition {text!r}") from exc
        if not parts:
            raise DomainError("empty partition string")
        return Partition(parts)

    def conjugate(self) -> "Partition":
        if not self.parts:
            return self
        return Partition(
            tuple(
                sum(1 for x in self.parts if x >= i)
                for i in range(1, self.parts[0] + 1)
            )
        )

    def diagram(self) -> frozenset[Box]:
        return frozenset(
            (i + 1, j + 1)
            for i, row in enumerate(self.parts)
            for j in range(row)
        )

    def boxes_row_major(self) -> list[Box]:
        return [
            (i + 1, j + 1)
            for i, row in enumerate(self.parts)
            for j in range(row)
        ]

    def hook_length(self, box: Box) -> int:
        i, j = box
        if not (1 <= i <= self.length and 1 <= j <= self.parts[i - 1]):
            raise DomainError(f"box {box} outside diagram of {self}")
        arm = self.parts[i - 1] - j
        leg = sum(1 for k in range(i, self.length) if self.parts[k] >= j)
        return 1 + arm + leg

    def dimension(self) -> int:
        """Hook-length dimension (number of standard fillings)."""
        hooks = prod(self.hook_length(b) for b in self.boxes_row_major())
        num = factorial(self.n)
        assert num % hooks == 0
        return num // hooks

    def canonical_words(self) -> tuple[Word, Word]:
        """Row word and column word from a row-major walk over the boxes."""
        boxes = self.boxes_row_major()
        return (
            tuple(i for i, _ in boxes),
            tuple(j for _, j in boxes),
        )


def partitions_of(n: int) -> list[Partition]:
    """All partitions of n in reverse-lex order, largest first part first."""
    out: list[Partition] = []

    def gen(remaining: int, maxpart: int, prefix: list[int]):
        if remaining == 0:
            out.append(Partition(tuple(prefix)))
            return
        for part in range(min(maxpart, remaining), 0, -1):
            prefix.append(part)
            gen(remaining - part, part, prefix)
            prefix.pop()

    if n == 0:
        return []
    gen(n, n, [])
    return out


# ---------------------------------------------------------------------------
# words


def word_from_text(text: str) -> Word:
    """Parse a word from digits, comma-separated integers, or letters.

    Letters are normalized to frequency rank (most common letter becomes 1,
    ties broken by first occurrence), mirroring how textual examples such as
    TENNESSEE are handled.
    """
    text = text.strip()
    if not text:
        raise DomainError("empty word")
    if "," in text:
        return tuple(int(tok) for tok in text.split(","))
    if text.isdigit():
        return tuple(int(ch) for ch in text)
    if text.isalpha():
        return normalize_word(tuple(ord(ch) for ch in text.upper()))
    raise DomainError(f"cannot parse word {text!r}")


def format_word(w: Word) -> str:
    if all(1 <= x <= 9 for x in w):
        return "".join(str(x) for x in w)
    return ",".join(str(x) for x in w)


def letter_multiplicities(w: Word) -> dict[int, int]:
    mult: dict[int, int] = {}
    for x in w:
        mult[x] = mult.get(x, 0) + 1
    return mult


def normalize_word(w: Word) -> Word:
    """Relabel letters by frequency rank, ties broken by first occurrence."""
    mult = letter_multiplicities(w)
    first = {}
    for i, x in enumerate(w):
        first.setdefault(x, i)
    order = sorted(mult, key=lambda x: (-mult[x], first[x]))
    rank = {x: k + 1 for k, x in enumerate(order)}
    return tuple(rank[x] for x in w)


def rearrangements(w: Word) -> list[Word]:
    """All distinct rearrangements of *w* in lexicographic order."""
    if not w:
        raise DomainError("empty word has no rearrangements")
    current = sorted(w)
    out = [tuple(current)]
    n = len(current)
    while True:
        # classic next-multiset-permutation step
        i = n - 2
        while i >= 0 and current[i] >= current[i + 1]:
            i -= 1
        if i < 0:
            return out
        j = n - 1
        while current[j] <= current[i]:
            j -= 1
        current[i], current[j] = current[j], current[i]
        current[i + 1 :] = reversed(current[i + 1 :])
        out.append(tuple(current))


def rearrangement_count(w: Word) -> int:
    mult = letter_multiplicities(w)
    return factorial(len(w)) // prod(factorial(m) for m in mult.values())


# ---------------------------------------------------------------------------
# complementary-pair classification


@dataclass(frozen=True)
class PairClass:
    rearrangeable: bool
    partition: Partition | None = None
    is_complementary: bool = False


def classify_pair(w1: Word, w2: Word) -> PairClass:
    """Decide whether two words have complementary rearrangements.

    The pair of letter-multiplicity histograms must form a partition and its
    conjugate; when it does, the (normalized) pair itself is complementary
    exactly when its stacked columns are pairwise distinct.
    """
    if not w1 or len(w1) != len(w2):
        return PairClass(False)
    m1 = sorted(letter_multiplicities(w1).values(), reverse=True)
    m2 = sorted(letter_multiplicities(w2).values(), reverse=True)
    lam = Partition(tuple(m1))
    if tuple(m2) != lam.conjugate().parts:
        return PairClass(False)
    v1, v2 = normalize_word(w1), normalize_word(w2)
    columns = list(zip(v1, v2))
    is_comp = len(set(columns)) == len(columns)
    if is_comp:
        # in the free orbit the column multiset is forced to be the diagram
        assert frozenset(columns) == lam.diagram()
    return PairClass(True, lam, is_comp)


# ---------------------------------------------------------------------------
# permutations


@dataclass(frozen=True)
class Permutation:
    images: tuple[int, ...]  # one-line notation, images[i-1] = image of i

    def __post_init__(self):
        img = tuple(self.images)
        object.__setattr__(self, "images", img)
        if sorted(img) != list(range(1, len(img) + 1)):
            raise DomainError(f"not a permutation of 1..n: {img}")

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        """(self * other)(i) = self(other(i))."""
        return Permutation(tuple(self(other(i)) for i in range(1, self.n + 1)))

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for i, img in enumerate(self.images, start=1):
            inv[img - 1] = i
        return Permutation(tuple(inv))

    def sign(self) -> int:
        seen = [False] * self.n
        sign = 1
        for i in range(self.n):
            if seen[i]:
                continue
            j, length = i, 0
            while not seen[j]:
                seen[j] = True
                j = self.images[j] - 1
                length += 1
            if length % 2 == 0:
                sign = -sign
        return sign

    def apply(self, w: Word) -> Word:
        """Position pullback: result[i] = w[self(i)]."""
        if len(w) != self.n:
            raise DomainError("word length does not match permutation degree")
        return tuple(w[self.images[i] - 1] for i in range(self.n))

    @staticmethod
    def identity(n: int) -> "Permutation":
        return Permutation(tuple(range(1, n + 1)))

    @staticmethod
    def from_cycles(n: int, *cycles: Sequence[int]) -> "Permutation":
        img = list(range(1, n + 1))
        for cyc in cycles:
            for a, b in zip(cyc, cyc[1:]):
                img[a - 1] = b
            img[cyc[-1] - 1] = cyc[0]
        return Permutation(tuple(img))


def all_permutations(n: int) -> Iterator[Permutation]:
    for img in itertools.permutations(range(1, n + 1)):
        yield Permutation(img)


# ---------------------------------------------------------------------------
# ordered set partitions


@dataclass(frozen=True)
class OrderedSetPartition:
    parts: tuple[frozenset[int], ...]

    @property
    def n(self) -> int:
        return sum(len(p) for p in self.parts)

    def shape(self) -> Partition:
        return Partition(tuple(len(p) for p in self.parts))

    def word(self) -> Word:
        """Letter k at every position belonging to the k-th part."""
        out = [0] * self.n
        for k, part in enumerate(self.parts, start=1):
            for pos in part:
                out[pos - 1] = k
        return tuple(out)

    def complementary_word(self) -> Word:
        """Column word pairing with :meth:`word` along sorted positions."""
        out = [0] * self.n
        for part in self.parts:
            for j, pos in enumerate(sorted(part), start=1):
                out[pos - 1] = j
        return tuple(out)


def properly_ordered_set_partitions(
    n: int, limits: Limits = DEFAULT_LIMITS
) -> list[OrderedSetPartition]:
    """All ordered set partitions of {1..n} with weakly decreasing part sizes.

    Distinct orderings of equal-size parts are counted separately.
    """
    if n < 1:
        raise DomainError("n must be positive")
    limits.require("max_set_partition_n", n)
    out: list[OrderedSetPartition] = []

    def extend(remaining: frozenset[int], max_size: int, prefix):
        if not remaining:
            out.append(OrderedSetPartition(tuple(prefix)))
            return
        rest = sorted(remaining)
        for size in range(min(max_size, len(rest)), 0, -1):
            for combo in itertools.combinations(rest, size):
                prefix.append(frozenset(combo))
                extend(remaining - frozenset(combo), size, prefix)
                prefix.pop()

    extend(frozenset(range(1, n + 1)), n, [])
    return out
