"""k-subsets in lexicographic order and permutations of ``range(k)``."""

from __future__ import annotations

from itertools import combinations, permutations
from math import comb
from typing import Iterator, Sequence

KSubset = tuple[int, ...]


def check_subset(u: Sequence[int], n: int) -> KSubset:
    u = tuple(int(x) for x in u)
    if not u:
        raise ValueError("subset must be non-empty")
    if any(a >= b for a, b in zip(u, u[1:])):
        raise ValueError(f"subset {u} is not strictly increasing")
    if u[0] < 0 or u[-1] >= n:
        raise ValueError(f"subset {u} has entries outside 0..{n - 1}")
    return u


def subsets(n: int, k: int) -> list[KSubset]:
    """All k-subsets of ``range(n)`` in lexicographic (= rank) order."""
    return list(combinations(range(n), k))


def rank(u: Sequence[int], n: int) -> int:
    """Lexicographic rank of ``u`` among the k-subsets of ``range(n)``."""
    u = check_subset(u, n)
    k = len(u)
    r = 0
    prev = -1
    for i, x in enumerate(u):
        # skip all subsets whose i-th entry is smaller than x
        for y in range(prev + 1, x):
            r += comb(n - 1 - y, k - 1 - i)
        prev = x
    return r


def unrank(i: int, n: int, k: int) -> KSubset:
    total = comb(n, k)
    if not (1 <= k <= n):
        raise ValueError(f"need 1 <= k <= n, got n={n}, k={k}")
    if not (0 <= i < total):
        raise ValueError(f"rank {i} out of range 0..{total - 1}")
    out = []
    x = 0
    for pos in range(k):
        while True:
            block = comb(n - 1 - x, k - 1 - pos)
            if i < block:
                break
            i -= block
            x += 1
        out.append(x)
        x += 1
    return tuple(out)


class Permutation:
    """Bijection on ``range(k)``; ``p[j]`` is the image of ``j``.

    Acting on a tuple, ``p.act(u) == (u[p[0]], ..., u[p[k-1]])``.
    """

    __slots__ = ("images",)

    def __init__(self, images: Sequence[int]):
        images = tuple(int(x) for x in images)
        if sorted(images) != list(range(len(images))):
            raise ValueError(f"{images} is not a permutation")
        self.images = images

    @classmethod
    def identity(cls, k: int) -> Permutation:
        return cls(range(k))

    def __len__(self) -> int:
        return len(self.images)

    def __getitem__(self, j: int) -> int:
        return self.images[j]

    def __iter__(self):
        return iter(self.images)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Permutation):
            return NotImplemented
        return self.images == other.images

    def __hash__(self) -> int:
        return hash(self.images)

    def __repr__(self) -> str:
        return f"Permutation({list(self.images)})"

    def inversions(self) -> int:
        p = self.images
        return sum(1 for i in range(len(p)) for j in range(i + 1, len(p)) if p[i] > p[j])

    @property
    def sign(self) -> int:
        return -1 if self.inversions() % 2 else 1

    def inverse(self) -> Permutation:
        inv = [0] * len(self.images)
        for j, x in enumerate(self.images):
            inv[x] = j
        return Permutation(inv)

    def is_identity(self) -> bool:
        return all(j == x for j, x in enumerate(self.images))

    def act(self, u: Sequence) -> tuple:
        if len(u) != len(self.images):
            raise ValueError("tuple length does not match permutation size")
        return tuple(u[x] for x in self.images)


def perm_sign(p: Permutation) -> int:
    return p.sign


def compose(p: Permutation, q: Permutation) -> Permutation:
    """``p`` after ``q``: ``compose(p, q)[j] == p[q[j]]``."""
    if len(p) != len(q):
        raise ValueError(f"cannot compose permutations of sizes {len(p)} and {len(q)}")
    return Permutation(p[x] for x in q)


def k_cycle(k: int) -> Permutation:
    """The cycle ``0 -> 1 -> ... -> k-1 -> 0``."""
    return Permutation((j + 1) % k for j in range(k))


def all_permutations(k: int) -> list[Permutation]:
    """S_k in lexicographic order of image tuples; index 0 is the identity."""
    return [Permutation(p) for p in permutations(range(k))]


def iter_permutations(k: int) -> Iterator[Permutation]:
    return (Permutation(p) for p in permutations(range(k)))
