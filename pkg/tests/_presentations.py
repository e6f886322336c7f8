"""Solve finite presentations inside multiplication-table groups.

Words over k abstract generators use 1-based signed letters: +i stands
for the i-th generator, -i for its inverse.  A relator is a word whose
image must be the identity.  find_images() returns the lexicographically
first generating tuple satisfying every relator, so fixture data built
from it are reproducible.
"""
from __future__ import annotations

from typing import List, Optional, Sequence, Tuple

from prymsearch.groups import FiniteGroup

Word = Tuple[int, ...]


def evaluate(group: FiniteGroup, images: Sequence[int], word: Word) -> int:
    acc = 0
    for letter in word:
        x = images[letter - 1] if letter > 0 else group.inv[images[-letter - 1]]
        acc = group.table[acc][x]
    return acc


def commutator(i: int, j: int) -> Word:
    return (-i, -j, i, j)


def power(i: int, n: int) -> Word:
    return (i,) * n


def find_images(group: FiniteGroup, k: int, relators: Sequence[Word],
                orders: Optional[Sequence[Optional[int]]] = None,
                generating: bool = True) -> Optional[Tuple[int, ...]]:
    """First k-tuple of elements satisfying the relators, or None.

    orders prunes the per-generator candidate lists before the search;
    an entry of None leaves the corresponding generator unconstrained.
    """
    cands: List[List[int]] = []
    for i in range(k):
        want = orders[i] if orders else None
        if want:
            cands.append([x for x in range(group.n) if group.elem_order[x] == want])
        else:
            cands.append(list(range(group.n)))

    # a relator becomes checkable once its highest generator is assigned
    by_depth: List[List[Word]] = [[] for _ in range(k + 1)]
    for w in relators:
        by_depth[max(abs(l) for l in w)].append(w)

    found: List[Tuple[int, ...]] = []

    def rec(depth: int, images: List[int]) -> bool:
        if depth == k:
            if not generating or group.generates(images):
                found.append(tuple(images))
                return True
            return False
        for x in cands[depth]:
            images.append(x)
            ok = all(evaluate(group, images, w) == 0 for w in by_depth[depth + 1])
            if ok and rec(depth + 1, images):
                return True
            images.pop()
        return False

    rec(0, [])
    return found[0] if found else None


def word_image(group: FiniteGroup, images: Sequence[int], word: Word) -> int:
    """Image of an arbitrary word (not necessarily a relator)."""
    return evaluate(group, images, word)
