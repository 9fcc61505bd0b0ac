"""Exhaustive generation of small bounded posets and their involutions.

Bounded posets on n elements are generated through the order on the
n-2 middle elements: every antisymmetric assignment of <, > or
incomparable to the middle pairs is kept when transitive. Isomorphism
reduction minimises the relation matrix over middle permutations, so
identical specs always produce identical streams.
"""

from __future__ import annotations

from itertools import permutations
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from .poset import FinitePoset, bits, mask_of
from .ortho import OrthoPoset, validate_involution, is_antitone_involution


class BudgetExceeded(RuntimeError):
    pass


def _middle_orders(m: int) -> Iterator[Tuple[int, ...]]:
    """Strict partial orders on m points as tuples of strict-up masks."""
    if m == 0:
        yield ()
        return
    pairs = [(i, j) for i in range(m) for j in range(i + 1, m)]

    def rec(idx, up):
        if idx == len(pairs):
            for i in range(m):
                for j in bits(up[i]):
                    if up[j] & ~up[i]:
                        return
            yield tuple(up)
            return
        i, j = pairs[idx]
        yield from rec(idx + 1, up)
        up[i] |= 1 << j
        yield from rec(idx + 1, up)
        up[i] &= ~(1 << j)
        up[j] |= 1 << i
        yield from rec(idx + 1, up)
        up[j] &= ~(1 << i)

    yield from rec(0, [0] * m)


def _canon_middle(up: Tuple[int, ...]) -> Tuple[int, ...]:
    m = len(up)
    best = None
    for perm in permutations(range(m)):
        relabeled = [0] * m
        for i in range(m):
            row = 0
            for j in bits(up[i]):
                row |= 1 << perm[j]
            relabeled[perm[i]] = row
        key = tuple(relabeled)
        if best is None or key < best:
            best = key
    return best


def bounded_posets(n: int, up_to_iso: bool = True) -> Iterator[FinitePoset]:
    """All bounded posets on n labeled elements (0 first, 1 last)."""
    if n < 1:
        return
    if n == 1:
        yield FinitePoset(["0"], [1])
        return
    m = n - 2
    labels = ["0"] + [f"e{i + 1}" for i in range(m)] + ["1"]
    seen = set()
    for mid in _middle_orders(m):
        if up_to_iso:
            key = _canon_middle(mid)
            if key in seen:
                continue
            seen.add(key)
        up = [0] * n
        up[0] = (1 << n) - 1
        up[n - 1] = 1 << (n - 1)
        for i in range(m):
            up[i + 1] = 1 << (i + 1) | 1 << (n - 1)
            for j in bits(mid[i]):
                up[i + 1] |= 1 << (j + 1)
        yield FinitePoset(labels, up, name=f"P{n}")


def involutions(n: int, fix: Optional[Dict[int, int]] = None) -> Iterator[Tuple[int, ...]]:
    """All self-inverse permutations of 0..n-1 honouring ``fix``."""
    inv = [-1] * n
    for a, b in (fix or {}).items():
        inv[a], inv[b] = b, a

    def rec(x):
        if x == n:
            yield tuple(inv)
            return
        if inv[x] >= 0:
            yield from rec(x + 1)
            return
        for y in range(x, n):
            if inv[y] < 0 or y == x:
                inv[x], inv[y] = y, x
                yield from rec(x + 1)
                inv[x] = -1
                if y != x:
                    inv[y] = -1

    yield from rec(0)


def antitone_involutions(p: FinitePoset) -> Iterator[Tuple[int, ...]]:
    """All antitone involutions of a bounded poset, by backtracking."""
    n = p.n
    inv = [-1] * n
    inv[p.bottom], inv[p.top] = p.top, p.bottom
    if p.bottom == p.top:
        yield tuple(inv)
        return
    # pair only elements whose up/down profiles mirror each other
    down_sizes = [bin(p.down[i]).count("1") for i in range(n)]
    up_sizes = [bin(p.up[i]).count("1") for i in range(n)]

    def compatible(x, y):
        return down_sizes[x] == up_sizes[y] and up_sizes[x] == down_sizes[y]

    def antitone_ok(x, y):
        # against every already assigned pair
        for a in range(n):
            b = inv[a]
            if b < 0:
                continue
            if p.leq(x, a) != p.leq(b, y) or p.leq(a, x) != p.leq(y, b):
                return False
        return True

    order = sorted(range(n), key=lambda i: (down_sizes[i], i))

    def rec(k):
        while k < n and inv[order[k]] >= 0:
            k += 1
        if k == n:
            yield tuple(inv)
            return
        x = order[k]
        for y in range(n):
            if (inv[y] >= 0 and y != x) or not compatible(x, y):
                continue
            inv[x], inv[y] = y, x
            if antitone_ok(x, y) and (y == x or antitone_ok(y, x)):
                yield from rec(k + 1)
            inv[x] = -1
            if y != x:
                inv[y] = -1

    yield from rec(0)


def ortho_posets(n: int, up_to_iso: bool = True,
                 max_count: Optional[int] = None) -> Iterator[OrthoPoset]:
    """Every bounded poset of size n with every antitone involution."""
    count = 0
    for p in bounded_posets(n, up_to_iso):
        for inv in antitone_involutions(p):
            count += 1
            if max_count is not None and count > max_count:
                raise BudgetExceeded(f"more than {max_count} structures at n={n}")
            yield OrthoPoset(p, inv)


def filter_involutions(p: FinitePoset, x: int) -> List[Tuple[int, ...]]:
    """Antitone involutions of [x,1], as rows over the whole poset."""
    sub, old = p.induced(p.up[x])
    rows = []
    for inv in antitone_involutions(sub):
        row = [-1] * p.n
        for k, o in enumerate(old):
            row[o] = old[inv[k]]
        rows.append(tuple(row))
    return rows


def sectioned_posets(n: int, up_to_iso: bool = True,
                     max_count: Optional[int] = None):
    """Every bounded poset of size n with every valid section family."""
    from .relative import SectionedPoset
    count = 0
    for p in bounded_posets(n, up_to_iso):
        per_elem = [filter_involutions(p, x) for x in range(p.n)]
        if any(not rows for rows in per_elem):
            continue
        idx = [0] * p.n
        while True:
            count += 1
            if max_count is not None and count > max_count:
                raise BudgetExceeded(f"more than {max_count} structures at n={n}")
            yield SectionedPoset(p, tuple(per_elem[x][idx[x]] for x in range(p.n)))
            k = p.n - 1
            while k >= 0:
                idx[k] += 1
                if idx[k] < len(per_elem[k]):
                    break
                idx[k] = 0
                k -= 1
            if k < 0:
                break


def is_orthoisomorphic(a: OrthoPoset, b: OrthoPoset) -> bool:
    """Brute-force order- and involution-preserving bijection test."""
    if a.n != b.n:
        return False
    pa, pb = a.poset, b.poset
    for perm in permutations(range(a.n)):
        if perm[pa.bottom] != pb.bottom or perm[pa.top] != pb.top:
            continue
        ok = all(
            pa.leq(x, y) == pb.leq(perm[x], perm[y])
            for x in range(a.n) for y in range(a.n)
        ) and all(perm[a.inv[x]] == b.inv[perm[x]] for x in range(a.n))
        if ok:
            return True
    return False
