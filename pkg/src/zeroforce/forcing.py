"""Zero forcing closure, forcing-set counts, and forts.

Two closure routes exist on purpose. :func:`closure` and :func:`is_forcing`
run the colour-change rule on one set at a time with Python ints. The
exhaustive counts in :func:`forcing_table` and :func:`forcing_profile` run
the same rule on whole blocks of subsets at once with numpy ``uint64``
arrays, one Gauss-Seidel sweep over the vertices per round. Tests pin the two
against each other.
"""

from __future__ import annotations

import itertools
import math
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .errors import EmptyFort, TooLarge
from .graph_core import Graph, members, vset

DEFAULT_LIMIT = 24
MAX_LIMIT = 30
BLOCK_BITS = 20


@dataclass(frozen=True)
class ClosureTrace:
    initial: int
    steps: tuple[tuple[int, int], ...]
    final: int

    def to_dict(self) -> dict:
        return {
            "initial": members(self.initial),
            "steps": [list(s) for s in self.steps],
            "final": members(self.final),
        }


@dataclass(frozen=True)
class ForcingProfile:
    """``z[i]`` is the number of forcing sets of size ``i``."""

    n: int
    z: tuple[int, ...]

    def zprime(self, i: int) -> int:
        """Number of non-forcing sets of size ``i``."""
        return math.comb(self.n, i) - self.z[i]

    @property
    def zprimes(self) -> tuple[int, ...]:
        return tuple(self.zprime(i) for i in range(self.n + 1))

    @property
    def zero_forcing_number(self) -> int:
        return next(i for i, c in enumerate(self.z) if c)

    def to_dict(self) -> dict:
        return {"n": self.n, "z": list(self.z)}

    @classmethod
    def from_dict(cls, d: dict) -> "ForcingProfile":
        return cls(int(d["n"]), tuple(int(x) for x in d["z"]))


def binom(a: int, b: int) -> int:
    """Binomial coefficient, zero whenever ``a < b``, ``a < 0`` or ``b < 0``."""
    if b < 0 or a < 0 or a < b:
        return 0
    return math.comb(a, b)


def _check_limit(n: int, limit: int | None) -> None:
    limit = DEFAULT_LIMIT if limit is None else limit
    if limit > MAX_LIMIT:
        raise ValueError(f"enumeration limit {limit} exceeds the maximum {MAX_LIMIT}")
    if n > limit:
        raise TooLarge(
            f"n={n} exceeds the enumeration limit {limit}; "
            f"pass a larger limit explicitly (at most {MAX_LIMIT})"
        )


# -- scalar closure --------------------------------------------------------


def closure_mask(adj: Sequence[int], s: int) -> int:
    """Final coloured mask reached from ``s``; ``adj`` is a row-mask list."""
    colored = s
    active = s
    while active:
        progressed = False
        m = active
        while m:
            low = m & -m
            m ^= low
            un = adj[low.bit_length() - 1] & ~colored
            if un & (un - 1) == 0:
                # zero or one uncoloured neighbour: either way this vertex is spent
                active ^= low
                if un:
                    colored |= un
                    active |= un
                    progressed = True
        if not progressed:
            break
    return colored


def closure(G: Graph, S: int, rng: random.Random | None = None) -> ClosureTrace:
    """Apply the colour-change rule until no force is available.

    Without ``rng`` the applicable force with the smallest forcer label fires
    first. With ``rng`` a uniformly random applicable force fires at each
    step, which is how order independence is exercised.
    """
    if S & ~G.full:
        raise ValueError("initial set has vertices out of range")
    colored = S
    steps = []
    while True:
        moves = []
        for v in members(colored):
            un = G.adj[v] & ~colored
            if un and un & (un - 1) == 0:
                moves.append((v, un.bit_length() - 1))
                if rng is None:
                    break
        if not moves:
            break
        v, w = moves[0] if rng is None else rng.choice(moves)
        colored |= 1 << w
        steps.append((v, w))
    return ClosureTrace(S, tuple(steps), colored)


def is_forcing(G: Graph, S: int) -> bool:
    return closure_mask(G.adj, S) == G.full


# -- batched closure -------------------------------------------------------


def closure_masks(adj: Sequence[int], n: int, masks: np.ndarray) -> np.ndarray:
    """Final coloured mask for every initial mask in ``masks`` (``uint64``)."""
    full = np.uint64((1 << n) - 1)
    rows = [np.uint64(a) for a in adj]
    bits = [np.uint64(1 << v) for v in range(n)]
    zero = np.uint64(0)
    one = np.uint64(1)
    colored = np.array(masks, dtype=np.uint64, copy=True)
    idx = np.flatnonzero(colored != full)
    cur = colored[idx]
    while idx.size:
        before = cur.copy()
        for v in range(n):
            un = rows[v] & ~cur
            fire = ((cur & bits[v]) != zero) & (un != zero) & ((un & (un - one)) == zero)
            cur |= np.where(fire, un, zero)
        colored[idx] = cur
        # a full sweep without a force means no force is available any more
        keep = (cur != before) & (cur != full)
        idx = idx[keep]
        cur = cur[keep]
    return colored


def _forcing_block(adj: Sequence[int], n: int, lo: int, hi: int) -> np.ndarray:
    """Boolean array: entry ``k`` tells whether mask ``lo + k`` forces."""
    masks = np.arange(lo, hi, dtype=np.uint64)
    return closure_masks(adj, n, masks) == np.uint64((1 << n) - 1)


def forcing_table(G: Graph, limit: int | None = None) -> np.ndarray:
    """Boolean array over all ``2**n`` masks; entry ``S`` tells whether ``S`` forces."""
    _check_limit(G.n, limit)
    size = 1 << G.n
    step = 1 << BLOCK_BITS
    parts = [_forcing_block(G.adj, G.n, lo, min(lo + step, size)) for lo in range(0, size, step)]
    return np.concatenate(parts)


def _count_range(adj: tuple[int, ...], n: int, lo: int, hi: int) -> list[int]:
    counts = np.zeros(n + 1, dtype=np.int64)
    step = 1 << BLOCK_BITS
    for a in range(lo, hi, step):
        b = min(a + step, hi)
        forced = _forcing_block(adj, n, a, b)
        sizes = np.bitwise_count(np.arange(a, b, dtype=np.uint64)[forced])
        counts += np.bincount(sizes, minlength=n + 1)[: n + 1]
    return [int(c) for c in counts]


def _split(size: int, parts: int) -> list[tuple[int, int]]:
    parts = max(1, min(parts, size))
    bounds = [size * k // parts for k in range(parts + 1)]
    return [(bounds[k], bounds[k + 1]) for k in range(parts)]


def forcing_profile(G: Graph, workers: int = 1, limit: int | None = None) -> ForcingProfile:
    """Exact forcing-set counts by exhaustive enumeration of all subsets.

    With ``workers > 1`` the mask range is cut into contiguous pieces counted
    in separate processes and summed; the result does not depend on the
    worker count.
    """
    _check_limit(G.n, limit)
    size = 1 << G.n
    ranges = _split(size, workers)
    if workers <= 1 or len(ranges) == 1:
        parts = [_count_range(G.adj, G.n, lo, hi) for lo, hi in ranges]
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            futures = [pool.submit(_count_range, G.adj, G.n, lo, hi) for lo, hi in ranges]
            parts = [f.result() for f in futures]
    z = [sum(col) for col in zip(*parts)]
    return ForcingProfile(G.n, tuple(z))


def profile_from_table(n: int, table: np.ndarray) -> ForcingProfile:
    sizes = np.bitwise_count(np.arange(1 << n, dtype=np.uint64)[table])
    counts = np.bincount(sizes, minlength=n + 1)[: n + 1]
    return ForcingProfile(n, tuple(int(c) for c in counts))


def path_profile_formula(n: int) -> ForcingProfile:
    """Closed-form counts for the path on ``n`` vertices.

    A set fails to force the path exactly when it avoids both ends and has no
    two consecutive vertices, which gives ``C(n-i-1, i)`` non-forcing sets of
    size ``i``.
    """
    if n < 1:
        raise ValueError("path needs at least one vertex")
    z = [0] + [math.comb(n, i) - binom(n - i - 1, i) for i in range(1, n + 1)]
    return ForcingProfile(n, tuple(z))


def zero_forcing_number(G: Graph, limit: int | None = None) -> int:
    if G.n < 1:
        raise ValueError("zero forcing number needs at least one vertex")
    _check_limit(G.n, limit)
    for i in range(G.n + 1):
        for combo in itertools.combinations(range(G.n), i):
            if closure_mask(G.adj, vset(combo)) == G.full:
                return i
    raise AssertionError("the full vertex set always forces")


# -- forts -----------------------------------------------------------------


@dataclass(frozen=True)
class Fort:
    F: int = field()

    @property
    def vertices(self) -> list[int]:
        return members(self.F)

    def __len__(self) -> int:
        return bin(self.F).count("1")


def is_fort(G: Graph, F: int) -> bool:
    if F == 0:
        raise EmptyFort("a fort must be nonempty")
    outside = G.full & ~F
    for v in members(outside):
        hit = G.adj[v] & F
        if hit and hit & (hit - 1) == 0:
            return False
    return True


def find_fort_upto(G: Graph, size_bound: int) -> Fort | None:
    """Smallest fort of size at most ``size_bound``; ties go to the smallest mask."""
    if size_bound < 1:
        raise ValueError("size_bound must be at least 1")
    for k in range(1, min(size_bound, G.n) + 1):
        best = None
        for combo in itertools.combinations(range(G.n), k):
            F = vset(combo)
            if (best is None or F < best) and is_fort(G, F):
                best = F
        if best is not None:
            return Fort(best)
    return None


def all_forts(G: Graph) -> list[int]:
    return [F for F in range(1, 1 << G.n) if is_fort(G, F)]


def fort_criterion_applies(G: Graph, limit: int | None = None) -> bool:
    """Whether a fort of size at most ``z(G) + 1`` exists (sufficient for the
    path bound; the converse is never asserted)."""
    return find_fort_upto(G, zero_forcing_number(G, limit) + 1) is not None
