"""Cartan data for the finite simple Lie types.

Nodes are labelled 1..n.  The classical series are chains in the usual
order (for D the last node hangs off node n-2); the exceptional types
are chains with one branch node, numbered so that node 1 carries the
smallest fundamental representation: E6 branches at 3, E7 at 4, E8 at
5.  Symmetrizers are normalized so that min(d_i) = 1, which makes the
short simple roots the ones with d_i = 1.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Tuple, Union

from .errors import DomainError, ParseError

_TYPE_RE = re.compile(r"^([A-G])(\d+)$")

_RANK_BOUNDS = {
    "A": (1, None),
    "B": (2, None),
    "C": (2, None),
    "D": (4, None),
    "E": (6, 8),
    "F": (4, 4),
    "G": (2, 2),
}


@dataclass(frozen=True)
class LieType:
    series: str
    rank: int

    def __post_init__(self):
        bounds = _RANK_BOUNDS.get(self.series)
        if bounds is None:
            raise DomainError(f"unknown series {self.series!r}")
        lo, hi = bounds
        if self.rank < lo or (hi is not None and self.rank > hi):
            raise DomainError(f"rank {self.rank} out of range for series {self.series}")

    @staticmethod
    def parse(text: str) -> "LieType":
        m = _TYPE_RE.match(text.strip())
        if m is None:
            raise ParseError(f"cannot parse Lie type {text!r}")
        return LieType(m.group(1), int(m.group(2)))

    def __str__(self) -> str:
        return f"{self.series}{self.rank}"


def _edges(series: str, n: int) -> Tuple[Tuple[int, int], ...]:
    chain = tuple((i, i + 1) for i in range(1, n))
    if series == "D":
        return tuple((i, i + 1) for i in range(1, n - 1)) + ((n - 2, n),)
    if series == "E":
        branch = {6: 3, 7: 4, 8: 5}[n]
        return tuple((i, i + 1) for i in range(1, n - 1)) + ((branch, n),)
    return chain


def _symmetrizer(series: str, n: int) -> Tuple[int, ...]:
    if series == "B":
        return (2,) * (n - 1) + (1,)
    if series == "C":
        return (1,) * (n - 1) + (2,)
    if series == "F":
        return (1, 1, 2, 2)
    if series == "G":
        return (1, 3)
    return (1,) * n


def _dual_coxeter(series: str, n: int) -> int:
    if series == "A":
        return n + 1
    if series == "B":
        return 2 * n - 1
    if series == "C":
        return n + 1
    if series == "D":
        return 2 * n - 2
    if series == "E":
        return {6: 12, 7: 18, 8: 30}[n]
    return 9 if series == "F" else 4


def _seed_nodes(series: str, n: int) -> Tuple[int, ...]:
    if series == "B":
        return (n,)
    if series == "D":
        return (n,) if n % 2 else (n - 1, n)
    return (1,)


def _w0_perm(series: str, n: int) -> Tuple[int, ...]:
    if series == "A":
        return tuple(range(n, 0, -1))
    if series == "D" and n % 2:
        return tuple(range(1, n - 1)) + (n, n - 1)
    if series == "E" and n == 6:
        return (5, 4, 3, 2, 1, 6)
    return tuple(range(1, n + 1))


@dataclass(frozen=True)
class CartanData:
    type: LieType
    rank: int
    matrix: Tuple[Tuple[int, ...], ...]
    sym: Tuple[int, ...]
    dual_coxeter: int
    lacing: int
    seed_nodes: Tuple[int, ...]
    w0_perm: Tuple[int, ...]
    adjacency: Tuple[Tuple[int, ...], ...]

    def a(self, i: int, j: int) -> int:
        return self.matrix[i - 1][j - 1]

    def d(self, i: int) -> int:
        return self.sym[i - 1]

    def neighbors(self, i: int) -> Tuple[int, ...]:
        return self.adjacency[i - 1]

    def w0_node(self, i: int) -> int:
        return self.w0_perm[i - 1]

    @property
    def nodes(self) -> range:
        return range(1, self.rank + 1)

    def check_node(self, i: int) -> None:
        if not 1 <= i <= self.rank:
            raise DomainError(f"node {i} out of range for type {self.type}")


@lru_cache(maxsize=None)
def _build(lt: LieType) -> CartanData:
    n = lt.rank
    d = _symmetrizer(lt.series, n)
    adj = [set() for _ in range(n)]
    for i, j in _edges(lt.series, n):
        adj[i - 1].add(j)
        adj[j - 1].add(i)
    rows = []
    for i in range(1, n + 1):
        row = []
        for j in range(1, n + 1):
            if i == j:
                row.append(2)
            elif j in adj[i - 1]:
                # Adjacent entries follow from the symmetrized inner
                # product (alpha_i, alpha_j) = -max(d_i, d_j).
                row.append(-max(d[i - 1], d[j - 1]) // d[i - 1])
            else:
                row.append(0)
        rows.append(tuple(row))
    return CartanData(
        type=lt,
        rank=n,
        matrix=tuple(rows),
        sym=d,
        dual_coxeter=_dual_coxeter(lt.series, n),
        lacing=max(d),
        seed_nodes=_seed_nodes(lt.series, n),
        w0_perm=_w0_perm(lt.series, n),
        adjacency=tuple(tuple(sorted(s)) for s in adj),
    )


def cartan_data(t: Union[str, LieType]) -> CartanData:
    """Build (or fetch) the Cartan data for a type such as "D5"."""
    if isinstance(t, str):
        t = LieType.parse(t)
    return _build(t)
