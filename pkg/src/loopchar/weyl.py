"""Weyl group elements acting on integer weight coordinates.

Weights are tuples of integers in the fundamental-weight basis.  A
``WeylElement`` stores its action matrix together with a canonical
reduced word; composition is matrix multiplication and a word is read
as a product of operators, so the rightmost letter acts first.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Optional, Tuple

from .cartan import CartanData
from .errors import DomainError

Weight = Tuple[int, ...]
RootCoords = Tuple[int, ...]
Matrix = Tuple[Tuple[int, ...], ...]


def zero_weight(cd: CartanData) -> Weight:
    return (0,) * cd.rank


def fundamental_weight(cd: CartanData, i: int) -> Weight:
    cd.check_node(i)
    return tuple(1 if k == i else 0 for k in cd.nodes)


def rho(cd: CartanData) -> Weight:
    return (1,) * cd.rank


def simple_root_weight(cd: CartanData, j: int) -> Weight:
    """Coordinates of alpha_j in the fundamental-weight basis."""
    cd.check_node(j)
    return tuple(cd.a(i, j) for i in cd.nodes)


def reflect(cd: CartanData, i: int, lam: Weight) -> Weight:
    cd.check_node(i)
    c = lam[i - 1]
    if c == 0:
        return lam
    return tuple(l - c * cd.a(k, i) for k, l in zip(cd.nodes, lam))


def is_dominant(lam: Weight) -> bool:
    return all(c >= 0 for c in lam)


def _identity_matrix(n: int) -> Matrix:
    return tuple(tuple(1 if r == c else 0 for c in range(n)) for r in range(n))


def _mat_mul(a: Matrix, b: Matrix) -> Matrix:
    n = len(a)
    bt = tuple(zip(*b))
    return tuple(
        tuple(sum(ar[k] * bc[k] for k in range(n)) for bc in bt) for ar in a
    )


def _mat_apply(m: Matrix, lam: Weight) -> Weight:
    return tuple(sum(r[c] * lam[c] for c in range(len(lam))) for r in m)


@lru_cache(maxsize=None)
def _simple_matrix(cd: CartanData, i: int) -> Matrix:
    n = cd.rank
    return tuple(
        tuple(
            (1 if r == c else 0) - (cd.a(r + 1, i) if c == i - 1 else 0)
            for c in range(n)
        )
        for r in range(n)
    )


def _word_from_matrix(cd: CartanData, m: Matrix) -> Tuple[int, ...]:
    """Canonical reduced word via repeated smallest left descent."""
    lam = _mat_apply(m, rho(cd))
    word: List[int] = []
    target = rho(cd)
    while lam != target:
        for i in cd.nodes:
            if lam[i - 1] < 0:
                lam = reflect(cd, i, lam)
                word.append(i)
                break
        else:
            raise AssertionError("matrix does not act by the Weyl group")
    return tuple(word)


@dataclass(frozen=True)
class WeylElement:
    """A Weyl group element; equality and hashing use the matrix only."""

    word: Tuple[int, ...] = field(compare=False)
    matrix: Matrix

    @property
    def length(self) -> int:
        return len(self.word)

    def apply(self, lam: Weight) -> Weight:
        return _mat_apply(self.matrix, lam)


def element_from_matrix(cd: CartanData, m: Matrix) -> WeylElement:
    return WeylElement(word=_word_from_matrix(cd, m), matrix=m)


def identity_element(cd: CartanData) -> WeylElement:
    return WeylElement(word=(), matrix=_identity_matrix(cd.rank))


def simple_reflection(cd: CartanData, i: int) -> WeylElement:
    cd.check_node(i)
    return WeylElement(word=(i,), matrix=_simple_matrix(cd, i))


def element_from_word(cd: CartanData, word: Tuple[int, ...]) -> WeylElement:
    m = _identity_matrix(cd.rank)
    for i in word:
        cd.check_node(i)
        m = _mat_mul(m, _simple_matrix(cd, i))
    return element_from_matrix(cd, m)


def compose(cd: CartanData, u: WeylElement, v: WeylElement) -> WeylElement:
    return element_from_matrix(cd, _mat_mul(u.matrix, v.matrix))


def is_reduced_word(cd: CartanData, word: Tuple[int, ...]) -> bool:
    return element_from_word(cd, word).length == len(word)


@lru_cache(maxsize=None)
def longest_element(cd: CartanData) -> WeylElement:
    lam = rho(cd)
    m = _identity_matrix(cd.rank)
    while True:
        for i in cd.nodes:
            if lam[i - 1] > 0:
                lam = reflect(cd, i, lam)
                m = _mat_mul(_simple_matrix(cd, i), m)
                break
        else:
            return element_from_matrix(cd, m)


@lru_cache(maxsize=None)
def positive_roots(cd: CartanData) -> Tuple[RootCoords, ...]:
    """All positive roots in simple-root coordinates, sorted."""
    simple = [tuple(1 if k == j else 0 for k in range(cd.rank)) for j in range(cd.rank)]
    seen = set(simple)
    frontier = list(simple)
    while frontier:
        nxt = []
        for beta in frontier:
            for i in cd.nodes:
                pairing = sum(cd.a(i, j + 1) * beta[j] for j in range(cd.rank))
                refl = tuple(
                    c - pairing if j == i - 1 else c for j, c in enumerate(beta)
                )
                if refl not in seen:
                    seen.add(refl)
                    nxt.append(refl)
        frontier = nxt
    return tuple(sorted(b for b in seen if all(c >= 0 for c in b)))


@lru_cache(maxsize=None)
def highest_root(cd: CartanData) -> RootCoords:
    return max(positive_roots(cd), key=lambda b: (sum(b), b))


def root_norm(cd: CartanData, beta: RootCoords) -> int:
    """(beta, beta) under the symmetrized form (alpha_i, alpha_j) = d_i a_ij."""
    n = cd.rank
    return sum(
        beta[i] * cd.d(i + 1) * cd.a(i + 1, j + 1) * beta[j]
        for i in range(n)
        for j in range(n)
    )


def coroot_pairing(cd: CartanData, lam: Weight, beta: RootCoords) -> int:
    """<lam, beta^vee> = 2 (lam, beta) / (beta, beta), always an integer."""
    num = 2 * sum(lam[i] * cd.d(i + 1) * beta[i] for i in range(cd.rank))
    den = root_norm(cd, beta)
    if num % den:
        raise AssertionError("non-integral coroot pairing")
    return num // den


def min_coset_reps(cd: CartanData, lam: Weight) -> List[WeylElement]:
    """Minimal-length coset representatives for W / Stab(lam).

    lam must be dominant.  Breadth-first from the identity, extending
    words on the left by s_j (j ascending), keeping an extension only
    when it increases length and reaches an unvisited orbit weight.
    The returned list is sorted by (length, word).
    """
    if not is_dominant(lam):
        raise DomainError("minimal coset representatives need a dominant weight")
    ident = identity_element(cd)
    seen: Dict[Weight, WeylElement] = {lam: ident}
    queue: List[WeylElement] = [ident]
    while queue:
        w = queue.pop(0)
        base = w.apply(lam)
        for j in cd.nodes:
            mu = reflect(cd, j, base)
            if mu in seen:
                continue
            ext = element_from_matrix(cd, _mat_mul(_simple_matrix(cd, j), w.matrix))
            if ext.length != w.length + 1:
                continue
            seen[mu] = ext
            queue.append(ext)
    return sorted(seen.values(), key=lambda w: (w.length, w.word))


def weight_orbit(cd: CartanData, lam: Weight) -> List[Tuple[Weight, WeylElement]]:
    """The W-orbit of a dominant weight with its minimal representatives."""
    return [(w.apply(lam), w) for w in min_coset_reps(cd, lam)]


def dominance_diff(cd: CartanData, lam: Weight, mu: Weight) -> Optional[RootCoords]:
    """Root coordinates of lam - mu, or None if not in the root lattice."""
    n = cd.rank
    target = [Fraction(lam[i] - mu[i]) for i in range(n)]
    rows = [[Fraction(cd.a(i + 1, j + 1)) for j in range(n)] for i in range(n)]
    # Gaussian elimination; the Cartan matrix is invertible over Q.
    perm = list(range(n))
    for col in range(n):
        piv = next(r for r in range(col, n) if rows[r][col])
        rows[col], rows[piv] = rows[piv], rows[col]
        target[col], target[piv] = target[piv], target[col]
        inv = 1 / rows[col][col]
        rows[col] = [t * inv for t in rows[col]]
        target[col] *= inv
        for r in range(n):
            if r != col and rows[r][col]:
                f = rows[r][col]
                rows[r] = [t - f * s for t, s in zip(rows[r], rows[col])]
                target[r] -= f * target[col]
    del perm
    if any(t.denominator != 1 for t in target):
        return None
    return tuple(int(t) for t in target)
