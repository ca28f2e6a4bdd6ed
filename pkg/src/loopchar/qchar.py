"""Loop characters of finite-dimensional irreducible modules.

Covers the rank-one evaluation modules, minuscule fundamental modules
(whose character is a single braid orbit), the rank-n orthogonal adjoint
character at node 2, and a table-driven descent that assembles any
classical fundamental character from braid orbits of dominant loop
weights plus caller-supplied dominant weight multiplicities.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from .cartan import CartanData, cartan_data
from .errors import DomainError
from .lweight import (
    LCharacter,
    LWeight,
    SpectralParam,
    fundamental_lweight,
    weight_of,
)
from .braid import braid_act_word, cone_check, simple_lroot
from .weyl import (
    Weight,
    dominance_diff,
    fundamental_weight,
    is_dominant,
    min_coset_reps,
    positive_roots,
    coroot_pairing,
    simple_root_weight,
)

MultTable = Dict[Weight, int]


@dataclass(frozen=True)
class Sl2String:
    """A q-segment: rank-one factors in arithmetic exponent progression."""

    a: SpectralParam
    m: int

    def __post_init__(self):
        if self.m < 0:
            raise DomainError(f"string length must be nonnegative, got {self.m}")

    @property
    def exps(self) -> Tuple[int, ...]:
        orbit, e = self.a
        return tuple(e + self.m - 1 - 2 * j for j in range(self.m))

    def lweight(self) -> LWeight:
        orbit, _e = self.a
        return LWeight.from_dict({(1, orbit, k): 1 for k in self.exps})


def sl2_eval_char(a: SpectralParam, m: int) -> LCharacter:
    """Loop character of the rank-one evaluation module of dimension m+1.

    Term r is the string of length m-r at a shifted down by r, divided by
    the string of length r at a shifted up by m-r+2.
    """
    if m < 0:
        raise DomainError(f"string length must be nonnegative, got {m}")
    orbit, e = a
    terms: Dict[LWeight, int] = {}
    for r in range(m + 1):
        num = Sl2String((orbit, e - r), m - r).lweight()
        den = Sl2String((orbit, e + m - r + 2), r).lweight()
        terms[num * den.inverse()] = 1
    return LCharacter.from_dict(terms)


def sl2_tensor_irreducible(strings: Sequence[Sl2String]) -> bool:
    """Whether a tensor product of strings stays irreducible.

    Fails exactly when two same-orbit strings sit in resonant position:
    exponent gap of the form m + m' - 2p with 0 <= p < min(m, m').
    Distinct orbits never interact.
    """
    if not strings:
        raise DomainError("need at least one string")
    for k in range(len(strings)):
        for s in range(k + 1, len(strings)):
            (ok, ek), mk = strings[k].a, strings[k].m
            (os_, es), ms = strings[s].a, strings[s].m
            if ok != os_:
                continue
            gap = abs(ek - es)
            lo = abs(mk - ms) + 2
            hi = mk + ms
            if lo <= gap <= hi and (gap - hi) % 2 == 0:
                return False
    return True


def cyclicity_order(
    factors: Sequence[Tuple[int, SpectralParam]]
) -> Tuple[int, ...]:
    """Permutation putting tensor factors into a cyclic order.

    Within each orbit, positions are refilled in decreasing exponent
    order (ties by node), so no later factor is a positive q-power of an
    earlier one.  Factors of distinct orbits keep their slots.
    """
    by_orbit: Dict[str, List[int]] = {}
    for t, (node, (orbit, _e)) in enumerate(factors):
        by_orbit.setdefault(orbit, []).append(t)
    perm = [0] * len(factors)
    for slots in by_orbit.values():
        ordered = sorted(
            slots, key=lambda t: (-factors[t][1][1], factors[t][0])
        )
        for slot, src in zip(slots, ordered):
            perm[slot] = src
    return tuple(perm)


def is_minuscule(cd: CartanData, i: int) -> bool:
    cd.check_node(i)
    lam = fundamental_weight(cd, i)
    return all(
        coroot_pairing(cd, lam, beta) in (0, 1) for beta in positive_roots(cd)
    )


def minuscule_char(cd: CartanData, i: int, p: SpectralParam) -> LCharacter:
    """Character of a minuscule fundamental module: one pure braid orbit."""
    if not is_minuscule(cd, i):
        raise DomainError(
            f"node {i} of {cd.type} is not minuscule: some positive coroot "
            "pairs with the fundamental weight above 1"
        )
    orbit, e = p
    top = fundamental_lweight(cd, i, orbit, e)
    lam = fundamental_weight(cd, i)
    terms: Dict[LWeight, int] = {}
    for w in min_coset_reps(cd, lam):
        pi = braid_act_word(cd, w.word, top)
        assert pi not in terms
        terms[pi] = 1
    return LCharacter.from_dict(terms)


def dn_node2_char(n: int, p: SpectralParam) -> LCharacter:
    """Node-2 fundamental character in type D: adjoint orbit plus core.

    The braid orbit of the highest factor runs over the roots; on top of
    it sit n zero-weight terms, the (n-2)-nd with multiplicity 2.
    """
    if n < 4:
        raise DomainError(f"rank must be at least 4, got {n}")
    cd = cartan_data(f"D{n}")
    orbit, e = p
    top = fundamental_lweight(cd, 2, orbit, e)
    lam = fundamental_weight(cd, 2)
    terms: Dict[LWeight, int] = {}
    for w in min_coset_reps(cd, lam):
        pi = braid_act_word(cd, w.word, top)
        terms[pi] = terms.get(pi, 0) + 1
    for j in range(1, n + 1):
        core = _dn_core_term(n, j, orbit, e)
        mult = 2 if j == n - 2 else 1
        terms[core] = terms.get(core, 0) + mult
    return LCharacter.from_dict(terms)


def _dn_core_term(n: int, j: int, orbit: str, e: int) -> LWeight:
    """The j-th zero-weight term of the type-D node-2 character."""
    powers: Dict[Tuple[int, str, int], int] = {}

    def put(node: int, exp: int, sign: int) -> None:
        if node >= 1:
            key = (node, orbit, e + exp)
            powers[key] = powers.get(key, 0) + sign

    if j <= n - 2:
        put(j - 1, j + 1, -1)
        put(j - 1, 2 * n - j - 3, +1)
        put(j, j, +1)
        put(j, 2 * n - j - 2, -1)
    else:
        put(j, n - 3, +1)
        put(j, n + 1, -1)
    return LWeight.from_dict(powers)


def fundamental_char(
    cd: CartanData, i: int, p: SpectralParam, table: MultTable
) -> LCharacter:
    """Classical fundamental character from a dominant multiplicity table.

    Dominant loop weights are processed top down; each contributes its
    braid orbit.  New dominant loop weights are discovered one level
    lower from orbit terms whose weight is dominant plus a simple root
    and whose entry there is a degree-2 polynomial: stripping a simple
    loop root at the top factor always descends, at the bottom factor
    only when the two factors are not in adjacent position.  Discovered
    candidates are matched against the table, which must pin every
    multiplicity without ambiguity.
    """
    if cd.type.series not in "ABCD":
        raise DomainError(
            f"the descent applies to the classical series only, not {cd.type}"
        )
    cd.check_node(i)
    orbit, e = p
    top = fundamental_lweight(cd, i, orbit, e)
    top_wt = fundamental_weight(cd, i)
    if table.get(top_wt) != 1:
        raise DomainError(
            f"table must assign multiplicity 1 to the top weight {list(top_wt)}"
        )

    heights: Dict[Weight, int] = {}

    def height_of(lam: Weight) -> int:
        if lam not in heights:
            diff = dominance_diff(cd, top_wt, lam)
            if diff is None:
                raise DomainError(
                    f"weight {list(lam)} is not below the top weight in the root lattice"
                )
            heights[lam] = sum(diff)
        return heights[lam]

    # candidate children per dominant weight: lower bound on each mult;
    # children sit strictly deeper than their discoverer, so a level's
    # bounds are complete once every shallower level has been processed
    bounds: Dict[Weight, Dict[LWeight, int]] = {}
    settled: Dict[Weight, Dict[LWeight, int]] = {top_wt: {top: 1}}
    done: set = set()
    terms: Dict[LWeight, int] = {}

    while True:
        open_levels = (set(settled) | set(bounds)) - done
        if not open_levels:
            break
        lam = min(open_levels, key=lambda w: (height_of(w), w))
        done.add(lam)
        if lam not in settled:
            cand = bounds[lam]
            want = table.get(lam)
            if want is None:
                raise DomainError(
                    f"descent reached dominant weight {list(lam)} missing from the table"
                )
            if len(cand) == 1:
                (child,) = cand
                if cand[child] > want:
                    raise DomainError(
                        f"table value {want} at weight {list(lam)} is below "
                        f"the forced lower bound {cand[child]}"
                    )
                settled[lam] = {child: want}
            elif sum(cand.values()) == want:
                settled[lam] = dict(cand)
            else:
                raise DomainError(
                    f"cannot split multiplicity {want} at weight {list(lam)} "
                    f"among {len(cand)} candidates with bounds {sorted(cand.values())}"
                )
        reps = min_coset_reps(cd, lam)
        for pi, mult in sorted(settled[lam].items(), key=lambda kv: str(kv[0])):
            for w in reps:
                term = braid_act_word(cd, w.word, pi)
                terms[term] = terms.get(term, 0) + mult
                _discover(cd, term, mult, bounds)

    char = LCharacter.from_dict(terms)
    proj = weight_projection(cd, char)
    for lam, mult in table.items():
        if proj.get(lam, 0) != mult:
            raise DomainError(
                f"table mismatch at weight {list(lam)}: table {mult}, "
                f"character {proj.get(lam, 0)}"
            )
    for lam, mult in proj.items():
        if is_dominant(lam) and lam not in table:
            raise DomainError(
                f"character has dominant weight {list(lam)} absent from the table"
            )
    return char


def _discover(
    cd: CartanData,
    term: LWeight,
    mult: int,
    bounds: Dict[Weight, Dict[LWeight, int]],
) -> None:
    """Record dominant children reachable from one orbit term."""
    mu = weight_of(cd, term)
    for j in cd.nodes:
        alpha_wt = simple_root_weight(cd, j)
        lam2 = tuple(m - s for m, s in zip(mu, alpha_wt))
        if not is_dominant(lam2):
            continue
        exps = []
        ok = True
        for (node, orbit, k), power in term.factors:
            if node != j:
                continue
            if power < 0:
                ok = False
                break
            exps.extend([(orbit, k)] * power)
        if not ok or len(exps) != 2:
            continue
        (o1, e1), (o2, e2) = sorted(exps)
        children: List[Tuple[str, int, int]] = []
        if (o1, e1) == (o2, e2):
            children.append((o1, e1, 2 * mult))
        else:
            children.append((o2, e2, mult))
            if not (o1 == o2 and e2 == e1 + 2 * cd.d(j)):
                children.append((o1, e1, mult))
        for orbit, k, bound in children:
            child = term * simple_lroot(cd, j, orbit, k).inverse()
            sub = bounds.setdefault(lam2, {})
            sub[child] = max(sub.get(child, 0), bound)


def tensor_char(c1: LCharacter, c2: LCharacter) -> LCharacter:
    """Character of a tensor product: the distributive term product."""
    return c1 * c2


def weight_projection(cd: CartanData, c: LCharacter) -> Dict[Weight, int]:
    """Push multiplicities from loop weights down to ordinary weights."""
    out: Dict[Weight, int] = {}
    for pi, mult in c.terms:
        lam = weight_of(cd, pi)
        out[lam] = out.get(lam, 0) + mult
    return out


def weyl_module_dim(
    cd: CartanData, omega: LWeight, fund_dims: Dict[int, int]
) -> int:
    """Dimension of the universal module: product of fundamental dims."""
    lam = weight_of(cd, omega)
    total = 1
    for node, coord in enumerate(lam, start=1):
        if coord == 0:
            continue
        if node not in fund_dims:
            raise DomainError(f"no fundamental dimension supplied for node {node}")
        total *= fund_dims[node] ** coord
    return total
