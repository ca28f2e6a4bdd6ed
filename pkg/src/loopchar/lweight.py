"""Loop weights: monomials in generators indexed by node and spectral parameter.

A spectral parameter is a pair (orbit, exp) naming the point a*q^exp,
where ``orbit`` is a formal symbol and q is generic, so two parameters
are comparable exactly when their orbits coincide.  A loop weight is a
finite product of generators ``w[i;a,k]`` with integer powers; the text
grammar accepts products joined by ``*`` (or whitespace) with optional
``^power``, and ``1`` denotes the identity.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Dict, Iterator, List, Tuple

from .cartan import CartanData
from .errors import DomainError, ParseError

SpectralParam = Tuple[str, int]
GenKey = Tuple[int, str, int]

_ORBIT_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")
_FACTOR_RE = re.compile(
    r"w\[\s*(\d+)\s*;\s*([A-Za-z_][A-Za-z0-9_]*)\s*(?:,\s*(-?\d+)\s*)?\]"
    r"(?:\s*\^\s*(-?\d+))?"
)


def check_orbit(orbit: str) -> str:
    if not _ORBIT_RE.fullmatch(orbit):
        raise DomainError(f"invalid orbit name {orbit!r}")
    return orbit


@dataclass(frozen=True)
class LWeight:
    """An element of the loop-weight lattice, stored as sorted factors."""

    factors: Tuple[Tuple[GenKey, int], ...]

    @staticmethod
    def from_dict(powers: Dict[GenKey, int]) -> "LWeight":
        return LWeight(tuple(sorted((k, p) for k, p in powers.items() if p)))

    @staticmethod
    def identity() -> "LWeight":
        return LWeight(())

    def to_dict(self) -> Dict[GenKey, int]:
        return dict(self.factors)

    def power(self, key: GenKey) -> int:
        for k, p in self.factors:
            if k == key:
                return p
        return 0

    def __mul__(self, other: "LWeight") -> "LWeight":
        powers = self.to_dict()
        for k, p in other.factors:
            powers[k] = powers.get(k, 0) + p
        return LWeight.from_dict(powers)

    def inverse(self) -> "LWeight":
        return LWeight(tuple((k, -p) for k, p in self.factors))

    def __pow__(self, n: int) -> "LWeight":
        if n == 0:
            return LWeight.identity()
        base = self if n > 0 else self.inverse()
        return LWeight(tuple((k, p * abs(n)) for k, p in base.factors))

    @property
    def is_identity(self) -> bool:
        return not self.factors

    @property
    def is_dominant(self) -> bool:
        return all(p > 0 for _, p in self.factors)

    def nodes(self) -> Iterator[int]:
        seen = set()
        for (i, _, _), _p in self.factors:
            if i not in seen:
                seen.add(i)
                yield i

    def shift(self, offset: int) -> "LWeight":
        """Shift every spectral parameter exponent by ``offset``."""
        return LWeight(
            tuple((((i, a, k + offset), p)) for (i, a, k), p in self.factors)
        )

    def __str__(self) -> str:
        if not self.factors:
            return "1"
        parts = []
        for (i, a, k), p in self.factors:
            s = f"w[{i};{a},{k}]"
            if p != 1:
                s += f"^{p}"
            parts.append(s)
        return "*".join(parts)

    def to_json(self) -> Dict[str, object]:
        return {
            "factors": [
                {"node": i, "orbit": a, "exp": k, "power": p}
                for (i, a, k), p in self.factors
            ]
        }

    @staticmethod
    def from_json(data: Dict[str, object]) -> "LWeight":
        powers: Dict[GenKey, int] = {}
        for entry in data["factors"]:
            key = (int(entry["node"]), check_orbit(str(entry["orbit"])), int(entry["exp"]))
            powers[key] = powers.get(key, 0) + int(entry["power"])
        return LWeight.from_dict(powers)


def parse_lweight(text: str) -> LWeight:
    """Parse the ``w[i;a,k]^p * ...`` grammar; ``1`` is the identity."""
    s = text.strip()
    if s == "1":
        return LWeight.identity()
    powers: Dict[GenKey, int] = {}
    pos = 0
    expect_factor = True
    while pos < len(s):
        if s[pos].isspace():
            pos += 1
            continue
        if s[pos] == "*":
            if expect_factor:
                raise ParseError(f"unexpected '*' at position {pos} in {text!r}")
            expect_factor = True
            pos += 1
            continue
        m = _FACTOR_RE.match(s, pos)
        if m is None:
            raise ParseError(f"expected w[node;orbit,exp] at position {pos} in {text!r}")
        node = int(m.group(1))
        if node < 1:
            raise ParseError(f"node index must be positive in {text!r}")
        exp = 0 if m.group(3) is None else int(m.group(3))
        key = (node, m.group(2), exp)
        p = 1 if m.group(4) is None else int(m.group(4))
        powers[key] = powers.get(key, 0) + p
        pos = m.end()
        expect_factor = False
    if expect_factor:
        raise ParseError(f"dangling '*' in {text!r}")
    return LWeight.from_dict(powers)


def check_lweight(cd: CartanData, pi: LWeight) -> LWeight:
    for i in pi.nodes():
        cd.check_node(i)
    return pi


def fundamental_lweight(cd: CartanData, i: int, orbit: str = "a", exp: int = 0) -> LWeight:
    cd.check_node(i)
    check_orbit(orbit)
    return LWeight(((((i, orbit, exp)), 1),))


def dual_lweight(cd: CartanData, pi: LWeight) -> LWeight:
    """The loop weight of the dual module.

    Node i receives the node w0(i) factors with every spectral exponent
    shifted by lacing times the dual Coxeter number.  The uniform shift
    (rather than a per-node d_i scaling) is forced by the twist identity
    tested in the braid module.
    """
    if not pi.is_dominant:
        raise DomainError("dual is defined for dominant loop weights")
    offset = cd.lacing * cd.dual_coxeter
    powers: Dict[GenKey, int] = {}
    for (i, a, k), p in pi.factors:
        cd.check_node(i)
        powers[(cd.w0_node(i), a, k + offset)] = p
    return LWeight.from_dict(powers)


def weight_of(cd: CartanData, pi: LWeight) -> Tuple[int, ...]:
    """Project to the weight lattice in fundamental coordinates."""
    coords = [0] * cd.rank
    for (i, _, _), p in pi.factors:
        cd.check_node(i)
        coords[i - 1] += p
    return tuple(coords)


@dataclass(frozen=True)
class LCharacter:
    """A finite multiset of loop weights with positive multiplicities."""

    terms: Tuple[Tuple[LWeight, int], ...]

    @staticmethod
    def from_dict(terms: Dict[LWeight, int]) -> "LCharacter":
        items = [(pi, m) for pi, m in terms.items() if m]
        if any(m < 0 for _, m in items):
            raise DomainError("character multiplicities must be positive")
        return LCharacter(tuple(sorted(items, key=lambda t: t[0].factors)))

    @staticmethod
    def single(pi: LWeight) -> "LCharacter":
        return LCharacter(((pi, 1),))

    def to_dict(self) -> Dict[LWeight, int]:
        return dict(self.terms)

    @property
    def dimension(self) -> int:
        return sum(m for _, m in self.terms)

    def multiplicity(self, pi: LWeight) -> int:
        for t, m in self.terms:
            if t == pi:
                return m
        return 0

    def __add__(self, other: "LCharacter") -> "LCharacter":
        terms = self.to_dict()
        for pi, m in other.terms:
            terms[pi] = terms.get(pi, 0) + m
        return LCharacter.from_dict(terms)

    def __mul__(self, other: "LCharacter") -> "LCharacter":
        terms: Dict[LWeight, int] = {}
        for pi, m in self.terms:
            for tau, l in other.terms:
                key = pi * tau
                terms[key] = terms.get(key, 0) + m * l
        return LCharacter.from_dict(terms)

    def shift(self, offset: int) -> "LCharacter":
        return LCharacter.from_dict({pi.shift(offset): m for pi, m in self.terms})

    def text(self) -> str:
        return "\n".join(f"{m} * {pi}" for pi, m in self.terms)

    def to_json(self) -> Dict[str, object]:
        return {
            "terms": [{"lweight": str(pi), "mult": m} for pi, m in self.terms],
            "dimension": self.dimension,
        }

    @staticmethod
    def from_json(data: Dict[str, object]) -> "LCharacter":
        terms: Dict[LWeight, int] = {}
        for entry in data["terms"]:
            pi = parse_lweight(str(entry["lweight"]))
            terms[pi] = terms.get(pi, 0) + int(entry["mult"])
        return LCharacter.from_dict(terms)
