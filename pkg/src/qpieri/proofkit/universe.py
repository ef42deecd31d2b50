"""
Materialized universes for the chain-matching verification kit.

A MarkedChain is a Pieri chain at some level h together with a g-marking;
a PairedChain additionally carries a k-Monk chain continuing from the
chain's end.  The weight of a paired chain q = ((p, M) | m) at level (h, g)
is the signed basis term

  F(q) = (-1)^(len(p) - g + t(m)) * Q(p) * Q(m) * G[end(m)],

t(m) the length of the Monk chain's (k,*)-segment.  Summing weights over a
set of paired chains yields an Expansion; the matching identities verified
in `bijections` and `identities` are equalities of such sums.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from ..chains import (
    Marking,
    MonkChain,
    PieriChain,
    enumerate_markings,
    enumerate_monk_chains,
    enumerate_pieri_chains,
    is_marking,
)
from ..expansion import Expansion
from ..permutations import Permutation
from ..qbg import QMonomial, q_weight


@dataclass(frozen=True)
class MarkedChain:
    chain: PieriChain
    marking: Marking

    def __post_init__(self) -> None:
        if not is_marking(self.chain, self.marking):
            raise ValueError(f"invalid marking {set(self.marking)} on {self.chain!r}")

    @property
    def g(self) -> int:
        return len(self.marking)

    @property
    def end(self) -> Permutation:
        return self.chain.end


@dataclass(frozen=True)
class PairedChain:
    marked: MarkedChain
    monk: MonkChain

    def __post_init__(self) -> None:
        if self.monk.start != self.marked.end:
            raise ValueError("Monk chain must start at the marked chain's end")

    @property
    def chain(self) -> PieriChain:
        return self.marked.chain

    @property
    def marking(self) -> Marking:
        return self.marked.marking

    @property
    def end(self) -> Permutation:
        return self.monk.end


@dataclass(frozen=True)
class WeightTerm:
    sign: int
    qmono: QMonomial
    basis: Permutation

    def to_expansion(self) -> Expansion:
        out = Expansion.zero()
        out.add_term(self.basis, self.sign, self.qmono)
        return out


def weight(q: PairedChain, g: int) -> WeightTerm:
    """F at level (h, g); h is implicit in the chain."""
    exponent = len(q.chain) - g + q.monk.t
    sign = -1 if exponent % 2 else 1
    return WeightTerm(sign, q_weight(q.chain.path) * q_weight(q.monk.path), q.end)


def marked_weight(mc: MarkedChain, g: int) -> WeightTerm:
    """F for a bare marked chain (empty Monk part)."""
    exponent = len(mc.chain) - g
    sign = -1 if exponent % 2 else 1
    return WeightTerm(sign, q_weight(mc.chain.path), mc.end)


def sum_weights(elements, g: int) -> Expansion:
    out = Expansion.zero()
    for q in elements:
        term = weight(q, g)
        out.add_term(term.basis, term.sign, term.qmono)
    return out


def sum_marked_weights(elements, g: int) -> Expansion:
    out = Expansion.zero()
    for mc in elements:
        term = marked_weight(mc, g)
        out.add_term(term.basis, term.sign, term.qmono)
    return out


@lru_cache(maxsize=None)
def enumerate_marked(w: Permutation, h: int, g: int) -> tuple[MarkedChain, ...]:
    """All (chain, marking) pairs at level h with g marks; empty if g < 0."""
    if g < 0:
        return ()
    out = []
    for chain in enumerate_pieri_chains(w, h):
        for marking in enumerate_markings(chain, g):
            out.append(MarkedChain(chain, marking))
    return tuple(out)


@lru_cache(maxsize=None)
def monk_chains_from(x: Permutation, k: int) -> tuple[MonkChain, ...]:
    return tuple(enumerate_monk_chains(x, k))


@lru_cache(maxsize=None)
def enumerate_paired(w: Permutation, h: int, g: int, k: int) -> tuple[PairedChain, ...]:
    """The paired universe at level (h, g) with Monk continuations at k."""
    out = []
    for mc in enumerate_marked(w, h, g):
        for monk in monk_chains_from(mc.end, k):
            out.append(PairedChain(mc, monk))
    return tuple(out)


def embed_marked(mc: MarkedChain, k: int) -> PairedChain:
    """Identify a marked chain with the paired chain having empty Monk part."""
    from ..qbg import DirectedPath

    return PairedChain(mc, MonkChain(DirectedPath.empty(mc.end), k, 0, 0))
