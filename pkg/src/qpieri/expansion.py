"""
Expansion of quantum products in the formal basis of Grothendieck symbols.

The basis symbols G[w], one per permutation, are formal: products with a
Pieri factor expand as exact Z[Q_1, Q_2, ...]-linear combinations

  G[w] * (degree-p column-k factor)
      = sum over k-Pieri chains p from w with a p-marking of
        (-1)^(len(p) - p) * #markings * Q(p) * G[end(p)],

and the divisor-type product satisfies

  (1 - Q_k)(1 - x_k) G[x]
      = sum over k-Monk chains m from x of
        (-1)^(length of the (k,*)-segment) * Q(m) * G[end(m)].

Coefficient arithmetic is exact integer throughout; an Expansion is a
finite map from basis permutations to Z[Q]-polynomials with no zero
entries, so equality of expansions is structural equality.

Text form: "G[4312] - Q1*Q2*G[1342] + 2*Q3*G[431625]", terms ordered by
(length, window) of the basis permutation.  Machine form (JSON):
[{"perm": "4312", "terms": [{"q": [[1,1],[2,1]], "c": -1}]}].
"""

from __future__ import annotations

import json
import re
from functools import lru_cache

from .chains import enumerate_markings, enumerate_monk_chains, enumerate_pieri_chains
from .permutations import Permutation, cyclic_permutation
from .qbg import QMonomial, q_weight


class QPolynomial:
    """Sparse polynomial in Q_1, Q_2, ... with exact integer coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict[QMonomial, int] | None = None):
        self.terms: dict[QMonomial, int] = {
            m: c for m, c in (terms or {}).items() if c != 0
        }

    @classmethod
    def zero(cls) -> QPolynomial:
        return cls()

    @classmethod
    def from_int(cls, c: int) -> QPolynomial:
        return cls({QMonomial.one(): c})

    @classmethod
    def monomial(cls, mono: QMonomial, c: int = 1) -> QPolynomial:
        return cls({mono: c})

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: QPolynomial) -> QPolynomial:
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0) + c
        return QPolynomial(out)

    def __sub__(self, other: QPolynomial) -> QPolynomial:
        return self + other.scaled(-1)

    def __mul__(self, other: QPolynomial) -> QPolynomial:
        out: dict[QMonomial, int] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = m1 * m2
                out[m] = out.get(m, 0) + c1 * c2
        return QPolynomial(out)

    def scaled(self, c: int) -> QPolynomial:
        return QPolynomial({m: c * v for m, v in self.terms.items()})

    def times_monomial(self, mono: QMonomial) -> QPolynomial:
        return QPolynomial({m * mono: c for m, c in self.terms.items()})

    def at_q0(self) -> int:
        """Constant term (all Q variables set to 0)."""
        return self.terms.get(QMonomial.one(), 0)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, QPolynomial) and self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def sorted_terms(self) -> list[tuple[QMonomial, int]]:
        return sorted(self.terms.items(), key=lambda mc: mc[0].sort_key())

    def render(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for m, c in self.sorted_terms():
            body = str(abs(c)) if m.is_one() else (
                m.render() if abs(c) == 1 else f"{abs(c)}*{m.render()}"
            )
            parts.append(("- " if c < 0 else "+ ") + body)
        text = " ".join(parts)
        return text[2:] if text.startswith("+ ") else text[0] + text[2:]

    def __repr__(self) -> str:
        return f"QPolynomial({self.render()})"


class Expansion:
    """A finite Z[Q]-linear combination of basis symbols G[u]."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict[Permutation, QPolynomial] | None = None):
        self.terms: dict[Permutation, QPolynomial] = {
            u: c for u, c in (terms or {}).items() if not c.is_zero()
        }

    @classmethod
    def zero(cls) -> Expansion:
        return cls()

    @classmethod
    def basis(cls, u: Permutation) -> Expansion:
        return cls({u: QPolynomial.from_int(1)})

    def __add__(self, other: Expansion) -> Expansion:
        out = dict(self.terms)
        for u, c in other.terms.items():
            out[u] = out.get(u, QPolynomial.zero()) + c
        return Expansion(out)

    def __sub__(self, other: Expansion) -> Expansion:
        return self + other.scaled_int(-1)

    def scaled_int(self, c: int) -> Expansion:
        return Expansion({u: poly.scaled(c) for u, poly in self.terms.items()})

    def scaled(self, poly: QPolynomial) -> Expansion:
        return Expansion({u: coeff * poly for u, coeff in self.terms.items()})

    def times_monomial(self, mono: QMonomial) -> Expansion:
        return Expansion({u: c.times_monomial(mono) for u, c in self.terms.items()})

    def add_term(self, u: Permutation, sign: int, mono: QMonomial, mult: int = 1) -> None:
        cur = self.terms.get(u, QPolynomial.zero())
        new = cur + QPolynomial.monomial(mono, sign * mult)
        if new.is_zero():
            self.terms.pop(u, None)
        else:
            self.terms[u] = new

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Expansion) and self.terms == other.terms

    def __len__(self) -> int:
        return len(self.terms)

    def filter_s_n(self, n: int) -> Expansion:
        """Quotient-ring reduction: drop basis terms outside S_n."""
        return Expansion({u: c for u, c in self.terms.items() if u.in_s_n(n)})

    def at_q0(self) -> dict[Permutation, int]:
        out = {u: c.at_q0() for u, c in self.terms.items()}
        return {u: c for u, c in out.items() if c != 0}

    def sorted_terms(self) -> list[tuple[Permutation, QPolynomial]]:
        return sorted(self.terms.items(), key=lambda uc: uc[0].sort_key())

    def map_basis(self, fn) -> Expansion:
        """Replace every G[u] by fn(u) (an Expansion), keeping coefficients."""
        out = Expansion.zero()
        for u, coeff in self.terms.items():
            out = out + fn(u).scaled(coeff)
        return out

    def render(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for u, poly in self.sorted_terms():
            for m, c in poly.sorted_terms():
                factors = []
                if abs(c) != 1:
                    factors.append(str(abs(c)))
                if not m.is_one():
                    factors.append(m.render())
                factors.append(f"G[{u.one_line()}]")
                parts.append(("- " if c < 0 else "+ ") + "*".join(factors))
        text = " ".join(parts)
        return text[2:] if text.startswith("+ ") else text[0] + text[2:]

    def to_json_obj(self) -> list[dict]:
        out = []
        for u, poly in self.sorted_terms():
            terms = [
                {"q": [[v, e] for v, e in m.exponents], "c": c}
                for m, c in poly.sorted_terms()
            ]
            out.append({"perm": u.one_line(), "terms": terms})
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj())

    @classmethod
    def from_json_obj(cls, obj: list[dict]) -> Expansion:
        terms: dict[Permutation, QPolynomial] = {}
        for rec in obj:
            u = Permutation.from_one_line(rec["perm"])
            poly: dict[QMonomial, int] = {}
            for tr in rec["terms"]:
                mono = QMonomial.from_dict({int(v): int(e) for v, e in tr["q"]})
                poly[mono] = poly.get(mono, 0) + int(tr["c"])
            terms[u] = QPolynomial(poly)
        return cls(terms)

    @classmethod
    def from_json(cls, text: str) -> Expansion:
        return cls.from_json_obj(json.loads(text))

    @classmethod
    def parse(cls, text: str) -> Expansion:
        """Parse the `render` text form back into an Expansion."""
        text = text.strip()
        if text == "0":
            return cls.zero()
        out = cls.zero()
        for sign, body in _split_signed_terms(text):
            mult = 1
            mono = QMonomial.one()
            perm: Permutation | None = None
            for factor in body.split("*"):
                factor = factor.strip()
                if re.fullmatch(r"\d+", factor):
                    mult *= int(factor)
                elif m := re.fullmatch(r"Q(\d+)(?:\^(\d+))?", factor):
                    mono = mono * QMonomial.variable(int(m.group(1)), int(m.group(2) or 1))
                elif m := re.fullmatch(r"G\[([0-9,]+)\]", factor):
                    perm = Permutation.from_one_line(m.group(1))
                else:
                    raise ValueError(f"cannot parse factor {factor!r}")
            if perm is None:
                raise ValueError(f"term without basis symbol: {body!r}")
            out.add_term(perm, sign, mono, mult)
        return out

    def __repr__(self) -> str:
        return f"Expansion({self.render()})"


def _split_signed_terms(text: str) -> list[tuple[int, str]]:
    pieces = re.split(r"\s([+-])\s", " " + text if text[0] in "+-" else "+ " + text)
    # re.split with a captured group yields [first, sep, term, sep, term, ...]
    first = pieces[0].strip()
    out: list[tuple[int, str]] = []
    if first.startswith("-"):
        out.append((-1, first[1:].strip()))
    elif first:
        out.append((1, first.lstrip("+ ").strip()))
    for sep, term in zip(pieces[1::2], pieces[2::2]):
        out.append((1 if sep == "+" else -1, term.strip()))
    return [(s, t) for s, t in out if t]


@lru_cache(maxsize=None)
def pieri_expand(w: Permutation, k: int, p: int) -> Expansion:
    """
    Expand G[w] * G^k_p in the formal basis: the signed, marking-counted,
    Q-weighted sum over k-Pieri chains from w carrying a p-marking.
    """
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    if not 0 <= p <= k:
        raise ValueError(f"p must be in 0..{k}, got {p}")
    out = Expansion.zero()
    for chain in enumerate_pieri_chains(w, k):
        markings = enumerate_markings(chain, p)
        if not markings:
            continue
        sign = -1 if (len(chain) - p) % 2 else 1
        out.add_term(chain.end, sign, q_weight(chain.path), len(markings))
    return out


@lru_cache(maxsize=None)
def monk_lhs_expand(x: Permutation, k: int) -> Expansion:
    """Expand (1 - Q_k)(1 - x_k) G[x] via k-Monk chains from x."""
    out = Expansion.zero()
    for m in enumerate_monk_chains(x, k):
        sign = -1 if m.t % 2 else 1
        out.add_term(m.end, sign, q_weight(m.path))
    return out


def expand_product_chain(w: Permutation, factors: list[tuple[int, int]]) -> Expansion:
    """
    Left-fold expansion of G[w] * prod of column factors: each (k, p) factor
    replaces every basis term by its own expansion, coefficients carried
    through exactly.
    """
    out = Expansion.basis(w)
    for k, p in factors:
        out = out.map_basis(lambda u, k=k, p=p: pieri_expand(u, k, p))
    return out


def pieri_factor_index(k: int, p: int) -> Permutation:
    """Basis index of the degree-p column-k factor (a cyclic permutation)."""
    return cyclic_permutation(k, p)
