"""
Hopf algebras given by generators, relations and antipode.

``NCExpr`` is a linear combination of words in generator symbols.  Inverse
generators (``Kinv``, ``binv``, ...) are ordinary symbols tied to their
partners by explicit unit relations, so words never carry exponents.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping, Optional, Sequence, Union

from .cyclo import CycNum, as_cyc

Word = tuple[str, ...]


class NCExpr:
    """Formal Q(zeta_n)-linear combination of words; the empty word is 1."""

    __slots__ = ("order", "terms")

    def __init__(self, order: int, terms: Optional[Mapping[Word, object]] = None):
        self.order = order
        clean: dict[Word, CycNum] = {}
        for w, c in (terms or {}).items():
            c = as_cyc(c, order)
            if c:
                clean[tuple(w)] = c
        self.terms = clean

    @classmethod
    def gen(cls, order: int, *symbols: str) -> "NCExpr":
        """The single word symbols[0] symbols[1] ... with coefficient 1."""
        return cls(order, {tuple(symbols): 1})

    @classmethod
    def scalar(cls, order: int, c) -> "NCExpr":
        return cls(order, {(): c})

    def _lift(self, other) -> "NCExpr":
        if isinstance(other, NCExpr):
            if other.order != self.order:
                raise ValueError("NCExpr order mismatch")
            return other
        return NCExpr.scalar(self.order, other)

    def __add__(self, other) -> "NCExpr":
        other = self._lift(other)
        terms = dict(self.terms)
        for w, c in other.terms.items():
            terms[w] = terms[w] + c if w in terms else c
        return NCExpr(self.order, terms)

    __radd__ = __add__

    def __neg__(self) -> "NCExpr":
        return NCExpr(self.order, {w: -c for w, c in self.terms.items()})

    def __sub__(self, other) -> "NCExpr":
        return self + (-self._lift(other))

    def __rsub__(self, other) -> "NCExpr":
        return self._lift(other) + (-self)

    def __mul__(self, other) -> "NCExpr":
        if not isinstance(other, NCExpr):
            c = as_cyc(other, self.order)
            return NCExpr(self.order, {w: c * x for w, x in self.terms.items()})
        terms: dict[Word, CycNum] = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                w = w1 + w2
                terms[w] = terms[w] + c1 * c2 if w in terms else c1 * c2
        return NCExpr(self.order, terms)

    def __rmul__(self, other) -> "NCExpr":
        return self * other

    def __pow__(self, k: int) -> "NCExpr":
        out = NCExpr.scalar(self.order, 1)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, NCExpr):
            return NotImplemented
        return self.order == other.order and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.order, frozenset(self.terms.items())))

    def symbols(self) -> set[str]:
        return {s for w in self.terms for s in w}

    def pretty(self, var: str = "q", exponent: int = 1) -> str:
        if not self.terms:
            return "0"
        parts = []
        for w, c in sorted(self.terms.items(), key=lambda t: (len(t[0]), t[0])):
            word = "*".join(w)
            if c == 1 and word:
                parts.append(word)
            elif c == -1 and word:
                parts.append(f"-{word}")
            else:
                cs = c.pretty(var, exponent)
                if " " in cs:
                    cs = f"({cs})"
                parts.append(f"{cs}*{word}" if word else cs)
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self) -> str:
        return f"NCExpr({self.pretty('z')})"

    def to_json(self) -> list:
        return [{"word": list(w), "coeff": c.to_json()} for w, c in self.terms.items()]


CoproductTerm = tuple[CycNum, Word, Word]


@dataclass(frozen=True, eq=False)
class HopfData:
    """A Hopf algebra presentation over Q(zeta_order).

    ``coproduct`` maps a generator to terms (coeff, left word, right word)
    meaning sum coeff * left (x) right; it may be omitted.
    """

    name: str
    order: int
    generators: tuple[str, ...]
    relations: tuple[tuple[NCExpr, NCExpr], ...]
    antipode: Mapping[str, NCExpr]
    counit: Mapping[str, CycNum]
    coproduct: Optional[Mapping[str, tuple[CoproductTerm, ...]]] = None
    grouplike: Optional[str] = None
    params: Mapping[str, object] = field(default_factory=dict)

    def __post_init__(self):
        missing = [g for g in self.generators if g not in self.antipode]
        if missing:
            raise ValueError(f"antipode undefined on {missing}")
        missing = [g for g in self.generators if g not in self.counit]
        if missing:
            raise ValueError(f"counit undefined on {missing}")
        for lhs, rhs in self.relations:
            extra = (lhs.symbols() | rhs.symbols()) - set(self.generators)
            if extra:
                raise ValueError(f"relation uses unknown symbols {sorted(extra)}")

    def gen(self, *symbols: str) -> NCExpr:
        return NCExpr.gen(self.order, *symbols)

    def apply_antipode(self, expr: NCExpr) -> NCExpr:
        """S extended as an anti-homomorphism: S(g1...gk) = S(gk)...S(g1)."""
        out = NCExpr(self.order)
        for w, c in expr.terms.items():
            term = NCExpr.scalar(self.order, c)
            for g in reversed(w):
                term = term * self.antipode[g]
            out = out + term
        return out


Relation = tuple[NCExpr, NCExpr]


def relation(lhs: NCExpr, rhs: Union[NCExpr, int, CycNum]) -> Relation:
    if not isinstance(rhs, NCExpr):
        rhs = NCExpr.scalar(lhs.order, rhs)
    return lhs, rhs


def unit_relations(order: int, pairs: Sequence[tuple[str, str]]) -> list[Relation]:
    """g*ginv = 1 and ginv*g = 1 for each (g, ginv)."""
    out = []
    for g, gi in pairs:
        out.append(relation(NCExpr.gen(order, g, gi), 1))
        out.append(relation(NCExpr.gen(order, gi, g), 1))
    return out
