"""Monomial orders: grevlex, lex, and elimination block orders.

A block order compares the first ``elim`` exponents lexicographically and
breaks ties by grevlex on the remaining ones, which makes it an
elimination order for the leading block.
"""

from __future__ import annotations

from dataclasses import dataclass

from idealdep import _kernel as K


@dataclass(frozen=True)
class MonomialOrder:
    kind: str  # "grevlex" | "lex" | "block"
    elim: int = 0

    def __post_init__(self):
        if self.kind not in ("grevlex", "lex", "block"):
            raise ValueError(f"unknown order kind {self.kind!r}")
        if self.kind == "block" and self.elim < 0:
            raise ValueError("block order needs elim >= 0")

    @property
    def code(self) -> int:
        return {"grevlex": K.GREVLEX_CODE, "lex": K.LEX_CODE, "block": K.BLOCK_CODE}[self.kind]

    def compare(self, a, b) -> int:
        """-1, 0 or 1 as a <, =, > b."""
        return K.cmp_mono(a, b, self.code, self.elim)

    def key_desc(self):
        """Sort key: ascending in this key == descending in the order."""
        if self.kind == "grevlex":
            def key(m):
                return (-sum(m),) + tuple(reversed(m))
        elif self.kind == "lex":
            def key(m):
                return tuple(-e for e in m)
        else:
            k = self.elim

            def key(m):
                head, tail = m[:k], m[k:]
                return tuple(-e for e in head) + (-sum(tail),) + tuple(reversed(tail))
        return key

    def key_asc(self):
        """Sort key: ascending in this key == ascending in the order."""
        if self.kind == "grevlex":
            def key(m):
                return (sum(m),) + tuple(-e for e in reversed(m))
        elif self.kind == "lex":
            def key(m):
                return tuple(m)
        else:
            k = self.elim

            def key(m):
                head, tail = m[:k], m[k:]
                return tuple(head) + (sum(tail),) + tuple(-e for e in reversed(tail))
        return key

    def sort_terms_desc(self, terms):
        key = self.key_desc()
        return sorted(terms, key=lambda t: key(t[0]))

    def label(self) -> str:
        if self.kind == "block":
            return f"block({self.elim})"
        return self.kind


GREVLEX = MonomialOrder("grevlex")
LEX = MonomialOrder("lex")


def block_order(elim: int) -> MonomialOrder:
    return MonomialOrder("block", elim)
