"""Three-valued cardinal arithmetic: Finite(n), Aleph0, Aleph1.

The range is deliberately capped at Aleph1: every quiver handled here is
countable, so the size() operator never needs anything larger.  Going past
Aleph1 raises CardinalRangeError.
"""

from dataclasses import dataclass
from functools import total_ordering


class CardinalRangeError(ValueError):
    """A computation required a cardinal beyond Aleph1."""


_LEVELS = {"finite": 0, "aleph0": 1, "aleph1": 2}


@total_ordering
@dataclass(frozen=True)
class Cardinal:
    kind: str  # 'finite' | 'aleph0' | 'aleph1'
    n: int = 0

    def __post_init__(self):
        if self.kind not in _LEVELS:
            raise ValueError("unknown cardinal kind: %r" % (self.kind,))
        if self.kind == "finite" and self.n < 0:
            raise ValueError("finite cardinal must be nonnegative")
        if self.kind != "finite" and self.n != 0:
            raise ValueError("infinite cardinals carry no integer payload")

    def _key(self):
        return (_LEVELS[self.kind], self.n)

    def __lt__(self, other):
        return self._key() < other._key()

    def __eq__(self, other):
        return isinstance(other, Cardinal) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    @property
    def is_finite(self):
        return self.kind == "finite"

    def successor(self):
        if self.kind == "finite":
            return Cardinal("finite", self.n + 1)
        if self.kind == "aleph0":
            return ALEPH1
        raise CardinalRangeError("successor of Aleph1 is out of range")

    def __repr__(self):
        if self.kind == "finite":
            return "Finite(%d)" % self.n
        return {"aleph0": "Aleph0", "aleph1": "Aleph1"}[self.kind]

    def to_json(self):
        if self.kind == "finite":
            return self.n
        return self.kind

    @staticmethod
    def from_json(v):
        if isinstance(v, int):
            return finite(v)
        return Cardinal(v)


def finite(n):
    return Cardinal("finite", n)


ALEPH0 = Cardinal("aleph0")
ALEPH1 = Cardinal("aleph1")

#: Marker for a family of finite cardinals with no finite bound
#: (e.g. {Finite(n) : n in N}); its sup is Aleph0 and is never attained.
UNBOUNDED_FINITE = "unbounded-finite"


def cardinal_size(xs, infinite_family=False):
    """The paper's size() of a multiset of cardinals.

    size(X) is the least cardinal strictly greater than every element:
    sup(X) when the sup is not attained, successor(sup(X)) when it is.
    size({}) := Finite(0).

    ``infinite_family=True`` records that the multiset is indexed by an
    infinite family (e.g. the vertices of an infinite quiver) even though
    only finitely many representative values are listed; the result is then
    at least Aleph0, which is how the paper evaluates cone-shape cardinals
    on infinite quivers.  Elements may include UNBOUNDED_FINITE.
    """
    sup = finite(0)
    attained = False
    seen_any = False
    for x in xs:
        seen_any = True
        if x is UNBOUNDED_FINITE:
            if ALEPH0 > sup:
                sup, attained = ALEPH0, False
            continue
        if not isinstance(x, Cardinal):
            raise TypeError("cardinal_size expects Cardinal values")
        if x > sup:
            sup, attained = x, True
        elif x == sup:
            attained = True
    if not seen_any and not infinite_family:
        return finite(0)
    out = sup.successor() if attained else sup
    if infinite_family and out < ALEPH0:
        out = ALEPH0
    return out


def sup_cardinals(xs):
    """Plain supremum (no successor bump) with sup({}) = Finite(0)."""
    out = finite(0)
    for x in xs:
        if x > out:
            out = x
    return out
