"""Monomial orders: lexicographic, degree-reverse-lexicographic, and weight.

A monomial is an exponent tuple.  Every order provides a sort key so that
u > v as monomials iff key(u) > key(v) as tuples; all engine comparisons go
through the keys, which makes them cheap and total.  Orders are immutable.
"""

from __future__ import annotations

from dataclasses import dataclass, field

Monomial = tuple[int, ...]


def _check_perm(perm: tuple[int, ...]):
    if sorted(perm) != list(range(len(perm))):
        raise ValueError("perm must be a permutation of 0..n-1")


class MonomialOrder:
    """Base interface; subclasses are hashable value objects."""

    n: int

    def key(self, m: Monomial) -> tuple:
        raise NotImplementedError

    def compare(self, u: Monomial, v: Monomial) -> int:
        """-1, 0, or 1 as u <, =, > v.  Equality only for equal monomials."""
        if len(u) != self.n or len(v) != self.n:
            raise ValueError("monomial dimension mismatch")
        ku, kv = self.key(u), self.key(v)
        return (ku > kv) - (ku < kv)

    def greater(self, u: Monomial, v: Monomial) -> bool:
        """Marking predicate: does u beat v?  Single choke point for marking."""
        return self.key(u) > self.key(v)

    def descriptor(self) -> str:
        raise NotImplementedError

    def restrict(self, indices: tuple[int, ...]) -> "MonomialOrder":
        """Induced order on the subset of variables `indices` (0-based, renumbered)."""
        raise NotImplementedError

    def __repr__(self):
        return self.descriptor()


@dataclass(frozen=True)
class Lex(MonomialOrder):
    """Pure lexicographic; perm lists variable indices from highest to lowest."""

    perm: tuple[int, ...]

    def __post_init__(self):
        _check_perm(self.perm)

    @property
    def n(self) -> int:
        return len(self.perm)

    @staticmethod
    def identity(n: int) -> "Lex":
        return Lex(tuple(range(n)))

    def key(self, m: Monomial) -> tuple:
        return tuple(m[p] for p in self.perm)

    def descriptor(self) -> str:
        return "lex:" + ",".join(str(p + 1) for p in self.perm)

    def restrict(self, indices: tuple[int, ...]) -> "Lex":
        pos = {v: i for i, v in enumerate(indices)}
        return Lex(tuple(pos[p] for p in self.perm if p in pos))


@dataclass(frozen=True)
class DegRevLex(MonomialOrder):
    """Total degree first, then reverse lexicographic tie-break.

    On equal degrees the monomial with the larger exponent on the latest
    variable (last in perm) is the smaller one.
    """

    perm: tuple[int, ...]

    def __post_init__(self):
        _check_perm(self.perm)

    @property
    def n(self) -> int:
        return len(self.perm)

    @staticmethod
    def identity(n: int) -> "DegRevLex":
        return DegRevLex(tuple(range(n)))

    @staticmethod
    def with_last(n: int, last: int) -> "DegRevLex":
        """Identity order with one variable moved to the cheapest slot."""
        return DegRevLex(tuple(i for i in range(n) if i != last) + (last,))

    def key(self, m: Monomial) -> tuple:
        return (sum(m),) + tuple(-m[p] for p in reversed(self.perm))

    def descriptor(self) -> str:
        return "grevlex:" + ",".join(str(p + 1) for p in self.perm)

    def restrict(self, indices: tuple[int, ...]) -> "DegRevLex":
        pos = {v: i for i, v in enumerate(indices)}
        return DegRevLex(tuple(pos[p] for p in self.perm if p in pos))


@dataclass(frozen=True)
class WeightOrder(MonomialOrder):
    """Integer weight vector compared first; a nested order breaks ties."""

    weights: tuple[int, ...]
    tie: MonomialOrder

    def __post_init__(self):
        if len(self.weights) != self.tie.n:
            raise ValueError("weight vector and tie order disagree on n")

    @property
    def n(self) -> int:
        return len(self.weights)

    def weight_of(self, m: Monomial) -> int:
        return sum(w * e for w, e in zip(self.weights, m) if e)

    def key(self, m: Monomial) -> tuple:
        return (self.weight_of(m),) + self.tie.key(m)

    def descriptor(self) -> str:
        return "weight:" + ",".join(map(str, self.weights)) + ";tie=" + self.tie.descriptor()

    def restrict(self, indices: tuple[int, ...]) -> "WeightOrder":
        return WeightOrder(
            tuple(self.weights[i] for i in indices), self.tie.restrict(indices)
        )


@dataclass(frozen=True, eq=False)
class TieRecordingWeight(WeightOrder):
    """Weight order that records marking decisions needing the tie order.

    Only comparisons between distinct monomials with equal weight count as
    consultations; used to certify that a weight vector alone fixes every
    initial term of a computed basis.
    """

    consultations: list = field(default_factory=list)

    def greater(self, u: Monomial, v: Monomial) -> bool:
        if u != v and self.weight_of(u) == self.weight_of(v):
            self.consultations.append((u, v))
        return super().greater(u, v)


# ---------------------------------------------------------------------------
# Named orders.  Sequences list 1-based variable indices from highest to
# lowest; the weight vector applies to the 32 fig1 fixture columns.
# ---------------------------------------------------------------------------

W_FIG1: tuple[int, ...] = (
    25, 24, 24, 45, 46, 44, 37, 37, 47, 47, 63, 107, 47, 25, 24, 46,
    36, 33, 20, 26, 102, 87, 80, 103, 92, 35, 25, 26, 53, 37, 22, 27,
)

LEX_C7_SEQ: tuple[int, ...] = (
    1, 17, 18, 19, 22, 20, 21, 13, 14, 15, 16, 2, 3, 4, 5, 6, 7, 8, 9, 10,
    11, 12, 23, 24, 26, 25, 27, 29, 28, 32, 31, 30, 33, 35, 34, 38, 37, 36,
    42, 41, 40, 39, 43, 45, 44, 48, 47, 46, 52, 51, 50, 49, 57, 56, 55, 54,
    53, 58, 59, 60, 61, 62, 63, 64,
)

LEX1_B_SEQ: tuple[int, ...] = (
    1, 2, 4, 3, 5, 7, 6, 10, 9, 8, 11, 13, 12, 16, 15, 14, 20, 19, 18, 17,
    21, 23, 22, 26, 25, 24, 30, 29, 28, 27, 35, 34, 33, 32, 31,
)

# Fragment of the 64-variable order covering columns 23..57 (the 35 weight-4
# columns); it is the LEX1_B_SEQ sequence shifted by 22.
LEX1_A_SEGMENT_SEQ: tuple[int, ...] = tuple(i + 22 for i in LEX1_B_SEQ)

PAPER_ORDER_NAMES = ("w_fig1", "lex_c7", "lex1_B", "lex1_A_segment")


def initial_strict_under_weight(weights: tuple[int, ...], basis) -> bool:
    """Certify that the weight vector alone determines every initial term.

    True iff every basis element has strictly larger weight on its lead than
    on its tail, making the tie-break order immaterial.
    """

    def wdot(m: Monomial) -> int:
        return sum(w * e for w, e in zip(weights, m) if e)

    return all(wdot(g.lead) > wdot(g.tail) for g in basis.elements)


def paper_order(name: str) -> MonomialOrder:
    """Named orders used by the verification scenarios."""
    if name == "w_fig1":
        return WeightOrder(W_FIG1, DegRevLex.identity(32))
    if name == "lex_c7":
        return Lex(tuple(i - 1 for i in LEX_C7_SEQ))
    if name == "lex1_B":
        return Lex(tuple(i - 1 for i in LEX1_B_SEQ))
    if name == "lex1_A_segment":
        # renumbered to the 35-column block it addresses
        return Lex(tuple(i - 23 for i in LEX1_A_SEGMENT_SEQ))
    raise ValueError(f"unknown named order {name!r}")
