"""Pure-difference binomial arithmetic and a specialized Buchberger engine.

Monomials are exponent tuples; a binomial is an ordered (lead, tail) pair of
distinct monomials standing for lead - tail.  All coefficients are +1/-1
throughout: S-pairs and reductions of pure binomials stay pure, so no field
arithmetic is ever needed.

The completion loop keeps a per-variable index over leads (plus an exact
lookup for the dominant degree-2 case) so divisor searches stay sub-linear
on 64-variable runs with ~10^3 basis elements.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from typing import Iterable, Sequence

from .orders import DegRevLex, Monomial, MonomialOrder


def monomial_degree(m: Monomial) -> int:
    return sum(m)


def monomial_mul(u: Monomial, v: Monomial) -> Monomial:
    return tuple(a + b for a, b in zip(u, v))


def monomial_lcm(u: Monomial, v: Monomial) -> Monomial:
    return tuple(a if a > b else b for a, b in zip(u, v))


def divides(u: Monomial, v: Monomial) -> bool:
    return all(a <= b for a, b in zip(u, v))


def monomial_str(m: Monomial) -> str:
    factors = []
    for i, e in enumerate(m):
        if e == 1:
            factors.append(f"x{i + 1}")
        elif e > 1:
            factors.append(f"x{i + 1}^{e}")
    return "*".join(factors) if factors else "1"


class Binomial:
    """lead - tail with lead != tail.  Orientation is fixed by mark()."""

    __slots__ = ("lead", "tail")

    def __init__(self, lead: Monomial, tail: Monomial):
        if lead == tail:
            raise ValueError("binomial monomials must differ")
        self.lead = lead
        self.tail = tail

    def degree(self) -> int:
        return monomial_degree(self.lead)

    def pair(self) -> frozenset[Monomial]:
        """The unordered monomial pair; identifies the binomial up to sign."""
        return frozenset((self.lead, self.tail))

    def __eq__(self, other):
        return (
            isinstance(other, Binomial)
            and self.lead == other.lead
            and self.tail == other.tail
        )

    def __hash__(self):
        return hash((self.lead, self.tail))

    def __repr__(self):
        return f"{monomial_str(self.lead)} - {monomial_str(self.tail)}"


def mark(u: Monomial, v: Monomial, order: MonomialOrder) -> Binomial:
    """Orient u - v so that the lead is the larger monomial under order."""
    return Binomial(u, v) if order.greater(u, v) else Binomial(v, u)


def from_vector(vec: Sequence[int]) -> Binomial:
    """Binomial x^{v+} - x^{v-} from an integer vector with both signs present."""
    lead = tuple(e if e > 0 else 0 for e in vec)
    tail = tuple(-e if e < 0 else 0 for e in vec)
    return Binomial(lead, tail)


@dataclass(frozen=True)
class GroebnerBasis:
    elements: tuple[Binomial, ...]
    order: MonomialOrder
    reduced: bool

    def __len__(self):
        return len(self.elements)

    def pairs(self) -> set[frozenset[Monomial]]:
        return {g.pair() for g in self.elements}

    def dump_lines(self) -> list[str]:
        head = f"n={self.order.n} order={self.order.descriptor()} reduced={str(self.reduced).lower()}"
        return [head] + sorted(repr(g) for g in self.elements)

    def dumps(self) -> str:
        return "\n".join(self.dump_lines()) + "\n"


class _Reducer:
    """Rewriting index: first-applicable-element lookup for monomials."""

    def __init__(self, elements: Sequence[Binomial]):
        self.lead_items: list[tuple[tuple[int, int], ...]] = []
        self.tail_items: list[tuple[tuple[int, int], ...]] = []
        self.pair2: dict[tuple[int, int], int] = {}
        self.buckets: dict[int, list[int]] = {}
        for g in elements:
            self.add(g)

    def __len__(self):
        return len(self.lead_items)

    def add(self, g: Binomial):
        idx = len(self.lead_items)
        litems = tuple((i, e) for i, e in enumerate(g.lead) if e)
        self.lead_items.append(litems)
        self.tail_items.append(tuple((i, e) for i, e in enumerate(g.tail) if e))
        if len(litems) == 2 and litems[0][1] == 1 and litems[1][1] == 1:
            self.pair2.setdefault((litems[0][0], litems[1][0]), idx)
        elif len(litems) == 1 and litems[0][1] == 2:
            self.pair2.setdefault((litems[0][0], litems[0][0]), idx)
        else:
            self.buckets.setdefault(litems[0][0], []).append(idx)

    def find_divisor(self, m: Monomial, skip: int = -1) -> int:
        """Lowest-index element whose lead divides m, or -1; `skip` is excluded."""
        best = -1
        supp = [i for i, e in enumerate(m) if e]
        pair2 = self.pair2
        for ai, a in enumerate(supp):
            if m[a] >= 2:
                j = pair2.get((a, a), -1)
                if j >= 0 and j != skip and (best < 0 or j < best):
                    best = j
            for bi in range(ai + 1, len(supp)):
                j = pair2.get((a, supp[bi]), -1)
                if j >= 0 and j != skip and (best < 0 or j < best):
                    best = j
        for a in supp:
            for j in self.buckets.get(a, ()):
                if best >= 0 and j >= best:
                    break
                if j == skip:
                    continue
                if all(m[v] >= e for v, e in self.lead_items[j]):
                    best = j
                    break
        return best

    def reduce(self, m: Monomial, skip: int = -1) -> Monomial:
        while True:
            j = self.find_divisor(m, skip)
            if j < 0:
                return m
            lm = list(m)
            for v, e in self.lead_items[j]:
                lm[v] -= e
            for v, e in self.tail_items[j]:
                lm[v] += e
            m = tuple(lm)


def normal_form(
    m: Monomial, basis: Sequence[Binomial], order: MonomialOrder | None = None
) -> Monomial:
    """Rewrite m by lead -> tail moves until no lead divides.

    Each step picks the first applicable element in the given sequence order;
    termination holds whenever elements are marked under a monomial order.
    """
    return _Reducer(basis).reduce(m)


def s_pair(g1: Binomial, g2: Binomial, order: MonomialOrder) -> Binomial | None:
    """S-binomial over the lcm of the leads; None when the terms coincide."""
    lcm = monomial_lcm(g1.lead, g2.lead)
    u = tuple(l - a + t for l, a, t in zip(lcm, g1.lead, g1.tail))
    v = tuple(l - a + t for l, a, t in zip(lcm, g2.lead, g2.tail))
    if u == v:
        return None
    return mark(u, v, order)


def _autoreduce(elements: list[Binomial], order: MonomialOrder) -> list[Binomial]:
    """Interreduce to a fixpoint: every monomial irreducible by the others.

    On a Groebner basis this produces the unique reduced basis; on an
    arbitrary marked set it is plain interreduction.
    """
    elems = list(dict.fromkeys(elements))
    changed = True
    while changed:
        changed = False
        reducer = _Reducer(elems)
        out: list[Binomial] = []
        for i, g in enumerate(elems):
            nu = reducer.reduce(g.lead, skip=i)
            nv = reducer.reduce(g.tail, skip=i)
            if nu == nv:
                changed = True
                continue
            h = mark(nu, nv, order)
            if h != g:
                changed = True
            out.append(h)
        elems = list(dict.fromkeys(out))
    elems.sort(key=lambda g: (order.key(g.lead), order.key(g.tail)))
    return elems


def buchberger(
    gens: Iterable[Binomial],
    order: MonomialOrder,
    chain_criterion: bool = False,
) -> GroebnerBasis:
    """Complete gens to the reduced Groebner basis under order.

    S-pairs are processed from a queue keyed by (lcm degree, lcm under the
    order, insertion index); pairs with coprime leads are never enqueued.
    chain_criterion enables Gebauer-Moeller-style elimination of redundant
    pairs at creation time; the reduced result is identical either way.
    """
    key = order.key
    reducer = _Reducer([])
    leads: list[Monomial] = []
    tails: list[Monomial] = []
    by_var: dict[int, list[int]] = {}
    heap: list[tuple] = []

    def insert(g: Binomial):
        t = len(leads)
        lead = g.lead
        # candidates share a lead variable; pairs with coprime leads never
        # appear here, which is exactly the product-criterion skip
        candidates: set[int] = set()
        for i, e in enumerate(lead):
            if e:
                candidates.update(by_var.get(i, ()))
        new_pairs = [(i, monomial_lcm(leads[i], lead)) for i in sorted(candidates)]
        if chain_criterion and new_pairs:
            by_lcm: dict[Monomial, list[int]] = {}
            for i, lcm in new_pairs:
                by_lcm.setdefault(lcm, []).append(i)
            kept = []
            minimal: list[Monomial] = []
            for lcm in sorted(by_lcm, key=key):
                if any(divides(small, lcm) for small in minimal):
                    continue
                minimal.append(lcm)
                kept.append((min(by_lcm[lcm]), lcm))
            new_pairs = kept
        for i, lcm in new_pairs:
            heapq.heappush(heap, (monomial_degree(lcm), key(lcm), t, i))
        leads.append(lead)
        tails.append(g.tail)
        for i, e in enumerate(lead):
            if e:
                by_var.setdefault(i, []).append(t)
        reducer.add(g)

    for g in gens:
        nu = reducer.reduce(g.lead)
        nv = reducer.reduce(g.tail)
        if nu != nv:
            insert(mark(nu, nv, order))

    while heap:
        _, _, t, i = heapq.heappop(heap)
        lcm = monomial_lcm(leads[i], leads[t])
        u = tuple(l - a + b for l, a, b in zip(lcm, leads[i], tails[i]))
        v = tuple(l - a + b for l, a, b in zip(lcm, leads[t], tails[t]))
        nu = reducer.reduce(u)
        nv = reducer.reduce(v)
        if nu != nv:
            insert(mark(nu, nv, order))

    raw = [Binomial(l, tl) for l, tl in zip(leads, tails)]
    return GroebnerBasis(tuple(_autoreduce(raw, order)), order, reduced=True)


def reduce_basis(basis: GroebnerBasis) -> GroebnerBasis:
    """Interreduce a Groebner basis into the unique reduced basis."""
    return GroebnerBasis(
        tuple(_autoreduce(list(basis.elements), basis.order)), basis.order, reduced=True
    )


def degree_histogram(basis: GroebnerBasis) -> dict[int, int]:
    hist: dict[int, int] = {}
    for g in basis.elements:
        d = g.degree()
        hist[d] = hist.get(d, 0) + 1
    return hist


def is_quadratic(basis: GroebnerBasis) -> bool:
    return all(g.degree() == 2 for g in basis.elements)


def is_squarefree_initial(basis: GroebnerBasis) -> bool:
    return all(all(e <= 1 for e in g.lead) for g in basis.elements)


def ideal_membership(b: Binomial, basis: GroebnerBasis) -> bool:
    reducer = _Reducer(basis.elements)
    return reducer.reduce(b.lead) == reducer.reduce(b.tail)


def minimal_generation_degrees(gens: Sequence[Binomial], config) -> dict[int, int]:
    """Per-degree counts of generators not redundant over lower degrees.

    A degree-d generator is counted unless it lies in the ideal generated by
    the strictly-lower-degree generators (tested against a Groebner basis of
    that subideal).  Assumes gens generate the full toric ideal of config,
    which makes the returned degree set independent of the generating set.
    """
    unique: list[Binomial] = []
    seen = set()
    for g in gens:
        if config is not None and config.image(g.lead) != config.image(g.tail):
            raise ValueError("generator not balanced for the configuration")
        if g.pair() not in seen:
            seen.add(g.pair())
            unique.append(g)
    by_degree: dict[int, list[Binomial]] = {}
    for g in unique:
        by_degree.setdefault(g.degree(), []).append(g)
    counts: dict[int, int] = {}
    lower: list[Binomial] = []
    for d in sorted(by_degree):
        if lower:
            n = len(lower[0].lead)
            low_gb = buchberger(lower, DegRevLex.identity(n))
            fresh = [g for g in by_degree[d] if not ideal_membership(g, low_gb)]
        else:
            fresh = by_degree[d]
        if fresh:
            counts[d] = len(fresh)
        lower.extend(by_degree[d])
    return counts


def no_binomial_with_monomial(config, m: Monomial) -> bool:
    """True iff m's fiber is a singleton, so no nonzero binomial has m as a term."""
    from .config import fiber_monomials

    fiber = fiber_monomials(config, config.image(m), monomial_degree(m))
    return list(fiber) == [m]
