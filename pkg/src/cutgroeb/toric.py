"""Generating sets of toric ideals, plus an independent fiber oracle.

The main route computes an integer kernel basis of the configuration,
forms the lattice-basis binomials, and saturates variable by variable:
for each x_i a Groebner basis is computed under a degree-reverse-lex order
with x_i cheapest, and every element is divided by its common x_i power.
One full pass over all variables yields the toric ideal.

fiber_markov_oracle is the verification counterweight: it enumerates whole
fibers degree by degree and emits spanning differences, independent of
kernel arithmetic and saturation.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from sympy import ZZ
from sympy.polys.matrices import DomainMatrix

from .config import Configuration, fiber_monomials
from .gb import Binomial, buchberger, from_vector
from .orders import DegRevLex


class EnumerationBudgetError(RuntimeError):
    """Raised when oracle enumeration would exceed its configured cap."""


@dataclass(frozen=True)
class LatticeBasis:
    """Linearly independent integer vectors spanning ker_Z of a configuration."""

    vectors: tuple[tuple[int, ...], ...]

    def __len__(self):
        return len(self.vectors)


def _column_reduce_kernel(entries, n: int) -> list[list[int]]:
    """Kernel of the matrix via integer column elimination on [A; I]."""
    d = len(entries)
    cols = [
        [entries[i][j] for i in range(d)] + [1 if t == j else 0 for t in range(n)]
        for j in range(n)
    ]
    active = list(range(n))
    for r in range(d):
        while True:
            nz = [j for j in active if cols[j][r] != 0]
            if len(nz) <= 1:
                break
            piv = min(nz, key=lambda j: (abs(cols[j][r]), j))
            pv = cols[piv][r]
            for j in nz:
                if j == piv:
                    continue
                q = cols[j][r] // pv
                if q:
                    cj, cp = cols[j], cols[piv]
                    for t in range(d + n):
                        cj[t] -= q * cp[t]
        nz = [j for j in active if cols[j][r] != 0]
        if nz:
            active.remove(nz[0])
    kernel = []
    for j in active:
        vec = cols[j][d:]
        lead = next((x for x in vec if x != 0), 0)
        if lead < 0:
            vec = [-x for x in vec]
        kernel.append(vec)
    return kernel


def integer_kernel_basis(config: Configuration) -> LatticeBasis:
    """Deterministic basis of the saturated integer kernel of the configuration.

    Column Hermite-style elimination over [A; I] gives the kernel lattice;
    the basis is then LLL-reduced so downstream binomials start short.
    """
    raw = _column_reduce_kernel(config.entries, config.cols)
    if not raw:
        return LatticeBasis(())
    m = DomainMatrix([[ZZ(x) for x in vec] for vec in raw], (len(raw), config.cols), ZZ)
    reduced = m.lll().to_list()
    vectors = []
    for row in reduced:
        vec = [int(x) for x in row]
        lead = next((x for x in vec if x != 0), 0)
        if lead < 0:
            vec = [-x for x in vec]
        vectors.append(tuple(vec))
    vectors.sort()
    for vec in vectors:
        pos = tuple(max(x, 0) for x in vec)
        neg = tuple(max(-x, 0) for x in vec)
        if config.image(pos) != config.image(neg):
            raise AssertionError("kernel vector fails balance")
    return LatticeBasis(tuple(vectors))


def lattice_ideal_generators(basis: LatticeBasis) -> list[Binomial]:
    """One pure binomial per lattice vector, positive part first."""
    return [from_vector(v) for v in basis.vectors]


def _divide_common_power(g: Binomial, i: int) -> Binomial:
    s = min(g.lead[i], g.tail[i])
    if not s:
        return g
    lead = g.lead[:i] + (g.lead[i] - s,) + g.lead[i + 1 :]
    tail = g.tail[:i] + (g.tail[i] - s,) + g.tail[i + 1 :]
    return Binomial(lead, tail)


def toric_ideal(config: Configuration) -> list[Binomial]:
    """Generators of the toric ideal by full lattice-ideal saturation.

    Sweeps variables in ascending index; every round recomputes a reduced
    Groebner basis under DegRevLex with that variable last and strips the
    common variable power from each element.  No early exit.
    """
    gens = lattice_ideal_generators(integer_kernel_basis(config))
    if not gens:
        return []
    n = config.cols
    for i in range(n):
        order = DegRevLex.with_last(n, i)
        basis = buchberger(gens, order)
        seen = set()
        gens = []
        for g in basis.elements:
            g = _divide_common_power(g, i)
            if g.pair() not in seen:
                seen.add(g.pair())
                gens.append(g)
    gens.sort(key=lambda g: (g.degree(), g.lead, g.tail))
    return gens


def fiber_markov_oracle(
    config: Configuration, maxdeg: int, budget: int = 2_000_000
) -> list[Binomial]:
    """Spanning differences of every fiber up to maxdeg, by brute enumeration.

    Fibers are grouped from all monomials of each degree and cross-checked
    against fiber_monomials; each fiber contributes a star of binomials from
    its minimal monomial.  Generates the degree-truncated toric ideal.
    """
    if maxdeg < 2:
        raise ValueError("maxdeg must be at least 2")
    n = config.cols
    total = sum(comb(n + d - 1, d) for d in range(1, maxdeg + 1))
    if total > budget:
        raise EnumerationBudgetError(
            f"fiber enumeration needs {total} monomials, budget is {budget}"
        )
    from itertools import combinations_with_replacement

    out: list[Binomial] = []
    for d in range(1, maxdeg + 1):
        groups: dict[tuple[int, ...], list[tuple[int, ...]]] = {}
        for combo in combinations_with_replacement(range(n), d):
            exps = [0] * n
            for j in combo:
                exps[j] += 1
            m = tuple(exps)
            groups.setdefault(config.image(m), []).append(m)
        for target in sorted(groups):
            fiber = sorted(groups[target])
            if list(fiber_monomials(config, target, d)) != fiber:
                raise AssertionError("fiber enumeration mismatch")
            base = fiber[0]
            for u in fiber[1:]:
                out.append(Binomial(u, base))
    return out
