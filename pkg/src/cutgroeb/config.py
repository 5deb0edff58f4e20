"""Configurations: cut matrices of graphs, fixtures, Veronese blocks, fibers.

A configuration is a nonnegative integer matrix together with a rational
grading covector c satisfying c . a = 1 for every column a; this makes the
associated toric ideal homogeneous with each variable in degree 1.

The fixture matrices reproduce reference data bit-exactly, including column
order; order-sensitive computations (the named weight and lex orders) always
run against fixtures because those orders are tied to fixture column
positions.  Generically constructed cut configurations use a canonical
column order and are compared to fixtures up to permutation.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .graphs import Graph, contract_edge

Monomial = tuple[int, ...]


@dataclass(frozen=True)
class Configuration:
    entries: tuple[tuple[int, ...], ...]
    grading: tuple[Fraction, ...]

    def __post_init__(self):
        d = len(self.entries)
        if d == 0 or len(self.grading) != d:
            raise ValueError("grading length must match row count")
        n = len(self.entries[0])
        if n == 0 or any(len(r) != n for r in self.entries):
            raise ValueError("entries must form a nonempty rectangular matrix")
        if any(e < 0 for r in self.entries for e in r):
            raise ValueError("entries must be nonnegative")
        cols = set()
        for j in range(n):
            col = tuple(self.entries[i][j] for i in range(d))
            if col in cols:
                raise ValueError(f"duplicate column {col}")
            cols.add(col)
            if sum(c * a for c, a in zip(self.grading, col)) != 1:
                raise ValueError(f"column {j + 1} violates the grading")

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0])

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(self.entries[i][j] for i in range(self.rows))

    def columns(self) -> list[tuple[int, ...]]:
        return [self.column(j) for j in range(self.cols)]

    def image(self, m: Monomial) -> tuple[int, ...]:
        """The exponent image A.m of a monomial."""
        if len(m) != self.cols:
            raise ValueError("monomial dimension mismatch")
        out = [0] * self.rows
        for j, e in enumerate(m):
            if e:
                for i in range(self.rows):
                    a = self.entries[i][j]
                    if a:
                        out[i] += e * a
        return tuple(out)


@dataclass(frozen=True)
class FiberKey:
    """An image vector with its grading degree, identifying one fiber."""

    target: tuple[int, ...]
    degree: int


def fiber_key(config: Configuration, target: Sequence[int]) -> FiberKey:
    target = tuple(target)
    deg = sum(c * b for c, b in zip(config.grading, target))
    if deg.denominator != 1:
        raise ValueError("target is not in the image lattice degree-wise")
    return FiberKey(target, int(deg))


def _as_fractions(vec: Iterable) -> tuple[Fraction, ...]:
    return tuple(Fraction(x) for x in vec)


# ---------------------------------------------------------------------------
# Cut configurations
# ---------------------------------------------------------------------------


def cut_vector(g: Graph, members: Iterable[int]) -> tuple[int, ...]:
    """0/1 vector over the edges: 1 where exactly one endpoint is in members."""
    mset = set(members)
    bad = mset - set(range(1, g.vertex_count + 1))
    if bad:
        raise ValueError(f"invalid vertices {sorted(bad)}")
    return tuple(1 if (u in mset) != (v in mset) else 0 for u, v in g.edges)


def cut_subsets(g: Graph) -> list[frozenset[int]]:
    """Canonical cut representatives: subsets of {2..m}, vertex 2 lowest bit."""
    m = g.vertex_count
    out = []
    for k in range(2 ** (m - 1)):
        out.append(frozenset(v for v in range(2, m + 1) if (k >> (v - 2)) & 1))
    return out


def cut_configuration(g: Graph) -> Configuration:
    """All 2^(m-1) distinct cut vectors as columns, plus a homogenizing row."""
    if not g.is_connected():
        raise ValueError("cut configuration requires a connected graph")
    cols = [cut_vector(g, c) + (1,) for c in cut_subsets(g)]
    entries = tuple(tuple(col[i] for col in cols) for i in range(g.edge_count + 1))
    grading = (Fraction(0),) * g.edge_count + (Fraction(1),)
    return Configuration(entries, grading)


# ---------------------------------------------------------------------------
# Fixtures (bit-exact reference matrices, fixed column order)
# ---------------------------------------------------------------------------

_K23_ROWS = (
    "0000111100001111",
    "0000000011111111",
    "0011110011000011",
    "0011001100110011",
    "0101101010100101",
    "0101010101010101",
    "1111111111111111",
)

_FIG1_ROWS = (
    "00000000000000001111111111111111",
    "00000000111111111111000000001111",
    "00001111111100000000111100001111",
    "00001111000011110000000011111111",
    "00110011110011000011110011000011",
    "01100110100110010110100110010110",
    "01010101101010100101101010100101",
    "11111111111111111111111111111111",
)

_C7_A_ROWS = (
    "111111000000000000000",
    "100000111110000000000",
    "010000100001111000000",
    "001000010001000111000",
    "000100001000100100110",
    "000010000100010010101",
    "000001000010001001011",
)

_C7_B_ROWS = (
    "11111111111111111111000000000000000",
    "11111111110000000000111111111100000",
    "11110000001111110000111111000011110",
    "10001110001110001110111000111011101",
    "01001001101001101101100110110111011",
    "00100101010101011010010101101110111",
    "00010010110010110111001011011101111",
)

_C7_C_ROWS = (
    "1111110",
    "1111101",
    "1111011",
    "1110111",
    "1101111",
    "1011111",
    "0111111",
)

FIXTURE_NAMES = ("k23", "fig1", "c7", "c7_A", "c7_B", "c7_C")


def _rows_to_entries(rows: Sequence[str]) -> tuple[tuple[int, ...], ...]:
    return tuple(tuple(int(ch) for ch in row) for row in rows)


def _homogenized(rows: Sequence[str]) -> Configuration:
    entries = _rows_to_entries(rows)
    grading = (Fraction(0),) * (len(entries) - 1) + (Fraction(1),)
    return Configuration(entries, grading)


def fixture(name: str) -> Configuration:
    if name == "k23":
        return _homogenized(_K23_ROWS)
    if name == "fig1":
        return _homogenized(_FIG1_ROWS)
    if name in ("c7_A", "c7_B", "c7_C"):
        rows = {"c7_A": _C7_A_ROWS, "c7_B": _C7_B_ROWS, "c7_C": _C7_C_ROWS}[name]
        entries = _rows_to_entries(rows)
        weight = sum(entries[i][0] for i in range(len(entries)))
        return Configuration(entries, (Fraction(1, weight),) * len(entries))
    if name == "c7":
        blocks = [_rows_to_entries(b) for b in (_C7_A_ROWS, _C7_B_ROWS, _C7_C_ROWS)]
        rows = []
        for i in range(7):
            rows.append((0,) + blocks[0][i] + blocks[1][i] + blocks[2][i])
        rows.append((1,) * 64)
        return Configuration(tuple(rows), (Fraction(0),) * 7 + (Fraction(1),))
    raise ValueError(f"unknown fixture {name!r}")


# ---------------------------------------------------------------------------
# Permutation matching
# ---------------------------------------------------------------------------


def same_up_to_column_permutation(a: Configuration, b: Configuration):
    """Column permutation sigma with a.column(sigma[j]) == b.column(j), or None.

    Columns of a configuration are pairwise distinct, so sigma is unique
    (hence automatically the lexicographically smallest one).
    """
    if a.rows != b.rows or a.cols != b.cols:
        raise ValueError("dimension mismatch")
    where = {col: j for j, col in enumerate(a.columns())}
    sigma = []
    for j in range(b.cols):
        i = where.get(b.column(j))
        if i is None:
            return None
        sigma.append(i)
    return tuple(sigma)


def match_up_to_row_and_column_permutation(a: Configuration, b: Configuration):
    """(rho, sigma) with row-permuted-by-rho, column-permuted a equal to b.

    Row i of the match is row rho[i] of a; backtracks over rho with
    column-multiset pruning on prefixes.  Returns None when no match exists.
    """
    if a.rows != b.rows or a.cols != b.cols:
        raise ValueError("dimension mismatch")
    d, n = a.rows, a.cols
    target_prefixes = [
        sorted(tuple(b.entries[i][j] for i in range(k + 1)) for j in range(n))
        for k in range(d)
    ]

    def rec(rho: list[int]) -> list[int] | None:
        k = len(rho)
        if k == d:
            return rho
        for r in range(d):
            if r in rho:
                continue
            rho.append(r)
            prefix = sorted(
                tuple(a.entries[rho[i]][j] for i in range(k + 1)) for j in range(n)
            )
            if prefix == target_prefixes[k]:
                res = rec(rho)
                if res is not None:
                    return res
            rho.pop()
        return None

    rho = rec([])
    if rho is None:
        return None
    permuted = Configuration(
        tuple(a.entries[r] for r in rho), tuple(b.grading)
    )
    sigma = same_up_to_column_permutation(permuted, b)
    if sigma is None:
        return None
    return tuple(rho), sigma


# ---------------------------------------------------------------------------
# Squarefree Veronese configurations
# ---------------------------------------------------------------------------


def squarefree_veronese(d: int, k: int) -> Configuration:
    """All 0/1 columns of length d with exactly k ones, grading (1/k,...,1/k).

    The (7,2) and (7,4) instances return the fixture blocks so column order
    matches the reference data; other sizes list index sets lexicographically.
    """
    if not 1 <= k <= d:
        raise ValueError("need 1 <= k <= d")
    if (d, k) == (7, 2):
        return fixture("c7_A")
    if (d, k) == (7, 4):
        return fixture("c7_B")
    cols = []
    for combo in itertools.combinations(range(d), k):
        cols.append(tuple(1 if i in combo else 0 for i in range(d)))
    entries = tuple(tuple(col[i] for col in cols) for i in range(d))
    return Configuration(entries, (Fraction(1, k),) * d)


# ---------------------------------------------------------------------------
# Combinatorial pure subrings
# ---------------------------------------------------------------------------


def cps_select(config: Configuration, covector: Sequence) -> tuple[Configuration, tuple[int, ...]]:
    """Subconfiguration of the columns where the face covector attains 1.

    Errors when the covector exceeds 1 on any column (not a face covector);
    all other columns must evaluate strictly below 1.
    """
    f = _as_fractions(covector)
    if len(f) != config.rows:
        raise ValueError("covector dimension mismatch")
    selected = []
    for j in range(config.cols):
        val = sum(c * a for c, a in zip(f, config.column(j)))
        if val > 1:
            raise ValueError(f"covector exceeds 1 on column {j + 1}")
        if val == 1:
            selected.append(j)
    if not selected:
        raise ValueError("covector selects no columns")
    entries = tuple(tuple(row[j] for j in selected) for row in config.entries)
    return Configuration(entries, config.grading), tuple(selected)


def contraction_covector(config: Configuration, row: int) -> tuple[Fraction, ...]:
    """Face covector selecting the columns with a zero in the given row."""
    return tuple(
        c - (Fraction(1) if i == row else Fraction(0))
        for i, c in enumerate(config.grading)
    )


def contraction_subring(g: Graph, e: tuple[int, int]) -> tuple[Configuration, tuple[int, ...]]:
    """Cut configuration of g/e realized inside cut_configuration(g).

    Selects the columns whose e-coordinate vanishes and deletes row e; rows
    are reordered to the contracted graph's edge order and the result is
    checked against cut_configuration(g/e) up to column permutation.
    Contraction must keep the graph simple (no common endpoint neighbor).
    """
    e = (min(e), max(e))
    if e not in g.edges:
        raise ValueError(f"edge {e} not in graph")
    if not g.is_connected():
        raise ValueError("graph must be connected")
    if g.vertex_count < 4:
        raise ValueError("contraction subring needs at least 4 vertices")
    adj = g.adjacency()
    if adj[e[0]] & adj[e[1]]:
        raise ValueError(f"contracting {e} would merge parallel edges")

    big = cut_configuration(g)
    r = g.edges.index(e)
    selected = tuple(j for j in range(big.cols) if big.entries[r][j] == 0)

    h = contract_edge(g, e)
    u0, v0 = e

    def relabel(w: int) -> int:
        if w == v0:
            w = u0
        return w if w < v0 else w - 1

    # row of each surviving g-edge, placed at its image's position in h
    image_row = {}
    for i, f in enumerate(g.edges):
        if f == e:
            continue
        a, b = relabel(f[0]), relabel(f[1])
        image_row[(min(a, b), max(a, b))] = i
    row_order = [image_row[f] for f in h.edges] + [g.edge_count]

    entries = tuple(
        tuple(big.entries[i][j] for j in selected) for i in row_order
    )
    grading = (Fraction(0),) * h.edge_count + (Fraction(1),)
    sub = Configuration(entries, grading)
    if same_up_to_column_permutation(sub, cut_configuration(h)) is None:
        raise AssertionError("contraction subring does not match the contracted graph")
    return sub, selected


# ---------------------------------------------------------------------------
# Fiber enumeration
# ---------------------------------------------------------------------------


def fiber_monomials(
    config: Configuration, target: Sequence[int], degree: int
) -> tuple[Monomial, ...]:
    """All exponent vectors u >= 0 of the given degree with A.u == target.

    Depth-first over columns in configuration order with nonnegative
    remainder pruning; the result is sorted for determinism.
    """
    target = tuple(target)
    if len(target) != config.rows:
        raise ValueError("target dimension mismatch")
    want = sum(c * b for c, b in zip(config.grading, target))
    if want != degree:
        raise ValueError("target degree disagrees with the grading")
    d, n = config.rows, config.cols
    cols = config.columns()
    supports = [tuple(i for i in range(d) if col[i]) for col in cols]
    # rows still reachable from column j onward
    suffix_cover = [0] * (n + 1)
    for j in range(n - 1, -1, -1):
        mask = suffix_cover[j + 1]
        for i in supports[j]:
            mask |= 1 << i
        suffix_cover[j] = mask

    out: list[Monomial] = []
    exps = [0] * n
    remaining = list(target)

    def rec(j: int, budget: int):
        if budget == 0:
            if all(v == 0 for v in remaining):
                out.append(tuple(exps))
            return
        if j == n:
            return
        live = 0
        for i in range(d):
            if remaining[i] > 0:
                live |= 1 << i
        if live & ~suffix_cover[j]:
            return
        col = cols[j]
        emax = budget
        for i in supports[j]:
            q = remaining[i] // col[i]
            if q < emax:
                emax = q
        for e in range(emax, -1, -1):
            if e:
                for i in supports[j]:
                    remaining[i] -= e * col[i]
            exps[j] = e
            rec(j + 1, budget - e)
            exps[j] = 0
            if e:
                for i in supports[j]:
                    remaining[i] += e * col[i]

    rec(0, degree)
    return tuple(sorted(out))


# ---------------------------------------------------------------------------
# Text format
# ---------------------------------------------------------------------------


def format_configuration(config: Configuration) -> str:
    lines = [f"{config.rows} {config.cols}"]
    for row in config.entries:
        lines.append(" ".join(str(v) for v in row))
    return "\n".join(lines) + "\n"


def infer_grading(entries: Sequence[Sequence[int]]) -> tuple[Fraction, ...]:
    """Solve c . a_j = 1 for all columns by exact elimination; free vars -> 0."""
    d = len(entries)
    n = len(entries[0])
    # one equation per column over unknowns c_1..c_d
    system = [
        [Fraction(entries[i][j]) for i in range(d)] + [Fraction(1)] for j in range(n)
    ]
    pivots: list[int] = []
    r = 0
    for c in range(d):
        pivot = next((i for i in range(r, n) if system[i][c] != 0), None)
        if pivot is None:
            continue
        system[r], system[pivot] = system[pivot], system[r]
        pv = system[r][c]
        system[r] = [x / pv for x in system[r]]
        for i in range(n):
            if i != r and system[i][c] != 0:
                f = system[i][c]
                system[i] = [x - f * y for x, y in zip(system[i], system[r])]
        pivots.append(c)
        r += 1
        if r == n:
            break
    for i in range(r, n):
        if system[i][d] != 0:
            raise ValueError("matrix admits no grading covector")
    grading = [Fraction(0)] * d
    for i, c in enumerate(pivots):
        grading[c] = system[i][d]
    for j in range(n):
        if sum(grading[i] * entries[i][j] for i in range(d)) != 1:
            raise ValueError("matrix admits no grading covector")
    return tuple(grading)


def parse_configuration(text: str, grading: Sequence | None = None) -> Configuration:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    d, n = (int(t) for t in lines[0].split())
    if len(lines) != d + 1:
        raise ValueError("row count mismatch")
    entries = tuple(tuple(int(t) for t in ln.split()) for ln in lines[1 : d + 1])
    if any(len(r) != n for r in entries):
        raise ValueError("column count mismatch")
    if grading is None:
        grading = infer_grading(entries)
    return Configuration(entries, _as_fractions(grading))
