"""Closed-form syzygy spaces of the quadratic Veronese embedding.

For the module ⊕_{m>=0} Sym^{2m+a} V* over Sym(Sym²V*), dim V = n, the graded
piece R_{p,p+q} decomposes as follows:

  q > 0:  one copy of each self-conjugate ω with height <= n,
          wt(ω) = 2(p+q) + a and diagonal length 2q + a;
  q = 0:  each shadable ω of weight 2p + a (its hooks then satisfy
          b_i <= a_i <= b_{i-1}+1) contributes with multiplicity
          cube_multiplicity(c, a - minsh), where (minsh, c) is the diagram's
          shading profile: minimal shaded boxes and cube dimension.

Both branches are the cohomology of truncated combinatorial cubes: a symmetric
diagram is the c = 0 cube sitting at q = (l(ω) - a)/2, and everything else
collapses onto q = 0.  The cube data comes from direct enumeration of valid
shadings (partitions.shading_profile), not from the hook inequalities alone:
diagrams such as (3,3) admit fewer shadings than the naive hook test suggests,
and (4,4) admits none.  The koszul module recomputes all of this from explicit
ranks; betti is the fast closed form.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .characters import SchurDecomposition, sym_dimension
from .partitions import (
    Partition,
    enumerate_nested_hooks,
    enumerate_symmetric,
    shading_profile,
)


def cube_multiplicity(c: int, s2: int) -> int:
    """Dimension of the surviving cohomology of an s-truncated c-cube, s = s2/2.

    Zero when s2 is odd or negative.  A 0-cube contributes 1 exactly at s = 0.
    For c >= 1 the full cube (s = 0) is acyclic and the s-truncation for
    1 <= s <= c contributes comb(c-1, s-1).
    """
    if c < 0:
        raise ValueError("cube dimension must be nonnegative")
    if s2 < 0 or s2 % 2:
        return 0
    s = s2 // 2
    if c == 0:
        return 1 if s == 0 else 0
    if 1 <= s <= c:
        return comb(c - 1, s - 1)
    return 0


def syzygy_component(n: int, a: int, p: int, q: int) -> SchurDecomposition:
    """The equivariant syzygy space R_{p,p+q} as a Schur decomposition."""
    if n < 1:
        raise ValueError("n must be at least 1")
    if a < 0:
        raise ValueError("twist a must be nonnegative (negative twists are a "
                         "grading shift of the a = 0 resolution)")
    if p < 0 or q < 0:
        raise ValueError("p and q must be nonnegative")
    terms: dict[Partition, int] = {}
    if q > 0:
        for omega in enumerate_symmetric(2 * (p + q) + a, 2 * q + a, n):
            terms[omega] = 1
    else:
        for omega in enumerate_nested_hooks(2 * p + a, n):
            profile = shading_profile(omega)
            if profile is None:
                continue
            minsh, c = profile
            mult = cube_multiplicity(c, a - minsh)
            if mult:
                terms[omega] = mult
    return SchurDecomposition.from_dict(n, terms)


@dataclass(frozen=True)
class BettiEntry:
    p: int
    degree: int
    decomposition: SchurDecomposition
    dimension: int


@dataclass(frozen=True)
class BettiTable:
    n: int
    a: int
    p_max: int
    entries: tuple[tuple[tuple[int, int], BettiEntry], ...]

    def as_dict(self) -> dict[tuple[int, int], BettiEntry]:
        return dict(self.entries)

    def dims(self) -> dict[tuple[int, int], int]:
        return {pos: e.dimension for pos, e in self.entries}

    def max_nonzero_p(self) -> int:
        return max((pos[0] for pos, _ in self.entries), default=0)

    def column(self, p: int) -> list[BettiEntry]:
        return [e for pos, e in self.entries if pos[0] == p]


def default_p_max(n: int) -> int:
    """Hilbert syzygy bound: resolutions over n(n+1)/2 variables stop there."""
    return n * (n + 1) // 2


def betti_table(n: int, a: int, p_max: int | None = None) -> BettiTable:
    """All nonzero syzygy spaces R_{p,degree} with p <= p_max."""
    if p_max is None:
        p_max = default_p_max(n)
    q_top = max(0, (n - a) // 2)
    entries = []
    for p in range(p_max + 1):
        for q in range(q_top + 1):
            dec = syzygy_component(n, a, p, q)
            if dec.is_zero():
                continue
            entries.append(((p, p + q),
                            BettiEntry(p, p + q, dec, dec.dimension())))
    entries.sort(key=lambda kv: kv[0])
    return BettiTable(n=n, a=a, p_max=p_max, entries=tuple(entries))


@dataclass(frozen=True)
class SheafResolutionReport:
    """A Betti table re-read as a resolution of a sheaf on P(Sym²V)."""

    n: int
    a: int
    ambient_dim: int
    target: str
    terms: tuple[tuple[int, tuple[tuple[int, int], ...]], ...]  # p -> ((degree, dim), ...)

    def render(self) -> str:
        pieces = ["0"]
        for _, summands in self.terms:
            gens = []
            for d, dim in summands:
                twist = f"O(-{d})" if d else "O"
                gens.append(twist if dim == 1 else f"{twist}^{dim}")
            pieces.append("(+)".join(gens))
        pieces.append(self.target)
        pieces.append("0")
        return " -> ".join(pieces)


def sheaf_resolution_report(n: int, a: int) -> SheafResolutionReport:
    table = betti_table(n, a)
    by_p: dict[int, list[tuple[int, int]]] = {}
    for (p, d), e in table.entries:
        by_p.setdefault(p, []).append((d, e.dimension))
    terms = tuple((p, tuple(sorted(by_p[p], reverse=True)))
                  for p in sorted(by_p, reverse=True))
    target = "O_X" if a == 0 else "F"
    return SheafResolutionReport(
        n=n, a=a,
        ambient_dim=default_p_max(n) - 1,
        target=target,
        terms=terms,
    )


def np_index(table: BettiTable) -> int:
    """Largest p for which generation is quadratic and syzygies stay linear.

    Scans columns 1..pd for the first entry off the linear strand (degree !=
    p+1) and reports the step before it.  A fully linear resolution of
    projective dimension >= 2 reports pd - 1 (the terminal corner closes the
    resolution rather than witnessing another linear step); a hypersurface
    reports its single step.  Only defined for the untwisted module.
    """
    if table.a != 0:
        raise ValueError("N_p index is not applicable for a != 0")
    dims = table.dims()
    if dims.get((0, 0)) != 1 or any(p == 0 for (p, d) in dims if d != 0):
        return -1
    pd = table.max_nonzero_p()
    for k in range(1, pd + 1):
        if any(pos[0] == k and pos[1] != k + 1 for pos in dims):
            return k - 1
    return pd if pd <= 1 else pd - 1


def wps_betti(l: int, m: int, p_max: int | None = None) -> BettiTable:
    """Syzygy table of the weighted projective space P(1^l, 2^m).

    Iterated coning leaves the syzygy spaces untouched, so the table is the
    a = 0 quadratic-Veronese table computed with height bound l; m only moves
    the ambient projective space.
    """
    if l < 1 or m < 0:
        raise ValueError("need l >= 1 and m >= 0")
    return betti_table(l, 0, p_max=p_max)


def wps_ambient_dim(l: int, m: int) -> int:
    """Projective dimension of the minimal ambient space of P(1^l, 2^m)."""
    return l * (l + 1) // 2 + m - 1


def hilbert_failures(table: BettiTable, q_max: int) -> list[tuple[int, int, int]]:
    """Degrees where the Euler characteristic of the table misses the module.

    Returns (q, expected, got) triples; empty means the alternating sum over
    the resolution reproduces dim Sym^{a+2q}(k^n) for all 0 <= q <= q_max.
    """
    n_vars = default_p_max(table.n)
    out = []
    for q in range(q_max + 1):
        acc = 0
        for (p, d), e in table.entries:
            if q - d >= 0:
                acc += (-1) ** p * e.dimension * comb(q - d + n_vars - 1, n_vars - 1)
        expected = sym_dimension(table.a + 2 * q, table.n)
        if acc != expected:
            out.append((q, expected, acc))
    return out


def hilbert_check(table: BettiTable, q_max: int) -> bool:
    return not hilbert_failures(table, q_max)
