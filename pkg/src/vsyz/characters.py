"""GL(n) character calculus.

Schur dimensions, Kostka numbers, Pieri and Littlewood-Richardson products,
Adams operations and exterior powers of characters, the closed-form
decomposition of Λ^w Sym²V*, and shaded diagrams.

A Character stores one canonical (sorted, length-n) representative per weight
orbit; full orbit expansion is on demand and only used where the orbit count is
small.  Multiplicities are Python ints, so nothing overflows silently.
Negative multiplicities are tolerated inside Character arithmetic (the Newton
recurrence needs virtual intermediates); decompose_character is the gate that
insists on a genuine non-virtual character.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cache
from itertools import permutations
from math import comb, factorial, prod

from .partitions import (
    Partition,
    check_partition,
    conjugate,
    enumerate_partitions,
    from_hooks,
    height,
    weight,
)

Weight = tuple[int, ...]


def dominant(w) -> Weight:
    return tuple(sorted(w, reverse=True))


def orbit_size(w: Weight) -> int:
    """Number of distinct permutations of the weight."""
    counts: dict[int, int] = {}
    for x in w:
        counts[x] = counts.get(x, 0) + 1
    return factorial(len(w)) // prod(factorial(c) for c in counts.values())


def schur_dimension(p: Partition, n: int) -> int:
    """dim of the Schur functor of shape p applied to k^n (hook content formula)."""
    if n < 0:
        raise ValueError("rank must be nonnegative")
    if height(p) > n:
        return 0
    num = 1
    den = 1
    pc = conjugate(p)
    for i, row in enumerate(p):
        for j in range(row):
            num *= n + j - i
            den *= (row - j) + (pc[j] - i) - 1
    q, rem = divmod(num, den)
    if rem:
        raise ArithmeticError(f"hook content formula not integral for {p}, n={n}")
    return q


def sym_dimension(d: int, n: int) -> int:
    """dim Sym^d(k^n)."""
    return comb(d + n - 1, n - 1) if d >= 0 else 0


class Character:
    """Finite multiset of GL(n) weights, stored by dominant representative."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: dict[Weight, int] | None = None):
        self.n = n
        clean: dict[Weight, int] = {}
        for w, m in (terms or {}).items():
            if len(w) != n:
                raise ValueError(f"weight {w} does not have {n} coordinates")
            if any(x < 0 for x in w):
                raise ValueError(f"weight {w} has a negative coordinate")
            if tuple(w) != dominant(w):
                raise ValueError(f"weight {w} is not stored in dominant form")
            if m:
                clean[tuple(w)] = clean.get(tuple(w), 0) + m
        self.terms = {w: m for w, m in clean.items() if m}

    @classmethod
    def unit(cls, n: int) -> "Character":
        return cls(n, {(0,) * n: 1})

    @classmethod
    def zero(cls, n: int) -> "Character":
        return cls(n, {})

    def dimension(self) -> int:
        return sum(m * orbit_size(w) for w, m in self.terms.items())

    def value_at(self, w) -> int:
        """Multiplicity of an arbitrary weight (any coordinate order)."""
        return self.terms.get(dominant(w), 0)

    def expand(self) -> dict[Weight, int]:
        """Full orbit expansion: every composition with its multiplicity."""
        out: dict[Weight, int] = {}
        for w, m in self.terms.items():
            for perm in set(permutations(w)):
                out[perm] = m
        return out

    def __eq__(self, other) -> bool:
        return (isinstance(other, Character)
                and self.n == other.n and self.terms == other.terms)

    def __add__(self, other: "Character") -> "Character":
        return self._combine(other, 1)

    def __sub__(self, other: "Character") -> "Character":
        return self._combine(other, -1)

    def _combine(self, other: "Character", sign: int) -> "Character":
        if self.n != other.n:
            raise ValueError("rank mismatch")
        terms = dict(self.terms)
        for w, m in other.terms.items():
            terms[w] = terms.get(w, 0) + sign * m
        return Character(self.n, terms)

    def __mul__(self, other: "Character") -> "Character":
        if self.n != other.n:
            raise ValueError("rank mismatch")
        if not self.terms or not other.terms:
            return Character.zero(self.n)
        a, b = self, other
        if a.dimension_abs() > b.dimension_abs():
            a, b = b, a
        full_a = a.expand()
        candidates = set()
        for alpha in full_a:
            for beta in b.terms:
                candidates.add(dominant(x + y for x, y in zip(alpha, beta)))
        out: dict[Weight, int] = {}
        for gamma in candidates:
            s = 0
            for alpha, ma in full_a.items():
                rest = tuple(g - x for g, x in zip(gamma, alpha))
                if min(rest, default=0) < 0:
                    continue
                mb = b.terms.get(dominant(rest), 0)
                if mb:
                    s += ma * mb
            if s:
                out[gamma] = s
        return Character(self.n, out)

    def dimension_abs(self) -> int:
        return sum(abs(m) * orbit_size(w) for w, m in self.terms.items())

    def __repr__(self) -> str:
        inner = ", ".join(f"{w}:{m}" for w, m in sorted(self.terms.items()))
        return f"Character(n={self.n}, {{{inner}}})"


@dataclass(frozen=True)
class SchurDecomposition:
    """Multiplicity map partition -> count inside a GL(n) representation."""

    n: int
    terms: tuple[tuple[Partition, int], ...]

    @classmethod
    def from_dict(cls, n: int, d: dict[Partition, int]) -> "SchurDecomposition":
        for lam, m in d.items():
            if height(lam) > n:
                raise ValueError(f"shape {lam} has more than {n} rows")
            if m < 1:
                raise ValueError(f"multiplicity of {lam} must be positive, got {m}")
        return cls(n, tuple(sorted(d.items())))

    def as_dict(self) -> dict[Partition, int]:
        return dict(self.terms)

    def multiplicity(self, lam: Partition) -> int:
        return dict(self.terms).get(tuple(lam), 0)

    def dimension(self) -> int:
        return sum(m * schur_dimension(lam, self.n) for lam, m in self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __iter__(self):
        return iter(self.terms)


def multiplicity_free(d: SchurDecomposition) -> bool:
    return all(m == 1 for _, m in d.terms)


def pieri_row(lam: Partition, a: int, n: int) -> SchurDecomposition:
    """All shapes obtained from lam by adding a horizontal strip of a boxes."""
    if a < 0:
        raise ValueError("strip size must be nonnegative")
    lam = check_partition(lam)
    h = height(lam)
    shapes = []

    def gen(i, rem, acc):
        if i == min(h + 1, n):
            if rem == 0:
                shapes.append(tuple(r for r in acc if r))
            return
        base = lam[i] if i < h else 0
        # horizontal strip: the new row may not reach past the old row above
        upper = lam[i - 1] if i else base + rem
        for new in range(min(upper, base + rem), base - 1, -1):
            gen(i + 1, rem - (new - base), acc + [new])

    if n == 0:
        return SchurDecomposition.from_dict(0, {(): 1} if a == 0 and not lam else {})
    gen(0, a, [])
    return SchurDecomposition.from_dict(n, {s: 1 for s in shapes})


def ext_sym2_decomposition(w: int, n: int) -> SchurDecomposition:
    """Decomposition of Λ^w Sym²(k^n).

    The summands are the diagrams all of whose main hooks have width equal to
    height plus one, with the heights summing to w; each occurs once.
    """
    if w < 0:
        raise ValueError("exterior degree must be nonnegative")
    out = {}

    def gen(rem, bmax, acc):
        if rem == 0:
            out[from_hooks(tuple((b + 1, b) for b in acc))] = 1
            return
        for b in range(min(bmax, rem), 0, -1):
            gen(rem - b, b - 1, acc + [b])

    gen(w, n, [])
    return SchurDecomposition.from_dict(n, out)


@dataclass(frozen=True)
class ShadedDiagram:
    """A shape with marked boxes; (row, col) coordinates are 0-indexed."""

    shape: Partition
    shaded: frozenset[tuple[int, int]]

    def __post_init__(self):
        cols = [c for _, c in self.shaded]
        if len(cols) != len(set(cols)):
            raise ValueError("two shaded boxes share a column")
        for r, c in self.shaded:
            if r >= len(self.shape) or c >= self.shape[r]:
                raise ValueError(f"shaded box ({r},{c}) outside shape {self.shape}")

    def unshaded_shape(self) -> Partition:
        rows = []
        for i, r in enumerate(self.shape):
            rows.append(r - sum(1 for (ri, _) in self.shaded if ri == i))
        return tuple(r for r in rows if r)


def enumerate_shaded(w: int, a: int, n: int) -> list[ShadedDiagram]:
    """Shaded diagrams with 2w unshaded boxes in (m|m-1)-hooks and a shaded boxes.

    At most one shaded box per column; total shape has at most n rows.  The
    multiset of shapes realizes the summands of Λ^w Sym² ⊗ Sym^a.
    """
    if w < 0 or a < 0:
        raise ValueError("arguments must be nonnegative")
    out = []
    for theta0, _ in ext_sym2_decomposition(w, n).terms:
        for shape, _ in pieri_row(theta0, a, n).terms:
            boxes = []
            t0 = theta0 + (0,) * (len(shape) - len(theta0))
            for i, r in enumerate(shape):
                boxes.extend((i, j) for j in range(t0[i], r))
            out.append(ShadedDiagram(shape=shape, shaded=frozenset(boxes)))
    return sorted(out, key=lambda sd: (sd.shape, sorted(sd.shaded)))


def _dominates(lam: Partition, mu) -> bool:
    """Dominance order test; assumes equal weights."""
    s_l = 0
    s_m = 0
    for i in range(max(len(lam), len(mu))):
        s_l += lam[i] if i < len(lam) else 0
        s_m += mu[i] if i < len(mu) else 0
        if s_l < s_m:
            return False
    return True


def _sub_horizontal_strips(lam: Partition, size: int):
    """All nu with lam/nu a horizontal strip of the given size."""
    h = len(lam)

    def gen(i, rem, acc):
        if i == h:
            if rem == 0:
                yield tuple(r for r in acc if r)
            return
        lo = lam[i + 1] if i + 1 < h else 0
        hi = min(lam[i], (acc[i - 1] if i else lam[i]))
        for v in range(hi, lo - 1, -1):
            removed = lam[i] - v
            if removed <= rem:
                yield from gen(i + 1, rem - removed, acc + [v])

    yield from gen(0, size, [])


@cache
def _kostka(lam: Partition, mu: Partition) -> int:
    if not mu:
        return 1 if not lam else 0
    if not _dominates(lam, mu):
        return 0
    return sum(_kostka(nu, mu[:-1]) for nu in _sub_horizontal_strips(lam, mu[-1]))


def kostka(lam: Partition, mu) -> int:
    """Number of semistandard tableaux of shape lam and content mu."""
    lam = check_partition(lam)
    content = tuple(int(x) for x in mu)
    if any(x < 0 for x in content):
        raise ValueError("content entries must be nonnegative")
    if weight(lam) != sum(content):
        raise ValueError(f"weight mismatch: |{lam}| != |{content}|")
    return _kostka(lam, tuple(sorted((x for x in content if x), reverse=True)))


def schur_character(lam: Partition, n: int) -> Character:
    """Weight-multiplicity character of the Schur functor: mu -> K_{lam,mu}."""
    lam = check_partition(lam)
    if height(lam) > n:
        return Character.zero(n)
    terms = {}
    for nu in enumerate_partitions(weight(lam), n):
        k = _kostka(lam, nu)
        if k:
            terms[nu + (0,) * (n - len(nu))] = k
    return Character(n, terms)


def sym_power_character(d: int, n: int) -> Character:
    return schur_character((d,) if d else (), n)


def decompose_character(chi: Character) -> SchurDecomposition:
    """Invert the unitriangular Kostka system by greedy elimination.

    Weights are consumed in (total degree, lexicographic) descending order,
    which refines dominance, so the leading term always names a Schur summand.
    A negative residual multiplicity means the input was not a non-virtual
    character.
    """
    work = dict(chi.terms)
    out: dict[Partition, int] = {}
    while True:
        live = [w for w, m in work.items() if m]
        if not live:
            break
        key = max(live, key=lambda w: (sum(w), w))
        m = work[key]
        if m < 0:
            raise ValueError(f"not a non-virtual character: weight {key} has "
                             f"residual multiplicity {m}")
        lam = tuple(x for x in key if x)
        out[lam] = m
        for nu, k in schur_character(lam, chi.n).terms.items():
            work[nu] = work.get(nu, 0) - m * k
    return SchurDecomposition.from_dict(chi.n, out)


def tensor_decompose(lam: Partition, mu: Partition, n: int) -> SchurDecomposition:
    """Littlewood-Richardson decomposition of Schur(lam) ⊗ Schur(mu), rows <= n.

    Counts strip chains: entry t of mu is added as a horizontal strip subject
    to the lattice bound #(t in rows <= i) <= #(t-1 in rows <= i-1).
    """
    lam = check_partition(lam)
    mu = check_partition(mu)
    if height(lam) > n or height(mu) > n:
        raise ValueError("heights must be at most n")
    counts: dict[Partition, int] = {}

    def add_strip(shape, prev_rows, t):
        """Yield (new_shape, rows_of_t) for all legal placements of entry t."""
        size = mu[t - 1]
        h = len(shape)

        def gen(i, rem, acc_shape, acc_rows, cum_t):
            if i == min(h + 1, n):
                if rem == 0:
                    yield tuple(r for r in acc_shape if r), tuple(acc_rows)
                return
            base = shape[i] if i < h else 0
            hi = base + rem
            if i:
                # horizontal strip against the shape before this entry
                hi = min(hi, shape[i - 1])
            if t > 1:
                # lattice bound against cumulative count of entry t-1
                allowed = sum(prev_rows[: i]) - cum_t if i else 0
                hi = min(hi, base + max(allowed, 0))
            for new in range(hi, base - 1, -1):
                c = new - base
                yield from gen(i + 1, rem - c, acc_shape + [new],
                               acc_rows + [c], cum_t + c)

        yield from gen(0, size, [], [], 0)

    def walk(shape, prev_rows, t):
        if t > len(mu):
            counts[shape] = counts.get(shape, 0) + 1
            return
        for new_shape, rows in add_strip(shape, prev_rows, t):
            walk(new_shape, rows, t + 1)

    walk(lam, (), 1)
    return SchurDecomposition.from_dict(n, counts)


def adams(chi: Character, r: int) -> Character:
    """Power operation: each weight w contributes at r*w with the same multiplicity."""
    if r < 1:
        raise ValueError("Adams degree must be at least 1")
    return Character(chi.n, {tuple(r * x for x in w): m for w, m in chi.terms.items()})


def exterior_powers(chi: Character, kmax: int) -> list[Character]:
    """Characters of Λ^0 .. Λ^kmax via the Newton recurrence.

    k·Λ^k = Σ_{r=1..k} (-1)^{r-1} ψ^r(χ)·Λ^{k-r}; every division by k must be
    exact, anything else is an internal inconsistency and aborts.
    """
    if kmax < 0:
        raise ValueError("exterior degree must be nonnegative")
    lams = [Character.unit(chi.n)]
    psis = {}
    for k in range(1, kmax + 1):
        acc = Character.zero(chi.n)
        for r in range(1, k + 1):
            if r not in psis:
                psis[r] = adams(chi, r)
            term = psis[r] * lams[k - r]
            acc = acc + term if r % 2 == 1 else acc - term
        divided = {}
        for w, m in acc.terms.items():
            q, rem = divmod(m, k)
            if rem:
                raise ArithmeticError(
                    f"Newton recurrence produced non-integral multiplicity at "
                    f"degree {k}, weight {w}")
            if q:
                divided[w] = q
        lams.append(Character(chi.n, divided))
    return lams


def exterior_power_character(chi: Character, k: int) -> Character:
    """Character of the k-th exterior power of chi."""
    return exterior_powers(chi, k)[k]
