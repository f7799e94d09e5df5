"""Ground-truth oracle: explicit Koszul differentials and their exact ranks.

The complex in play is

    ... -> Λ^{p+1} Sym²V* ⊗ Sym^{a+2q-2}V* -> Λ^p Sym²V* ⊗ Sym^{a+2q}V* -> ...

with d removing one wedge factor and multiplying it into the symmetric part;
cohomology at (p, q) is the syzygy space R_{p,p+q}.  Every differential is a
±1 sparse matrix that preserves the torus weight, so ranks are computed block
by block over dominant weights only (permuting coordinates is a sign-twisted
isomorphism of blocks) and multiplied by orbit sizes.

Default field policy: rank mod 2147483647 cross-checked mod 1000000007; on the
(never yet observed) event of disagreement the block is rerun with exact
fraction-free elimination, which is authoritative.
"""

from __future__ import annotations

import sys
import threading
import time
from dataclasses import dataclass
from functools import cache
from itertools import combinations, combinations_with_replacement
from math import comb

import numpy as np

from . import exactla
from .betti import syzygy_component
from .characters import (
    Character,
    SchurDecomposition,
    decompose_character,
    orbit_size,
    sym_dimension,
)
from .exactla import CapExceeded, DEFAULT_PRIMES, SparseIntMatrix
from .partitions import enumerate_partitions

DEFAULT_MATRIX_CAP = 250_000

_rank_cache: dict = {}
_rank_lock = threading.Lock()


@cache
def quadratic_basis(n: int) -> tuple[tuple[int, int], ...]:
    """Index pairs (i, j), i <= j, naming the coordinates x_i x_j, lex order."""
    if n < 1:
        raise ValueError("n must be at least 1")
    return tuple((i, j) for i in range(n) for j in range(i, n))


@cache
def _pair_exponents(n: int) -> tuple[tuple[int, ...], ...]:
    out = []
    for i, j in quadratic_basis(n):
        e = [0] * n
        e[i] += 1
        e[j] += 1
        out.append(tuple(e))
    return tuple(out)


@cache
def monomial_basis(n: int, d: int) -> tuple[tuple[int, ...], ...]:
    """Exponent tuples of the degree-d monomials in n variables, fixed order."""
    if d < 0:
        return ()
    out = []
    for combo in combinations_with_replacement(range(n), d):
        e = [0] * n
        for i in combo:
            e[i] += 1
        out.append(tuple(e))
    return tuple(out)


def _wedge_weight(n: int, subset: tuple[int, ...]) -> tuple[int, ...]:
    exps = _pair_exponents(n)
    w = [0] * n
    for g in subset:
        for i, x in enumerate(exps[g]):
            w[i] += x
    return tuple(w)


@dataclass(frozen=True)
class KoszulSlice:
    """One bidegree of the complex: bases plus the sparse differential matrix."""

    n: int
    a: int
    p: int
    q: int
    domain_basis: tuple[tuple[tuple[int, ...], tuple[int, ...]], ...]
    codomain_basis: tuple[tuple[tuple[int, ...], tuple[int, ...]], ...]
    matrix: SparseIntMatrix

    def domain_weights(self) -> list[tuple[int, ...]]:
        return [tuple(a + b for a, b in zip(_wedge_weight(self.n, s), m))
                for s, m in self.domain_basis]

    def codomain_weights(self) -> list[tuple[int, ...]]:
        return [tuple(a + b for a, b in zip(_wedge_weight(self.n, s), m))
                for s, m in self.codomain_basis]


def koszul_dim(n: int, a: int, p: int, q: int) -> int:
    """dim Λ^p Sym²V* ⊗ Sym^{a+2q}V*; zero outside the complex."""
    if p < 0 or q < 0:
        return 0
    return comb(n * (n + 1) // 2, p) * sym_dimension(a + 2 * q, n)


def differential(n: int, a: int, p: int, q: int,
                 matrix_cap: int = DEFAULT_MATRIX_CAP) -> KoszulSlice:
    """The slice d_{p,q}: Λ^p ⊗ Sym^{a+2q} -> Λ^{p-1} ⊗ Sym^{a+2q+2}.

    Sign convention: with the wedge subset kept sorted, removing its t-th
    generator (1-indexed) carries (-1)^{t-1}.
    """
    if n < 1 or a < 0 or p < 1 or q < 0:
        raise ValueError("need n >= 1, a >= 0, p >= 1, q >= 0")
    num_gens = n * (n + 1) // 2
    dom_size = koszul_dim(n, a, p, q)
    cod_size = koszul_dim(n, a, p - 1, q + 1)
    biggest = max(dom_size, cod_size)
    if biggest > matrix_cap:
        raise CapExceeded(
            f"slice ({n},{a},{p},{q}) needs bases of size {dom_size} and "
            f"{cod_size}; raise the matrix cap to at least {biggest}",
            required=biggest,
        )
    exps = _pair_exponents(n)
    monos = monomial_basis(n, a + 2 * q)
    domain = tuple((s, m) for s in combinations(range(num_gens), p) for m in monos)
    codomain = tuple((s, m) for s in combinations(range(num_gens), p - 1)
                     for m in monomial_basis(n, a + 2 * q + 2))
    row_index = {key: i for i, key in enumerate(codomain)}
    entries = []
    for col, (s, m) in enumerate(domain):
        for t, g in enumerate(s):
            target = (s[:t] + s[t + 1:],
                      tuple(a_ + b_ for a_, b_ in zip(m, exps[g])))
            entries.append((row_index[target], col, 1 if t % 2 == 0 else -1))
    return KoszulSlice(
        n=n, a=a, p=p, q=q,
        domain_basis=domain, codomain_basis=codomain,
        matrix=SparseIntMatrix(len(codomain), len(domain), tuple(entries)),
    )


def dump_slice(s: KoszulSlice) -> str:
    """Textual triplet dump: header 'koszul n a p q rows cols', then entries."""
    header = f"koszul {s.n} {s.a} {s.p} {s.q} {s.matrix.rows} {s.matrix.cols}\n"
    return header + exactla.matrix_to_triplets(s.matrix)


def load_slice_matrix(text: str) -> SparseIntMatrix:
    """Rebuild the differential matrix of a dump (for external cross-checks)."""
    header, _, body = text.partition("\n")
    fields = header.split()
    if len(fields) != 7 or fields[0] != "koszul":
        raise ValueError(f"not a slice dump header: {header!r}")
    rows, cols = int(fields[5]), int(fields[6])
    return exactla.matrix_from_triplets(rows, cols, body)


@cache
def _subsets_with_weights(n: int, p: int):
    """All p-subsets of the quadratic basis with their torus weights."""
    num_gens = n * (n + 1) // 2
    if p < 0 or p > num_gens:
        return ()
    return tuple((s, _wedge_weight(n, s)) for s in combinations(range(num_gens), p))


def _block_matrix(n: int, a: int, p: int, q: int, mu: tuple[int, ...]) -> np.ndarray:
    """Dense block of d_{p,q} restricted to torus weight mu.

    Columns are pairs (S, mu - wt(S)) with |S| = p; rows the same with p-1.
    The symmetric-part monomial is determined by the weight, so the block is
    at most comb(N, p) columns wide.
    """
    exps = _pair_exponents(n)
    cols = []
    for s, w in _subsets_with_weights(n, p):
        if all(x <= y for x, y in zip(w, mu)):
            cols.append((s, tuple(y - x for x, y in zip(w, mu))))
    rows = {}
    for s, w in _subsets_with_weights(n, p - 1):
        if all(x <= y for x, y in zip(w, mu)):
            rows[(s, tuple(y - x for x, y in zip(w, mu)))] = len(rows)
    block = np.zeros((len(rows), len(cols)), dtype=np.int64)
    for j, (s, m) in enumerate(cols):
        for t, g in enumerate(s):
            key = (s[:t] + s[t + 1:],
                   tuple(a_ + b_ for a_, b_ in zip(m, exps[g])))
            block[rows[key], j] = 1 if t % 2 == 0 else -1
    return block


def _block_cols(n: int, p: int, mu: tuple[int, ...]) -> int:
    return sum(1 for _, w in _subsets_with_weights(n, p)
               if all(x <= y for x, y in zip(w, mu)))


def _field_key(field) -> tuple:
    if field is None:
        return ("policy", DEFAULT_PRIMES)
    if field == "exact":
        return ("exact",)
    return ("prime", int(field))


def _rank_one_block(block: np.ndarray, field, primes, exact_cap: int) -> int:
    if block.size == 0:
        return 0
    if field == "exact":
        return exactla.rank_dense_exact(block, cap=exact_cap)
    if field is not None:
        return exactla.rank_dense_mod_p(block, int(field))
    r1 = exactla.rank_dense_mod_p(block, primes[0])
    r2 = exactla.rank_dense_mod_p(block, primes[1])
    if r1 != r2:
        # modular rank can only undershoot; the exact value settles it
        print(f"warning: rank disagreement mod {primes[0]} ({r1}) vs mod "
              f"{primes[1]} ({r2}) on a {block.shape[0]}x{block.shape[1]} "
              f"block, rerunning exactly", file=sys.stderr)
        return exactla.rank_dense_exact(block, cap=exact_cap)
    return r1


def _slice_block_ranks(n: int, a: int, p: int, q: int, field=None,
                       primes=DEFAULT_PRIMES,
                       matrix_cap: int = DEFAULT_MATRIX_CAP,
                       exact_cap: int = exactla.DEFAULT_EXACT_CAP) -> dict:
    """Per-dominant-weight (columns, rank) of d_{p,q}.

    dominant weight -> (number of columns of the block, its rank).  Non-empty
    only for 1 <= p <= N and q >= 0.
    """
    num_gens = n * (n + 1) // 2
    in_range = 1 <= p <= num_gens and q >= 0
    if in_range:
        # cap is checked before the cache so refusals are deterministic
        dom_size = koszul_dim(n, a, p, q)
        cod_size = koszul_dim(n, a, p - 1, q + 1)
        if max(dom_size, cod_size) > matrix_cap:
            raise CapExceeded(
                f"slice ({n},{a},{p},{q}) needs bases of size {dom_size} and "
                f"{cod_size}; raise the matrix cap to at least "
                f"{max(dom_size, cod_size)}",
                required=max(dom_size, cod_size),
            )
    key = (n, a, p, q, _field_key(field), tuple(primes))
    with _rank_lock:
        if key in _rank_cache:
            return _rank_cache[key]
    out: dict[tuple[int, ...], tuple[int, int]] = {}
    if in_range:
        total = 2 * p + a + 2 * q
        for lam in enumerate_partitions(total, n):
            mu = lam + (0,) * (n - len(lam))
            ncols = _block_cols(n, p, mu)
            if ncols == 0:
                continue
            block = _block_matrix(n, a, p, q, mu)
            out[mu] = (ncols, _rank_one_block(block, field, primes, exact_cap))
    with _rank_lock:
        _rank_cache.setdefault(key, out)
    return out


def rank_of_differential(n: int, a: int, p: int, q: int, field=None,
                         primes=DEFAULT_PRIMES,
                         matrix_cap: int = DEFAULT_MATRIX_CAP) -> int:
    """Rank of d_{p,q}, summed over weight blocks with orbit multiplicities."""
    blocks = _slice_block_ranks(n, a, p, q, field, primes, matrix_cap)
    return sum(orbit_size(mu) * r for mu, (_, r) in blocks.items())


def betti_dimension_oracle(n: int, a: int, p: int, q: int, field=None,
                           primes=DEFAULT_PRIMES,
                           matrix_cap: int = DEFAULT_MATRIX_CAP) -> int:
    """dim R_{p,p+q} = dim K_{p,q} - rank d_{p,q} - rank d_{p+1,q-1}."""
    if n < 1 or a < 0 or p < 0 or q < 0:
        raise ValueError("need n >= 1, a >= 0, p >= 0, q >= 0")
    dim = koszul_dim(n, a, p, q)
    out_rank = rank_of_differential(n, a, p, q, field, primes, matrix_cap)
    in_rank = (rank_of_differential(n, a, p + 1, q - 1, field, primes, matrix_cap)
               if q >= 1 else 0)
    return dim - out_rank - in_rank


def equivariant_betti_oracle(n: int, a: int, p: int, q: int, field=None,
                             primes=DEFAULT_PRIMES,
                             matrix_cap: int = DEFAULT_MATRIX_CAP) -> SchurDecomposition:
    """R_{p,p+q} as a Schur decomposition, assembled from weight-block ranks."""
    if n < 1 or a < 0 or p < 0 or q < 0:
        raise ValueError("need n >= 1, a >= 0, p >= 0, q >= 0")
    out_blocks = _slice_block_ranks(n, a, p, q, field, primes, matrix_cap)
    in_blocks = (_slice_block_ranks(n, a, p + 1, q - 1, field, primes, matrix_cap)
                 if q >= 1 else {})
    total = 2 * p + a + 2 * q
    terms = {}
    for lam in enumerate_partitions(total, n):
        mu = lam + (0,) * (n - len(lam))
        dim_mu = _block_cols(n, p, mu)
        out_rank = out_blocks.get(mu, (0, 0))[1]
        # the in-block's rows live in K_{p,q}; its rank bounds by dim_mu
        in_rank = in_blocks.get(mu, (0, 0))[1]
        mult = dim_mu - out_rank - in_rank
        if mult < 0:
            raise RuntimeError(
                f"negative weight multiplicity {mult} at {mu} for "
                f"({n},{a},{p},{q}): internal inconsistency")
        if mult:
            terms[mu] = mult
    character = Character(n, terms)
    dec = decompose_character(character)
    if dec.dimension() != character.dimension():
        raise RuntimeError("character decomposition lost dimension: "
                           f"({n},{a},{p},{q})")
    return dec


@dataclass(frozen=True)
class CubeComplex:
    """Wedge-by-a-fixed-covector realization of the combinatorial c-cube."""

    c: int
    dims: tuple[int, ...]
    differentials: tuple[SparseIntMatrix, ...]  # d_j : degree j -> degree j+1


def cube_complex(c: int) -> CubeComplex:
    if c < 0:
        raise ValueError("cube dimension must be nonnegative")
    dims = tuple(comb(c, j) for j in range(c + 1))
    diffs = []
    for j in range(c):
        dom = list(combinations(range(c), j))
        cod = {s: i for i, s in enumerate(combinations(range(c), j + 1))}
        entries = []
        for col, s in enumerate(dom):
            for m in range(c):
                if m in s:
                    continue
                bigger = tuple(sorted(s + (m,)))
                sign = (-1) ** sum(1 for x in s if x < m)
                entries.append((cod[bigger], col, sign))
        diffs.append(SparseIntMatrix(len(cod), len(dom), tuple(entries)))
    return CubeComplex(c=c, dims=dims, differentials=tuple(diffs))


def truncated_cube_homology(c: int, k: int) -> dict[int, int]:
    """Cohomology dimensions of the degree->=k truncation, by explicit ranks."""
    if not 0 <= k <= c:
        raise ValueError("need 0 <= k <= c")
    cube = cube_complex(c)
    ranks = {}
    for j in range(k, c):
        ranks[j] = exactla.rank_exact(cube.differentials[j])
    out = {}
    for j in range(k, c + 1):
        h = cube.dims[j] - ranks.get(j, 0) - (ranks.get(j - 1, 0) if j > k else 0)
        if h:
            out[j] = h
    return out


@dataclass(frozen=True)
class PositionResult:
    p: int
    q: int
    closed_dim: int
    oracle_dim: int
    closed_decomposition: SchurDecomposition | None
    oracle_decomposition: SchurDecomposition | None
    match: bool


@dataclass(frozen=True)
class VerifyReport:
    n: int
    a: int
    equivariant: bool
    results: tuple[PositionResult, ...]
    elapsed: float

    @property
    def mismatches(self) -> tuple[PositionResult, ...]:
        return tuple(r for r in self.results if not r.match)

    @property
    def all_match(self) -> bool:
        return not self.mismatches


def _as_range(r) -> list[int]:
    if isinstance(r, int):
        return list(range(r + 1))
    return sorted(set(int(x) for x in r))


def verify_theorem(n: int, a: int, p_range, q_range, equivariant: bool = False,
                   field=None, primes=DEFAULT_PRIMES,
                   matrix_cap: int = DEFAULT_MATRIX_CAP,
                   workers: int = 1) -> VerifyReport:
    """Compare the closed form against the rank oracle over a (p, q) grid.

    Mismatches are data, not errors; the report carries both sides.
    """
    positions = [(p, q) for p in _as_range(p_range) for q in _as_range(q_range)]
    start = time.perf_counter()

    def check(pos):
        p, q = pos
        closed = syzygy_component(n, a, p, q)
        if equivariant:
            oracle = equivariant_betti_oracle(n, a, p, q, field, primes, matrix_cap)
            ok = closed.terms == oracle.terms
            return PositionResult(p, q, closed.dimension(), oracle.dimension(),
                                  closed, oracle, ok)
        dim = betti_dimension_oracle(n, a, p, q, field, primes, matrix_cap)
        cdim = closed.dimension()
        return PositionResult(p, q, cdim, dim, None, None, cdim == dim)

    if workers > 1:
        from concurrent.futures import ThreadPoolExecutor
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = tuple(pool.map(check, positions))
    else:
        results = tuple(check(pos) for pos in positions)
    return VerifyReport(n=n, a=a, equivariant=equivariant, results=results,
                        elapsed=time.perf_counter() - start)
