"""Exact sparse integer linear algebra: rank over F_p and over Q, weight splitting.

Only rank is needed by the engine.  Matrices are immutable triplet lists; small
or dense-ish inputs go through the dense mod-p kernel, large ones through a
fill-aware sparse elimination.  Every rank computation bumps a module counter
so caching layers can prove they did no linear algebra.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass

import numpy as np

from . import _rank_kernels

DEFAULT_PRIMES = (2147483647, 1000000007)
DEFAULT_EXACT_CAP = 2000
DENSE_CUTOFF = 4096

_counter_lock = threading.Lock()
_rank_calls = 0


class CapExceeded(RuntimeError):
    """A computation was refused because it exceeds a configured size cap."""

    def __init__(self, message: str, required: int):
        super().__init__(message)
        self.required = required


def _count_rank_call():
    global _rank_calls
    with _counter_lock:
        _rank_calls += 1


def rank_calls() -> int:
    """Number of rank computations performed by this process so far."""
    return _rank_calls


def reset_rank_calls() -> None:
    global _rank_calls
    with _counter_lock:
        _rank_calls = 0


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin for 64-bit integers."""
    if n < 2:
        return False
    for q in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class SparseIntMatrix:
    rows: int
    cols: int
    entries: tuple[tuple[int, int, int], ...]

    def __post_init__(self):
        seen = set()
        for r, c, v in self.entries:
            if not (0 <= r < self.rows and 0 <= c < self.cols):
                raise ValueError(f"entry ({r},{c}) out of range {self.rows}x{self.cols}")
            if v == 0:
                raise ValueError(f"explicit zero entry at ({r},{c})")
            if (r, c) in seen:
                raise ValueError(f"duplicate entry at ({r},{c})")
            seen.add((r, c))
        object.__setattr__(self, "entries", tuple(sorted(self.entries)))

    def to_dense(self) -> np.ndarray:
        a = np.zeros((self.rows, self.cols), dtype=np.int64)
        for r, c, v in self.entries:
            a[r, c] = v
        return a

    def nnz(self) -> int:
        return len(self.entries)


@dataclass(frozen=True)
class WeightBlock:
    weight: tuple[int, ...]
    row_indices: tuple[int, ...]
    col_indices: tuple[int, ...]
    matrix: SparseIntMatrix


def rank_dense_mod_p(a: np.ndarray, p: int) -> int:
    """Rank over F_p of a dense int matrix (kernel selected by VSYZ_BACKEND)."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    _count_rank_call()
    return _rank_kernels.rank_dense_mod_p(a, p)


def _rank_sparse_mod_p(m: SparseIntMatrix, p: int) -> int:
    """Sparse elimination over F_p with pivot columns chosen by fill estimate."""
    cols: dict[int, dict[int, int]] = {}
    row_sets: dict[int, set[int]] = {}
    for r, c, v in m.entries:
        cols.setdefault(c, {})[r] = v % p
        row_sets.setdefault(r, set()).add(c)
    rank = 0
    eliminated_rows: set[int] = set()
    while cols:
        # cheapest column first keeps fill-in down on these near-disjoint bases
        c = min(cols, key=lambda cc: (len(cols[cc]), cc))
        col = cols.pop(c)
        live = {r: v for r, v in col.items() if v and r not in eliminated_rows}
        if not live:
            continue
        piv_row = min(live, key=lambda rr: (len(row_sets[rr]), rr))
        piv_val = live[piv_row]
        inv = pow(piv_val, -1, p)
        piv_cols = {cc: (cols[cc][piv_row] * inv) % p
                    for cc in row_sets[piv_row] if cc in cols and piv_row in cols[cc]}
        for r, v in live.items():
            if r == piv_row:
                continue
            f = v
            for cc, pv in piv_cols.items():
                tgt = cols[cc]
                nv = (tgt.get(r, 0) - f * pv) % p
                if nv:
                    tgt[r] = nv
                    row_sets[r].add(cc)
                else:
                    tgt.pop(r, None)
                    row_sets[r].discard(cc)
        eliminated_rows.add(piv_row)
        rank += 1
    return rank


def rank_mod_p(m: SparseIntMatrix, p: int, dense_cutoff: int = DENSE_CUTOFF) -> int:
    """Rank of m over the field with p elements."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if m.rows == 0 or m.cols == 0 or not m.entries:
        _count_rank_call()
        return 0
    if max(m.rows, m.cols) <= dense_cutoff:
        return rank_dense_mod_p(m.to_dense(), p)
    _count_rank_call()
    return _rank_sparse_mod_p(m, p)


def rank_exact_dense(rows_list) -> int:
    """Fraction-free (Bareiss) rank over Q with arbitrary-precision intermediates."""
    mat = [[int(v) for v in row] for row in rows_list]
    m = len(mat)
    n = len(mat[0]) if m else 0
    rank = 0
    prev = 1
    for c in range(n):
        if rank == m:
            break
        piv = None
        for i in range(rank, m):
            if mat[i][c] != 0:
                piv = i
                break
        if piv is None:
            continue
        if piv != rank:
            mat[rank], mat[piv] = mat[piv], mat[rank]
        pv = mat[rank][c]
        for i in range(rank + 1, m):
            f = mat[i][c]
            row_i = mat[i]
            row_p = mat[rank]
            for j in range(c + 1, n):
                num = pv * row_i[j] - f * row_p[j]
                q, rem = divmod(num, prev)
                if rem:
                    raise ArithmeticError("fraction-free elimination lost exactness")
                row_i[j] = q
            row_i[c] = 0
        prev = pv
        rank += 1
    return rank


def rank_dense_exact(a: np.ndarray, cap: int = DEFAULT_EXACT_CAP) -> int:
    """Fraction-free rank of a dense integer matrix, counted and capped."""
    if a.size == 0:
        _count_rank_call()
        return 0
    if max(a.shape) > cap:
        raise CapExceeded(
            f"exact rank refused for {a.shape[0]}x{a.shape[1]} matrix (cap {cap}); "
            f"raise the exact cap to at least {max(a.shape)}",
            required=max(a.shape),
        )
    _count_rank_call()
    return rank_exact_dense(a.tolist())


def rank_exact(m: SparseIntMatrix, cap: int = DEFAULT_EXACT_CAP) -> int:
    """Rank over the rationals; refuses matrices beyond the exact-size cap."""
    if max(m.rows, m.cols) > cap:
        raise CapExceeded(
            f"exact rank refused for {m.rows}x{m.cols} matrix (cap {cap}); "
            f"raise the exact cap to at least {max(m.rows, m.cols)}",
            required=max(m.rows, m.cols),
        )
    _count_rank_call()
    if m.rows == 0 or m.cols == 0:
        return 0
    return rank_exact_dense(m.to_dense().tolist())


def matrix_to_triplets(m: SparseIntMatrix) -> str:
    """Serialize as 'row col value' lines (the slice-dump body format)."""
    return "".join(f"{r} {c} {v}\n" for r, c, v in m.entries)


def matrix_from_triplets(rows: int, cols: int, text: str) -> SparseIntMatrix:
    entries = []
    for line in text.splitlines():
        line = line.strip()
        if not line:
            continue
        r, c, v = line.split()
        entries.append((int(r), int(c), int(v)))
    return SparseIntMatrix(rows, cols, tuple(entries))


def split_by_weight(koszul_slice) -> list[WeightBlock]:
    """Partition a Koszul slice's rows and columns by torus weight.

    Blocks come back in sorted weight order; their ranks sum to the rank of the
    whole differential because no entry connects distinct weights.
    """
    dom_w = koszul_slice.domain_weights()
    cod_w = koszul_slice.codomain_weights()
    by_weight: dict[tuple[int, ...], tuple[list[int], list[int]]] = {}
    for j, w in enumerate(dom_w):
        by_weight.setdefault(w, ([], []))[1].append(j)
    for i, w in enumerate(cod_w):
        by_weight.setdefault(w, ([], []))[0].append(i)
    entry_map: dict[tuple[int, ...], list[tuple[int, int, int]]] = {}
    for r, c, v in koszul_slice.matrix.entries:
        w = cod_w[r]
        if dom_w[c] != w:
            raise AssertionError("differential does not preserve torus weight")
        entry_map.setdefault(w, []).append((r, c, v))
    blocks = []
    for w in sorted(by_weight):
        rows, colists = by_weight[w]
        row_pos = {r: i for i, r in enumerate(rows)}
        col_pos = {c: j for j, c in enumerate(colists)}
        ents = tuple((row_pos[r], col_pos[c], v) for r, c, v in entry_map.get(w, ()))
        blocks.append(WeightBlock(
            weight=w,
            row_indices=tuple(rows),
            col_indices=tuple(colists),
            matrix=SparseIntMatrix(len(rows), len(colists), ents),
        ))
    return blocks


def active_backend() -> str:
    return _rank_kernels.active_backend()
