"""Young diagram core: hooks, the C-set, and diagram enumerations.

Partitions are plain tuples of weakly decreasing positive integers; the empty
tuple is the empty diagram.  Main hooks are measured vertex-inclusively: the
i-th hook of λ has width a_i = λ_i − i + 1 and height b_i = λ'_i − i + 1, so
the diagonal box is counted by both.  Under this convention
(8,8,6,6,4,3) = (8,7,4,3|2,4,5,6).
"""

from __future__ import annotations

from functools import cache
from math import comb

Partition = tuple[int, ...]
Hook = tuple[int, int]
HookList = tuple[Hook, ...]


def check_partition(rows) -> Partition:
    """Validate an iterable of row lengths and return it as a tuple."""
    p = tuple(int(r) for r in rows)
    for i, r in enumerate(p):
        if r < 1:
            raise ValueError(f"row lengths must be positive, got {p}")
        if i and p[i - 1] < r:
            raise ValueError(f"rows must be weakly decreasing, got {p}")
    return p


def weight(p: Partition) -> int:
    return sum(p)


def height(p: Partition) -> int:
    return len(p)


def conjugate(p: Partition) -> Partition:
    """Transpose of the diagram."""
    if not p:
        return ()
    cols = [0] * p[0]
    for r in p:
        for j in range(r):
            cols[j] += 1
    return tuple(cols)


def diagonal_length(p: Partition) -> int:
    """Number of boxes (i, i) on the main diagonal."""
    return sum(1 for i, r in enumerate(p) if r >= i + 1)


def is_symmetric(p: Partition) -> bool:
    return p == conjugate(p)


def frobenius_hooks(p: Partition) -> HookList:
    """Vertex-inclusive main-hook pairs (a_i, b_i), outermost first."""
    q = conjugate(p)
    k = diagonal_length(p)
    return tuple((p[i] - i, q[i] - i) for i in range(k))


def from_hooks(hooks) -> Partition:
    """Rebuild the unique partition whose main-hook decomposition is `hooks`.

    Rejects pair lists that are not strictly nested (a's and b's must both be
    strictly decreasing and positive).
    """
    hooks = tuple((int(a), int(b)) for a, b in hooks)
    k = len(hooks)
    for i, (a, b) in enumerate(hooks):
        if a < 1 or b < 1:
            raise ValueError(f"hook widths/heights must be positive: {hooks}")
        if i and not (hooks[i - 1][0] > a and hooks[i - 1][1] > b):
            raise ValueError(f"hooks must be strictly nested: {hooks}")
    # Rows 1..k come from the arms; rows below the diagonal from column heights.
    rows = [hooks[i][0] + i for i in range(k)]
    col_heights = [hooks[j][1] + j for j in range(k)]
    max_h = col_heights[0] if k else 0
    for i in range(k, max_h):
        rows.append(sum(1 for h in col_heights if h > i))
    p = tuple(rows)
    if frobenius_hooks(p) != hooks:
        raise ValueError(f"pairs {hooks} do not form a main-hook decomposition")
    return p


def hook_asymmetry(p: Partition) -> int:
    """Σ |a_i − b_i − 1| over the main hooks."""
    return sum(abs(a - b - 1) for a, b in frobenius_hooks(p))


def _mhook_rows(arms: tuple[int, ...]) -> tuple[int, ...]:
    """Row lengths of the diagram with hooks (m_i | m_i - 1), arms m_i >= 2."""
    j = len(arms)
    rows = [arms[i] + i for i in range(j)]
    col_heights = [arms[i] - 1 + i for i in range(j)]
    max_h = col_heights[0] if j else 0
    for r in range(j, max_h):
        rows.append(sum(1 for h in col_heights if h > r))
    return tuple(rows)


@cache
def _shading_data(p: Partition):
    """Valid shadings of p, or None when p admits none.

    A shading keeps an unshaded subdiagram all of whose main hooks have width
    equal to height plus one, with the shaded complement a horizontal strip
    (no two shaded boxes in a column).  Subdiagrams are cut out by reducing
    hook i of p to its (m_i | m_i - 1) subhook, 1 <= m_i <= min(a_i, b_i + 1),
    the m_i strictly decreasing (m_i = 1 drops the hook; only the innermost
    can drop).  Returns (minimal shaded count, cube dimension, shadable hook
    indices) and checks that the shading counts really are binomial.
    """
    hooks = frobenius_hooks(p)
    k = len(hooks)
    if k == 0:
        return (0, 0, frozenset())
    caps = [min(a, b + 1) for a, b in hooks]

    def valid(ms) -> bool:
        rows = _mhook_rows(tuple(m for m in ms if m >= 2))
        if len(rows) > len(p):
            return False
        for i, r in enumerate(rows):
            if r > p[i]:
                return False
        for i in range(len(p) - 1):
            if (rows[i] if i < len(rows) else 0) < p[i + 1]:
                return False
        return True

    vectors = []

    def gen(i, prev, acc):
        if i == k:
            vectors.append(tuple(acc))
            return
        for m in range(min(caps[i], prev - 1), 0, -1):
            gen(i + 1, m, acc + [m])

    gen(0, weight(p) + 2, [])
    live = [ms for ms in vectors if valid(ms)]
    if not live:
        return None
    total = weight(p)
    sizes = sorted(total - sum(2 * m - 2 for m in ms) for ms in live)
    minsh = sizes[0]
    base = max(live, key=sum)
    live_set = set(live)
    members = set()
    for l in range(1, k + 1):
        reduced = list(base)
        reduced[l - 1] -= 1
        if reduced[l - 1] >= 1 and tuple(reduced) in live_set:
            members.add(l)
    c = len(members)
    expected = sorted(minsh + 2 * t for t in range(c + 1) for _ in range(comb(c, t)))
    if sizes != expected:
        raise AssertionError(
            f"shading counts of {p} are not a combinatorial cube: {sizes}")
    return (minsh, c, frozenset(members))


def shading_profile(p: Partition):
    """(minimal shaded boxes, cube dimension) of p, or None if not shadable."""
    data = _shading_data(p)
    if data is None:
        return None
    return (data[0], data[1])


def c_set(p: Partition) -> frozenset[int]:
    """Hook indices selected by the classical rule: l is in the set iff hook l
    is wider than high (a_l > b_l) and either it is the innermost hook or the
    next one satisfies a_{l+1} <= b_{l+1} + 1.

    This is the classical diagram statistic; the multiplicity engine uses
    shadable_hooks/shading_profile instead, which test shadability directly
    (the two differ on diagrams like (3,3), where this rule gives {1, 2} but
    only hook 2 actually admits the extra shaded pair).
    """
    hooks = frobenius_hooks(p)
    k = len(hooks)
    members = set()
    for l in range(1, k + 1):
        a, b = hooks[l - 1]
        if a <= b:
            continue
        if l == k or hooks[l][0] <= hooks[l][1] + 1:
            members.add(l)
    return frozenset(members)


def shadable_hooks(p: Partition) -> frozenset[int]:
    """Hook indices that genuinely admit an extra shaded pair of boxes.

    Empty both for self-conjugate diagrams (no room) and for diagrams that
    admit no shading at all; the valid shadings of a shadable diagram are
    exactly the subsets of this set.
    """
    data = _shading_data(p)
    return frozenset() if data is None else data[2]


def has_nested_hooks(p: Partition) -> bool:
    """True iff every hook satisfies b_i <= a_i <= b_{i-1} + 1 (b_0 = inf)."""
    hooks = frobenius_hooks(p)
    for i, (a, b) in enumerate(hooks):
        if a < b:
            return False
        if i and a > hooks[i - 1][1] + 1:
            return False
    return True


@cache
def enumerate_partitions(w: int, max_height: int) -> tuple[Partition, ...]:
    """All partitions of w with at most max_height rows, lexicographically sorted."""
    if w < 0:
        raise ValueError("weight must be nonnegative")

    def gen(rem, first_max, rows_left):
        if rem == 0:
            yield ()
            return
        if rows_left == 0:
            return
        for r in range(min(rem, first_max), 0, -1):
            for rest in gen(rem - r, r, rows_left - 1):
                yield (r,) + rest

    return tuple(sorted(gen(w, w, max_height)))


def enumerate_symmetric(w: int, diag_len: int, max_height: int) -> tuple[Partition, ...]:
    """Self-conjugate partitions of w with the given diagonal length and height bound.

    A symmetric diagram is determined by its strictly decreasing arm lengths
    a_1 > ... > a_k >= 1 with 2*sum(a) - k = w and a_1 <= max_height.
    """
    if w < 0 or diag_len < 0 or max_height < 0:
        raise ValueError("arguments must be nonnegative")
    if (w + diag_len) % 2:
        return ()
    target = (w + diag_len) // 2

    def gen(rem, k, amax):
        if k == 0:
            if rem == 0:
                yield ()
            return
        # k strictly decreasing positive values below amax summing to rem
        lo = k * (k + 1) // 2
        for a in range(min(amax, rem - lo + k), k - 1, -1):
            for rest in gen(rem - a, k - 1, a - 1):
                yield (a,) + rest

    out = [from_hooks(tuple((a, a) for a in arms))
           for arms in gen(target, diag_len, max_height)]
    return tuple(sorted(out))


def enumerate_nested_hooks(w: int, max_height: int) -> tuple[Partition, ...]:
    """Partitions of w, height <= max_height, with hooks b_i <= a_i <= b_{i-1}+1."""
    if w < 0 or max_height < 0:
        raise ValueError("arguments must be nonnegative")
    if w == 0:
        return ((),)

    results = []

    def gen(rem, prev_a, prev_b, acc):
        if rem == 0:
            results.append(from_hooks(tuple(acc)))
            return
        a_hi = min(prev_a - 1, prev_b + 1, rem)
        for a in range(a_hi, 0, -1):
            for b in range(min(a, prev_b - 1, rem - a + 1), 0, -1):
                gen(rem - (a + b - 1), a, b, acc + [(a, b)])

    # b_1 bounds the height; the i = 1 upper constraint a_1 <= b_0 + 1 is vacuous.
    for a1 in range(w, 0, -1):
        for b1 in range(min(a1, max_height, w - a1 + 1), 0, -1):
            gen(w - (a1 + b1 - 1), a1, b1, [(a1, b1)])
    return tuple(sorted(results))


def parse_partition(text: str) -> Partition:
    """Parse the comma-separated text form; "0" (or "") is the empty diagram."""
    text = text.strip()
    if text in ("", "0"):
        return ()
    try:
        return check_partition(int(s) for s in text.split(","))
    except ValueError as exc:
        raise ValueError(f"malformed partition {text!r}: {exc}") from None


def format_partition(p: Partition) -> str:
    return ",".join(str(r) for r in p) if p else "0"


def format_hooks(hooks: HookList) -> str:
    """Print hooks as (a_1,...,a_k|b_k,...,b_1)."""
    arms = ",".join(str(a) for a, _ in hooks)
    legs = ",".join(str(b) for _, b in reversed(hooks))
    return f"({arms}|{legs})"
