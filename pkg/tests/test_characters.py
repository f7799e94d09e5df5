from itertools import combinations
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from vsyz import characters as C
from vsyz import partitions as P


# -- brute-force oracles -------------------------------------------------------

def ssyt_count(shape, content):
    """Number of semistandard tableaux, by direct row-by-row backtracking."""
    rows = len(shape)

    def fill(prev_row, r, remaining):
        if r == rows:
            return 1 if all(v == 0 for v in remaining) else 0
        total = 0

        def build(col, row_acc, rem):
            nonlocal total
            if col == shape[r]:
                total += fill(tuple(row_acc), r + 1, tuple(rem))
                return
            lo = row_acc[col - 1] if col else 1
            for v in range(lo, len(rem) + 1):
                if rem[v - 1] == 0:
                    continue
                if r > 0 and (col >= len(prev_row) or prev_row[col] >= v):
                    continue
                rem2 = list(rem)
                rem2[v - 1] -= 1
                build(col + 1, row_acc + [v], rem2)

        build(0, [], list(remaining))
        return total

    return fill((), 0, tuple(content))


def weight_multiset(chi):
    out = []
    for w, m in chi.expand().items():
        out.extend([w] * m)
    return sorted(out)


def brute_exterior_power(chi, k):
    """Exterior power from the explicit weight multiset; dimensions <= 12 only."""
    vectors = weight_multiset(chi)
    counts = {}
    for subset in combinations(range(len(vectors)), k):
        w = tuple(sum(vectors[i][j] for i in subset) for j in range(chi.n))
        counts[w] = counts.get(w, 0) + 1
    dominant_counts = {w: m for w, m in counts.items() if w == C.dominant(w)}
    return C.Character(chi.n, dominant_counts)


# -- schur dimensions ----------------------------------------------------------

def test_schur_dimension_examples():
    assert C.schur_dimension((2, 2), 4) == 20
    assert C.schur_dimension((2, 1), 3) == 8
    assert C.schur_dimension((3, 2, 1), 4) == 64
    assert C.schur_dimension((3, 3, 2), 4) == 45
    assert C.schur_dimension((3, 1, 1), 3) == 6
    assert C.schur_dimension((3, 3, 3), 3) == 1
    assert C.schur_dimension((2, 1, 1), 2) == 0
    assert C.schur_dimension((), 5) == 1


def test_schur_dimension_4211_weyl_value():
    # hook-content gives 45; the value 140 sometimes quoted for this shape at
    # rank 4 is inconsistent with the Weyl formula and with every Euler
    # characteristic computed in test_betti
    assert C.schur_dimension((4, 2, 1, 1), 4) == 45


def test_schur_dimension_matches_kostka_total():
    for lam in [(2, 1), (3, 1), (2, 2), (3, 2, 1)]:
        for n in (2, 3, 4):
            assert C.schur_dimension(lam, n) == C.schur_character(lam, n).dimension()


# -- pieri ---------------------------------------------------------------------

def test_pieri_examples():
    assert C.pieri_row((2,), 1, 3).as_dict() == {(3,): 1, (2, 1): 1}
    assert C.pieri_row((2,), 2, 2).as_dict() == {(4,): 1, (3, 1): 1, (2, 2): 1}
    assert C.pieri_row((3, 1), 0, 4).as_dict() == {(3, 1): 1}


def test_pieri_dimension_identity():
    for lam in [(1,), (2,), (2, 1), (3, 2), (2, 2, 1)]:
        for a in range(5):
            for n in (2, 3, 4):
                if len(lam) > n:
                    continue
                got = C.pieri_row(lam, a, n).dimension()
                want = C.schur_dimension(lam, n) * C.schur_dimension((a,) if a else (), n)
                assert got == want, (lam, a, n)


# -- exterior powers of Sym^2 --------------------------------------------------

def test_ext_sym2_examples():
    assert C.ext_sym2_decomposition(1, 3).as_dict() == {(2,): 1}
    assert C.ext_sym2_decomposition(2, 4).as_dict() == {(3, 1): 1}
    assert C.ext_sym2_decomposition(3, 3).as_dict() == {(4, 1, 1): 1, (3, 3): 1}
    assert C.ext_sym2_decomposition(0, 2).as_dict() == {(): 1}


def test_ext_sym2_dimension_totals():
    for n in range(1, 6):
        top = n * (n + 1) // 2
        for w in range(top + 2):
            dec = C.ext_sym2_decomposition(w, n)
            assert dec.dimension() == comb(top, w)
            assert C.multiplicity_free(dec)


# -- shaded diagrams -----------------------------------------------------------

def test_enumerate_shaded_examples():
    sd = C.enumerate_shaded(1, 1, 3)
    assert len(sd) == 2
    assert {d.shape for d in sd} == {(3,), (2, 1)}
    sd = C.enumerate_shaded(2, 0, 4)
    assert len(sd) == 1 and sd[0].shape == (3, 1) and not sd[0].shaded
    sd = C.enumerate_shaded(0, 0, 2)
    assert len(sd) == 1 and sd[0].shape == ()


def test_enumerate_shaded_invariants():
    for w in range(4):
        for a in range(4):
            for d in C.enumerate_shaded(w, a, 3):
                assert len(d.shaded) == a
                cols = [c for _, c in d.shaded]
                assert len(cols) == len(set(cols))
                theta0 = d.unshaded_shape()
                assert P.weight(theta0) == 2 * w
                assert all(x == y + 1 for x, y in P.frobenius_hooks(theta0))


def test_shaded_bijection_with_plethysm():
    # multiset of shapes = decomposition of Λ^w Sym² ⊗ Sym^a, computed by the
    # independent character route (Newton recurrence + Kostka decomposition)
    for n in (2, 3, 4):
        sym2 = C.schur_character((2,), n)
        for w in range(4):
            for a in range(4 if n < 4 else 3):
                shapes = {}
                for d in C.enumerate_shaded(w, a, n):
                    shapes[d.shape] = shapes.get(d.shape, 0) + 1
                chi = C.exterior_power_character(sym2, w) * C.sym_power_character(a, n)
                assert C.decompose_character(chi).as_dict() == shapes, (n, w, a)


# -- kostka ---------------------------------------------------------------------

def test_kostka_examples():
    assert C.kostka((2, 1), (1, 1, 1)) == 2
    assert C.kostka((3,), (1, 1, 1)) == 1
    assert C.kostka((1, 1, 1), (3,)) == 0
    with pytest.raises(ValueError):
        C.kostka((2, 1), (1, 1))


def test_kostka_unitriangular():
    for w in range(1, 7):
        for lam in P.enumerate_partitions(w, w):
            assert C.kostka(lam, lam) == 1
            for mu in P.enumerate_partitions(w, w):
                if not C._dominates(lam, mu):
                    assert C.kostka(lam, mu) == 0


def test_kostka_against_brute_force():
    for w in range(1, 7):
        for lam in P.enumerate_partitions(w, 4):
            for mu in P.enumerate_partitions(w, 4):
                assert C.kostka(lam, mu) == ssyt_count(lam, mu), (lam, mu)


# -- characters and decomposition ------------------------------------------------

def test_schur_character_examples():
    chi = C.schur_character((1,), 2)
    assert chi.terms == {(1, 0): 1}
    assert chi.expand() == {(1, 0): 1, (0, 1): 1}
    assert C.schur_character((2, 1), 3).value_at((1, 1, 1)) == 2
    assert C.schur_character((2,), 2).terms == {(2, 0): 1, (1, 1): 1}


def test_decompose_character_round_trip():
    for lam in [(3, 1), (2, 2), (4, 2, 1)]:
        dec = C.decompose_character(C.schur_character(lam, 4))
        assert dec.as_dict() == {lam: 1}
    assert C.decompose_character(C.Character.zero(3)).as_dict() == {}


def test_decompose_character_product():
    chi = C.schur_character((2,), 2)
    assert C.decompose_character(chi * chi).as_dict() == {
        (4,): 1, (3, 1): 1, (2, 2): 1}


def test_decompose_character_rejects_virtual():
    chi = C.schur_character((2,), 2) - C.schur_character((1, 1), 2)
    virtual = chi - C.schur_character((2,), 2)
    with pytest.raises(ValueError):
        C.decompose_character(virtual)


@settings(max_examples=60, deadline=None)
@given(st.lists(st.sampled_from(
    [(1,), (2,), (1, 1), (2, 1), (3,), (2, 2)]), min_size=1, max_size=3))
def test_decompose_character_random_sums(lams):
    total = C.Character.zero(3)
    want = {}
    for lam in lams:
        total = total + C.schur_character(lam, 3)
        want[lam] = want.get(lam, 0) + 1
    assert C.decompose_character(total).as_dict() == want


# -- littlewood-richardson -------------------------------------------------------

def test_tensor_examples():
    assert C.tensor_decompose((2,), (2,), 4).as_dict() == {
        (4,): 1, (3, 1): 1, (2, 2): 1}
    assert C.tensor_decompose((2, 1), (2, 1), 3).multiplicity((3, 2, 1)) == 2
    assert C.tensor_decompose((3, 1), (), 4).as_dict() == {(3, 1): 1}


def test_tensor_against_character_product():
    cases = [((2, 1), (2, 1), 3), ((2, 2), (2, 1), 3), ((3, 1), (2,), 4),
             ((2, 1), (1, 1), 2), ((2, 2), (2, 2), 4)]
    for lam, mu, n in cases:
        chi = C.schur_character(lam, n) * C.schur_character(mu, n)
        assert C.tensor_decompose(lam, mu, n).as_dict() == \
            C.decompose_character(chi).as_dict(), (lam, mu, n)


def test_tensor_dimension_identity():
    for lam, mu, n in [((2, 1), (2, 1), 3), ((3, 2), (2, 1), 3),
                       ((2, 2), (2,), 4)]:
        got = C.tensor_decompose(lam, mu, n).dimension()
        assert got == C.schur_dimension(lam, n) * C.schur_dimension(mu, n)


# -- adams / exterior power -------------------------------------------------------

def test_adams_examples():
    chi = C.schur_character((1,), 3)
    doubled = C.adams(chi, 2)
    assert doubled.terms == {(2, 0, 0): 1}
    assert C.adams(chi, 1) == chi
    assert doubled.dimension() == chi.dimension()


def test_exterior_power_examples():
    chi = C.schur_character((1,), 2)
    assert C.exterior_power_character(chi, 0) == C.Character.unit(2)
    assert C.exterior_power_character(chi, 2).terms == {(1, 1): 1}


def test_exterior_power_against_brute_force():
    cases = [C.schur_character((1,), 3),      # dim 3
             C.schur_character((2,), 2),      # dim 3
             C.schur_character((2,), 3),      # dim 6
             C.schur_character((1, 1), 4),    # dim 6
             C.schur_character((3,), 2),      # dim 4
             C.schur_character((2, 1), 3)]    # dim 8
    for chi in cases:
        dim = chi.dimension()
        assert dim <= 12
        for k in range(dim + 2):
            assert C.exterior_power_character(chi, k) == brute_exterior_power(chi, k)


def test_exterior_power_matches_ext_sym2():
    for n in (2, 3, 4):
        sym2 = C.schur_character((2,), n)
        lams = C.exterior_powers(sym2, 6)
        for w in range(7):
            want = C.ext_sym2_decomposition(w, n)
            assert C.decompose_character(lams[w]).as_dict() == want.as_dict()


def test_multiplicity_free():
    assert C.multiplicity_free(C.SchurDecomposition.from_dict(3, {}))
    assert C.multiplicity_free(C.ext_sym2_decomposition(3, 3))
    two = C.SchurDecomposition.from_dict(3, {(2, 1): 2})
    assert not C.multiplicity_free(two)


def test_sym7_rank2_has_repeated_exterior_summand():
    # the smallest single-factor witness: some Λ^k of Sym^7(k²) repeats a summand
    chi = C.sym_power_character(7, 2)
    lams = C.exterior_powers(chi, 4)
    dec = C.decompose_character(lams[4])
    assert any(m >= 2 for _, m in dec.terms)
    # while Sym^6(k²) stays multiplicity-free in every exterior degree
    chi6 = C.sym_power_character(6, 2)
    for k, lam in enumerate(C.exterior_powers(chi6, 7)):
        assert C.multiplicity_free(C.decompose_character(lam)), k
