import itertools
from functools import cache

import pytest
from hypothesis import given, settings
import hypothesis.strategies as st

from defres import (
    BorderStripTableau,
    Composition,
    Partition,
    SkewPartition,
    a_coefficient,
    enumerate_bst,
    enumerate_m_bst,
    is_border_strip,
    mn_value,
    partitions_of,
    repeat_parts,
    sign,
    skew_shapes,
    strip_meta,
)

from conftest import skews

EX_SHAPE = SkewPartition((6, 5, 3, 2), (3, 1))  # 12 boxes
BIG = SkewPartition((8, 5, 3, 2, 2, 2), (2, 2, 1, 1, 1))  # 15 boxes
FIG1_CHAIN = (
    (2, 2, 1, 1, 1),
    (4, 3, 3, 2, 1),
    (5, 5, 3, 2, 1),
    (5, 5, 3, 2, 2, 2),
    (8, 5, 3, 2, 2, 2),
)


# --- independent oracles -----------------------------------------------------


def strip_oracle(shape):
    """Border strip test straight from the definition, on the box set."""
    boxes = set(shape.boxes())
    if not boxes:
        return False
    for r, c in boxes:
        if {(r + 1, c), (r, c + 1), (r + 1, c + 1)} <= boxes:
            return False
    seen = set()
    stack = [next(iter(boxes))]
    while stack:
        b = stack.pop()
        if b in seen:
            continue
        seen.add(b)
        r, c = b
        stack.extend(
            x
            for x in ((r + 1, c), (r - 1, c), (r, c + 1), (r, c - 1))
            if x in boxes and x not in seen
        )
    return seen == boxes


def syt_count(shape):
    """Standard tableaux counted by stripping one corner box at a time."""

    @cache
    def rec(rows):
        # rows: tuple of (inner_r, outer_r) column bounds per row
        if all(a == b for a, b in rows):
            return 1
        total = 0
        for r, (a, b) in enumerate(rows):
            if a == b:
                continue
            below = rows[r + 1][1] if r + 1 < len(rows) else 0
            if b - 1 >= below:  # box (r, b) has nothing below or right
                total += rec(rows[:r] + ((a, b - 1),) + rows[r + 1 :])
        return total

    return rec(
        tuple(
            (shape.inner.part(r), shape.outer.part(r))
            for r in range(1, len(shape.outer) + 1)
        )
    )


def hook_length_count(p):
    """Standard tableaux of a straight shape by the hook length formula."""
    p = Partition(p)
    q = p.conjugate()
    num = 1
    for k in range(2, p.size + 1):
        num *= k
    den = 1
    for r, c in p.boxes():
        den *= (p.part(r) - c) + (q.part(c) - r) + 1
    return num // den


def ssyt_count(shape, n, m):
    """Semistandard fillings with entries 1..n, each used exactly m times."""
    rows = [
        (shape.inner.part(r), shape.outer.part(r))
        for r in range(1, len(shape.outer) + 1)
    ]
    counts = [0] * (n + 1)
    grid = {}

    def fill(r, c):
        if r == len(rows):
            return 1
        a, b = rows[r]
        if c > b:
            return fill(r + 1, rows[r + 1][0] + 1 if r + 1 < len(rows) else 1)
        if c <= a:
            return fill(r, a + 1)
        lo = grid.get((r, c - 1), 1)
        up = grid.get((r - 1, c), 0) + 1
        total = 0
        for v in range(max(lo, up), n + 1):
            if counts[v] < m:
                counts[v] += 1
                grid[(r, c)] = v
                total += fill(r, c + 1)
                del grid[(r, c)]
                counts[v] -= 1
        return total

    return fill(0, rows[0][0] + 1 if rows else 1)


# --- predicates and metadata -------------------------------------------------


class TestIsBorderStrip:
    def test_fixtures(self):
        assert is_border_strip(SkewPartition((2, 2), (1,)))
        assert not is_border_strip(SkewPartition((2, 2)))  # 2x2 square
        assert not is_border_strip(SkewPartition((3, 1), (2,)))  # disconnected
        assert is_border_strip(SkewPartition((3, 1), (1, 1)))
        assert is_border_strip(SkewPartition((1,)))
        assert is_border_strip(SkewPartition((2, 1)))
        assert not is_border_strip(SkewPartition((1,), (1,)))  # empty

    def test_matches_box_oracle_exhaustively(self):
        for size in range(0, 7):
            for shape in skew_shapes(size, 2):
                assert is_border_strip(shape) == strip_oracle(shape), shape


class TestStripMeta:
    def test_fixtures(self):
        assert strip_meta(SkewPartition((2, 2), (1,))) == (3, 1, 1)
        assert strip_meta(SkewPartition((3, 1), (1, 1))) == (2, 0, 1)
        assert strip_meta(SkewPartition((1, 1, 1), (1,))) == (2, 1, 2)
        assert strip_meta(SkewPartition((1,))) == (1, 0, 1)

    def test_rejects_non_strips(self):
        with pytest.raises(ValueError):
            strip_meta(SkewPartition((2, 2)))
        with pytest.raises(ValueError):
            strip_meta(SkewPartition((3, 1), (3, 1)))


# --- tableaux ----------------------------------------------------------------


class TestBorderStripTableau:
    def test_validates_steps(self):
        with pytest.raises(ValueError):
            BorderStripTableau([(), (2, 2)])  # step is not a strip
        with pytest.raises(ValueError):
            BorderStripTableau([(2,), (1,)])  # not increasing
        with pytest.raises(ValueError):
            BorderStripTableau([])

    def test_labels_default_and_custom(self):
        t = BorderStripTableau([(1, 1), (2, 1), (3, 1)])
        assert t.labels == (1, 2)
        u = BorderStripTableau([(1, 1), (2, 1), (3, 1)], labels=(3, 4))
        assert u.labels == (3, 4)
        assert t != u
        with pytest.raises(ValueError):
            BorderStripTableau([(1, 1), (2, 1), (3, 1)], labels=(4, 3))

    def test_fig_chain_metadata(self):
        t = BorderStripTableau(FIG1_CHAIN)
        assert t.shape == BIG
        assert tuple(t.type) == (6, 3, 3, 3)
        assert [m.height for m in t.metas()] == [3, 1, 1, 0]
        assert t.sign == -1
        assert sign(t) == -1

    def test_fig_render(self):
        t = BorderStripTableau(FIG1_CHAIN)
        assert t.render() == (
            ": : 1 1 2 4 4 4\n"
            ": : 1 2 2\n"
            ": 1 1\n"
            ": 1\n"
            ": 3\n"
            "3 3"
        )

    def test_render_wide_labels(self):
        chain = [()] + [(1,) * k for k in range(1, 12)]
        t = BorderStripTableau(chain)
        lines = t.render().splitlines()
        assert lines[0] == " 1"
        assert lines[10] == "11"

    def test_empty_tableau(self):
        t = BorderStripTableau([(2, 1)])
        assert t.sign == 1
        assert tuple(t.type) == ()
        assert t.render() == ": :\n:"


class TestEnumerateBst:
    def test_four_tableaux(self):
        ts = enumerate_bst(BIG, Composition((6, 3, 3, 3)))
        assert len(ts) == 4
        assert sorted(t.sign for t in ts) == [-1, -1, -1, 1]
        assert BorderStripTableau(FIG1_CHAIN) in ts

    def test_empty_type_on_equal_shapes(self):
        ts = enumerate_bst(SkewPartition((3, 1), (3, 1)), Composition(()))
        assert len(ts) == 1 and ts[0].sign == 1

    def test_no_tableaux(self):
        assert enumerate_bst(SkewPartition((2, 2)), Composition((4,))) == []

    def test_size_mismatch(self):
        with pytest.raises(ValueError):
            enumerate_bst(SkewPartition((2, 2)), Composition((3,)))

    def test_sorted_lexicographically(self):
        ts = enumerate_bst(BIG, Composition((6, 3, 3, 3)))
        chains = [tuple(p.parts for p in t.chain) for t in ts]
        assert chains == sorted(chains)

    def test_single_box_chains_are_standard_tableaux(self):
        for size in range(0, 7):
            for shape in skew_shapes(size, 2):
                got = len(enumerate_bst(shape, Composition((1,) * size)))
                assert got == syt_count(shape), shape


class TestMnValue:
    def test_character_fixtures(self):
        chi21 = SkewPartition((2, 1))
        assert mn_value(chi21, Composition((1, 1, 1))) == 2
        assert mn_value(chi21, Composition((2, 1))) == 0
        assert mn_value(chi21, Composition((3,))) == -1
        assert mn_value(BIG, Composition((6, 3, 3, 3))) == -2
        assert mn_value(SkewPartition(()), Composition(())) == 1

    def test_trivial_row(self):
        for a in partitions_of(6):
            assert mn_value(SkewPartition((6,)), a) == 1

    def test_matches_enumeration(self):
        # two independent routes: cached inner recursion vs outer peeling
        for size in range(0, 8):
            for shape in skew_shapes(size, 2):
                for gamma in partitions_of(size):
                    assert mn_value(shape, gamma) == sum(
                        t.sign for t in enumerate_bst(shape, gamma)
                    )

    def test_hook_length_regression(self):
        for r in range(1, 9):
            for lam in partitions_of(r):
                shape = SkewPartition(lam)
                assert mn_value(shape, Composition((1,) * r)) == hook_length_count(lam)

    @given(skews(max_size=9, max_rows=5))
    @settings(max_examples=40, deadline=None)
    def test_reorder_invariance(self, shape):
        for gamma in partitions_of(shape.size):
            base = mn_value(shape, gamma)
            for perm in set(itertools.permutations(gamma.parts)):
                assert mn_value(shape, Composition(perm)) == base

    def test_size_mismatch(self):
        with pytest.raises(ValueError):
            mn_value(SkewPartition((3,)), Composition((2,)))


class TestEnumerateMBst:
    def test_worked_example(self):
        ts = enumerate_m_bst(EX_SHAPE, 2, Composition((1, 2, 3)))
        assert len(ts) == 3
        assert sorted(t.sign for t in ts) == [-1, 1, 1]
        for t in ts:
            assert tuple(t.type) == (1, 1, 2, 2, 3, 3)

    def test_reordered_type_unique(self):
        ts = enumerate_m_bst(EX_SHAPE, 2, Composition((2, 1, 3)))
        assert len(ts) == 1
        assert ts[0].sign == 1

    def test_m1_reduces_to_plain_tableaux(self):
        for size in range(0, 7):
            for shape in skew_shapes(size, 1):
                for gamma in partitions_of(size):
                    assert enumerate_m_bst(shape, 1, gamma) == enumerate_bst(
                        shape, gamma
                    )

    def test_matches_filtered_enumeration(self):
        # independent route: enumerate all tableaux of the repeated type and
        # filter on the block condition computed from the strip metadata
        for m, n in ((2, 2), (2, 3), (3, 2)):
            for shape in skew_shapes(m * n, 2):
                for gamma in partitions_of(n):
                    full = enumerate_bst(shape, repeat_parts(gamma, m))
                    kept = []
                    for t in full:
                        rows = [meta.row_number for meta in t.metas()]
                        ok = all(
                            rows[j - 1] >= rows[j]
                            for j in range(1, len(rows))
                            if (j % m) != 0
                        )
                        if ok:
                            kept.append(t)
                    assert enumerate_m_bst(shape, m, gamma) == kept

    def test_size_mismatch(self):
        with pytest.raises(ValueError):
            enumerate_m_bst(EX_SHAPE, 3, Composition((1, 2, 3)))
        with pytest.raises(ValueError):
            enumerate_m_bst(EX_SHAPE, 0, Composition((1, 2, 3)))


class TestACoefficient:
    def test_worked_example(self):
        assert a_coefficient(EX_SHAPE, 2, Composition((1, 2, 3))) == 1
        assert a_coefficient(EX_SHAPE, 2, Composition((2, 1, 3))) == 1

    def test_matches_sign_sum(self):
        for m, n in ((2, 2), (2, 3), (3, 2), (4, 2)):
            for shape in skew_shapes(m * n, 2):
                for gamma in partitions_of(n):
                    assert a_coefficient(shape, m, gamma) == sum(
                        t.sign for t in enumerate_m_bst(shape, m, gamma)
                    )

    def test_semistandard_count(self):
        # with type (1^n) every tableau has sign +1 and the signed count
        # enumerates semistandard fillings of content (m^n)
        for m, n in ((2, 2), (3, 2), (2, 3), (4, 2)):
            for shape in skew_shapes(m * n, 2):
                got = a_coefficient(shape, m, Composition((1,) * n))
                assert got == ssyt_count(shape, n, m), (shape, m, n)
