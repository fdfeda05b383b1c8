import json

import numpy as np
import pytest

from scldpcl import (
    DegreeProfile,
    ProtographValidationError,
    SubBlockProto,
    couple,
    cutting_vector_sb,
    degree_profile,
    dump_protograph,
    enumerate_symmetric_designs,
    is_realizable_binary,
    is_symmetric_degree_profile,
    is_symmetric_sb,
    load_protograph,
    uncoupled_sb,
)

EQ4_SB = np.array([
    [1, 1, 1, 0, 0, 0],
    [1, 1, 1, 1, 1, 1],
    [1, 1, 1, 1, 1, 1],
    [0, 0, 0, 1, 1, 1],
])

# the l=4, r=16, t=2 coupling block used as the running asymmetric example
B_LEFT_4_16 = np.array([
    [1, 1, 1, 1, 1, 1, 1, 1, 0, 0, 0, 0, 0, 0, 1, 1],
    [0, 0, 0, 1, 1, 1, 1, 1, 1, 1, 1, 1, 0, 1, 0, 1],
])
B_RIGHT_4_16 = 1 - B_LEFT_4_16


def make_sb_4_16():
    return SubBlockProto(4, 16, 2, B_LEFT_4_16, np.ones((2, 16), int), B_RIGHT_4_16)


class TestDegreeProfile:
    def test_all_ones(self):
        dp = degree_profile(np.ones((2, 3), int))
        assert dp.d_c.tolist() == [3, 3]
        assert dp.d_v.tolist() == [2, 2, 2]

    def test_staircase_row(self):
        dp = degree_profile(cutting_vector_sb(3, 6, 1).b_left)
        assert dp.d_c.tolist() == [3]
        assert dp.d_v.tolist() == [1, 1, 1, 0, 0, 0]

    def test_wide_coupling_block(self):
        # frozen from direct row/column sums of the printed matrix
        dp = degree_profile(B_LEFT_4_16)
        assert dp.d_c.tolist() == [10, 11]
        assert dp.d_v.tolist() == [1, 1, 1, 2, 2, 2, 2, 2, 1, 1, 1, 1, 0, 1, 1, 2]


class TestRealizability:
    def test_full_rows_force_min_degree(self):
        assert not is_realizable_binary(DegreeProfile((4, 4, 1), (1, 2, 3, 3)))

    def test_all_ones_realizable(self):
        assert is_realizable_binary(DegreeProfile((3, 3), (2, 2, 2)))

    def test_sum_mismatch(self):
        assert not is_realizable_binary(DegreeProfile((2, 1), (1, 1, 2)))

    def test_out_of_range(self):
        assert not is_realizable_binary(DegreeProfile((5,), (1, 1, 1)))


class TestCuttingVector:
    def test_361_matrix(self):
        sb = cutting_vector_sb(3, 6, 1)
        assert np.array_equal(sb.matrix.entries, EQ4_SB)

    def test_461(self):
        sb = cutting_vector_sb(4, 6, 1)
        assert sb.b_left.tolist() == [[1, 1, 1, 0, 0, 0]]
        assert sb.b_loc.shape == (3, 6)
        assert np.all(sb.b_loc == 1)

    def test_582_staircase(self):
        sb = cutting_vector_sb(5, 8, 2)
        assert sb.b_left.tolist() == [
            [1, 1, 0, 0, 0, 0, 0, 0],
            [1, 1, 1, 1, 0, 0, 0, 0],
        ]

    @pytest.mark.parametrize("l,r,t", [(3, 6, 0), (3, 6, 2), (4, 1, 1)])
    def test_parameter_range(self, l, r, t):
        with pytest.raises(ValueError):
            cutting_vector_sb(l, r, t)


class TestCouple:
    def test_m2_layout(self):
        chain = couple(cutting_vector_sb(3, 6, 1), 2)
        m = chain.matrix.entries
        assert m.shape == (7, 12)
        expected = np.zeros((7, 12), int)
        expected[0, 0:3] = 1          # first copy's left coupling row (dangling)
        expected[1:3, 0:6] = 1        # local rows
        expected[3, 3:6] = 1          # shared coupling row, left side
        expected[3, 6:9] = 1          # shared coupling row, right side
        expected[4:6, 6:12] = 1
        expected[6, 9:12] = 1         # last copy's right coupling row (dangling)
        assert np.array_equal(m, expected)

    def test_column_degrees(self):
        sb = cutting_vector_sb(5, 8, 2)
        m = couple(sb, 4).matrix.entries
        assert np.all(m.sum(axis=0) == sb.l)

    def test_interior_row_degrees(self):
        sb = cutting_vector_sb(3, 6, 1)
        m = couple(sb, 3).matrix.entries
        # interior coupling rows see both neighbors: full degree r
        assert m[3].sum() == 6 and m[6].sum() == 6

    def test_big_chain_shape(self):
        m = couple(cutting_vector_sb(4, 6, 1), 50).matrix.entries
        assert m.shape == (201, 300)

    def test_m_too_small(self):
        with pytest.raises(ValueError):
            couple(cutting_vector_sb(3, 6, 1), 1)


class TestSymmetricDegreeProfile:
    def test_example_profile(self):
        assert is_symmetric_degree_profile(
            DegreeProfile((4, 3, 5), (0, 2, 0, 1, 3, 3, 2, 1)), 3, 8
        )

    def test_odd_odd_never_symmetric(self):
        for d_c in [(1, 2, 3), (2, 2, 2), (5, 0, 3)]:
            dp = DegreeProfile(d_c, np.random.default_rng(1).integers(0, 3, 5))
            assert not is_symmetric_degree_profile(dp, 3, 5)

    def test_single_row_half_ones(self):
        assert is_symmetric_degree_profile(DegreeProfile((3,), (1, 1, 1, 0, 0, 0)), 1, 6)

    def test_l1_norm_half(self):
        # every symmetric profile carries exactly half the possible edges
        dp = DegreeProfile((4, 3, 5), (0, 2, 0, 1, 3, 3, 2, 1))
        assert dp.d_c.sum() == 3 * 8 / 2 == dp.d_v.sum()


class TestSymmetricSb:
    def test_361_symmetric_with_valid_witness(self):
        sb = cutting_vector_sb(3, 6, 1)
        w = is_symmetric_sb(sb)
        assert w is not None
        assert np.array_equal(w.apply(sb.b_left), sb.b_right)

    def test_wide_example_not_symmetric(self):
        assert is_symmetric_sb(make_sb_4_16()) is None

    @pytest.mark.parametrize("l,r,t", [(3, 6, 1), (4, 6, 1), (4, 6, 2), (4, 9, 2),
                                       (5, 8, 1), (5, 8, 3), (4, 7, 1), (5, 9, 2)])
    def test_cutting_vector_symmetric_iff_divisible(self, l, r, t):
        sb = cutting_vector_sb(l, r, t)
        w = is_symmetric_sb(sb)
        if r % (t + 1) == 0:
            assert w is not None
            assert np.array_equal(w.apply(sb.b_left), sb.b_right)
        else:
            assert w is None

    def test_t0_trivially_symmetric(self):
        assert is_symmetric_sb(uncoupled_sb(3, 6)) is not None

    def test_t3_search_path(self):
        b_left = np.array([
            [1, 1, 0, 0, 0, 0, 0, 0],
            [1, 1, 1, 1, 0, 0, 0, 0],
            [1, 1, 1, 1, 1, 1, 0, 0],
        ])
        sb = SubBlockProto(5, 8, 3, b_left, np.ones((2, 8), int), 1 - b_left)
        w = is_symmetric_sb(sb)
        assert w is not None
        assert np.array_equal(w.apply(sb.b_left), sb.b_right)

    def test_unsupported_t(self):
        t = 9
        b_left = np.zeros((t, 20), int)
        for i in range(t):
            b_left[i, : i + 1] = 1
        sb = SubBlockProto(t + 2, 20, t, b_left, np.ones((2, 20), int), 1 - b_left)
        with pytest.raises(ValueError, match="unsupported"):
            is_symmetric_sb(sb)


class TestEnumerate:
    def test_l4r6_t2_matches_published_designs(self):
        designs = enumerate_symmetric_designs(4, 6, 2)
        got = [sb.b_left.tolist() for sb in designs]
        expected = [
            [[1, 0, 0, 0, 0, 0], [1, 1, 1, 1, 1, 0]],
            [[1, 0, 0, 0, 0, 0], [0, 1, 1, 1, 1, 1]],
            [[1, 1, 0, 0, 0, 0], [1, 1, 1, 1, 0, 0]],
            [[1, 1, 0, 0, 0, 0], [0, 1, 1, 1, 1, 0]],
            [[1, 1, 0, 0, 0, 0], [0, 0, 1, 1, 1, 1]],
            [[1, 1, 1, 0, 0, 0], [1, 1, 1, 0, 0, 0]],
            [[1, 1, 1, 0, 0, 0], [0, 1, 1, 1, 0, 0]],
            [[1, 1, 1, 0, 0, 0], [0, 0, 1, 1, 1, 0]],
            [[1, 1, 1, 0, 0, 0], [0, 0, 0, 1, 1, 1]],
        ]
        assert got == expected

    def test_l4r6_t1_single_design(self):
        designs = enumerate_symmetric_designs(4, 6, 1)
        assert len(designs) == 1
        assert designs[0].b_left.tolist() == [[1, 1, 1, 0, 0, 0]]

    def test_odd_r_t1_empty(self):
        assert enumerate_symmetric_designs(4, 5, 1) == []

    def test_t0_single(self):
        designs = enumerate_symmetric_designs(4, 6, 0)
        assert len(designs) == 1 and designs[0].t == 0

    def test_all_enumerated_are_symmetric(self):
        for t in (1, 2):
            for sb in enumerate_symmetric_designs(4, 16, t):
                assert is_symmetric_sb(sb) is not None

    def test_l4r16_design_count(self):
        # the full symmetric design space for r=16 (the published table
        # lists a 10-design subset)
        assert len(enumerate_symmetric_designs(4, 16, 2)) == 44


class TestValidationAndIo:
    def test_roundtrip(self, tmp_path):
        sb = cutting_vector_sb(3, 6, 1)
        path = tmp_path / "sb.json"
        path.write_text(json.dumps(dump_protograph(sb)))
        sb2 = load_protograph(str(path))
        assert np.array_equal(sb2.matrix.entries, sb.matrix.entries)

    def test_b_loc_optional(self):
        doc = {"l": 3, "r": 6, "t": 1,
               "b_left": [[1, 1, 1, 0, 0, 0]], "b_right": [[0, 0, 0, 1, 1, 1]]}
        sb = load_protograph(doc)
        assert np.all(sb.b_loc == 1)

    def test_reports_eq15a(self):
        doc = {"l": 3, "r": 6, "t": 1,
               "b_left": [[1, 1, 0, 0, 0, 0]], "b_right": [[0, 0, 0, 1, 1, 1]]}
        with pytest.raises(ProtographValidationError) as err:
            load_protograph(doc)
        assert err.value.constraint == "Eq.15a"

    def test_reports_eq15b(self):
        doc = {"l": 3, "r": 6, "t": 1,
               "b_left": [[1, 1, 1, 0, 0, 0]], "b_right": [[0, 0, 0, 1, 1, 1]],
               "b_loc": [[1, 1, 1, 1, 1, 0], [1, 1, 1, 1, 1, 1]]}
        with pytest.raises(ProtographValidationError) as err:
            load_protograph(doc)
        assert err.value.constraint == "Eq.15b"

    def test_reports_complement_violation(self):
        doc = {"l": 4, "r": 4, "t": 2,
               "b_left": [[1, 1, 0, 0], [0, 0, 1, 1]],
               "b_right": [[1, 1, 0, 0], [0, 0, 1, 1]]}
        # every margin holds but cells are not complementary
        with pytest.raises(ProtographValidationError) as err:
            load_protograph(doc)
        assert err.value.constraint == "B_left+B_right=1"

    def test_missing_key(self):
        with pytest.raises(ProtographValidationError):
            load_protograph({"l": 3, "r": 6, "t": 1, "b_left": [[1, 1, 1, 0, 0, 0]]})

    def test_nonbinary_coupling_rejected(self):
        with pytest.raises(ProtographValidationError):
            SubBlockProto(3, 6, 1, np.array([[2, 1, 0, 0, 0, 0]]),
                          np.ones((2, 6), int), np.array([[0, 0, 1, 1, 1, 1]]))
