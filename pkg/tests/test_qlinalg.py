"""
Tests for quaternion matrices and row/column determinants.
"""

import math
from functools import partial

import numpy as np
import pytest

from qgain.config import get_settings
from qgain.core.exceptions import (
    DimensionMismatchError,
    IndexOutOfRangeError,
    NotHermitianError,
    SizeCapExceededError,
)
from qgain.core.models import I, J, K, ONE, CycleArrangement, QMatrix, Quaternion, direct_sum
from qgain.services.graph import incidence_matrix, laplacian, walk_gain
from qgain.services.linalg import (
    arrangements,
    canonical_arrangement,
    cdet,
    char_poly_hermitian,
    det_hermitian,
    is_invertible,
    oracle_determinant,
    oracle_eigenvalues,
    principal_minor_sum,
    rank_determinantal,
    rdet,
)
from qgain.services.verify.generators import (
    gain_cycle,
    random_gain_graph,
    random_hermitian,
    random_qmatrix,
    random_quaternion,
    random_tree,
)

from .conftest import WORKED_DET


def two_by_two(rng):
    a, b, c, d = (random_quaternion(rng) for _ in range(4))
    return (a, b, c, d), QMatrix.from_rows([[a, b], [c, d]])


class TestQMatrix:
    """Test QMatrix construction and algebra."""

    def test_shape_validation(self):
        """Test that data must be rows x cols x 4 and finite."""
        with pytest.raises(DimensionMismatchError):
            QMatrix(np.zeros((2, 2)))
        with pytest.raises(ValueError):
            QMatrix([[[float("nan"), 0, 0, 0]]])
        with pytest.raises(DimensionMismatchError):
            QMatrix.from_rows([[1, 2], [3]])

    def test_entries_are_read_only(self):
        """Test that the backing array cannot be mutated."""
        matrix = QMatrix.identity(2)
        with pytest.raises(ValueError):
            matrix.data[0, 0, 0] = 5.0

    def test_conj_transpose(self):
        """Test (A*)_ij = conj(a_ji)."""
        matrix = QMatrix.from_rows([[1, "i"], ["j", [1, 1, 1, 1]]])
        adjoint = matrix.conj_transpose()
        assert adjoint[0, 1] == J.conj()
        assert adjoint[1, 0] == -I
        assert adjoint[1, 1] == Quaternion(1, -1, -1, -1)
        assert adjoint.H.allclose(matrix, 0.0)

    def test_product_order(self):
        """Test that entries multiply in row-times-column order."""
        left = QMatrix.from_rows([["i"]])
        right = QMatrix.from_rows([["j"]])
        assert (left @ right)[0, 0] == K
        assert (right @ left)[0, 0] == -K
        with pytest.raises(DimensionMismatchError):
            QMatrix.zeros(2, 3) @ QMatrix.zeros(2, 3)

    def test_product_matches_entrywise_sum(self, rng):
        """Test the vectorized product against explicit sums."""
        a, b = random_qmatrix(rng, 2, 3), random_qmatrix(rng, 3, 2)
        product = a @ b
        for i in range(2):
            for j in range(2):
                expected = sum((a[i, k] * b[k, j] for k in range(3)), Quaternion())
                assert product[i, j].isclose(expected, 1e-12)

    def test_submatrix_and_principal(self):
        """Test submatrix extraction keeps the requested order."""
        matrix = QMatrix.diag([1, 2, 3])
        assert matrix.principal([0, 2]).allclose(QMatrix.diag([1, 3]), 0.0)
        assert matrix.submatrix([], []).shape == (0, 0)
        with pytest.raises(IndexOutOfRangeError):
            matrix.submatrix([3], [0])

    def test_direct_sum(self, rng):
        """Test det(A + B) block sum is det A det B for Hermitian blocks."""
        a, b = random_hermitian(rng, 2), random_hermitian(rng, 3)
        block = direct_sum(a, b)
        assert block.shape == (5, 5)
        assert det_hermitian(block) == pytest.approx(det_hermitian(a) * det_hermitian(b), abs=1e-9)

    def test_hermitian_deviation(self, rng):
        """Test B + B* is Hermitian and a general matrix is not."""
        assert random_hermitian(rng, 3).is_hermitian(1e-12)
        assert not random_qmatrix(rng, 3).is_hermitian(1e-9)
        assert not QMatrix.zeros(2, 3).is_hermitian(1e-9)


class TestArrangements:
    """Test canonical cycle arrangements."""

    @pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
    def test_count_is_factorial(self, n):
        """Test one arrangement per permutation."""
        for pivot in range(n):
            assert len(arrangements(n, pivot)) == math.factorial(n)

    def test_canonical_form(self):
        """Test pivot cycle first and other cycles led by their minimum in ascending order."""
        for arrangement in arrangements(5, 2):
            first, *rest = arrangement.cycles
            assert first[0] == 2
            assert all(cycle[0] == min(cycle) for cycle in rest)
            leaders = [cycle[0] for cycle in rest]
            assert leaders == sorted(leaders)
            covered = sorted(v for cycle in arrangement.cycles for v in cycle)
            assert covered == list(range(5))

    def test_distinct(self):
        """Test that arrangements are pairwise distinct."""
        items = arrangements(4, 1)
        assert len({a.cycles for a in items}) == len(items)

    def test_sign(self):
        """Test sign (-1)^(n - r)."""
        identity = arrangements(3, 0)[0]
        assert identity.cycles == ((0,), (1,), (2,))
        assert identity.sign == 1
        three_cycle = next(a for a in arrangements(3, 0) if len(a.cycles) == 1)
        assert three_cycle.sign == 1
        swap = next(a for a in arrangements(3, 0) if len(a.cycles) == 2)
        assert swap.sign == -1

    def test_bad_pivot(self):
        """Test pivot range checks."""
        with pytest.raises(IndexOutOfRangeError):
            arrangements(3, 3)


class TestRowColumnDeterminants:
    """Test rdet and cdet."""

    def test_rdet_two_by_two(self, rng):
        """Test rdet_0 = ad - bc in that factor order."""
        (a, b, c, d), matrix = two_by_two(rng)
        assert rdet(matrix, 0).isclose(a * d - b * c, 1e-12)
        assert rdet(matrix, 1).isclose(d * a - c * b, 1e-12)

    def test_cdet_two_by_two(self, rng):
        """Test cdet_0 = da - bc and cdet_1 = ad - cb."""
        (a, b, c, d), matrix = two_by_two(rng)
        assert cdet(matrix, 0).isclose(d * a - b * c, 1e-12)
        assert cdet(matrix, 1).isclose(a * d - c * b, 1e-12)

    def test_identity(self):
        """Test rdet and cdet of the identity."""
        for n in range(1, 5):
            assert rdet(QMatrix.identity(n), 0) == ONE
            assert cdet(QMatrix.identity(n), n - 1) == ONE

    def test_unit_gain_block(self):
        """Test cdet_0 [[2, -q], [-conj q, 2]] = 3."""
        q = Quaternion(0.5, 0.5, 0.5, 0.5)
        matrix = QMatrix.from_rows([[2, -q], [-q.conj(), 2]])
        assert cdet(matrix, 0).isclose(Quaternion(3), 1e-12)

    def test_gain_cycle_incidence(self, rng):
        """Test rdet_0 H(C) = 1 - phi(C)."""
        for n in range(3, 8):
            cycle = gain_cycle(rng, n)
            gain = ONE
            for edge in list(cycle.edges[1:]) + [cycle.edges[0]]:
                gain = gain * edge.gain
            assert rdet(incidence_matrix(cycle), 0).isclose(1 - gain, 1e-9)

    def test_errors(self, rng):
        """Test shape, pivot and size cap errors."""
        with pytest.raises(DimensionMismatchError):
            rdet(QMatrix.zeros(2, 3), 0)
        with pytest.raises(IndexOutOfRangeError):
            cdet(QMatrix.identity(2), 2)
        with pytest.raises(SizeCapExceededError):
            rdet(random_qmatrix(rng, 4), 0, size_cap=3)

    def test_hermitian_agreement(self, rng):
        """Test all 2n determinants of random Hermitian matrices agree and are real."""
        for trial in range(100):
            matrix = random_hermitian(rng, 2 + trial % 4)
            values = [rdet(matrix, i) for i in range(matrix.rows)] + [cdet(matrix, i) for i in range(matrix.rows)]
            for value in values:
                assert value.imag_norm() < 1e-9
                assert value.isclose(values[0], 1e-9)

    def test_conjugation_duality(self, rng):
        """Test rdet_i(A*) = conj(cdet_i(A)) on general square matrices."""
        for trial in range(100):
            matrix = random_qmatrix(rng, 1 + trial % 4)
            for i in range(matrix.rows):
                assert rdet(matrix.conj_transpose(), i).isclose(cdet(matrix, i).conj(), 1e-9)

    def test_row_combination(self, rng):
        """Test adding a left combination of other rows keeps rdet_i."""
        for _ in range(20):
            matrix = random_hermitian(rng, 3)
            changed = matrix.add_left_row_combination(1, {0: random_quaternion(rng), 2: random_quaternion(rng)})
            assert rdet(changed, 1).isclose(Quaternion(det_hermitian(matrix)), 1e-8)

    def test_column_combination(self, rng):
        """Test adding a right combination of other columns keeps cdet_j."""
        for _ in range(20):
            matrix = random_hermitian(rng, 3)
            changed = matrix.add_right_column_combination(2, {0: random_quaternion(rng)})
            assert cdet(changed, 2).isclose(Quaternion(det_hermitian(matrix)), 1e-8)


class TestHermitianDeterminant:
    """Test det_hermitian and the quantities built on it."""

    def test_diagonal(self):
        """Test the product of a real diagonal."""
        assert det_hermitian(QMatrix.diag([2, -3, 0.5])) == pytest.approx(-3.0)

    def test_empty(self):
        """Test the empty determinant is 1."""
        assert det_hermitian(QMatrix.zeros(0, 0)) == 1.0

    def test_worked_example_laplacian(self, worked_graph):
        """Test det L(G) = 9 - 4 sqrt 2 on the worked example."""
        assert det_hermitian(laplacian(worked_graph)) == pytest.approx(WORKED_DET, abs=1e-9)

    def test_verification_mode(self, worked_graph):
        """Test that all 2n determinants are compared when asked."""
        assert det_hermitian(laplacian(worked_graph), verify=True) == pytest.approx(WORKED_DET, abs=1e-9)

    def test_verification_mode_from_environment(self, monkeypatch, worked_graph):
        """Test QGAIN_VERIFICATION_MODE switches verification on."""
        monkeypatch.setenv("QGAIN_VERIFICATION_MODE", "true")
        get_settings.cache_clear()
        assert get_settings().verification_mode is True
        assert det_hermitian(laplacian(worked_graph)) == pytest.approx(WORKED_DET, abs=1e-9)

    @pytest.mark.parametrize("seed", range(50))
    def test_gain_cycle_laplacian(self, seed):
        """Test det L(C) = |1 - phi(C)|^2 on random unit-gain cycles."""
        rng = np.random.default_rng(seed)
        n = 3 + seed % 5
        cycle = gain_cycle(rng, n)
        gain = walk_gain(cycle, list(range(n)) + [0])
        assert det_hermitian(laplacian(cycle)) == pytest.approx((1 - gain).norm_squared(), abs=1e-9)

    def test_large_entries_stay_real(self, worked_graph):
        """Test the realness limit grows with the entries: 10^4 L has det 10^16 det L."""
        scaled = QMatrix(laplacian(worked_graph).data * 1e4)
        assert det_hermitian(scaled) == pytest.approx(WORKED_DET * 1e16, rel=1e-9)
        assert det_hermitian(scaled, verify=True) == pytest.approx(WORKED_DET * 1e16, rel=1e-9)

    def test_dense_graph(self, rng):
        """Test a complete graph on 8 vertices with random unit gains against the adjoint."""
        graph = random_gain_graph(rng, 8, 28)
        assert graph.size == 28
        matrix = laplacian(graph)
        value = det_hermitian(matrix)
        assert value == pytest.approx(math.sqrt(oracle_determinant(matrix).real), rel=1e-6)

    def test_tree(self, rng):
        """Test det L(T) = 0 for gain trees."""
        for n in range(1, 8):
            assert abs(det_hermitian(laplacian(random_tree(rng, n)))) < 1e-9

    def test_not_hermitian(self, rng):
        """Test rejection of non-Hermitian input."""
        with pytest.raises(NotHermitianError):
            det_hermitian(random_qmatrix(rng, 3))
        with pytest.raises(DimensionMismatchError):
            det_hermitian(QMatrix.zeros(2, 3))

    def test_positive_semidefinite(self, rng):
        """Test det(B B*) >= 0."""
        for trial in range(20):
            b = random_qmatrix(rng, 1 + trial % 4, 1 + trial % 5)
            assert det_hermitian(b @ b.conj_transpose(), 1e-8) >= -1e-9


class TestPrincipalMinors:
    """Test principal minor sums and the characteristic polynomial."""

    def test_full_order(self, rng):
        """Test s = n gives the determinant."""
        matrix = random_hermitian(rng, 4)
        assert principal_minor_sum(matrix, 4) == pytest.approx(det_hermitian(matrix), abs=1e-9)
        assert principal_minor_sum(matrix, 0) == 1.0
        with pytest.raises(IndexOutOfRangeError):
            principal_minor_sum(matrix, 5)

    def test_first_order_is_degree_sum(self, worked_graph):
        """Test s = 1 on L(G) is the sum of degrees."""
        assert principal_minor_sum(laplacian(worked_graph), 1) == pytest.approx(10.0)

    def test_gram_sums_agree(self, worked_graph):
        """Test sums of H*H and H H* agree for every s."""
        h = incidence_matrix(worked_graph)
        for s in range(1, 5):
            left = principal_minor_sum(h.conj_transpose() @ h, s)
            right = principal_minor_sum(h @ h.conj_transpose(), s)
            assert left == pytest.approx(right, abs=1e-9)

    def test_char_poly(self, worked_graph):
        """Test d_1 = trace, d_n = det and roots at the eigenvalues."""
        matrix = laplacian(worked_graph)
        poly = char_poly_hermitian(matrix)
        assert poly.degree == 4
        assert poly.trace == pytest.approx(10.0)
        assert poly.determinant == pytest.approx(WORKED_DET, abs=1e-9)
        for eigenvalue in oracle_eigenvalues(matrix):
            assert abs(poly(float(eigenvalue))) < 1e-6


class TestInvertibilityAndRank:
    """Test invertibility and determinantal rank."""

    def test_invertible(self, rng):
        """Test identity, zero row and an unbalanced cycle."""
        assert is_invertible(QMatrix.identity(3))
        singular = random_qmatrix(rng, 3).replace_row(1, [0, 0, 0])
        assert not is_invertible(singular)
        assert not is_invertible(random_qmatrix(rng, 3).replace_column(2, [0, 0, 0]))
        cycle = gain_cycle(rng, 4)
        assert is_invertible(incidence_matrix(cycle))

    def test_rank(self, rng, worked_graph):
        """Test ranks of zero, tree incidence and the worked example incidence."""
        assert rank_determinantal(QMatrix.zeros(3, 3)) == 0
        assert rank_determinantal(incidence_matrix(random_tree(rng, 5))) == 4
        assert rank_determinantal(incidence_matrix(worked_graph)) == 4


class TestMutatedOrdering:
    """Test that a wrong cycle ordering is detectable."""

    def test_swapped_leaders_break_duality(self, rng):
        """Test swapping two non-pivot cycles breaks conjugation duality."""
        def swapped(permutation, pivot):
            arrangement = canonical_arrangement(permutation, pivot)
            cycles = list(arrangement.cycles)
            if len(cycles) > 2:
                cycles[1], cycles[2] = cycles[2], cycles[1]
            return CycleArrangement(pivot=pivot, cycles=tuple(cycles))

        broken_cdet = partial(cdet, arrange=swapped)
        matrix = random_qmatrix(rng, 3)
        gaps = [(rdet(matrix.conj_transpose(), i) - broken_cdet(matrix, i).conj()).norm() for i in range(3)]
        assert max(gaps) > 1e-6
