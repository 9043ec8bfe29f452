"""py.test tests for the dirichletlsa.lll module

Besides a few fixed bases, every reduction of a batch of random integer
bases is checked against the reduction conditions and the classical bounds
on the reduced vectors.

"""

################################################################################
#### LIBRARIES #################################################################
#
## STANDARD PACKAGES ###########################################################
import random                           # Random bases
from fractions import Fraction          # Exact arithmetic
import pytest                           # Exception checks
import sympy                            # Exact determinants
#
## OTHER PARTS OF DIRICHLETLSA #################################################
from .. import lll                      # Under test
from ..errors import ValidationError


################################################################################
#### UTILITY FUNCTIONS #########################################################
#
def norm2(v):
    return sum((x*x for x in v), Fraction(0))
#
#
def matmul(T, rows):
    return tuple(tuple(sum((T[i][k]*rows[k][j] for k in range(len(rows))),
        Fraction(0)) for j in range(len(rows[0]))) for i in range(len(T)))
#
#
def randombases(count, seed=20030415):
    """``count`` nonsingular integer bases of dimension 2..6."""
    rng = random.Random(seed)
    bases = []
    while len(bases) < count:
        n = rng.randint(2, 6)
        rows = [[rng.randint(-30, 30) for _ in range(n)] for _ in range(n)]
        try:
            bases.append(lll.make_basis(rows))
        except ValidationError:
            continue
    return bases


################################################################################
#### TEST CLASSES ##############################################################
#
class TestBasis(object):
    """Tests for lll.make_basis(), lll.gram_schmidt() and friends"""
    def test_makebasis(self):
        basis = lll.make_basis([[1, 2], [3, 4]])
        assert basis.vectors == ((1, 2), (3, 4))
        assert all(isinstance(x, Fraction) for row in basis.vectors
            for x in row)
        for rows in ([], [[1, 2]], [[1, 2], [2, 4]]):
            with pytest.raises(ValidationError):
                lll.make_basis(rows)
    #
    def test_determinant(self):
        assert lll.lattice_determinant(lll.make_basis([[2, 0], [0, 3]])) == 6
        assert lll.lattice_determinant(lll.make_basis([[0, 1], [1, 0]])) == 1
    #
    def test_gramschmidt(self):
        basis = lll.make_basis([[3, 1, 0], [1, 2, 1], [0, 1, 5]])
        data = lll.gram_schmidt(basis)
        for j in range(3):
            for k in range(j):
                assert sum(a*b for a, b in zip(data.ortho[j],
                    data.ortho[k])) == 0, "Rows are not orthogonal."
            rebuilt = list(data.ortho[j])
            for k in range(j):
                rebuilt = [r + data.mu[j][k]*o for r, o in zip(rebuilt,
                    data.ortho[k])]
            assert tuple(rebuilt) == basis.vectors[j], \
                "x_j should equal x*_j + sum mu[j][k] x*_k."
            assert data.norms[j] == norm2(data.ortho[j])
    #
    def test_params(self):
        assert lll.reduction_params().alpha == Fraction(3, 4)
        for alpha in (Fraction(1, 4), 1, 2):
            with pytest.raises(ValidationError):
                lll.reduction_params(alpha)


class TestReduction(object):
    """Tests for lll.lll_reduce() and lll.is_reduced()"""
    bases = randombases(200)
    #
    def test_textbook(self):
        basis = lll.make_basis([[1, 1, 1], [-1, 0, 2], [3, 5, 6]])
        assert not lll.is_reduced(basis)
        reduced, _ = lll.lll_reduce(basis)
        assert lll.is_reduced(reduced)
        assert min(norm2(row) for row in reduced.vectors) == 1, \
            "The unit vector (0,1,0) should be found."
    #
    def test_alreadyreduced(self):
        basis = lll.make_basis([[1, 0], [0, 1]])
        reduced, transform = lll.lll_reduce(basis)
        assert reduced == basis and transform == ((1, 0), (0, 1))
    #
    def test_idempotent(self):
        for basis in self.bases:
            n = len(basis.vectors)
            reduced, _ = lll.lll_reduce(basis)
            again, transform = lll.lll_reduce(reduced)
            assert again == reduced, "A reduced basis should be left alone."
            assert transform == tuple(tuple(int(i == j) for j in range(n))
                for i in range(n)), "Transform should be the identity."
    #
    def test_random(self):
        params = lll.reduction_params()
        for basis in self.bases:
            n = len(basis.vectors)
            reduced, transform = lll.lll_reduce(basis, params)
            assert lll.is_reduced(reduced, params), "Basis is not reduced."
            assert all(isinstance(t, int) for row in transform for t in row)
            assert abs(sympy.Matrix(transform).det()) == 1, \
                "Transform is not unimodular."
            assert matmul(transform, basis.vectors) == reduced.vectors, \
                "Reduced basis should equal T times the input."
            det = lll.lattice_determinant(basis)
            assert lll.lattice_determinant(reduced) == det, \
                "The determinant is a lattice invariant."
            #
            # Bounds for alpha = 3/4, squared to stay exact
            first = norm2(reduced.vectors[0])
            assert first**n <= 2**(n*(n-1)//2) * det**2, \
                "First vector exceeds 2^((n-1)/4) det^(1/n)."
            product = Fraction(1)
            for row in reduced.vectors:
                product *= norm2(row)
            assert product <= 2**(n*(n-1)//2) * det**2, \
                "Product of lengths exceeds 2^(n(n-1)/4) det."
            for row in basis.vectors:
                assert first <= 2**(n-1) * norm2(row), \
                    "First vector exceeds 2^((n-1)/2) times a lattice vector."
#
#### EOF #######################################################################
################################################################################
