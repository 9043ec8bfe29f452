"""py.test tests for the dirichletlsa.dirichlet module"""

################################################################################
#### LIBRARIES #################################################################
#
## STANDARD PACKAGES ###########################################################
from fractions import Fraction          # Exact inputs
import pytest                           # Exception checks
import mpmath                           # Reference values
from mpmath import mp
#
## OTHER PARTS OF DIRICHLETLSA #################################################
from .. import dirichlet                # Under test
from .. import catalogue
from ..errors import ValidationError


################################################################################
#### TEST CLASSES ##############################################################
#
class TestConstructors(object):
    """Tests for dirichlet.dirichlet_polynomial() and
    dirichlet.from_self_similar_string()"""
    def test_valid(self):
        f = catalogue.type1_2()
        assert len(f.exponents) == 4
        assert f.multiplicities == (Fraction(1, 10),)*3 + (1,), \
            "Exact multiplicities should be kept as Fractions."
    #
    def test_invalid(self):
        cases = [
            (1, ["1"], [1]),
            (Fraction(3, 2), ["1"], [1]),
            (Fraction(1, 2), ["2"], [1]),
            (Fraction(1, 2), ["1", "1"], [1, 1]),
            (Fraction(1, 2), ["1", "log(3)/log(2)", "3/2"], [1, 1, 1]),
            (Fraction(1, 2), ["1"], [0]),
            (Fraction(1, 2), ["1", "2"], [1]),
            (Fraction(1, 2), [], []),
            ]
        for base, exponents, multiplicities in cases:
            with pytest.raises(ValidationError):
                dirichlet.dirichlet_polynomial(base, exponents, multiplicities)
    #
    def test_string(self):
        zeta = catalogue.cantor_string()
        assert zeta.singlegap, "The Cantor string has a single gap scale."
        assert zeta.denominator.multiplicities == (2,)
        assert zeta.denominator.base_ratio.args == (Fraction(1, 3),)
        zeta = dirichlet.from_self_similar_string([Fraction(1, 2),
            (Fraction(1, 4), 1)], [Fraction(1, 8), Fraction(1, 8)])
        assert zeta.singlegap
        assert [e.args for e in zeta.denominator.exponents] == \
            [(1,), (2,)], "Ratios 1/2 and 1/4 give exponents 1 and 2."
    #
    def test_badstring(self):
        for ratios, gaps in (([Fraction(1, 2)], [Fraction(1, 4)]),
                ([Fraction(1, 2), Fraction(1, 2)], []),
                ([(Fraction(1, 3), 0)], [Fraction(2, 3)]),
                ([Fraction(3, 2)], [Fraction(1, 2)])):
            with pytest.raises(ValidationError):
                dirichlet.from_self_similar_string(ratios, gaps)


class TestClassify(object):
    """Tests for dirichlet.classify() and dirichlet.rational_basis()"""
    def test_catalogue(self):
        expected = {
            '2-3': (dirichlet.KIND_NONLATTICE, 2, True),
            'golden': (dirichlet.KIND_NONLATTICE, 2, True),
            'type1_2': (dirichlet.KIND_NONLATTICE, 2, False),
            '2-3-5-7': (dirichlet.KIND_NONLATTICE, 4, True),
            '3-4-13': (dirichlet.KIND_NONLATTICE, 3, True),
            'type1_3': (dirichlet.KIND_NONLATTICE, 3, False),
            'cantor': (dirichlet.KIND_LATTICE, 1, True),
            }
        for name, (kind, rank, generic) in expected.items():
            c = dirichlet.classify(catalogue.CATALOGUE[name]())
            assert (c.kind, c.rank, c.generic) == (kind, rank, generic), \
                "Wrong classification of " + name
    #
    def test_lattice(self):
        f = dirichlet.dirichlet_polynomial(Fraction(1, 2), ["1", "3/2"],
            [1, 1])
        c = dirichlet.classify(f)
        assert c.kind == dirichlet.KIND_LATTICE
        assert c.q == 2 and c.k == (2, 3), "r = r_1^(1/2), r_j = r^(2, 3)."
        assert c.generator[1] == 2
        f = dirichlet.dirichlet_polynomial(Fraction(1, 2), ["1",
            "log(4)/log(2)"], [1, 1])
        c = dirichlet.classify(f)
        assert c.kind == dirichlet.KIND_LATTICE and c.k == (1, 2)
    #
    def test_rationalbasis(self):
        basis = dirichlet.rational_basis(catalogue.type1_2())
        assert basis.indices == (1,), "log2(3) spans the irrational part."
        assert basis.constants == (1, 0, 2, 1)
        assert basis.coefficients == ((0,), (1,), (0,), (1,))
        assert basis.denominator == 1
        basis = dirichlet.rational_basis(catalogue.two_three_five_seven())
        assert basis.indices == (1, 2, 3)
        basis = dirichlet.rational_basis(catalogue.cantor())
        assert basis.indices == ()


class TestEvaluation(object):
    """Tests for dirichlet.evaluate(), dirichlet.derivative() and
    dirichlet.evaluate_zeta()"""
    def test_values(self):
        f = catalogue.two_three()
        assert abs(dirichlet.evaluate(f, 0) + 1) < 1e-70, "f(0) = 1 - 1 - 1."
        with mp.workprec(256):
            assert abs(dirichlet.evaluate(f, 1) - mpmath.mpf(1)/6) < 1e-70
            expected = mpmath.log(2)/2 + mpmath.log(3)/3
            assert abs(dirichlet.derivative(f, 1) - expected) < 1e-70
    #
    def test_zeta(self):
        zeta = catalogue.cantor_string()
        assert abs(dirichlet.evaluate_zeta(zeta, 0) + 1) < 1e-70
        with mp.workprec(256):
            s = mpmath.mpc(2, 1)
            third = mpmath.mpf(1)/3
            expected = third**s / (1 - 2*third**s)
            assert abs(dirichlet.evaluate_zeta(zeta, s) - expected) < 1e-60


class TestDimensionBounds(object):
    """Tests for dirichlet.dimension_bounds()"""
    def test_twothree(self):
        bounds = dirichlet.dimension_bounds(catalogue.two_three())
        assert abs(bounds.D - mpmath.mpf('0.787885')) < 1e-5, \
            "D solves 2^-D + 3^-D = 1."
        assert abs(bounds.D_ell + 1) < 1e-30, "D_l solves 1 + 2^-x = 3^-x."
        assert bounds.width < 1e-30 and bounds.width_ell < 1e-30
        assert abs(dirichlet.evaluate(catalogue.two_three(), bounds.D)) < \
            1e-30
    #
    def test_cantor(self):
        bounds = dirichlet.dimension_bounds(catalogue.cantor())
        with mp.workprec(256):
            expected = mpmath.log(2) / mpmath.log(3)
        assert abs(bounds.D - expected) < 1e-30
        assert abs(bounds.D_ell - expected) < 1e-30, \
            "With one term D_l equals D."
    #
    def test_ordering(self):
        for name, make in catalogue.CATALOGUE.items():
            bounds = dirichlet.dimension_bounds(make(), 128)
            assert bounds.D_ell <= bounds.D, "D_l > D for " + name


class TestLSAConstant(object):
    """Tests for dirichlet.lsa_constant() and dirichlet.lsa_constant_type1()"""
    constants = {
        '2-3': 8.267e-4,
        'golden': 1.0107e-3,
        'type1_2': 1.316e-4,
        '2-3-5-7': 5.24e-9,
        '3-4-13': 7.37e-4,
        'type1_3': 2.776e-3,
        }
    #
    def test_values(self):
        for name, value in self.constants.items():
            C = dirichlet.lsa_constant(catalogue.CATALOGUE[name]())
            assert abs(C/value - 1) < 0.01, "Wrong C for " + name
    #
    def test_type1(self):
        f = catalogue.type1_2()
        general = dirichlet.lsa_constant(f)
        special = dirichlet.lsa_constant_type1(Fraction(3, 10), "2",
            "log(6)/log(2)")
        assert abs(general/special - 1) < 1e-30, \
            "The type-1 formula should agree with the general one."
#
#### EOF #######################################################################
################################################################################
