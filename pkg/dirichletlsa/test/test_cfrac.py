"""py.test tests for the dirichletlsa.cfrac module"""

################################################################################
#### LIBRARIES #################################################################
#
## STANDARD PACKAGES ###########################################################
import math                             # Brute-force reference
from fractions import Fraction          # Rational inputs
import pytest                           # Exception checks
#
## OTHER PARTS OF DIRICHLETLSA #################################################
from .. import cfrac                    # Under test
from ..errors import PrecisionExhaustedError


################################################################################
#### TEST CLASSES ##############################################################
#
class TestConvergents(object):
    """Tests for cfrac.convergents()"""
    # (b, a) pairs, i.e. (q, k)
    log23 = [(1, 1), (1, 2), (2, 3), (5, 8), (12, 19), (41, 65), (53, 84),
        (306, 485), (665, 1054), (15601, 24727), (31867, 50508),
        (79335, 125743), (111202, 176251)]
    golden = [(610, 987), (987, 1597), (1597, 2584), (2584, 4181),
        (17711, 28657), (121393, 196418)]
    #
    def test_log23(self):
        found = [(c.b, c.a) for c in cfrac.convergents("log(3)/log(2)",
            len(self.log23))]
        assert found == self.log23, "Wrong convergents of log2(3)."
    #
    def test_golden(self):
        found = set((c.b, c.a) for c in cfrac.convergents("(1+1*sqrt(5))/2",
            30))
        for pair in self.golden:
            assert pair in found, "Missing golden convergent " + str(pair)
    #
    def test_indices(self):
        found = cfrac.convergents("log(3)/log(2)", 5)
        assert [c.index for c in found] == [1, 2, 3, 4, 5]
    #
    def test_rational(self):
        found = cfrac.convergents(Fraction(7, 3), 10)
        assert [(c.a, c.b) for c in found] == [(2, 1), (7, 3)], \
            "A rational expansion should terminate at the number itself."
        found = cfrac.convergents("dec:0.25:irrational", 10)
        assert (found[-1].a, found[-1].b) == (1, 4), \
            "Decimal literals expand as the finite decimal they spell."
    #
    def test_badcount(self):
        with pytest.raises(ValueError):
            cfrac.convergents("log(3)/log(2)", 0)
    #
    def test_bestapproximation(self):
        x = math.log(3) / math.log(2)
        for c in cfrac.convergents("log(3)/log(2)", 10):
            if c.b > 10**4 or c.index < 3:
                continue
            error = abs(c.b*x - c.a)
            for b in range(1, c.b):
                assert abs(b*x - round(b*x)) > error, \
                    "Convergent " + str((c.b, c.a)) + " is beaten by b = " + \
                    str(b)


class TestConvergentStream(object):
    """Tests for cfrac.ConvergentStream"""
    def test_iteration(self):
        stream = cfrac.ConvergentStream("(1+1*sqrt(5))/2")
        first = [next(stream) for _ in range(6)]
        assert [(c.a, c.b) for c in first] == [(1, 1), (2, 1), (3, 2), (5, 3),
            (8, 5), (13, 8)], "The golden ratio expands in Fibonacci ratios."
        assert stream.quotients == [1]*6
        assert cfrac.next_convergent(stream) == stream.current
    #
    def test_finished(self):
        stream = cfrac.ConvergentStream(Fraction(1, 2))
        assert list(stream)[-1].b == 2
        assert stream.finished and stream.advance() is None
    #
    def test_precisiondoubling(self):
        stream = cfrac.ConvergentStream("log(3)/log(2)", precision=16)
        found = [(c.b, c.a) for c in (stream.advance() for _ in range(13))]
        assert found == TestConvergents.log23, \
            "Doubling the precision should not change the convergents."
        assert stream.precision > 16
    #
    def test_exhausted(self):
        stream = cfrac.ConvergentStream("log(3)/log(2)", precision=8,
            maxPrecision=8)
        with pytest.raises(PrecisionExhaustedError):
            for _ in range(60):
                stream.advance()
#
#### EOF #######################################################################
################################################################################
