"""py.test tests for the dirichletlsa.numerics module

Parsing of the expression grammar, certified evaluation and the exact
rational-rank machinery that classification is built on.

"""

################################################################################
#### LIBRARIES #################################################################
#
## STANDARD PACKAGES ###########################################################
from fractions import Fraction          # Exact expectations
import pytest                           # Exception checks
import mpmath                           # Reference values
from mpmath import mp, iv
#
## OTHER PARTS OF DIRICHLETLSA #################################################
from .. import numerics                 # Under test
from ..errors import ValidationError, ClassificationError


################################################################################
#### TEST CLASSES ##############################################################
#
class TestParseExpr(object):
    """Tests for numerics.parse_expr() and numerics.format_expr()"""
    canonical = ["7/3", "log(3)/log(2)", "(1+1*sqrt(5))/2",
        "dec:0.25:irrational", "dec:1.5",
        "log(3)/log(2) + (0+1*sqrt(100003))/100003"]
    #
    def test_variants(self):
        assert numerics.parse_expr("1/2") == \
            numerics.RealExpr(numerics.EXPR_RATIONAL, (Fraction(1, 2),))
        e = numerics.parse_expr("log(3)/log(2)")
        assert e.variant == numerics.EXPR_LOGQUOTIENT, "Wrong variant."
        assert e.args == (3, 2), "Wrong log quotient arguments."
        e = numerics.parse_expr("(1+1*sqrt(5))/2")
        assert e.args == (1, 1, 5, 2), "Wrong quadratic surd arguments."
        e = numerics.parse_expr("log(3)/log(2) + 1")
        assert e.variant == numerics.EXPR_SUM and len(e.args) == 2, \
            "Sums should keep one term per summand."
    #
    def test_roundtrip(self):
        for text in self.canonical:
            assert numerics.format_expr(numerics.parse_expr(text)) == text, \
                "format_expr() should invert parse_expr() on " + text
    #
    def test_errorcolumn(self):
        with pytest.raises(ValidationError) as info:
            numerics.parse_expr("1 + foo", column=5)
        assert info.value.column == 9, \
            "The column should point at the offending term."
    #
    def test_badinputs(self):
        for text in ["", "log(3)/log(1)", "(1+1*sqrt(4))/2", "(1+1*sqrt(5))/0",
                "dec:abc", "sqrt(2)"]:
            with pytest.raises(ValidationError):
                numerics.parse_expr(text)


class TestIsRational(object):
    """Tests for numerics.is_rational()"""
    def test_logquotients(self):
        assert numerics.is_rational("log(8)/log(2)") == (True, 3)
        assert numerics.is_rational("log(4)/log(8)") == (True, Fraction(2, 3))
        assert numerics.is_rational("log(1)/log(7)") == (True, 0)
        assert numerics.is_rational("log(3)/log(2)") == (False, None)
        assert numerics.is_rational("log(6)/log(4)") == (False, None)
    #
    def test_others(self):
        assert numerics.is_rational("(3+0*sqrt(5))/3") == (True, 1)
        assert numerics.is_rational("(1+1*sqrt(5))/2") == (False, None)
        assert numerics.is_rational("dec:0.5") == (True, Fraction(1, 2))
        assert numerics.is_rational("dec:0.5:irrational") == (False, None)
    #
    def test_sums(self):
        # log2(6) - log2(3) = 1
        e = numerics.sum_expr(["log(6)/log(2)", "log(1/3)/log(2)"])
        assert numerics.is_rational(e) == (True, 1), \
            "Cancelling logarithms should sum to a rational."
        e = numerics.sum_expr(["(0+1*sqrt(2))/1", "(0-1*sqrt(2))/1", "1/2"])
        assert numerics.is_rational(e) == (True, Fraction(1, 2))
        assert not numerics.is_rational("log(3)/log(2) + 1")[0]


class TestEvaluation(object):
    """Tests for the certified evaluation functions"""
    def test_evalexpr(self):
        with mp.workprec(200):
            log23 = mpmath.log(3) / mpmath.log(2)
            phi = (1 + mpmath.sqrt(5)) / 2
            tol = mpmath.ldexp(1, -120)
            assert abs(numerics.eval_expr("log(3)/log(2)", 128) - log23) < \
                tol, "log(3)/log(2) is inaccurate."
            assert abs(numerics.eval_expr("(1+1*sqrt(5))/2", 128) - phi) < \
                tol, "The golden ratio is inaccurate."
        assert numerics.eval_expr("log(8)/log(2)") == 3, \
            "Rational log quotients should evaluate exactly."
    #
    def test_enclosure(self):
        enclosure = numerics.expr_interval(numerics.parse_expr(
            "log(3)/log(2)"), 64)
        with mp.workprec(200):
            value = mpmath.log(3) / mpmath.log(2)
            assert numerics.lower(enclosure) <= value <= \
                numerics.upper(enclosure), "Enclosure misses the value."
            assert numerics.upper(enclosure) - numerics.lower(enclosure) < \
                mpmath.ldexp(1, -55), "Enclosure is too wide."
    #
    def test_ivprec(self):
        saved = iv.prec
        with numerics.ivprec(300) as ctx:
            assert ctx.prec == 300
        assert iv.prec == saved, "ivprec() should restore the precision."
    #
    def test_tompf(self):
        with mp.workprec(64):
            assert numerics.to_mpf(Fraction(1, 4), 64) == mpmath.mpf(0.25)
        assert numerics.to_mpf(3) == 3
    #
    def test_exactvalue(self):
        assert numerics.exact_value("1/10") == Fraction(1, 10)
        assert numerics.exact_value(2) == Fraction(2)
        assert isinstance(numerics.exact_value("log(3)/log(2)"),
            numerics.RealExpr), "Irrational values should stay expressions."


class TestRationalRank(object):
    """Tests for numerics.rational_rank() and its helpers"""
    def test_helpers(self):
        assert numerics.squarefree_split(12) == (2, 3)
        assert numerics.squarefree_split(7) == (1, 7)
        assert numerics.multiplicative_ratio(8, 4) == Fraction(3, 2)
        assert numerics.multiplicative_ratio(6, 2) is None
        assert numerics.prime_exponents(Fraction(12, 5)) == \
            {2: 2, 3: 1, 5: -1}
    #
    def test_ranks(self):
        cases = [
            (["1", "log(3)/log(2)"], 2),
            (["1", "log(3)/log(2)", "2", "log(6)/log(2)"], 2),
            (["1", "log(3)/log(2)", "log(5)/log(2)", "log(7)/log(2)"], 4),
            (["1", "log(4)/log(3)", "log(13)/log(3)"], 3),
            (["1", "log(3)/log(2)", "log(3)/log(2) + (0+1*sqrt(100003))/100003",
                "log(3)/log(2) + (0+1*sqrt(100003))/100003 + 1"], 3),
            (["1", "(1+1*sqrt(5))/2"], 2),
            (["1", "(0+1*sqrt(8))/1", "(0+1*sqrt(2))/3"], 2),
            (["1", "3/2", "dec:1.5:irrational"], 2),
            (["1", "log(9)/log(3)"], 1),
            ]
        for exprs, rank in cases:
            assert numerics.rational_rank(exprs) == rank, \
                "Wrong rank for " + repr(exprs)
    #
    def test_undecidable(self):
        with pytest.raises(ClassificationError):
            numerics.rational_rank(["1", "log(3)/log(2)", "log(5)/log(3)"])
        with pytest.raises(ClassificationError):
            numerics.rational_rank(["1", "dec:1.1:irrational",
                "dec:1.2:irrational"])
        with pytest.raises(ClassificationError):
            numerics.rational_rank(["1", "log(3)/log(2)",
                "dec:1.1:irrational"])
#
#### EOF #######################################################################
################################################################################
