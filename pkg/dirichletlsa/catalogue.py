"""Worked example polynomials.

Each constructor returns a validated DirichletPolynomial; ``CATALOGUE`` maps
the names used by the shipped spec files and the command line to them.

"""


################################################################################
#### LIBRARIES #################################################################
#
## STANDARD PACKAGES ###########################################################
from fractions import Fraction          # Exact multiplicities
#
## OTHER PARTS OF DIRICHLETLSA #################################################
from dirichletlsa import dirichlet


################################################################################
#### BASE CONSTANTS ############################################################
#
# Multiplicity of the scaled-down terms of the nongeneric examples
TENTH = Fraction(1, 10)
#
# The irrational shift a = 1/sqrt(100003) of the rank-three nongeneric example
SHIFT = "(0+1*sqrt(100003))/100003"


################################################################################
#### FUNCTIONS #################################################################
#
def two_three():
    """f(s) = 1 - 2^-s - 3^-s."""
    return dirichlet.dirichlet_polynomial(Fraction(1, 2),
        ["1", "log(3)/log(2)"], [1, 1])
#
#
def golden():
    """f(s) = 1 - 2^-s - 2^(-phi s), phi the golden ratio."""
    return dirichlet.dirichlet_polynomial(Fraction(1, 2),
        ["1", "(1+1*sqrt(5))/2"], [1, 1])
#
#
def type1_2():
    """f(s) = 1 - (2^-s + 3^-s + 4^-s)/10 - 6^-s, nongeneric of rank two."""
    return dirichlet.dirichlet_polynomial(Fraction(1, 2),
        ["1", "log(3)/log(2)", "2", "log(6)/log(2)"],
        [TENTH, TENTH, TENTH, 1])
#
#
def two_three_five_seven():
    """f(s) = 1 - 2^-s - 3^-s - 5^-s - 7^-s, generic of rank four."""
    return dirichlet.dirichlet_polynomial(Fraction(1, 2),
        ["1", "log(3)/log(2)", "log(5)/log(2)", "log(7)/log(2)"],
        [1, 1, 1, 1])
#
#
def three_four_thirteen():
    """f(s) = 1 - 3^-s - 4^-s - 13^-s, generic of rank three."""
    return dirichlet.dirichlet_polynomial(Fraction(1, 3),
        ["1", "log(4)/log(3)", "log(13)/log(3)"], [1, 1, 1])
#
#
def type1_3():
    """Exponents 1, log2(3), log2(3) + a, log2(3) + a + 1 with
    a = 1/sqrt(100003), r_1 = 1/2 and multiplicities 1/10, 1/10, 1/10, 1.

    Nongeneric of rank three.

    """
    return dirichlet.dirichlet_polynomial(Fraction(1, 2),
        ["1", "log(3)/log(2)", "log(3)/log(2) + " + SHIFT,
        "log(3)/log(2) + " + SHIFT + " + 1"], [TENTH, TENTH, TENTH, 1])
#
#
def cantor():
    """f(s) = 1 - 2*3^-s, the lattice polynomial of the Cantor string."""
    return dirichlet.dirichlet_polynomial(Fraction(1, 3), ["1"], [2])
#
#
def cantor_string():
    """Geometric zeta function of the Cantor string (ratios 1/3, 1/3; gap 1/3)."""
    return dirichlet.from_self_similar_string([Fraction(1, 3),
        Fraction(1, 3)], [Fraction(1, 3)])
#
#
CATALOGUE = {
    '2-3': two_three,
    'golden': golden,
    'type1_2': type1_2,
    '2-3-5-7': two_three_five_seven,
    '3-4-13': three_four_thirteen,
    'type1_3': type1_3,
    'cantor': cantor,
    }
#
#### EOF #######################################################################
################################################################################
