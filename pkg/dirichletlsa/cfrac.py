"""Continued fractions and convergents of exactly-specified reals.

Partial quotients of irrational inputs are extracted with interval
arithmetic: a quotient is only emitted once floor() agrees at both ends of the
enclosure of the current remainder. When it does not, the stream re-evaluates
its input at twice the precision and replays the quotients already found.
Rational inputs run the Euclidean algorithm on exact fractions and terminate.

"""


################################################################################
#### LIBRARIES #################################################################
#
## STANDARD PACKAGES ###########################################################
import math                             # floor of exact fractions
from fractions import Fraction          # Exact rational remainders
from collections import namedtuple      # Lightweight structures
import mpmath                           # Endpoint floors
#
## OTHER PARTS OF DIRICHLETLSA #################################################
from dirichletlsa import numerics
from dirichletlsa.errors import PrecisionExhaustedError


################################################################################
#### DATA STRUCTURES ###########################################################
#
Convergent = namedtuple("Convergent", "a b index")
Convergent.__doc__ = \
"""One convergent a/b of a simple continued fraction.

Attributes:
    a (int): Numerator.
    b (int): Denominator, positive; gcd(a, b) = 1.
    index (int): 1-based position in the sequence of convergents.

"""


################################################################################
#### CLASSES ###################################################################
#
class ConvergentStream(object):
    """Lazily produced convergents of one real number.

    A stream is single-owner mutable state: it remembers the partial quotients
    found so far, the last two convergents, and the enclosure of the current
    remainder.

    Attributes:
        x (RealExpr): The number being expanded.
        exact (Fraction or None): Exact value when x is rational in value.
        precision (int): Current working precision (bits).
        maxPrecision (int): Precision cap; exceeding it raises.
        quotients (list of int): Partial quotients emitted so far.
        current (Convergent or None): Last convergent emitted.
        finished (bool): True once a rational expansion has terminated.

    """
    # Default precision cap, as a multiple of the starting precision
    PRECISIONCAPFACTOR = 8
    #
    def __init__(self, x, precision=numerics.DEFAULTPRECISION,
            maxPrecision=None):
        """Open a stream on x.

        Args:
            x: RealExpr (or anything numerics.as_expr accepts).
            precision (int): Starting precision in bits.
            maxPrecision (int): Cap for automatic precision doubling. Defaults
                to PRECISIONCAPFACTOR times the starting precision.

        Raises:
            ValidationError: If x cannot be interpreted.

        """
        self.x = numerics.as_expr(x)
        isRational, value = numerics.is_rational(self.x)
        if not isRational and self.x.variant == numerics.EXPR_DECIMAL:
            # A literal's value is a finite decimal whatever it stands for
            value = Fraction(self.x.args[0])
        self.exact = value
        self.precision = precision
        if maxPrecision is None:
            maxPrecision = self.PRECISIONCAPFACTOR * precision
        self.maxPrecision = maxPrecision
        self.quotients = []
        self.current = None
        self.finished = False
        self._h = (1, 0)
        self._k = (0, 1)
        if self.exact is not None:
            self._remainder = self.exact
        else:
            self._remainder = numerics.expr_interval(self.x, precision)
    #
    #
    def __iter__(self):
        return self
    #
    #
    def __next__(self):
        convergent = self.advance()
        if convergent is None:
            raise StopIteration
        return convergent
    #
    #
    def _replay(self):
        """Recompute the remainder enclosure at the current precision."""
        y = numerics.expr_interval(self.x, self.precision)
        with numerics.ivprec(self.precision) as ctx:
            for quotient in self.quotients:
                y = ctx.mpf(1) / (y - quotient)
        self._remainder = y
    #
    #
    def _nextquotient(self):
        if self.exact is not None:
            quotient = math.floor(self._remainder)
            fractional = self._remainder - quotient
            if fractional == 0:
                self.finished = True
            else:
                self._remainder = 1 / fractional
            return quotient
        while True:
            y = self._remainder
            lo = numerics.lower(y)
            hi = numerics.upper(y)
            quotient = int(mpmath.floor(lo))
            if lo > quotient and hi < quotient + 1:
                with numerics.ivprec(self.precision) as ctx:
                    self._remainder = ctx.mpf(1) / (y - quotient)
                return quotient
            if 2*self.precision > self.maxPrecision:
                raise PrecisionExhaustedError("partial quotient " +
                    str(len(self.quotients) + 1) + " of " +
                    numerics.format_expr(self.x) + " is ambiguous at " +
                    str(self.precision) + " bits; raise the precision cap")
            self.precision *= 2
            self._replay()
    #
    #
    def advance(self):
        """Return the next convergent, or None at the end of a finite stream.

        Raises:
            PrecisionExhaustedError: If the next partial quotient cannot be
                certified below the precision cap.

        """
        if self.finished:
            return None
        quotient = self._nextquotient()
        self.quotients.append(quotient)
        h1, h2 = self._h
        k1, k2 = self._k
        a = quotient*h1 + h2
        b = quotient*k1 + k2
        self._h = (a, h1)
        self._k = (b, k1)
        self.current = Convergent(a, b, len(self.quotients))
        return self.current


################################################################################
#### FUNCTIONS #################################################################
#
def next_convergent(stream):
    """Advance a ConvergentStream; None signals the end of a rational input."""
    return stream.advance()
#
#
def convergents(x, count, precision=numerics.DEFAULTPRECISION):
    """The first ``count`` convergents of x.

    Args:
        x: RealExpr or anything numerics.as_expr accepts.
        count (int): Number of convergents wanted, at least 1.
        precision (int): Starting precision; doubled automatically up to
            ConvergentStream.PRECISIONCAPFACTOR times this value.

    Returns:
        list of Convergent. Shorter than ``count`` only when x is rational and
        its expansion ends first.

    Raises:
        ValueError: If count < 1.
        PrecisionExhaustedError: If a term cannot be certified.

    """
    if count < 1:
        raise ValueError("count must be at least 1, got " + str(count))
    stream = ConvergentStream(x, precision)
    result = []
    while len(result) < count:
        convergent = stream.advance()
        if convergent is None:
            break
        result.append(convergent)
    return result
#
#### EOF #######################################################################
################################################################################
