"""Simultaneous Diophantine approximation.

An SDA of reals x_1..x_n is a common denominator q with numerators k_j such
that every |x_j - k_j/q| < 1/(qQ) for a quality Q > 1. Two engines produce
them:

* ``lll_dio`` embeds rational approximations of the x_j in an (n+1)-row
  lattice whose reduced first row holds (b, a_1..a_n) with
  |x_j - a_j/b| <= delta/b.
* ``dio_stream`` drives ``lll_dio`` with the continued-fraction convergents
  of each x_j, advancing a coordinate's convergent whenever the LLL answer
  cannot tell it apart from the true value, and lowering delta after every
  emission. With a single irrational coordinate the convergents themselves
  are the approximations and the lattice is skipped.

"""


################################################################################
#### LIBRARIES #################################################################
#
## STANDARD PACKAGES ###########################################################
import math                             # lcm of denominators
from fractions import Fraction          # Exact delta and convergents
from collections import namedtuple      # Lightweight structures
import mpmath                           # Quality values, infinity sentinel
from mpmath import mp
#
## OTHER PARTS OF DIRICHLETLSA #################################################
from dirichletlsa import numerics
from dirichletlsa import cfrac
from dirichletlsa import lll
from dirichletlsa.errors import (ValidationError, IndeterminateError)


################################################################################
#### CONSTANTS #################################################################
#
PROVENANCE_CFRAC = 'continued-fraction'
PROVENANCE_LLL = 'lll-stream'
PROVENANCE_EXACT = 'exact'
#
# Quality of an exact hit
INFINITY = mpmath.inf


################################################################################
#### DATA STRUCTURES ###########################################################
#
SDA = namedtuple("SDA", "Q q k delta provenance")
SDA.__doc__ = \
"""A simultaneous Diophantine approximation Q, (q, k_2..k_N).

Attributes:
    Q (mpmath.mpf): Quality, > 1, or INFINITY for an exact hit.
    q (int): Common denominator, >= 1.
    k (tuple of int): Numerators k_2..k_N (k_1 = q is implicit).
    delta (Fraction or None): The delta that produced it in an LLL stream.
    provenance (str): PROVENANCE_CFRAC, PROVENANCE_LLL or PROVENANCE_EXACT.

"""


StreamConfig = namedtuple("StreamConfig", "delta0 n_steps max_iterations")
StreamConfig.__doc__ = \
"""Step control of ``dio_stream``; build with ``stream_config``.

Attributes:
    delta0 (Fraction): Starting delta, 0 < delta0 < 1.
    n_steps (int): Number of emissions before delta reaches zero; the step is
        delta0/n_steps.
    max_iterations (int): Total budget of lattice reductions.

"""


################################################################################
#### CONSTRUCTORS ##############################################################
#
def stream_config(delta0=Fraction(9, 10), n_steps=90, max_iterations=20000):
    """Build a StreamConfig, enforcing its ranges."""
    delta0 = Fraction(delta0)
    if not 0 < delta0 < 1:
        raise ValidationError("delta0 must lie strictly between 0 and 1, " +
            "got " + str(delta0))
    if int(n_steps) != n_steps or n_steps < 1:
        raise ValidationError("n_steps must be a positive integer")
    if int(max_iterations) != max_iterations or max_iterations < 1:
        raise ValidationError("max_iterations must be a positive integer")
    return StreamConfig(delta0, int(n_steps), int(max_iterations))


################################################################################
#### LATTICE EMBEDDING #########################################################
#
def embedding_scale(n, delta):
    """Corner entry delta^(n+1) / 2^ceil(n(n+1)/4) of the embedding basis."""
    return Fraction(delta)**(n+1) / 2**((n*(n+1) + 3) // 4)
#
#
def lll_dio(x, delta):
    """Simultaneous approximation of rationals by lattice reduction.

    Args:
        x (list of Fraction): The n numbers to approximate.
        delta (Fraction): Target accuracy, 0 < delta < 1.

    Returns:
        (int, tuple of int): b >= 1 and a_1..a_n with |x_j - a_j/b| <= delta/b.

    Raises:
        ValidationError: If x is empty or delta is out of range.
        ArithmeticError: If no reduced row has a nonzero first coordinate.

    The basis has first row (c, x_1, .., x_n) and rows -e_j below it. A
    reduced row is b*(c, x) - (0, a), so b and a are read off the unimodular
    transform.

    """
    x = [Fraction(v) for v in x]
    delta = Fraction(delta)
    n = len(x)
    if n < 1:
        raise ValidationError("lll_dio needs at least one number")
    if not 0 < delta < 1:
        raise ValidationError("delta must lie strictly between 0 and 1")
    corner = embedding_scale(n, delta)
    rows = [[corner] + x]
    for j in range(n):
        rows.append([Fraction(0)]*(j+1) + [Fraction(-1)] +
            [Fraction(0)]*(n-j-1))
    _, transform = lll.lll_reduce(lll.make_basis(rows))
    for row in transform:
        if row[0] != 0:
            b = row[0]
            a = row[1:]
            if b < 0:
                b = -b
                a = tuple(-v for v in a)
            return b, tuple(a)
    raise ArithmeticError("no reduced row has a nonzero first coordinate")
#
#
def sda_quality(x, b, a, precision=numerics.DEFAULTPRECISION):
    """Q = min_j 1/|x_j b - a_j|.

    Args:
        x (list): Reals (RealExpr, Fraction, mpf, ...).
        b (int): Common denominator, >= 1.
        a (sequence of int): Numerators.
        precision (int): Working precision.

    Returns:
        mpmath.mpf: A certified lower bound for Q at ``precision`` bits, or
            INFINITY if every x_j b = a_j exactly.

    Raises:
        ValidationError: If b < 1 or the lengths differ.
        IndeterminateError: If some x_j b - a_j cannot be told from zero.

    """
    if b < 1:
        raise ValidationError("the common denominator must be >= 1")
    if len(x) != len(a):
        raise ValidationError("x and a must have the same length")
    workPrecision = precision + numerics.GUARDBITS
    best = None
    for value, numerator in zip(x, a):
        if isinstance(value, (numerics.RealExpr, int, Fraction)):
            isRational, exact = numerics.is_rational(value) \
                if isinstance(value, numerics.RealExpr) \
                else (True, Fraction(value))
            if isRational and exact*b == numerator:
                continue
        enclosure = numerics.to_interval(value, workPrecision)
        with numerics.ivprec(workPrecision) as ctx:
            gap = abs(enclosure*b - numerator)
            if numerics.upper(gap) == 0:
                continue
            if numerics.lower(gap) == 0:
                raise IndeterminateError("cannot separate x*b from a at " +
                    str(precision) + " bits")
            inverse = numerics.lower(ctx.mpf(1) / gap)
        if best is None or inverse < best:
            best = inverse
    if best is None:
        return INFINITY
    with mp.workprec(precision):
        return +best
#
#
def round_quality(Q, precision):
    """Shave a relative 2^(-precision/2) off Q so the SDA bound is strict."""
    if Q == INFINITY:
        return Q
    with mp.workprec(precision):
        return Q * (1 - mpmath.ldexp(1, -(precision // 2)))


################################################################################
#### STREAMS ###################################################################
#
def _convergentstream(exprs, irrational, precision):
    """Rank-2 fast path: the convergents of the single irrational coordinate."""
    (ix,) = irrational
    denominator = 1
    exacts = {}
    for j, e in enumerate(exprs):
        if j != ix:
            exacts[j] = numerics.is_rational(e)[1]
            denominator = math.lcm(denominator, exacts[j].denominator)
    stream = cfrac.ConvergentStream(exprs[ix], precision)
    lastq = None
    for convergent in stream:
        q = convergent.b * denominator
        k = []
        for j in range(len(exprs)):
            if j == ix:
                k.append(convergent.a * denominator)
            else:
                k.append(int(exacts[j]*q))
        Q = sda_quality(exprs, q, k, precision)
        if Q <= 1 or q == lastq:
            continue
        lastq = q
        yield SDA(round_quality(Q, precision), q, tuple(k), None,
            PROVENANCE_CFRAC)
#
#
def _latticestream(exprs, irrational, config, precision):
    """The convergent-driven LLL stream for two or more irrational inputs."""
    n = len(exprs)
    workPrecision = precision + numerics.GUARDBITS
    streams = {}
    current = {}
    exacts = {}
    enclosures = {}
    for j, e in enumerate(exprs):
        if j in irrational:
            streams[j] = cfrac.ConvergentStream(e, precision)
            convergent = streams[j].advance()
            current[j] = Fraction(convergent.a, convergent.b)
            enclosures[j] = numerics.expr_interval(e, workPrecision)
        else:
            exacts[j] = numerics.is_rational(e)[1]
    #
    def advance(j):
        convergent = streams[j].advance()
        if convergent is not None:
            current[j] = Fraction(convergent.a, convergent.b)
    #
    delta = config.delta0
    step = config.delta0 / config.n_steps
    iterations = 0
    last = None
    while delta > 0 and iterations < config.max_iterations:
        iterations += 1
        vector = [current[j] if j in irrational else exacts[j]
            for j in range(n)]
        b, a = lll_dio(vector, delta)
        #
        # Case 2: the lattice answer is too close to a convergent to say
        # anything about the true value
        offending = []
        with numerics.ivprec(workPrecision):
            for j in irrational:
                errTrue = abs(enclosures[j] - numerics.rational_interval(
                    current[j]))
                errLattice = abs(Fraction(a[j], b) - current[j])
                isSeparated = numerics.rational_interval(errLattice) >= \
                    2*errTrue
                if isSeparated is not True:
                    offending.append(j)
        if offending:
            for j in offending:
                advance(j)
            continue
        #
        # Case 1
        Q = sda_quality(exprs, b, a, precision)
        if Q <= 1:
            for j in irrational:
                advance(j)
            continue
        if last != (b, a):
            last = (b, a)
            yield SDA(round_quality(Q, precision), b, tuple(a), delta,
                PROVENANCE_LLL)
        delta -= step
#
#
def dio_stream(x, config=None, precision=numerics.DEFAULTPRECISION):
    """Lazily produce SDAs of the reals x.

    Args:
        x (list of RealExpr): Numbers to approximate simultaneously; at least
            one must be irrational.
        config (StreamConfig): Delta schedule and budget (LLL path only).
        precision (int): Working precision in bits.

    Yields:
        SDA: Approximations with non-decreasing q in practice, each satisfying
            the SDA inequality with a certified margin.

    Raises:
        ValidationError: If x is empty or entirely rational.
        PrecisionExhaustedError: Propagated from the convergent streams.

    The stream ends when delta reaches zero or the iteration budget is spent
    (LLL path); the continued-fraction path is unbounded.

    """
    if config is None:
        config = stream_config()
    exprs = [numerics.as_expr(v) for v in x]
    if not exprs:
        raise ValidationError("dio_stream needs at least one number")
    irrational = [j for j, e in enumerate(exprs)
        if not numerics.is_rational(e)[0]]
    if not irrational:
        raise ValidationError("at least one number must be irrational")
    if len(irrational) == 1:
        return _convergentstream(exprs, irrational, precision)
    return _latticestream(exprs, irrational, config, precision)


################################################################################
#### VALIDATION ################################################################
#
def validate_sda(f, sda, precision=numerics.DEFAULTPRECISION):
    """Check |w_j/w_1 - k_j/q| < 1/(qQ) for j = 2..N with a certified margin.

    Args:
        f: A DirichletPolynomial (its exact exponents are used), or a
            sequence of weights w_1..w_N as mpf values.
        sda (SDA): The approximation to check.
        precision (int): Working precision.

    Returns:
        bool

    Raises:
        ValidationError: If the SDA has the wrong number of numerators.
        IndeterminateError: If the margin is below the working precision.

    """
    workPrecision = precision + numerics.GUARDBITS
    # (is exact hit, enclosure) per ratio j = 2..N
    checks = []
    if hasattr(f, 'exponents'):
        for ratio, numerator in zip(f.exponents[1:], sda.k):
            isRational, exact = numerics.is_rational(ratio)
            checks.append((isRational and exact == Fraction(numerator, sda.q),
                numerics.expr_interval(ratio, workPrecision)))
        nRatios = len(f.exponents) - 1
    else:
        weights = [mpmath.mpf(w) for w in f]
        with numerics.ivprec(workPrecision) as ctx, \
                mp.workprec(2*workPrecision):
            first = ctx.mpf(weights[0])
            for weight, numerator in zip(weights[1:], sda.k):
                checks.append((weight*sda.q == numerator*weights[0],
                    ctx.mpf(weight) / first))
        nRatios = len(weights) - 1
    if nRatios != len(sda.k):
        raise ValidationError("the SDA has " + str(len(sda.k)) +
            " numerators for " + str(nRatios) + " ratios")
    for (isExact, enclosure), numerator in zip(checks, sda.k):
        target = Fraction(numerator, sda.q)
        if isExact:
            continue
        if sda.Q == INFINITY:
            return False
        with numerics.ivprec(workPrecision) as ctx:
            gap = abs(enclosure - numerics.rational_interval(target))
            bound = ctx.mpf(1) / (sda.q * ctx.mpf(sda.Q))
            verdict = gap < bound
        if verdict is None:
            raise IndeterminateError("SDA margin is below " +
                str(precision) + " bits; raise the precision")
        if not verdict:
            return False
    return True
#
#### EOF #######################################################################
################################################################################
