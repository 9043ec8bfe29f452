"""Dirichlet polynomials f(s) = 1 - sum_j m_j r_j^s.

Scaling ratios are stored as a base ratio r_1 and exact exponents
alpha_j = w_j/w_1 (so r_j = r_1^alpha_j), which makes the lattice/nonlattice
question and the rational rank of the weights exact. This module builds
polynomials (directly or from self-similar string data), evaluates them and
their derivative, classifies them, and computes the dimension bounds D_l, D
and the LSA constant C.

"""


################################################################################
#### LIBRARIES #################################################################
#
## STANDARD PACKAGES ###########################################################
import math                             # lcm of denominators
from fractions import Fraction          # Exact ratios, gaps and multiplicities
from collections import namedtuple      # Lightweight structures
import mpmath                           # Multiprecision evaluation
from mpmath import mp
import sympy                            # Exact solves for rational relations
#
## OTHER PARTS OF DIRICHLETLSA #################################################
from dirichletlsa import numerics
from dirichletlsa.errors import ValidationError, PrecisionExhaustedError


################################################################################
#### CONSTANTS #################################################################
#
KIND_LATTICE = 'lattice'
KIND_NONLATTICE = 'nonlattice'
#
# Bracket doublings allowed before the dimension bisection gives up
MAXBRACKETDOUBLINGS = 200
#
# Precision used to certify that exponents are strictly increasing
ORDERPRECISION = 4*numerics.DEFAULTPRECISION


################################################################################
#### DATA STRUCTURES ###########################################################
#
DirichletPolynomial = namedtuple("DirichletPolynomial",
    "base_ratio exponents multiplicities")
DirichletPolynomial.__doc__ = \
"""f(s) = 1 - sum_{j=1}^N m_j r_j^s with r_j = r_1^alpha_j.

Build with ``dirichlet_polynomial``, which validates every invariant.

Attributes:
    base_ratio (RealExpr): r_1, strictly between 0 and 1.
    exponents (tuple of RealExpr): 1 = alpha_1 < alpha_2 < ... < alpha_N.
    multiplicities (tuple): Nonzero real m_j; Fractions when given exactly,
        otherwise RealExpr or mpf.

"""


Classification = namedtuple("Classification",
    "kind generator q k rank generic")
Classification.__doc__ = \
"""Lattice/nonlattice classification of a Dirichlet polynomial.

Attributes:
    kind (str): KIND_LATTICE or KIND_NONLATTICE.
    generator (tuple or None): (r_1, q) standing for the multiplicative
        generator r = r_1^(1/q), lattice case only.
    q (int or None): k_1, the exponent of the generator in r_1.
    k (tuple of int or None): k_1..k_N with r_j = r^k_j and gcd 1.
    rank (int): Rational rank of the weights (1 for lattice).
    generic (bool): True iff rank equals N.

"""


DimensionBounds = namedtuple("DimensionBounds", "D_ell D width_ell width")
DimensionBounds.__doc__ = \
"""The real bounds D_l <= Re(s) <= D of the roots of f.

Attributes:
    D_ell (mpf): Solution of 1 + sum_{j<N}|m_j| r_j^x = |m_N| r_N^x.
    D (mpf): Solution of sum_j |m_j| r_j^x = 1.
    width_ell (mpf): Width of the certified enclosure of D_ell.
    width (mpf): Width of the certified enclosure of D.

"""


RationalBasis = namedtuple("RationalBasis",
    "indices constants coefficients denominator")
RationalBasis.__doc__ = \
"""Rational relations alpha_j = c_j + sum_i t_ji beta_i among the exponents.

Attributes:
    indices (tuple of int): Positions (0-based) of the exponents chosen as
        the independent irrationals beta_i.
    constants (tuple of Fraction): c_j, one per exponent.
    coefficients (tuple of tuple of Fraction): t_ji, one row per exponent.
    denominator (int): Common denominator of every c_j and t_ji.

"""


GeometricZeta = namedtuple("GeometricZeta",
    "gaps length denominator singlegap")
GeometricZeta.__doc__ = \
"""Geometric zeta function L^s sum_k g_k^s / f(s) of a self-similar string.

Attributes:
    gaps (tuple of Fraction): Gap scales g_1..g_K.
    length (Fraction): Total length L.
    denominator (DirichletPolynomial): f(s); when ``singlegap`` is set its
        roots are exactly the complex dimensions of the string.
    singlegap (bool): True iff all gap scales are equal.

"""


################################################################################
#### CONSTRUCTORS ##############################################################
#
def dirichlet_polynomial(base_ratio, exponents, multiplicities):
    """Build a validated DirichletPolynomial.

    Args:
        base_ratio: r_1 in (0, 1) (Fraction, expression string or RealExpr).
        exponents (sequence): alpha_1..alpha_N, alpha_1 = 1, strictly
            increasing.
        multiplicities (sequence): m_1..m_N, nonzero reals.

    Returns:
        DirichletPolynomial

    Raises:
        ValidationError: On any violated invariant.

    """
    base = numerics.as_expr(base_ratio)
    enclosure = numerics.to_interval(base, ORDERPRECISION)
    if (enclosure > 0) is not True or (enclosure < 1) is not True:
        raise ValidationError("base ratio " + numerics.format_expr(base) +
            " must lie strictly between 0 and 1")
    exponents = tuple(numerics.as_expr(e) for e in exponents)
    if len(exponents) < 1:
        raise ValidationError("a Dirichlet polynomial needs at least one term")
    if numerics.is_rational(exponents[0]) != (True, Fraction(1)):
        raise ValidationError("the first exponent must be exactly 1, got " +
            numerics.format_expr(exponents[0]))
    enclosures = [numerics.to_interval(e, ORDERPRECISION) for e in exponents]
    for j in range(1, len(exponents)):
        if (enclosures[j] > enclosures[j-1]) is not True:
            raise ValidationError("exponents must be strictly increasing: " +
                numerics.format_expr(exponents[j]) + " does not exceed " +
                numerics.format_expr(exponents[j-1]))
    multiplicities = tuple(numerics.exact_value(m) for m in multiplicities)
    if len(multiplicities) != len(exponents):
        raise ValidationError("got " + str(len(multiplicities)) +
            " multiplicities for " + str(len(exponents)) + " exponents")
    for m in multiplicities:
        if numerics.to_mpf(m) == 0:
            raise ValidationError("multiplicities must be nonzero")
    return DirichletPolynomial(base, exponents, multiplicities)
#
#
def from_self_similar_string(ratios, gaps, length=1):
    """Geometric zeta function of a self-similar string.

    Args:
        ratios (sequence): Scaling ratios, each a rational r or a pair
            (r, multiplicity).
        gaps (sequence): Gap scales g_1..g_K, rationals in (0, 1).
        length: Total length L > 0.

    Returns:
        GeometricZeta whose denominator has one term per distinct ratio,
        largest ratio first.

    Raises:
        ValidationError: If a ratio or gap is outside (0, 1), or if
            sum r_j + sum g_k != 1 with multiplicities expanded.

    """
    counts = {}
    for item in ratios:
        if isinstance(item, tuple):
            ratio, multiplicity = Fraction(item[0]), int(item[1])
        else:
            ratio, multiplicity = Fraction(item), 1
        if not 0 < ratio < 1:
            raise ValidationError("scaling ratio " + str(ratio) +
                " must lie strictly between 0 and 1")
        if multiplicity < 1:
            raise ValidationError("ratio multiplicities must be positive")
        counts[ratio] = counts.get(ratio, 0) + multiplicity
    gaps = tuple(Fraction(g) for g in gaps)
    for gap in gaps:
        if not 0 < gap < 1:
            raise ValidationError("gap " + str(gap) +
                " must lie strictly between 0 and 1")
    length = Fraction(length)
    if length <= 0:
        raise ValidationError("the string length must be positive")
    ratioTotal = sum((r*m for r, m in counts.items()), Fraction(0))
    if not counts or ratioTotal >= 1:
        raise ValidationError("scaling ratios must sum to less than 1")
    if ratioTotal + sum(gaps, Fraction(0)) != 1:
        raise ValidationError("scaling ratios and gaps must sum to 1, got " +
            str(ratioTotal + sum(gaps, Fraction(0))))
    ordered = sorted(counts, reverse=True)
    largest = ordered[0]
    exponents = []
    for ratio in ordered:
        e = numerics.log_quotient_expr(1/ratio, 1/largest)
        isRational, value = numerics.is_rational(e)
        exponents.append(numerics.rational_expr(value) if isRational else e)
    denominator = dirichlet_polynomial(largest, exponents,
        [counts[r] for r in ordered])
    return GeometricZeta(gaps, length, denominator, len(set(gaps)) == 1)


################################################################################
#### EVALUATION ################################################################
#
def weights(f, precision=numerics.DEFAULTPRECISION):
    """w_j = alpha_j * (-log r_1) as mpf values."""
    with mp.workprec(precision + numerics.GUARDBITS):
        first = -mpmath.log(numerics.to_mpf(f.base_ratio,
            precision + numerics.GUARDBITS))
        return [numerics.to_mpf(e, precision + numerics.GUARDBITS)*first
            for e in f.exponents]
#
#
def _multiplicities(f, precision):
    return [numerics.to_mpf(m, precision) for m in f.multiplicities]
#
#
def evaluate(f, s, precision=numerics.DEFAULTPRECISION):
    """f(s) = 1 - sum_j m_j exp(-w_j s)."""
    workPrecision = precision + numerics.GUARDBITS
    w = weights(f, precision)
    m = _multiplicities(f, workPrecision)
    with mp.workprec(workPrecision):
        s = mpmath.mpc(s)
        total = mpmath.mpc(1)
        for mj, wj in zip(m, w):
            total -= mj*mpmath.exp(-wj*s)
    with mp.workprec(precision):
        return +total
#
#
def derivative(f, s, precision=numerics.DEFAULTPRECISION):
    """f'(s) = sum_j m_j w_j exp(-w_j s)."""
    workPrecision = precision + numerics.GUARDBITS
    w = weights(f, precision)
    m = _multiplicities(f, workPrecision)
    with mp.workprec(workPrecision):
        s = mpmath.mpc(s)
        total = mpmath.mpc(0)
        for mj, wj in zip(m, w):
            total += mj*wj*mpmath.exp(-wj*s)
    with mp.workprec(precision):
        return +total
#
#
def evaluate_zeta(zeta, s, precision=numerics.DEFAULTPRECISION):
    """L^s sum_k g_k^s / f(s) for a GeometricZeta."""
    workPrecision = precision + numerics.GUARDBITS
    denominator = evaluate(zeta.denominator, s, workPrecision)
    with mp.workprec(workPrecision):
        s = mpmath.mpc(s)
        numerator = mpmath.mpc(0)
        for gap in zeta.gaps:
            numerator += mpmath.power(numerics.to_mpf(gap, workPrecision), s)
        numerator *= mpmath.power(numerics.to_mpf(zeta.length,
            workPrecision), s)
        value = numerator / denominator
    with mp.workprec(precision):
        return +value


################################################################################
#### CLASSIFICATION ############################################################
#
def classify(f):
    """Lattice/nonlattice classification with rank and genericity.

    Args:
        f (DirichletPolynomial): The polynomial.

    Returns:
        Classification

    Raises:
        ClassificationError: If the rank cannot be decided exactly (opaque
            decimal exponents mixed with other irrationals).

    """
    N = len(f.exponents)
    flags = [numerics.is_rational(e) for e in f.exponents]
    if all(isRational for isRational, _ in flags):
        q = 1
        for _, value in flags:
            q = math.lcm(q, value.denominator)
        k = tuple(int(value*q) for _, value in flags)
        return Classification(KIND_LATTICE, (f.base_ratio, q), q, k, 1,
            N == 1)
    rank = numerics.rational_rank(f.exponents)
    return Classification(KIND_NONLATTICE, None, None, None, rank, rank == N)
#
#
def rational_basis(f):
    """Choose independent irrational exponents and express the rest over them.

    Exponents are scanned in order; one joins the basis when it is not a
    rational combination of 1 and the exponents already chosen.

    Returns:
        RationalBasis

    Raises:
        ClassificationError: As ``classify``.

    """
    matrix = numerics.coordinate_matrix(f.exponents)
    rows = [matrix.row(j) for j in range(matrix.rows)]
    chosen = []
    basisRows = [rows[0]]
    for j in range(1, len(rows)):
        candidate = sympy.Matrix.vstack(*(basisRows + [rows[j]]))
        if candidate.rank() > len(basisRows):
            chosen.append(j)
            basisRows.append(rows[j])
    columns = sympy.Matrix.vstack(*basisRows).T
    normal = columns.T * columns
    constants = []
    coefficients = []
    denominator = 1
    for row in rows:
        solution = normal.solve(columns.T * row.T)
        values = [numerics.from_sympy(v) for v in solution]
        for value in values:
            denominator = math.lcm(denominator, value.denominator)
        constants.append(values[0])
        coefficients.append(tuple(values[1:]))
    return RationalBasis(tuple(chosen), tuple(constants), tuple(coefficients),
        denominator)


################################################################################
#### DIMENSION BOUNDS ##########################################################
#
def _bisect(func, lo, hi, precision):
    """Certified bisection of a decreasing function given as an interval map.

    ``func`` maps a point to an interval enclosure; [lo, hi] is expanded
    geometrically until func(lo) > 0 > func(hi).

    """
    doublings = 0
    while (func(lo) > 0) is not True:
        lo = lo - (hi - lo)
        doublings += 1
        if doublings > MAXBRACKETDOUBLINGS:
            raise PrecisionExhaustedError("cannot bracket the root from below")
    while (func(hi) < 0) is not True:
        hi = hi + (hi - lo)
        doublings += 1
        if doublings > MAXBRACKETDOUBLINGS:
            raise PrecisionExhaustedError("cannot bracket the root from above")
    target = mpmath.ldexp(1, -(precision // 2))
    with mp.workprec(precision + numerics.GUARDBITS):
        while hi - lo > target:
            mid = (lo + hi) / 2
            value = func(mid)
            if (value > 0) is True:
                lo = mid
            elif (value < 0) is True:
                hi = mid
            else:
                # f(mid) cannot be told from zero: mid is the root to working
                # precision
                return mid, target
        return (lo + hi) / 2, hi - lo
#
#
def dimension_bounds(f, precision=numerics.DEFAULTPRECISION):
    """Solve for D and D_l by certified bisection.

    Args:
        f (DirichletPolynomial): The polynomial.
        precision (int): Bits; enclosures are narrowed to 2^(-precision/2).

    Returns:
        DimensionBounds

    Raises:
        PrecisionExhaustedError: If a bracket cannot be found (not expected:
            both equations are strictly monotone).

    For N = 1 the sum in the D_l equation is empty and D_l = D.

    """
    workPrecision = precision + numerics.GUARDBITS
    w = weights(f, workPrecision)
    m = [abs(v) for v in _multiplicities(f, workPrecision)]
    with numerics.ivprec(workPrecision) as ctx:
        wI = [ctx.mpf(v) for v in w]
        mI = [ctx.mpf(v) for v in m]
    #
    def dimension(x):
        with numerics.ivprec(workPrecision) as ctx:
            x = ctx.mpf(x)
            total = ctx.mpf(-1)
            for mj, wj in zip(mI, wI):
                total = total + mj*ctx.exp(-wj*x)
            return total
    #
    def lowerdimension(x):
        # Both sides of the D_l equation divided by r_N^x, so it decreases
        with numerics.ivprec(workPrecision) as ctx:
            x = ctx.mpf(x)
            total = mI[-1] - ctx.exp(wI[-1]*x)
            for mj, wj in zip(mI[:-1], wI[:-1]):
                total = total - mj*ctx.exp((wI[-1] - wj)*x)
            return total
    #
    with mp.workprec(workPrecision):
        D, width = _bisect(dimension, mpmath.mpf(-1), mpmath.mpf(1),
            precision)
        Dl, widthl = _bisect(lowerdimension, mpmath.mpf(-1), D + 1,
            precision)
    with mp.workprec(precision):
        return DimensionBounds(+Dl, +D, +widthl, +width)


################################################################################
#### LSA CONSTANT ##############################################################
#
def lsa_constant(f, precision=numerics.DEFAULTPRECISION):
    """C = (1/2pi) sum|m_j| ((sum_{0..N}|m_j|)/min(1,|m_N|))^(-2w_N/gap).

    ``gap`` is min(w_1, w_N - w_{N-1}) with w_0 = 0 and |m_0| = 1; in terms of
    the exponents the constant does not depend on r_1.

    """
    workPrecision = precision + numerics.GUARDBITS
    m = [abs(v) for v in _multiplicities(f, workPrecision)]
    alpha = [numerics.to_mpf(e, workPrecision) for e in f.exponents]
    with mp.workprec(workPrecision):
        total = mpmath.fsum(m)
        previous = alpha[-2] if len(alpha) > 1 else mpmath.mpf(0)
        gap = min(alpha[0], alpha[-1] - previous)
        base = (1 + total) / min(1, m[-1])
        C = total / (2*mpmath.pi) * mpmath.power(base, -2*alpha[-1]/gap)
    with mp.workprec(precision):
        return +C
#
#
def lsa_constant_type1(xi, alpha_Nm1, alpha_N,
        precision=numerics.DEFAULTPRECISION):
    """C for polynomials with m_N = 1 and xi = sum_{j<N}|m_j|.

    C = ((xi + 1)/2pi) * (1/(xi + 2)^2)^(alpha_N / min(1, alpha_N - alpha_{N-1}))

    """
    workPrecision = precision + numerics.GUARDBITS
    xi = numerics.to_mpf(numerics.exact_value(xi), workPrecision)
    previous = numerics.to_mpf(alpha_Nm1, workPrecision)
    last = numerics.to_mpf(alpha_N, workPrecision)
    with mp.workprec(workPrecision):
        exponent = last / min(1, last - previous)
        C = (xi + 1)/(2*mpmath.pi) * mpmath.power(1/(xi + 2)**2, exponent)
    with mp.workprec(precision):
        return +C
#
#### EOF #######################################################################
################################################################################
