"""Roots of lattice Dirichlet polynomials.

A lattice polynomial f(s) = 1 - sum_j m_j r^(k_j s) becomes the sparse
polynomial g(z) = 1 - sum_j m_j z^k_j in z = r^s. This module builds g, finds
all of its roots with the Aberth-Ehrlich simultaneous iteration (a vectorised
double-precision stage followed by multiprecision polishing with certified
residuals), and maps the roots back to complex dimensions, replicated over the
oscillatory period up to a chosen height.

"""


################################################################################
#### LIBRARIES #################################################################
#
## STANDARD PACKAGES ###########################################################
import math                             # Hull slopes, golden angle
import multiprocessing as mproc         # Parallel polishing sweeps
from fractions import Fraction          # Exact coefficients
from collections import namedtuple      # Lightweight structures
import numpy as np                      # Double-precision Aberth stage
from scipy.spatial import cKDTree       # Cluster detection
import mpmath                           # Multiprecision roots
from mpmath import mp
#
## OTHER PARTS OF DIRICHLETLSA #################################################
from dirichletlsa import numerics
from dirichletlsa import dirichlet
from dirichletlsa import parcore
from dirichletlsa import CPUCount
from dirichletlsa.errors import (ValidationError, DomainError,
    ConvergenceError)


################################################################################
#### CONSTANTS #################################################################
#
DOMAIN_Z = 'z-plane'
DOMAIN_S = 's-plane'
#
# Double-precision stage: iteration cap, relative step at which a root is
# left alone, and the row block used for the pairwise Aberth sums
DOUBLEMAXITER = 500
DOUBLESTEPTOL = 1e-12
BLOCKROWS = 512
#
# Multiprecision stage: sweeps per precision level, and the precision cap as a
# multiple of the requested precision
MAXSWEEPS = 12
PRECISIONCAPFACTOR = 8
#
GOLDENANGLE = math.pi*(3 - math.sqrt(5))


################################################################################
#### DATA STRUCTURES ###########################################################
#
SparsePoly = namedtuple("SparsePoly", "terms")
SparsePoly.__doc__ = \
"""g(z) = sum_t c_t z^e_t with few terms; build with ``sparse_poly``.

Attributes:
    terms (tuple of (int, coefficient)): Strictly increasing exponents, the
        first being (0, 1). Coefficients are Fractions when exact, otherwise
        mpf values.

"""


RootEntry = namedtuple("RootEntry", "value residual multiplicity")
RootEntry.__doc__ = \
"""One root of a RootSet.

Attributes:
    value (mpc): The root.
    residual (mpf): Certified relative backward residual of g at the z-plane
        root the entry comes from.
    multiplicity (int): Number of merged approximations, >= 1.

"""


RootSet = namedtuple("RootSet", "roots domain")
RootSet.__doc__ = \
"""Roots sorted by (Im, Re).

Attributes:
    roots (tuple of RootEntry): The roots.
    domain (str): DOMAIN_Z or DOMAIN_S.

"""


################################################################################
#### SPARSE POLYNOMIALS ########################################################
#
def sparse_poly(terms):
    """Build a validated SparsePoly.

    Args:
        terms (iterable of (int, coefficient)): Exponent/coefficient pairs in
            any order.

    Raises:
        ValidationError: If exponents repeat or are negative, a coefficient is
            zero, or the constant term is not exactly 1.

    """
    cleaned = []
    for e, c in terms:
        if int(e) != e or e < 0:
            raise ValidationError("exponents must be non-negative integers, " +
                "got " + repr(e))
        if isinstance(c, (int, Fraction)):
            c = Fraction(c)
        elif not isinstance(c, mpmath.mpf):
            c = numerics.to_mpf(c, dirichlet.ORDERPRECISION)
        if c == 0:
            raise ValidationError("coefficient of z^" + str(e) + " is zero")
        cleaned.append((int(e), c))
    cleaned.sort(key=lambda term: term[0])
    for (e1, _), (e2, _) in zip(cleaned, cleaned[1:]):
        if e1 == e2:
            raise ValidationError("exponent " + str(e1) + " appears twice")
    if not cleaned or cleaned[0] != (0, Fraction(1)):
        raise ValidationError("the constant term must be exactly 1")
    return SparsePoly(tuple(cleaned))
#
#
def degree(g):
    """Largest exponent of g."""
    return g.terms[-1][0]
#
#
def to_sparse_poly(f_q):
    """g(z) = 1 - sum_j m_j z^k_j for a lattice polynomial.

    Args:
        f_q (DirichletPolynomial): A lattice polynomial.

    Returns:
        (SparsePoly, tuple): g and the generator (r_1, q), meaning
            r = r_1^(1/q) and z = r^s.

    Raises:
        DomainError: If f_q is nonlattice.

    """
    classification = dirichlet.classify(f_q)
    if classification.kind != dirichlet.KIND_LATTICE:
        raise DomainError("only lattice polynomials have a sparse " +
            "polynomial form; this one has rank " + str(classification.rank))
    terms = [(0, Fraction(1))]
    for k, m in zip(classification.k, f_q.multiplicities):
        if isinstance(m, Fraction):
            terms.append((k, -m))
        else:
            terms.append((k, -numerics.to_mpf(m, dirichlet.ORDERPRECISION)))
    return sparse_poly(terms), classification.generator
#
#
def evaluate_sparse(g, z, precision=numerics.DEFAULTPRECISION):
    """(g(z), g'(z), sum |c||z|^e) at ``precision`` bits."""
    exponents = [e for e, _ in g.terms]
    with mp.workprec(precision):
        coefficients = [parcore.coefficient(c) for _, c in g.terms]
        return parcore.sparseeval(exponents, coefficients, mpmath.mpc(z))


################################################################################
#### INITIAL APPROXIMATIONS ####################################################
#
def _upperhull(points):
    """Upper convex hull of points sorted by abscissa (collinear points go)."""
    hull = []
    for point in points:
        while len(hull) >= 2:
            (x0, y0), (x1, y1) = hull[-2], hull[-1]
            cross = (x1 - x0)*(point[1] - y0) - (y1 - y0)*(point[0] - x0)
            if cross >= 0:
                hull.pop()
            else:
                break
        hull.append(point)
    return hull
#
#
def initial_points(g):
    """Starting points on concentric circles read off the Newton polygon.

    Each edge of the upper hull of (e_t, log|c_t|) from exponent e_a to e_b
    carries e_b - e_a roots near the circle of radius
    exp((log|c_a| - log|c_b|)/(e_b - e_a)). Angles are equidistributed with
    a quarter-step offset plus a golden-angle turn per circle.

    Returns:
        numpy complex128 array of length degree(g).

    """
    points = [(e, float(mpmath.log(abs(parcore.coefficient(c)))))
        for e, c in g.terms]
    hull = _upperhull(points)
    starts = []
    for ixEdge, ((ea, la), (eb, lb)) in enumerate(zip(hull, hull[1:])):
        count = eb - ea
        radius = math.exp((la - lb)/count)
        offset = math.pi/(2*count) + ixEdge*GOLDENANGLE
        angles = 2*math.pi*np.arange(count)/count + offset
        starts.append(radius*np.exp(1j*angles))
    return np.concatenate(starts)


################################################################################
#### DOUBLE-PRECISION STAGE ####################################################
#
def _aberthsums(z, rows):
    """sum_{j != i} 1/(z_i - z_j) for the given row indices, blockwise."""
    sums = np.empty(len(rows), dtype=complex)
    for start in range(0, len(rows), BLOCKROWS):
        block = rows[start:start + BLOCKROWS]
        differences = z[block, None] - z[None, :]
        differences[np.arange(len(block)), block] = np.inf
        with np.errstate(divide='ignore', invalid='ignore'):
            inverses = 1/differences
        inverses[~np.isfinite(inverses)] = 0
        sums[start:start + len(block)] = inverses.sum(axis=1)
    return sums
#
#
def aberth_double(g, z=None, maxIter=DOUBLEMAXITER):
    """Vectorised Aberth-Ehrlich iteration in double precision.

    Args:
        g (SparsePoly): The polynomial.
        z (array): Starting points; defaults to ``initial_points(g)``.
        maxIter (int): Iteration cap.

    Returns:
        numpy complex128 array of degree(g) approximations. Roots whose last
        relative step fell below DOUBLESTEPTOL are frozen; the rest carry
        whatever the cap left them with, for the multiprecision stage.

    """
    if z is None:
        z = initial_points(g)
    z = np.array(z, dtype=complex)
    exponents = np.array([e for e, _ in g.terms], dtype=float)
    coefficients = np.array([float(parcore.coefficient(c))
        for _, c in g.terms], dtype=complex)
    active = np.arange(len(z))
    for _ in range(maxIter):
        if len(active) == 0:
            break
        za = z[active]
        with np.errstate(all='ignore'):
            powers = za[:, None]**exponents[None, :]
            value = powers @ coefficients
            derivative = (powers @ (coefficients*exponents)) / za
            sums = _aberthsums(z, active)
            step = 1/(derivative/value - sums)
        step[~np.isfinite(step)] = 0
        z[active] = za - step
        moving = np.abs(step) > DOUBLESTEPTOL*np.maximum(np.abs(za), 1.)
        active = active[moving]
    return z


################################################################################
#### MULTIPRECISION STAGE ######################################################
#
def _chunks(indices, width):
    size = -(-len(indices) // width)
    return [indices[i:i + size] for i in range(0, len(indices), size)]
#
#
def _mergeclusters(values, residuals, tolerance):
    """Union clusters of roots closer than tolerance^(1/2).

    The tree search on doubles is widened to a few ulps so that roots which
    round to neighbouring doubles still reach the exact distance check.

    """
    radius = mpmath.sqrt(tolerance)
    points = np.array([[float(v.real), float(v.imag)] for v in values])
    searchRadius = max(float(radius),
        4*np.finfo(float).eps*float(np.abs(points).max(initial=1.)))
    parent = list(range(len(values)))
    #
    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i
    #
    for i, j in sorted(cKDTree(points).query_pairs(searchRadius)):
        if abs(values[i] - values[j]) < radius:
            parent[find(j)] = find(i)
    clusters = {}
    for i in range(len(values)):
        clusters.setdefault(find(i), []).append(i)
    entries = []
    for members in clusters.values():
        value = mpmath.fsum(values[i] for i in members) / len(members)
        residual = max(residuals[i] for i in members)
        entries.append(RootEntry(value, residual, len(members)))
    return entries
#
#
def _sortkey(entry):
    return (entry.value.imag, entry.value.real)
#
#
def solve_sparse(g, tolerance=None, precision=numerics.DEFAULTPRECISION,
        nThreads=1):
    """All roots of a sparse polynomial, with certified residuals.

    Args:
        g (SparsePoly): Polynomial of degree >= 1.
        tolerance: Relative backward residual to certify; defaults to
            2^(-precision/2).
        precision (int): Starting working precision in bits.
        nThreads (int or None): Pool width for the polishing sweeps; None
            means CPUCount.parallel_width(). With width 1 the sweep is a
            sequential Gauss-Seidel pass and the result is reproducible
            bit for bit.

    Returns:
        RootSet in the z-plane. Every entry satisfies
        |g(z)| <= tolerance * sum_t |c_t||z|^e_t, and multiplicities add up to
        degree(g).

    Raises:
        ValidationError: If degree(g) < 1.
        ConvergenceError: If some roots cannot be certified within MAXSWEEPS
            sweeps at PRECISIONCAPFACTOR times ``precision``. ``partial``
            holds the RootSet reached and ``unconverged`` the offending
            indices into it.

    """
    n = degree(g)
    if n < 1:
        raise ValidationError("cannot solve a polynomial of degree 0")
    if tolerance is None:
        tolerance = mpmath.ldexp(1, -(precision // 2))
    width = CPUCount.parallel_width(nThreads)
    exponents = tuple(e for e, _ in g.terms)
    coefficients = tuple(c for _, c in g.terms)
    approx = aberth_double(g)
    with mp.workprec(precision):
        values = [mpmath.mpc(complex(v)) for v in approx]
    residuals = [None]*n
    workPrecision = precision
    maxPrecision = PRECISIONCAPFACTOR*precision
    procPool = mproc.Pool(width) if width > 1 and n > width else None
    try:
        while True:
            for _ in range(MAXSWEEPS):
                pending = [i for i in range(n) if residuals[i] is None]
                if not pending:
                    break
                jobs = [(exponents, coefficients, chunk,
                    [values[i] for i in chunk], approx, workPrecision,
                    tolerance) for chunk in _chunks(pending,
                    width if procPool is not None else 1)]
                if procPool is None:
                    results = [parcore.polishroots(job) for job in jobs]
                else:
                    results = procPool.map(parcore.polishroots, jobs)
                for chunk in results:
                    for index, value, residual, certified in chunk:
                        values[index] = value
                        approx[index] = complex(value)
                        if certified:
                            residuals[index] = residual
            unconverged = [i for i in range(n) if residuals[i] is None]
            if not unconverged:
                break
            if 2*workPrecision > maxPrecision:
                partial = RootSet(tuple(RootEntry(v, r if r is not None
                    else mpmath.inf, 1) for v, r in zip(values, residuals)),
                    DOMAIN_Z)
                raise ConvergenceError(str(len(unconverged)) + " of " +
                    str(n) + " roots could not be certified at " +
                    str(workPrecision) + " bits", partial, unconverged)
            workPrecision *= 2
    finally:
        if procPool is not None:
            procPool.close()
            procPool.join()
    entries = _mergeclusters(values, residuals, tolerance)
    with mp.workprec(precision):
        entries = [RootEntry(+e.value, +e.residual, e.multiplicity)
            for e in entries]
    return RootSet(tuple(sorted(entries, key=_sortkey)), DOMAIN_Z)


################################################################################
#### COMPLEX DIMENSIONS ########################################################
#
def _loggenerator(generator, precision):
    """log r^(-1) = -log(r_1)/q."""
    base, q = generator
    if int(q) != q or q < 1:
        raise ValidationError("the generator exponent q must be a positive " +
            "integer, got " + repr(q))
    r1 = numerics.to_mpf(base, precision)
    if not 0 < r1 < 1:
        raise ValidationError("r_1 must lie strictly between 0 and 1")
    with mp.workprec(precision):
        return -mpmath.log(r1) / q
#
#
def oscillatory_period(r_1, q, precision=numerics.DEFAULTPRECISION):
    """p_q = 2 pi q / log(1/r_1).

    Args:
        r_1: Base ratio in (0, 1) (Fraction, RealExpr, expression string or
            mpf).
        q (int): Positive integer.

    """
    workPrecision = precision + numerics.GUARDBITS
    logInv = _loggenerator((r_1, q), workPrecision)
    with mp.workprec(workPrecision):
        period = 2*mpmath.pi / logInv
    with mp.workprec(precision):
        return +period
#
#
def roots_to_dimensions(zroots, generator, height,
        precision=numerics.DEFAULTPRECISION):
    """Map z-plane roots to roots of f(s) with |Im s| <= height.

    Args:
        zroots (RootSet): Roots of g in the z-plane.
        generator (tuple): (r_1, q) as returned by ``to_sparse_poly``.
        height: Strip half-height T > 0.
        precision (int): Working precision.

    Returns:
        RootSet in the s-plane: each z maps to
        omega = -log|z|/log(1/r) - i arg(z)/log(1/r) with arg in (-pi, pi],
        and is repeated as omega + i n p for every integer n keeping
        |Im| <= T, p = 2 pi/log(1/r).

    Raises:
        ValidationError: If T <= 0.
        DomainError: If some root is z = 0.

    """
    if zroots.domain != DOMAIN_Z:
        raise DomainError("roots_to_dimensions needs z-plane roots")
    workPrecision = precision + numerics.GUARDBITS
    logInv = _loggenerator(generator, workPrecision)
    entries = []
    height = numerics.to_mpf(height, workPrecision)
    with mp.workprec(workPrecision):
        if height <= 0:
            raise ValidationError("the strip height must be positive")
        period = 2*mpmath.pi / logInv
        for root in zroots.roots:
            z = mpmath.mpc(root.value)
            if z == 0:
                raise DomainError("z = 0 has no complex dimension")
            re = -mpmath.log(abs(z)) / logInv
            im = -mpmath.arg(z) / logInv
            first = int(mpmath.ceil((-height - im) / period))
            last = int(mpmath.floor((height - im) / period))
            for shift in range(first, last + 1):
                value = mpmath.mpc(re, im + shift*period)
                entries.append(RootEntry(value, root.residual,
                    root.multiplicity))
    with mp.workprec(precision):
        entries = [RootEntry(+e.value, e.residual, e.multiplicity)
            for e in entries]
    return RootSet(tuple(sorted(entries, key=_sortkey)), DOMAIN_S)
#
#### EOF #######################################################################
################################################################################
