"""The Lattice String Approximation pipeline.

Given a nonlattice Dirichlet polynomial f and a simultaneous Diophantine
approximation Q, (q, k_2..k_N) of its exponents, the lattice polynomial
f_q(s) = 1 - m_1 r_1^s - sum_j m_j (r_1^(k_j/q))^s agrees with f to within
epsilon on the disk of radius epsilon*C*Q*p_q (the region of stability). The
roots of f_q inside that disk are the stable roots; complex Newton iteration
started from them converges to roots of f.

The module functions are silent building blocks. ``LatticeStringApproximator``
strings them together and reports progress through overridable hooks.

"""


################################################################################
#### LIBRARIES #################################################################
#
## STANDARD PACKAGES ###########################################################
import multiprocessing as mproc         # Parallel Newton refinement
from fractions import Fraction          # Exact exponents k_j/q
from collections import namedtuple      # Lightweight structures
import numpy as np                      # Coordinates for the KD-trees
from scipy.spatial import cKDTree       # Deduplication and matching
from scipy.stats import qmc             # Halton points for region sampling
import mpmath                           # Multiprecision values
from mpmath import mp
#
## OTHER PARTS OF DIRICHLETLSA #################################################
from dirichletlsa import numerics
from dirichletlsa import cfrac
from dirichletlsa import dioph
from dirichletlsa import dirichlet
from dirichletlsa import roots
from dirichletlsa import parcore
from dirichletlsa import CPUCount
from dirichletlsa import ui
from dirichletlsa.errors import ValidationError, DomainError


################################################################################
#### CONSTANTS #################################################################
#
DEFAULTEPSILON = Fraction(1, 10)
DEFAULTNEWTONMAXITER = 100
#
# Message shared by every operation that refuses a lattice polynomial
MSGLATTICE = "lattice: exact, no approximation needed"


################################################################################
#### DATA STRUCTURES ###########################################################
#
LatticeApproximation = namedtuple("LatticeApproximation",
    "f_q sda generator period g")
LatticeApproximation.__doc__ = \
"""A lattice string approximation f_q of a polynomial.

Attributes:
    f_q (DirichletPolynomial): Lattice polynomial with exponents k_j/q.
    sda (SDA): The approximation it was built from.
    generator (tuple): (r_1, q') with r = r_1^(1/q') the generator of f_q;
        q' divides sda.q.
    period (mpf): p_q = 2 pi q / log(1/r_1) for q = sda.q.
    g (SparsePoly): The sparse polynomial of f_q.

"""


StabilityRegion = namedtuple("StabilityRegion", "epsilon radius")
StabilityRegion.__doc__ = \
"""The open disk |s| < radius on which |f_q(s) - f(s)| < epsilon.

Attributes:
    epsilon (Fraction or mpf): Approximation error, > 0.
    radius (mpf): epsilon * C * Q * p_q, > 0 (infinite for exact hits).

"""


RefinedRoot = namedtuple("RefinedRoot", "value residual seed iterations")
RefinedRoot.__doc__ = \
"""A root of f found by Newton iteration.

Attributes:
    value (mpc): The root.
    residual (mpf): |f(value)|.
    seed (mpc): Starting point.
    iterations (int): Newton steps taken.

"""


FailedSeed = namedtuple("FailedSeed", "seed reason")
FailedSeed.__doc__ = \
"""A seed whose Newton iteration failed.

Attributes:
    seed (mpc): Starting point.
    reason (str): parcore.OUTCOME_CRITICAL or parcore.OUTCOME_STAGNANT.

"""


RefinementReport = namedtuple("RefinementReport", "roots failed merges")
RefinementReport.__doc__ = \
"""Outcome of ``refine_roots``, in seed order.

Attributes:
    roots (tuple of RefinedRoot): Distinct converged roots.
    failed (tuple of FailedSeed): Seeds that did not converge.
    merges (tuple of (mpc, mpc)): (seed, kept seed) for every seed dropped as
        a duplicate, before iteration or after convergence to the same root.

"""


PatternComparison = namedtuple("PatternComparison",
    "pairs unmatchedtrue unmatchedapprox")
PatternComparison.__doc__ = \
"""Greedy nearest-neighbour pairing of two root sets.

Attributes:
    pairs (tuple of (int, int, mpf)): (true index, approximation index,
        distance), closest pairs first.
    unmatchedtrue (tuple of int): True roots without a partner.
    unmatchedapprox (tuple of int): Approximate roots without a partner.

"""


TableRow = namedtuple("TableRow", "Q q k period radius")
TableRow.__doc__ = \
"""One line of an approximation table: Q, (q, k_2..k_N), p_q, eps*C*Q*p_q."""


################################################################################
#### HELPERS ###################################################################
#
def _values(rootset):
    """Root values from a RootSet or a plain sequence of complex numbers."""
    if isinstance(rootset, roots.RootSet):
        return [root.value for root in rootset.roots]
    return [mpmath.mpc(v) for v in rootset]
#
#
def _points(values):
    return np.array([[float(v.real), float(v.imag)] for v in values],
        dtype=float).reshape(-1, 2)
#
#
def _evaluator(f, precision):
    """Return s -> f(s) with the weights evaluated once."""
    workPrecision = precision + numerics.GUARDBITS
    w = dirichlet.weights(f, precision)
    m = [numerics.to_mpf(v, workPrecision) for v in f.multiplicities]
    #
    def value(s):
        with mp.workprec(workPrecision):
            s = mpmath.mpc(s)
            total = mpmath.mpc(1)
            for mj, wj in zip(m, w):
                total -= mj*mpmath.exp(-wj*s)
            return total
    return value


################################################################################
#### APPROXIMATIONS ############################################################
#
def polynomial_sdas(f, config=None, precision=numerics.DEFAULTPRECISION):
    """Lazily produce SDAs of all exponents of f.

    Only a maximal rationally independent set of irrational exponents beta_i
    is approximated (by continued fractions when there is one, by the LLL
    stream otherwise); each (b, a) is mapped to q = b*D and
    k_j = D*(c_j b + sum_i t_ji a_i) through the rational relations
    alpha_j = c_j + sum_i t_ji beta_i, D their common denominator. Q is then
    recomputed on the alpha_j themselves.

    Args:
        f (DirichletPolynomial): A nonlattice polynomial.
        config (StreamConfig): LLL stream schedule.
        precision (int): Working precision.

    Yields:
        dioph.SDA with k = (k_2..k_N).

    Raises:
        DomainError: If f is lattice.
        ClassificationError: If the rational relations cannot be decided.

    """
    basis = dirichlet.rational_basis(f)
    if not basis.indices:
        raise DomainError(MSGLATTICE)
    betas = [f.exponents[i] for i in basis.indices]
    D = basis.denominator
    if len(betas) == 1:
        source = ((c.b, (c.a,), None, dioph.PROVENANCE_CFRAC)
            for c in cfrac.ConvergentStream(betas[0], precision))
    else:
        source = ((sda.q, sda.k, sda.delta, sda.provenance)
            for sda in dioph.dio_stream(betas, config, precision))
    #
    def generate():
        lastq = None
        for b, a, delta, provenance in source:
            q = b*D
            k = []
            for constant, coefficients in zip(basis.constants[1:],
                    basis.coefficients[1:]):
                numerator = D*(constant*b + sum((t*ai for t, ai in
                    zip(coefficients, a)), Fraction(0)))
                k.append(int(numerator))
            Q = dioph.sda_quality(f.exponents[1:], q, k, precision)
            if Q <= 1 or q == lastq:
                continue
            lastq = q
            yield dioph.SDA(dioph.round_quality(Q, precision), q, tuple(k),
                delta, provenance)
    return generate()
#
#
def lattice_approximation(f, sda, precision=numerics.DEFAULTPRECISION):
    """Build f_q from an SDA of f.

    Args:
        f (DirichletPolynomial): The polynomial approximated.
        sda (SDA): Must pass ``dioph.validate_sda``.

    Returns:
        LatticeApproximation. When every exponent is hit exactly (Q infinite)
        f_q is f itself.

    Raises:
        DomainError: If the SDA does not approximate f, or its exponents
            k_j/q are not strictly increasing.
        IndeterminateError: If validity cannot be decided at ``precision``.

    """
    if not dioph.validate_sda(f, sda, precision):
        raise DomainError("(" + ",".join(str(v) for v in (sda.q,) + sda.k) +
            ") with Q = " + mpmath.nstr(sda.Q, 8) +
            " is not a simultaneous Diophantine approximation of f")
    if sda.Q == dioph.INFINITY:
        f_q = f
    else:
        exponents = [numerics.rational_expr(1)] + [numerics.rational_expr(
            Fraction(k, sda.q)) for k in sda.k]
        try:
            f_q = dirichlet.dirichlet_polynomial(f.base_ratio, exponents,
                f.multiplicities)
        except ValidationError as err:
            raise DomainError("the SDA does not preserve the order of the " +
                "exponents: " + str(err))
    g, generator = roots.to_sparse_poly(f_q)
    period = roots.oscillatory_period(f.base_ratio, sda.q, precision)
    return LatticeApproximation(f_q, sda, generator, period, g)


################################################################################
#### REGIONS OF STABILITY ######################################################
#
def stability_radius(f, sda, epsilon=DEFAULTEPSILON,
        precision=numerics.DEFAULTPRECISION):
    """The region of stability of f_q: radius epsilon * C * Q * p_q.

    Raises:
        ValidationError: If epsilon <= 0.

    """
    workPrecision = precision + numerics.GUARDBITS
    epsilonValue = numerics.to_mpf(numerics.exact_value(epsilon),
        workPrecision)
    if epsilonValue <= 0:
        raise ValidationError("epsilon must be positive, got " + str(epsilon))
    C = dirichlet.lsa_constant(f, workPrecision)
    period = roots.oscillatory_period(f.base_ratio, sda.q, workPrecision)
    with mp.workprec(workPrecision):
        radius = epsilonValue*C*mpmath.mpf(sda.Q)*period
    with mp.workprec(precision):
        return StabilityRegion(numerics.exact_value(epsilon), +radius)
#
#
def stability_periods(approx, region, precision=numerics.DEFAULTPRECISION):
    """Number of oscillatory periods covered by the region: radius/p_q."""
    with mp.workprec(precision):
        return region.radius / approx.period
#
#
def stable_roots(approx, region, zroots=None,
        precision=numerics.DEFAULTPRECISION, nThreads=1):
    """Roots of f_q inside its region of stability.

    Args:
        approx (LatticeApproximation): The approximation.
        region (StabilityRegion): Its region of stability.
        zroots (RootSet): Roots of approx.g if already solved.

    Returns:
        RootSet in the s-plane; may be empty.

    Raises:
        DomainError: If the region is unbounded.

    """
    if not mpmath.isfinite(region.radius):
        raise DomainError("the region of stability of an exact " +
            "approximation is unbounded")
    if zroots is None:
        zroots = roots.solve_sparse(approx.g, precision=precision,
            nThreads=nThreads)
    sroots = roots.roots_to_dimensions(zroots, approx.generator,
        region.radius, precision)
    with mp.workprec(precision):
        stable = tuple(root for root in sroots.roots
            if abs(root.value) < region.radius)
    return roots.RootSet(stable, roots.DOMAIN_S)


################################################################################
#### MASTER INVARIANT ##########################################################
#
def sample_region(region, count, strip=None):
    """Quasi-random points of the region of stability.

    Args:
        region (StabilityRegion): The disk.
        count (int): Number of points.
        strip (tuple or None): (lo, hi) to restrict Re(s) to [lo, hi]; the
            points then come from a Halton sequence on the rectangle
            [lo, hi] x (-radius, radius), keeping those inside the disk.
            Without a strip the Halton points are mapped to the disk in polar
            coordinates.

    Returns:
        list of mpc

    Raises:
        ValidationError: If count < 1, the radius is infinite, or the strip
            misses the disk.

    """
    if count < 1:
        raise ValidationError("count must be at least 1")
    radius = region.radius
    if not mpmath.isfinite(radius):
        raise ValidationError("cannot sample an unbounded region")
    R = float(radius)
    halton = qmc.Halton(d=2, scramble=False)
    points = []
    if strip is None:
        u = halton.random(count)
        r = R*np.sqrt(u[:, 0])
        theta = 2*np.pi*u[:, 1]
        return [mpmath.mpc(float(a), float(b))
            for a, b in zip(r*np.cos(theta), r*np.sin(theta))]
    lo = max(float(strip[0]), -R)
    hi = min(float(strip[1]), R)
    if lo >= hi:
        raise ValidationError("the strip does not meet the region")
    while len(points) < count:
        u = halton.random(count)
        re = lo + (hi - lo)*u[:, 0]
        im = R*(2*u[:, 1] - 1)
        for a, b in zip(re, im):
            if a*a + b*b < R*R and len(points) < count:
                points.append(mpmath.mpc(float(a), float(b)))
    return points
#
#
def max_deviation(f, approx, region, count=1000, strip=None,
        precision=numerics.DEFAULTPRECISION):
    """max |f_q(s) - f(s)| over ``count`` sample points of the region.

    By default the samples are restricted to the strip D_l <= Re(s) <= D of f,
    which holds every root of f and f_q.

    """
    if strip is None:
        bounds = dirichlet.dimension_bounds(f, precision)
        strip = (bounds.D_ell, bounds.D)
    value = _evaluator(f, precision)
    approxValue = _evaluator(approx.f_q, precision)
    worst = mpmath.mpf(0)
    with mp.workprec(precision + numerics.GUARDBITS):
        for s in sample_region(region, count, strip):
            worst = max(worst, abs(approxValue(s) - value(s)))
    with mp.workprec(precision):
        return +worst


################################################################################
#### NEWTON REFINEMENT #########################################################
#
def _duplicates(values, radius):
    """Map index -> earlier index for values within ``radius`` of each other."""
    if len(values) < 2:
        return {}
    duplicateOf = {}
    for i, j in sorted(cKDTree(_points(values)).query_pairs(float(radius))):
        if j in duplicateOf or i in duplicateOf:
            continue
        if abs(values[i] - values[j]) <= radius:
            duplicateOf[j] = i
    return duplicateOf
#
#
def refine_roots(f, seeds, tolerance=None, max_iter=DEFAULTNEWTONMAXITER,
        precision=numerics.DEFAULTPRECISION, nThreads=1):
    """Complex Newton iteration on f from each seed.

    Args:
        f (DirichletPolynomial): The polynomial whose roots are wanted.
        seeds (RootSet or sequence): Starting points.
        tolerance: Convergence threshold; defaults to 2^(-precision/2).
        max_iter (int): Newton steps allowed per seed.
        precision (int): Working precision.
        nThreads (int or None): Pool width (None: CPUCount.parallel_width()).

    Returns:
        RefinementReport, assembled in seed order whatever the pool width.

    Raises:
        ValidationError: If there are no seeds.

    """
    seeds = _values(seeds)
    if not seeds:
        raise ValidationError("refine_roots needs at least one seed")
    if tolerance is None:
        tolerance = mpmath.ldexp(1, -(precision // 2))
    workPrecision = precision + numerics.GUARDBITS
    with mp.workprec(workPrecision):
        tolerance = mpmath.mpf(tolerance)
        mergeRadius = mpmath.sqrt(tolerance)
    merges = []
    duplicateOf = _duplicates(seeds, mergeRadius)
    for j, i in sorted(duplicateOf.items()):
        merges.append((seeds[j], seeds[i]))
    unique = [ix for ix in range(len(seeds)) if ix not in duplicateOf]
    w = dirichlet.weights(f, precision)
    m = [numerics.to_mpf(v, workPrecision) for v in f.multiplicities]
    jobs = [(w, m, seeds[ix], tolerance, max_iter, workPrecision)
        for ix in unique]
    width = CPUCount.parallel_width(nThreads)
    if width > 1 and len(jobs) > 1:
        procPool = mproc.Pool(min(width, len(jobs)))
        try:
            results = procPool.map(parcore.refineseed, jobs)
        finally:
            procPool.close()
            procPool.join()
    else:
        results = [parcore.refineseed(job) for job in jobs]
    converged = []
    failed = []
    for ix, (value, residual, iterations, outcome) in zip(unique, results):
        if outcome == parcore.OUTCOME_CONVERGED:
            converged.append(RefinedRoot(value, residual, seeds[ix],
                iterations))
        else:
            failed.append(FailedSeed(seeds[ix], outcome))
    duplicateOf = _duplicates([root.value for root in converged], mergeRadius)
    for j, i in sorted(duplicateOf.items()):
        merges.append((converged[j].seed, converged[i].seed))
    kept = [root for ix, root in enumerate(converged)
        if ix not in duplicateOf]
    with mp.workprec(precision):
        kept = [RefinedRoot(+root.value, +root.residual, root.seed,
            root.iterations) for root in kept]
    return RefinementReport(tuple(kept), tuple(failed), tuple(merges))


################################################################################
#### PATTERN COMPARISON ########################################################
#
def compare_patterns(true_roots, approx_roots, match_radius):
    """Greedy nearest-neighbour pairing within ``match_radius``.

    Candidate pairs closer than the radius are taken in order of increasing
    distance; each root is used at most once.

    Raises:
        DomainError: If a RootSet is not in the s-plane.

    """
    for rootset in (true_roots, approx_roots):
        if isinstance(rootset, roots.RootSet) and \
                rootset.domain != roots.DOMAIN_S:
            raise DomainError("patterns are compared in the s-plane")
    trueValues = _values(true_roots)
    approxValues = _values(approx_roots)
    radius = float(match_radius)
    candidates = []
    if trueValues and approxValues:
        trueTree = cKDTree(_points(trueValues))
        approxTree = cKDTree(_points(approxValues))
        for i, partners in enumerate(trueTree.query_ball_tree(approxTree,
                radius)):
            for j in partners:
                candidates.append((abs(trueValues[i] - approxValues[j]), i, j))
    candidates.sort(key=lambda c: (c[0], c[1], c[2]))
    usedTrue = set()
    usedApprox = set()
    pairs = []
    for distance, i, j in candidates:
        if i in usedTrue or j in usedApprox:
            continue
        usedTrue.add(i)
        usedApprox.add(j)
        pairs.append((i, j, distance))
    return PatternComparison(tuple(pairs),
        tuple(i for i in range(len(trueValues)) if i not in usedTrue),
        tuple(j for j in range(len(approxValues)) if j not in usedApprox))
#
#
def deviation_series(comparison, true_roots):
    """(Im of the true root, pair distance) for every pair, by height."""
    values = _values(true_roots)
    series = [(values[i].imag, distance)
        for i, _, distance in comparison.pairs]
    return sorted(series, key=lambda point: point[0])


################################################################################
#### CLASSES ###################################################################
#
class LatticeStringApproximator(object):
    """Runs the approximation pipeline for one Dirichlet polynomial.

    Typical use::

        lsa = LatticeStringApproximator()
        lsa.initialise(catalogue.two_three())
        sda = lsa.sdas(count=8)[-1]
        approx = lsa.approximation(sda)
        region, stable = lsa.stable(approx)
        report = lsa.refine(approx)

    Progress goes through the hook_...() methods, which default to the
    console functions in dirichletlsa.ui. Embedding applications inherit from
    this class and override the hooks.

    """
    #### SETTINGS "CONSTANTS" ##################################################
    # Overridable per instance through initialise().
    #
    # Working precision in bits of every numerical step
    PRECISION = numerics.DEFAULTPRECISION
    # Approximation error defining the region of stability
    EPSILON = DEFAULTEPSILON
    # Newton steps per seed in refine()
    NEWTONMAXITER = DEFAULTNEWTONMAXITER
    # Largest k_N for which a lattice polynomial is solved
    MAXDEGREE = 10000
    # LLL stream schedule
    DELTA0 = Fraction(9, 10)
    NSTEPS = 90
    MAXITERATIONS = 20000
    # Pool width (None: all CPUs allowed by DIRICHLET_LSA_THREADS)
    NTHREADS = None
    # Emit debug messages through hook_notifydebug
    VERBOSE = False

    #### VARIABLES #############################################################
    # The polynomial being approximated
    polynomial = None
    # Whether initialise() has run
    isInitialised = False

    #### CONSTRUCTOR ###########################################################
    #
    def __init__(self):
        """Constructor (empty)"""
        self._cache = {}

    #### HOOK FUNCTIONS ########################################################
    #
    def hook_notifyerror(self, msg, subsystem=None):
        """Notify the user of an error.

        Args:
            msg (str): Message to display to the user.
            subsystem: Identifier for the source subsystem/function.

        Raises:
            None (Exception-neutral)

        """
        ui.notifyerror(msg, subsystem)
    #
    #
    def hook_notifydebug(self, msg, subsystem=None):
        """Show a debug message (only called when VERBOSE is set)."""
        ui.notifydebug(msg, subsystem)
    #
    #
    def hook_notifywait(self, operation, subsystem=None):
        """Notify the user of the start of a potentially long operation."""
        ui.notifywait(operation, subsystem)
    #
    #
    def hook_notifywaitover(self, operation, subsystem=None):
        """Notify the user of the completion of a long operation."""
        ui.notifywaitover(operation, subsystem)
    #
    #
    def hook_notifyprogress(self, operation, progress, progressLim=1.,
            subsystem=None):
        """Notify the user of the extent of progress of an operation.

        Args:
            operation (str): Short, human-readable description.
            progress (numeric): Amount of progress made so far.
            progressLim (numeric): Value of progress representing completion.
            subsystem: Identifier for the source subsystem/function.

        """
        ui.notifyprogress(operation, progress, progressLim, subsystem)
    #
    #
    def _debug(self, msg, subsystem=None):
        if self.VERBOSE:
            self.hook_notifydebug(msg, subsystem)

    #### SETUP #################################################################
    #
    def initialise(self, polynomial, precision=None, epsilon=None,
            delta0=None, nSteps=None, maxIterations=None, maxDegree=None,
            nThreads=None, verbose=None):
        """Attach a polynomial and override any of the settings constants.

        Args:
            polynomial (DirichletPolynomial): The polynomial to approximate.
            precision (int, optional): PRECISION, >= 53.
            epsilon (optional): EPSILON, > 0.
            delta0 (optional): DELTA0, in (0, 1).
            nSteps (int, optional): NSTEPS, >= 1.
            maxIterations (int, optional): MAXITERATIONS, >= 1.
            maxDegree (int, optional): MAXDEGREE, >= 1.
            nThreads (int, optional): NTHREADS, >= 1.
            verbose (bool, optional): VERBOSE.

        Raises:
            TypeError: If polynomial is not a DirichletPolynomial.
            ValueError: For out-of-range settings.

        """
        if not isinstance(polynomial, dirichlet.DirichletPolynomial):
            raise TypeError("initialise() needs a DirichletPolynomial, got " +
                type(polynomial).__name__)
        if precision is not None:
            if int(precision) != precision or precision < 53:
                raise ValueError("precision must be an integer >= 53")
            self.PRECISION = int(precision)
        if epsilon is not None:
            epsilon = numerics.exact_value(epsilon)
            if numerics.to_mpf(epsilon) <= 0:
                raise ValueError("epsilon must be positive")
            self.EPSILON = epsilon
        config = dioph.stream_config(
            self.DELTA0 if delta0 is None else delta0,
            self.NSTEPS if nSteps is None else nSteps,
            self.MAXITERATIONS if maxIterations is None else maxIterations)
        self.DELTA0, self.NSTEPS, self.MAXITERATIONS = config
        if maxDegree is not None:
            if int(maxDegree) != maxDegree or maxDegree < 1:
                raise ValueError("maxDegree must be a positive integer")
            self.MAXDEGREE = int(maxDegree)
        if nThreads is not None:
            if int(nThreads) != nThreads or nThreads < 1:
                raise ValueError("nThreads must be a positive integer")
            self.NTHREADS = int(nThreads)
        if verbose is not None:
            self.VERBOSE = bool(verbose)
        self.polynomial = polynomial
        self._cache = {}
        self.isInitialised = True
    #
    #
    def _requireinitialised(self):
        if not self.isInitialised:
            raise ValueError("call initialise() before using the approximator")
    #
    #
    def _cached(self, key, compute):
        if key not in self._cache:
            self._cache[key] = compute()
        return self._cache[key]

    #### ANALYSIS ##############################################################
    #
    def classification(self):
        """dirichlet.classify() of the polynomial."""
        self._requireinitialised()
        return self._cached('classification',
            lambda: dirichlet.classify(self.polynomial))
    #
    #
    def bounds(self):
        """dirichlet.dimension_bounds() of the polynomial."""
        self._requireinitialised()
        return self._cached('bounds', lambda: dirichlet.dimension_bounds(
            self.polynomial, self.PRECISION))
    #
    #
    def constant(self):
        """The LSA constant C of the polynomial."""
        self._requireinitialised()
        return self._cached('constant', lambda: dirichlet.lsa_constant(
            self.polynomial, self.PRECISION))
    #
    #
    def sdas(self, count=None, maxDegree=None):
        """Simultaneous Diophantine approximations of the exponents.

        Args:
            count (int, optional): Stop after this many.
            maxDegree (int, optional): Leave out approximations with k_N above
                this; a continued-fraction stream stops at the first one.

        Returns:
            list of dioph.SDA in the order found.

        Raises:
            DomainError: If the polynomial is lattice.
            ValueError: If neither limit is given.

        """
        self._requireinitialised()
        if count is None and maxDegree is None:
            raise ValueError("give a count or a maximum degree")
        if self.classification().kind == dirichlet.KIND_LATTICE:
            raise DomainError(MSGLATTICE)
        config = dioph.stream_config(self.DELTA0, self.NSTEPS,
            self.MAXITERATIONS)
        found = []
        self.hook_notifywait("Searching for Diophantine approximations",
            "lsa.sdas")
        for sda in polynomial_sdas(self.polynomial, config, self.PRECISION):
            degree = max((sda.q,) + sda.k)
            if maxDegree is not None and degree > maxDegree:
                if sda.provenance == dioph.PROVENANCE_CFRAC:
                    break
                continue
            found.append(sda)
            self._debug("Q = " + mpmath.nstr(sda.Q, 8) + " for q = " +
                str(sda.q), "lsa.sdas")
            if count is not None:
                self.hook_notifyprogress("Searching for Diophantine " +
                    "approximations", len(found), count, "lsa.sdas")
                if len(found) >= count:
                    break
        self.hook_notifywaitover("Searching for Diophantine approximations",
            "lsa.sdas")
        return found
    #
    #
    def sda_with(self, q):
        """The approximation with denominator q, ignoring the degree cap.

        The search stops at the first approximation with a larger q.

        Args:
            q (int): Denominator wanted.

        Returns:
            (dioph.SDA or None, list of dioph.SDA): The match, if any, and
                the approximations with smaller q passed on the way.

        Raises:
            DomainError: If the polynomial is lattice.

        """
        self._requireinitialised()
        if self.classification().kind == dirichlet.KIND_LATTICE:
            raise DomainError(MSGLATTICE)
        config = dioph.stream_config(self.DELTA0, self.NSTEPS,
            self.MAXITERATIONS)
        passed = []
        for sda in polynomial_sdas(self.polynomial, config, self.PRECISION):
            if sda.q == q:
                return sda, passed
            if sda.q > q:
                break
            passed.append(sda)
        return None, passed
    #
    #
    def exact_sda(self):
        """The exact approximation (Q infinite) of a lattice polynomial.

        Raises:
            DomainError: If the polynomial is nonlattice.

        """
        self._requireinitialised()
        classification = self.classification()
        if classification.kind != dirichlet.KIND_LATTICE:
            raise DomainError("only a lattice polynomial is its own " +
                "approximation")
        return dioph.SDA(dioph.INFINITY, classification.q,
            tuple(classification.k[1:]), None, dioph.PROVENANCE_EXACT)
    #
    #
    def table_rows(self, sdas):
        """TableRows for the SDAs, in decreasing Q."""
        self._requireinitialised()
        rows = []
        for sda in sdas:
            region = stability_radius(self.polynomial, sda, self.EPSILON,
                self.PRECISION)
            period = roots.oscillatory_period(self.polynomial.base_ratio,
                sda.q, self.PRECISION)
            rows.append(TableRow(sda.Q, sda.q, sda.k, period, region.radius))
        return sorted(rows, key=lambda row: row.Q, reverse=True)

    #### LATTICE APPROXIMATIONS ################################################
    #
    def approximation(self, sda):
        """lattice_approximation() after checking the degree cap.

        Raises:
            DomainError: If k_N exceeds MAXDEGREE or the SDA is invalid.

        """
        self._requireinitialised()
        degree = max((sda.q,) + tuple(sda.k))
        if degree > self.MAXDEGREE:
            raise DomainError("degree k_N = " + str(degree) +
                " exceeds the maximum degree " + str(self.MAXDEGREE))
        return lattice_approximation(self.polynomial, sda, self.PRECISION)
    #
    #
    def _zroots(self, approx):
        key = ('zroots', approx.g)
        if key not in self._cache:
            operation = "Solving a lattice polynomial of degree " + \
                str(roots.degree(approx.g))
            self.hook_notifywait(operation, "lsa.lattice_roots")
            self._cache[key] = roots.solve_sparse(approx.g,
                precision=self.PRECISION, nThreads=self.NTHREADS)
            self.hook_notifywaitover(operation, "lsa.lattice_roots")
        return self._cache[key]
    #
    #
    def lattice_roots(self, approx, height=None):
        """Roots of f_q with |Im| <= height (default: half a period)."""
        self._requireinitialised()
        if height is None:
            height = roots.oscillatory_period(approx.generator[0],
                approx.generator[1], self.PRECISION) / 2
        return roots.roots_to_dimensions(self._zroots(approx),
            approx.generator, height, self.PRECISION)
    #
    #
    def region(self, approx):
        """Region of stability of an approximation at EPSILON."""
        self._requireinitialised()
        return stability_radius(self.polynomial, approx.sda, self.EPSILON,
            self.PRECISION)
    #
    #
    def stable(self, approx):
        """(StabilityRegion, RootSet of stable roots)."""
        region = self.region(approx)
        stable = stable_roots(approx, region, self._zroots(approx),
            self.PRECISION)
        self._debug(str(len(stable.roots)) + " stable roots, " +
            mpmath.nstr(stability_periods(approx, region), 6) + " periods",
            "lsa.stable")
        return region, stable
    #
    #
    def refine(self, approx, seedHeight=None):
        """Newton refinement from the stable roots with |Im| <= seedHeight.

        Raises:
            ValidationError: If no stable root lies below seedHeight.

        """
        _, stable = self.stable(approx)
        seeds = [root.value for root in stable.roots if seedHeight is None or
            abs(root.value.imag) <= seedHeight]
        if not seeds:
            raise ValidationError("no stable roots to refine below height " +
                str(seedHeight))
        operation = "Refining " + str(len(seeds)) + " roots by Newton " + \
            "iteration"
        self.hook_notifywait(operation, "lsa.refine")
        report = refine_roots(self.polynomial, seeds,
            max_iter=self.NEWTONMAXITER, precision=self.PRECISION,
            nThreads=self.NTHREADS)
        self.hook_notifywaitover(operation, "lsa.refine")
        if report.failed:
            self.hook_notifyerror(str(len(report.failed)) + " of " +
                str(len(seeds)) + " seeds did not converge", "lsa.refine")
        return report
#
#### EOF #######################################################################
################################################################################
