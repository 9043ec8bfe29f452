"""Worker functions for the multiprocessing pools of dirichletlsa.

Everything here is a module-level function of picklable arguments, so that it
can be handed to ``multiprocessing.Pool.map``. The same functions are called
directly when the pool width is 1, which keeps the sequential schedule
bitwise reproducible.

"""


################################################################################
#### LIBRARIES #################################################################
#
## STANDARD PACKAGES ###########################################################
from fractions import Fraction          # Exact coefficients
import numpy as np                      # Double-precision Aberth sums
import mpmath                           # Multiprecision evaluation
from mpmath import mp


################################################################################
#### CONSTANTS #################################################################
#
# Newton refinement outcomes
OUTCOME_CONVERGED = 'converged'
OUTCOME_CRITICAL = 'failed-critical-point'
OUTCOME_STAGNANT = 'failed-stagnant'


################################################################################
#### SPARSE EVALUATION #########################################################
#
def coefficient(c):
    """A sparse-polynomial coefficient as an mpf at the working precision."""
    if isinstance(c, Fraction):
        return mpmath.mpf(c.numerator) / c.denominator
    return +mpmath.mpf(c)
#
#
def sparseeval(exponents, coefficients, z):
    """Value, derivative and magnitude scale of sum_t c_t z^e_t.

    Powers are built by multiplying up over the gaps between successive
    exponents, so a polynomial with T terms and degree d costs O(T log d)
    multiplications. Runs at the caller's mp precision.

    Args:
        exponents (sequence of int): Strictly increasing, first one 0.
        coefficients (sequence of mpf): Matching coefficients.
        z (mpc): Evaluation point, nonzero unless the degree is 0.

    Returns:
        (mpc, mpc, mpf): g(z), g'(z) and sum_t |c_t| |z|^e_t.

    """
    value = mpmath.mpc(0)
    derivative = mpmath.mpc(0)
    scale = mpmath.mpf(0)
    power = mpmath.mpc(1)
    previous = 0
    for e, c in zip(exponents, coefficients):
        if e != previous:
            power *= mpmath.power(z, e - previous)
            previous = e
        term = c*power
        value += term
        if e > 0:
            derivative += e*term
        scale += abs(term)
    if previous > 0:
        derivative /= z
    return value, derivative, scale


################################################################################
#### ABERTH POLISHING ##########################################################
#
def polishroots(args):
    """One Gauss-Seidel sweep of multiprecision Aberth corrections.

    Args:
        args (tuple): (exponents, coefficients, indices, values, approx,
            precision, tolerance) where ``indices`` are the roots this worker
            owns, ``values`` their current mpc approximations, ``approx`` a
            complex128 array with double approximations of *all* roots, and
            ``tolerance`` the relative backward residual to certify.

    Returns:
        list of (int, mpc, mpf or None, bool): Per owned root, its index, its
            (possibly updated) value, its residual when certified, and
            whether it was certified before any update in this sweep.

    The Newton ratio g/g' is computed at ``precision``; the Aberth sum
    sum_{j != i} 1/(z_i - z_j) only needs to be accurate to first order, so it
    is taken in double precision from ``approx``, which is updated in place as
    the sweep goes (Gauss-Seidel within the worker's share).

    """
    exponents, coefficients, indices, values, approx, precision, \
        tolerance = args
    approx = np.array(approx, dtype=complex)
    results = []
    with mp.workprec(precision):
        coefficients = [coefficient(c) for c in coefficients]
        tolerance = mpmath.mpf(tolerance)
        for index, z in zip(indices, values):
            z = mpmath.mpc(z)
            value, derivative, scale = sparseeval(exponents, coefficients, z)
            residual = abs(value) / scale
            if residual <= tolerance:
                results.append((index, z, residual, True))
                continue
            differences = approx[index] - approx
            differences[index] = np.inf
            with np.errstate(divide='ignore', invalid='ignore'):
                inverses = 1/differences
            inverses[~np.isfinite(inverses)] = 0
            aberthSum = complex(np.sum(inverses))
            denominator = derivative/value - aberthSum
            if denominator == 0:
                # Newton and Aberth terms cancel: nudge off the stationary point
                z = z*(1 + tolerance)
            else:
                z = z - 1/denominator
            approx[index] = complex(z)
            results.append((index, z, None, False))
    return results


################################################################################
#### NEWTON REFINEMENT #########################################################
#
def refineseed(args):
    """Complex Newton iteration on f(s) = 1 - sum_j m_j exp(-w_j s).

    Args:
        args (tuple): (weights, multiplicities, seed, tolerance, maxIter,
            precision) with weights and multiplicities as mpf values.

    Returns:
        (mpc, mpf, int, str): Final iterate, |f| there, iterations used and
            one of OUTCOME_CONVERGED, OUTCOME_CRITICAL, OUTCOME_STAGNANT.

    Converged means |f(s)| <= tolerance and the Newton step is below
    tolerance; a seed that already satisfies both uses zero iterations.

    """
    weights, multiplicities, seed, tolerance, maxIter, precision = args
    with mp.workprec(precision):
        s = mpmath.mpc(seed)
        tolerance = mpmath.mpf(tolerance)
        residual = None
        for iteration in range(maxIter + 1):
            value = mpmath.mpc(1)
            derivative = mpmath.mpc(0)
            for mj, wj in zip(multiplicities, weights):
                term = mj*mpmath.exp(-wj*s)
                value -= term
                derivative += wj*term
            residual = abs(value)
            if abs(derivative) < 10*tolerance:
                return s, residual, iteration, OUTCOME_CRITICAL
            step = value/derivative
            if residual <= tolerance and abs(step) < tolerance:
                return s, residual, iteration, OUTCOME_CONVERGED
            if iteration == maxIter:
                break
            s = s - step
        return s, residual, maxIter, OUTCOME_STAGNANT
#
#### EOF #######################################################################
################################################################################
