"""Exact-rational lattice basis reduction.

Gram-Schmidt orthogonalisation, the alpha-reduced condition check and the
textbook LLL loop (size-reduce, test the Lovasz condition, swap), all on
``fractions.Fraction`` entries. Nothing in this module uses a tolerance.

"""


################################################################################
#### LIBRARIES #################################################################
#
## STANDARD PACKAGES ###########################################################
import math                             # floor for nearest-integer rounding
from fractions import Fraction          # Exact arithmetic throughout
from collections import namedtuple      # Lightweight structures
import sympy                            # Exact determinants
#
## OTHER PARTS OF DIRICHLETLSA #################################################
from dirichletlsa import numerics
from dirichletlsa.errors import ValidationError


################################################################################
#### DATA STRUCTURES ###########################################################
#
Basis = namedtuple("Basis", "vectors")
Basis.__doc__ = \
"""A lattice basis: a square matrix of Fraction rows x_1..x_n.

Build with ``make_basis``, which converts entries to Fractions and rejects
non-square or singular input.

Attributes:
    vectors (tuple of tuple of Fraction): The basis rows.

"""


GramSchmidtData = namedtuple("GramSchmidtData", "ortho mu norms")
GramSchmidtData.__doc__ = \
"""Exact Gram-Schmidt data of a basis.

Attributes:
    ortho (tuple of tuple of Fraction): Orthogonal rows x*_1..x*_n.
    mu (tuple of tuple of Fraction): mu[j][k] for k < j, zero elsewhere.
    norms (tuple of Fraction): Squared lengths |x*_j|^2.

"""


ReductionParams = namedtuple("ReductionParams", "alpha")
ReductionParams.__doc__ = \
"""Parameters of an alpha-reduced basis; build with ``reduction_params``.

Attributes:
    alpha (Fraction): Lovasz parameter, 1/4 < alpha < 1.

"""


################################################################################
#### CONSTRUCTORS ##############################################################
#
def reduction_params(alpha=Fraction(3, 4)):
    """Build ReductionParams, enforcing 1/4 < alpha < 1."""
    alpha = Fraction(alpha)
    if not Fraction(1, 4) < alpha < 1:
        raise ValidationError("alpha must lie strictly between 1/4 and 1, " +
            "got " + str(alpha))
    return ReductionParams(alpha)
#
#
def make_basis(rows):
    """Build a Basis from a square matrix of rationals.

    Raises:
        ValidationError: If the matrix is empty, not square or singular.

    """
    vectors = tuple(tuple(Fraction(entry) for entry in row) for row in rows)
    n = len(vectors)
    if n == 0 or any(len(row) != n for row in vectors):
        raise ValidationError("a basis must be a nonempty square matrix")
    basis = Basis(vectors)
    if lattice_determinant(basis) == 0:
        raise ValidationError("basis rows are linearly dependent")
    return basis


################################################################################
#### GRAM-SCHMIDT ##############################################################
#
def _dot(u, v):
    return sum((a*b for a, b in zip(u, v)), Fraction(0))
#
#
def gram_schmidt(basis):
    """Exact Gram-Schmidt orthogonalisation of a basis.

    Args:
        basis (Basis): Rows to orthogonalise.

    Returns:
        GramSchmidtData satisfying x*_j = x_j - sum_{k<j} mu[j][k] x*_k.

    Raises:
        ValidationError: If a row depends on the previous ones.

    """
    rows = basis.vectors
    n = len(rows)
    ortho = []
    norms = []
    mu = [[Fraction(0)]*n for _ in range(n)]
    for j in range(n):
        vector = list(rows[j])
        for k in range(j):
            mu[j][k] = _dot(rows[j], ortho[k]) / norms[k]
            vector = [v - mu[j][k]*o for v, o in zip(vector, ortho[k])]
        norm = _dot(vector, vector)
        if norm == 0:
            raise ValidationError("basis row " + str(j+1) +
                " is linearly dependent on the previous rows")
        ortho.append(tuple(vector))
        norms.append(norm)
    return GramSchmidtData(tuple(ortho), tuple(tuple(row) for row in mu),
        tuple(norms))
#
#
def lattice_determinant(basis):
    """|det X| of the basis matrix, exactly."""
    matrix = sympy.Matrix([[numerics.to_sympy(entry) for entry in row]
        for row in basis.vectors])
    return abs(numerics.from_sympy(matrix.det(method='bareiss')))


################################################################################
#### REDUCTION #################################################################
#
def is_reduced(basis, params=None):
    """Check the two alpha-reduced conditions directly.

    Returns True iff |mu[j][k]| <= 1/2 for all k < j and
    |x*_j + mu[j][j-1] x*_{j-1}|^2 >= alpha |x*_{j-1}|^2 for all j > 1.

    """
    if params is None:
        params = reduction_params()
    data = gram_schmidt(basis)
    n = len(basis.vectors)
    for j in range(n):
        for k in range(j):
            if abs(data.mu[j][k]) > Fraction(1, 2):
                return False
    for j in range(1, n):
        m = data.mu[j][j-1]
        if data.norms[j] + m*m*data.norms[j-1] < params.alpha*data.norms[j-1]:
            return False
    return True
#
#
def lll_reduce(basis, params=None):
    """Reduce a basis to an alpha-reduced one.

    Args:
        basis (Basis): Input basis.
        params (ReductionParams): Defaults to alpha = 3/4.

    Returns:
        (Basis, tuple of tuple of int): The reduced basis and the integer
            unimodular matrix T with reduced = T * input.

    Raises:
        ValidationError: If the rows are dependent.

    Each pass size-reduces row k against rows k-1..1, then tests the Lovasz
    condition between rows k-1 and k; a failure swaps them and steps back.
    Gram-Schmidt data are updated incrementally, exactly.

    """
    if params is None:
        params = reduction_params()
    data = gram_schmidt(basis)
    n = len(basis.vectors)
    rows = [list(row) for row in basis.vectors]
    transform = [[int(i == j) for j in range(n)] for i in range(n)]
    mu = [list(row) for row in data.mu]
    norms = list(data.norms)
    half = Fraction(1, 2)
    #
    def sizereduce(k, l):
        if abs(mu[k][l]) <= half:
            return
        r = math.floor(mu[k][l] + half)
        rows[k] = [a - r*b for a, b in zip(rows[k], rows[l])]
        transform[k] = [a - r*b for a, b in zip(transform[k], transform[l])]
        for j in range(l):
            mu[k][j] -= r*mu[l][j]
        mu[k][l] -= r
    #
    def swap(k):
        rows[k], rows[k-1] = rows[k-1], rows[k]
        transform[k], transform[k-1] = transform[k-1], transform[k]
        for j in range(k-1):
            mu[k][j], mu[k-1][j] = mu[k-1][j], mu[k][j]
        m = mu[k][k-1]
        newNorm = norms[k] + m*m*norms[k-1]
        mu[k][k-1] = m*norms[k-1] / newNorm
        norms[k] = norms[k-1]*norms[k] / newNorm
        norms[k-1] = newNorm
        for i in range(k+1, n):
            t = mu[i][k]
            mu[i][k] = mu[i][k-1] - m*t
            mu[i][k-1] = t + mu[k][k-1]*mu[i][k]
    #
    k = 1
    while k < n:
        for l in range(k-1, -1, -1):
            sizereduce(k, l)
        m = mu[k][k-1]
        if norms[k] + m*m*norms[k-1] < params.alpha*norms[k-1]:
            swap(k)
            k = max(k-1, 1)
        else:
            k += 1
    reduced = Basis(tuple(tuple(row) for row in rows))
    return reduced, tuple(tuple(row) for row in transform)
#
#### EOF #######################################################################
################################################################################
