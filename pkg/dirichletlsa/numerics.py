"""Arbitrary-precision numeric kernel for dirichletlsa.

Exact rationals are plain ``fractions.Fraction`` objects; high-precision reals
and complex numbers are ``mpmath.mpf``/``mpmath.mpc`` values; certified
enclosures come from the ``mpmath.iv`` interval context. The exponent
expressions of a Dirichlet polynomial are ``RealExpr`` records, which can be
evaluated to any precision and whose rationality (and rational rank, for a set
of them) is decided exactly.

Textual grammar of a RealExpr::

    p/q  or  p                    rational
    log(c)/log(b)                 log quotient, c and b positive rationals
    (p+q*sqrt(d))/r               quadratic surd (also p-q*sqrt(d); /r optional)
    dec:<literal>[:irrational]    decimal literal, optionally declared irrational
    term + term + ...             sum of any of the above

"""


################################################################################
#### LIBRARIES #################################################################
#
## STANDARD PACKAGES ###########################################################
import re                               # Expression grammar
import math                             # isqrt for the perfect-square check
import functools                        # Caching of factorisations
from fractions import Fraction          # BigRational
from collections import namedtuple      # Lightweight structures
from contextlib import contextmanager   # Interval precision scopes
import mpmath                           # Multiprecision reals and intervals
from mpmath import mp, iv
import sympy                            # Prime factorisation and exact rank
#
## OTHER PARTS OF DIRICHLETLSA #################################################
from dirichletlsa.errors import ValidationError, ClassificationError


################################################################################
#### CONSTANTS #################################################################
#
# Default mantissa width (bits) for every public operation
DEFAULTPRECISION = 256
#
# Extra bits carried internally before rounding a certified result
GUARDBITS = 16
#
# Type aliases: the kernel's number types are library types
BigRational = Fraction
HPReal = mpmath.mpf
HPComplex = mpmath.mpc
#
# RealExpr variants
EXPR_RATIONAL = 'rational'
EXPR_LOGQUOTIENT = 'log_quotient'
EXPR_QUADRATIC = 'quadratic'
EXPR_DECIMAL = 'decimal'
EXPR_SUM = 'sum'


################################################################################
#### DATA STRUCTURES ###########################################################
#
RealExpr = namedtuple("RealExpr", "variant args")
RealExpr.__doc__ = \
"""An exactly-specified real number.

Build these with the ``*_expr`` constructors, which enforce the invariants of
each variant, rather than calling RealExpr directly.

Attributes:
    variant (str): One of EXPR_RATIONAL, EXPR_LOGQUOTIENT, EXPR_QUADRATIC,
        EXPR_DECIMAL or EXPR_SUM.
    args (tuple): Variant payload:
        rational: (value,) with value a Fraction.
        log_quotient: (c, b) Fractions, meaning log(c)/log(b).
        quadratic: (p, q, d, r) ints, meaning (p + q*sqrt(d))/r.
        decimal: (literal, declaredIrrational).
        sum: tuple of non-sum RealExpr terms.

"""


################################################################################
#### CONSTRUCTORS ##############################################################
#
def rational_expr(value):
    """Build a rational RealExpr from an int, Fraction or "p/q" string."""
    try:
        value = Fraction(value)
    except (ValueError, TypeError, ZeroDivisionError):
        raise ValidationError("not a rational number: " + repr(value))
    return RealExpr(EXPR_RATIONAL, (value,))
#
#
def log_quotient_expr(c, b):
    """Build log(c)/log(b) for positive rationals c and b with b != 1.

    Raises:
        ValidationError: If c <= 0, b <= 0 or b == 1.

    """
    try:
        c = Fraction(c)
        b = Fraction(b)
    except (ValueError, TypeError, ZeroDivisionError):
        raise ValidationError("log quotient arguments must be rational: " +
            repr((c, b)))
    if c <= 0 or b <= 0:
        raise ValidationError("log quotient arguments must be positive: " +
            str(c) + ", " + str(b))
    if b == 1:
        raise ValidationError("log quotient base must not be 1")
    return RealExpr(EXPR_LOGQUOTIENT, (c, b))
#
#
def quadratic_expr(p, q, d, r):
    """Build (p + q*sqrt(d))/r for integers with d > 0 non-square, r != 0.

    Raises:
        ValidationError: If d is not a positive non-square or r is zero.

    """
    if not all(isinstance(v, int) for v in (p, q, d, r)):
        raise ValidationError("quadratic surd parameters must be integers")
    if d <= 0 or math.isqrt(d)**2 == d:
        raise ValidationError("quadratic surd needs a positive non-square " +
            "radicand, got " + str(d))
    if r == 0:
        raise ValidationError("quadratic surd denominator must be nonzero")
    return RealExpr(EXPR_QUADRATIC, (p, q, d, r))
#
#
def decimal_expr(literal, irrational=False):
    """Build a decimal-literal RealExpr.

    The literal's value is exact; ``irrational`` only records what the user
    declares the literal to stand for, and is consulted by classification.

    """
    literal = literal.strip()
    try:
        Fraction(literal)
    except (ValueError, ZeroDivisionError):
        raise ValidationError("malformed decimal literal: " + repr(literal))
    return RealExpr(EXPR_DECIMAL, (literal, bool(irrational)))
#
#
def sum_expr(terms):
    """Build a sum of RealExpr terms (nested sums are flattened)."""
    flat = []
    for term in terms:
        term = as_expr(term)
        if term.variant == EXPR_SUM:
            flat.extend(term.args)
        else:
            flat.append(term)
    if len(flat) == 0:
        raise ValidationError("a sum needs at least one term")
    if len(flat) == 1:
        return flat[0]
    return RealExpr(EXPR_SUM, tuple(flat))
#
#
def as_expr(value):
    """Coerce an int, Fraction, string or RealExpr into a RealExpr."""
    if isinstance(value, RealExpr):
        return value
    if isinstance(value, (int, Fraction)):
        return rational_expr(value)
    if isinstance(value, str):
        return parse_expr(value)
    raise ValidationError("cannot interpret " + repr(value) +
        " as an exact real expression")


################################################################################
#### PARSING AND FORMATTING ####################################################
#
_RATIONALPATTERN = r'[+-]?\d+(?:/\d+)?'
_REGEXRATIONAL = re.compile(r'^' + _RATIONALPATTERN + r'$')
_REGEXLOGQUOTIENT = re.compile(r'^log\(\s*(' + _RATIONALPATTERN +
    r')\s*\)\s*/\s*log\(\s*(' + _RATIONALPATTERN + r')\s*\)$')
_REGEXQUADRATIC = re.compile(r'^\(\s*([+-]?\d+)\s*([+-])\s*(\d+)\s*\*\s*' +
    r'sqrt\(\s*(\d+)\s*\)\s*\)(?:\s*/\s*([+-]?\d+))?$')
_REGEXDECIMAL = re.compile(r'^dec:([^:]+?)(:irrational)?$')
#
#
def _splitsum(text):
    """Split text at '+' signs outside parentheses, keeping column offsets."""
    pieces = []
    depth = 0
    start = 0
    for ix, char in enumerate(text):
        if char == '(':
            depth += 1
        elif char == ')':
            depth -= 1
        elif char == '+' and depth == 0 and text[start:ix].strip():
            pieces.append((start, text[start:ix]))
            start = ix + 1
    pieces.append((start, text[start:]))
    return pieces
#
#
def _parseterm(text, column):
    stripped = text.strip()
    column += len(text) - len(text.lstrip())
    if not stripped:
        raise ValidationError("empty expression", column=column)
    match = _REGEXDECIMAL.match(stripped)
    if match:
        try:
            return decimal_expr(match.group(1), match.group(2) is not None)
        except ValidationError as err:
            raise ValidationError(str(err), column=column)
    match = _REGEXLOGQUOTIENT.match(stripped)
    if match:
        try:
            return log_quotient_expr(match.group(1), match.group(2))
        except ValidationError as err:
            raise ValidationError(str(err), column=column)
    match = _REGEXQUADRATIC.match(stripped)
    if match:
        sign = 1 if match.group(2) == '+' else -1
        r = int(match.group(5)) if match.group(5) is not None else 1
        try:
            return quadratic_expr(int(match.group(1)),
                sign*int(match.group(3)), int(match.group(4)), r)
        except ValidationError as err:
            raise ValidationError(str(err), column=column)
    if _REGEXRATIONAL.match(stripped):
        try:
            return rational_expr(stripped)
        except ValidationError as err:
            raise ValidationError(str(err), column=column)
    raise ValidationError("cannot parse expression " + repr(stripped) +
        " (expected p/q, log(c)/log(b), (p+q*sqrt(d))/r or dec:<literal>)",
        column=column)
#
#
def parse_expr(text, column=1):
    """Parse the textual RealExpr grammar.

    Args:
        text (str): The expression.
        column (int): Column at which ``text`` starts in its source line, so
            that diagnostics point at the right place.

    Returns:
        RealExpr

    Raises:
        ValidationError: With the column of the offending term.

    """
    pieces = _splitsum(text)
    terms = [_parseterm(piece, column + offset) for offset, piece in pieces]
    return sum_expr(terms)
#
#
def format_expr(e):
    """Inverse of parse_expr: canonical text for a RealExpr."""
    if e.variant == EXPR_RATIONAL:
        return str(e.args[0])
    if e.variant == EXPR_LOGQUOTIENT:
        return "log(" + str(e.args[0]) + ")/log(" + str(e.args[1]) + ")"
    if e.variant == EXPR_QUADRATIC:
        p, q, d, r = e.args
        sign = '+' if q >= 0 else '-'
        return ("(" + str(p) + sign + str(abs(q)) + "*sqrt(" + str(d) + "))/" +
            str(r))
    if e.variant == EXPR_DECIMAL:
        return "dec:" + e.args[0] + (":irrational" if e.args[1] else "")
    return " + ".join(format_expr(term) for term in e.args)


################################################################################
#### INTERVAL EVALUATION #######################################################
#
@contextmanager
def ivprec(precision):
    """Run a block with the interval context at ``precision`` bits."""
    saved = iv.prec
    iv.prec = precision
    try:
        yield iv
    finally:
        iv.prec = saved
#
#
def lower(x):
    """Lower endpoint of an interval as an mpmath.mpf."""
    return mp.make_mpf(x._mpi_[0])
#
#
def upper(x):
    """Upper endpoint of an interval as an mpmath.mpf."""
    return mp.make_mpf(x._mpi_[1])
#
#
def midpoint(x, precision=DEFAULTPRECISION):
    with mp.workprec(precision):
        return (lower(x) + upper(x)) / 2
#
#
def rational_interval(value):
    """Tightest enclosure of a rational at the current iv precision."""
    value = Fraction(value)
    if value.denominator == 1:
        return iv.mpf(value.numerator)
    return iv.mpf(value.numerator) / iv.mpf(value.denominator)
#
#
def expr_interval(e, precision=DEFAULTPRECISION):
    """Certified enclosure of a RealExpr at ``precision`` bits."""
    with ivprec(precision):
        if e.variant == EXPR_RATIONAL:
            return rational_interval(e.args[0])
        if e.variant == EXPR_DECIMAL:
            return rational_interval(Fraction(e.args[0]))
        if e.variant == EXPR_QUADRATIC:
            p, q, d, r = e.args
            return (iv.mpf(p) + iv.mpf(q)*iv.sqrt(iv.mpf(d))) / iv.mpf(r)
        if e.variant == EXPR_LOGQUOTIENT:
            isRational, value = is_rational(e)
            if isRational:
                return rational_interval(value)
            c, b = e.args
            return iv.ln(rational_interval(c)) / iv.ln(rational_interval(b))
        total = iv.mpf(0)
        for term in e.args:
            total = total + expr_interval(term, precision)
        return total
#
#
def to_interval(value, precision=DEFAULTPRECISION):
    """Certified enclosure of any supported real value.

    Accepts RealExpr, int, Fraction, expression strings, mpmath.mpf and float
    (the last two are taken as exact points).

    """
    if isinstance(value, (int, Fraction)):
        with ivprec(precision):
            return rational_interval(value)
    if isinstance(value, (RealExpr, str)):
        return expr_interval(as_expr(value), precision)
    if hasattr(value, '_mpi_'):
        return value
    with ivprec(precision):
        return iv.mpf(value)
#
#
def eval_expr(e, precision=DEFAULTPRECISION):
    """Evaluate a RealExpr to ``precision`` bits.

    The enclosure is computed GUARDBITS wider than requested and its midpoint
    rounded once, so the result is within 2 ulp of the true value. Rational
    values (including rational log quotients) come out exactly whenever they
    are representable.

    Args:
        e (RealExpr): Expression to evaluate.
        precision (int): Mantissa bits of the result.

    Returns:
        mpmath.mpf

    Raises:
        ValidationError: If ``e`` is malformed.

    """
    e = as_expr(e)
    enclosure = expr_interval(e, precision + GUARDBITS)
    centre = midpoint(enclosure, precision + GUARDBITS)
    with mp.workprec(precision):
        return +centre
#
#
def to_mpf(value, precision=DEFAULTPRECISION):
    """Convert any supported real value to an mpmath.mpf at ``precision``."""
    if isinstance(value, (RealExpr, str)):
        return eval_expr(value, precision)
    with mp.workprec(precision):
        if isinstance(value, Fraction):
            return mpmath.mpf(value.numerator) / value.denominator
        return +mpmath.mpf(value)
#
#
def exact_value(value):
    """Return value as a Fraction when it is exactly rational, else as given.

    Used for multiplicities, which are kept exact whenever the input allows.

    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        e = parse_expr(value)
        isRational, exact = is_rational(e)
        return exact if isRational else e
    if isinstance(value, RealExpr):
        isRational, exact = is_rational(value)
        return exact if isRational else value
    return value


################################################################################
#### EXACT RATIONALITY #########################################################
#
@functools.lru_cache(maxsize=4096)
def prime_exponents(value):
    """Exponent vector {prime: exponent} of a positive rational."""
    value = Fraction(value)
    exponents = dict(sympy.factorint(value.numerator))
    for prime, power in sympy.factorint(value.denominator).items():
        exponents[prime] = exponents.get(prime, 0) - power
    exponents.pop(1, None)
    return exponents
#
#
def multiplicative_ratio(c, b):
    """Return the rational lam with c = b**lam, or None if there is none."""
    vc = prime_exponents(Fraction(c))
    vb = prime_exponents(Fraction(b))
    if not vc:
        return Fraction(0)
    if not vb or set(vc) != set(vb):
        return None
    pivot = next(iter(vb))
    lam = Fraction(vc[pivot], vb[pivot])
    for prime in vb:
        if Fraction(vc[prime]) != lam*vb[prime]:
            return None
    return lam
#
#
def squarefree_split(d):
    """Return (s, k) with d = s**2 * k and k squarefree."""
    s = 1
    k = 1
    for prime, power in sympy.factorint(d).items():
        s *= prime**(power // 2)
        k *= prime**(power % 2)
    return s, k
#
#
def is_rational(e):
    """Decide whether a RealExpr is rational.

    Args:
        e (RealExpr): The expression.

    Returns:
        (bool, Fraction or None): The flag, and the exact value when rational.

    Raises:
        None (Exception-neutral)

    Log quotients are rational exactly when their arguments are
    multiplicatively dependent, which is read off the prime factorisations.
    Decimal literals report their declared flag.

    """
    e = as_expr(e)
    if e.variant == EXPR_RATIONAL:
        return True, e.args[0]
    if e.variant == EXPR_LOGQUOTIENT:
        lam = multiplicative_ratio(*e.args)
        return (lam is not None), lam
    if e.variant == EXPR_QUADRATIC:
        p, q, d, r = e.args
        if q == 0:
            return True, Fraction(p, r)
        return False, None
    if e.variant == EXPR_DECIMAL:
        if e.args[1]:
            return False, None
        return True, Fraction(e.args[0])
    # Sums: rational iff all coordinates sit on the rational atom
    try:
        coords, atoms = linear_coordinates([rational_expr(1), e])
    except ClassificationError:
        return False, None
    one, mine = coords
    pivot = next(iter(one))
    lam = mine.get(pivot, Fraction(0)) / one[pivot]
    for atom in atoms:
        if mine.get(atom, Fraction(0)) != lam*one.get(atom, Fraction(0)):
            return False, None
    return True, lam


################################################################################
#### RATIONAL-LINEAR STRUCTURE #################################################
#
def _terms(e):
    return e.args if e.variant == EXPR_SUM else (e,)
#
#
def linear_coordinates(exprs):
    """Express each expression as rational coordinates over independent atoms.

    With B the common logarithm base of the irrational log quotients, the
    atoms are sqrt(k)*log(p)/log(B) for squarefree k and primes p dividing the
    numbers involved; without log quotients they are sqrt(k). These atoms are
    linearly independent over the rationals, so the rank of a set of
    expressions is the rank of its coordinate matrix.

    Args:
        exprs (list of RealExpr): Expressions to coordinatise.

    Returns:
        (list of dict, list): One {atom: Fraction} dict per expression, and the
            sorted list of all atoms that occur.

    Raises:
        ClassificationError: If log quotients use multiplicatively independent
            bases, or if a declared-irrational decimal meets any other
            irrational quantity.

    """
    exprs = [as_expr(e) for e in exprs]
    #
    # Common base and opaque decimals
    base = None
    nOpaque = 0
    nOtherIrrational = 0
    for e in exprs:
        for term in _terms(e):
            if term.variant == EXPR_DECIMAL and term.args[1]:
                nOpaque += 1
            elif not is_rational(term)[0]:
                nOtherIrrational += 1
                if term.variant == EXPR_LOGQUOTIENT and base is None:
                    base = term.args[1]
    if nOpaque > 0 and (nOtherIrrational > 0 or nOpaque > 1):
        raise ClassificationError("rank is undecidable: declared-irrational " +
            "decimals cannot be compared with other irrational exponents; " +
            "give exact exponents or declare the decimals rational")
    baseExponents = prime_exponents(base) if base is not None else {1: 1}
    #
    def addrational(coords, value, squarefree):
        for prime, power in baseExponents.items():
            key = (squarefree, prime)
            coords[key] = coords.get(key, Fraction(0)) + value*power
    #
    allCoords = []
    for e in exprs:
        coords = {}
        for term in _terms(e):
            isRational, value = is_rational(term)
            if isRational:
                addrational(coords, value, 1)
            elif term.variant == EXPR_QUADRATIC:
                p, q, d, r = term.args
                s, k = squarefree_split(d)
                addrational(coords, Fraction(p, r), 1)
                addrational(coords, Fraction(q*s, r), k)
            elif term.variant == EXPR_LOGQUOTIENT:
                c, b = term.args
                lam = multiplicative_ratio(base, b)
                if lam is None:
                    raise ClassificationError("log quotients over " +
                        "multiplicatively independent bases " + str(base) +
                        " and " + str(b) + " cannot be ranked exactly")
                for prime, power in prime_exponents(c).items():
                    key = (1, prime)
                    coords[key] = coords.get(key, Fraction(0)) + lam*power
            else:
                key = ('decimal', 0)
                coords[key] = coords.get(key, Fraction(0)) + 1
        allCoords.append({k: v for k, v in coords.items() if v != 0})
    atoms = sorted(set(k for coords in allCoords for k in coords), key=str)
    return allCoords, atoms
#
#
def coordinate_matrix(exprs):
    """Exact sympy matrix with one row of atom coordinates per expression."""
    allCoords, atoms = linear_coordinates(exprs)
    return sympy.Matrix([[to_sympy(c.get(atom, Fraction(0))) for atom in atoms]
        for c in allCoords])
#
#
def to_sympy(value):
    """Fraction -> sympy.Rational."""
    value = Fraction(value)
    return sympy.Rational(value.numerator, value.denominator)
#
#
def from_sympy(value):
    """sympy.Rational -> Fraction."""
    return Fraction(int(value.p), int(value.q))
#
#
def rational_rank(exprs):
    """Dimension over the rationals of the span of ``exprs``."""
    matrix = coordinate_matrix(exprs)
    if matrix.cols == 0:
        return 0
    return matrix.rank()
#
#### EOF #######################################################################
################################################################################
