"""Polynomial spec files.

A spec file is UTF-8 text made of ``key = value`` lines, grouped into
repeated sections. Blank lines and lines starting with '#' are ignored.
Either give the polynomial directly::

    name = 2-3
    base_ratio = 1/2

    [term]
    exponent = 1
    multiplicity = 1

    [term]
    exponent = log(3)/log(2)
    multiplicity = 1

or a self-similar string, whose Dirichlet polynomial is derived::

    name = cantor
    length = 1

    [ratio]
    value = 1/3
    multiplicity = 2

    [gap]
    value = 1/3

Exponents use the numerics expression grammar; multiplicities accept it too,
as well as plain decimals such as 0.1 (taken as exact rationals).

"""


################################################################################
#### LIBRARIES #################################################################
#
## STANDARD PACKAGES ###########################################################
import re                               # Line grammar
from fractions import Fraction          # Ratios, gaps and decimals
from collections import namedtuple      # Lightweight structures
#
## OTHER PARTS OF DIRICHLETLSA #################################################
from dirichletlsa import numerics
from dirichletlsa import dirichlet
from dirichletlsa.errors import ValidationError


################################################################################
#### CONSTANTS #################################################################
#
SECTION_TERM = 'term'
SECTION_RATIO = 'ratio'
SECTION_GAP = 'gap'
#
# Allowed keys at the top level and per section
KEYS = {
    None: ('name', 'base_ratio', 'length'),
    SECTION_TERM: ('exponent', 'multiplicity'),
    SECTION_RATIO: ('value', 'multiplicity'),
    SECTION_GAP: ('value',),
    }
#
_REGEXSECTION = re.compile(r'^\[\s*([A-Za-z_]+)\s*\]$')
_REGEXKEYVALUE = re.compile(r'^([A-Za-z_]+)\s*=\s*(.*?)\s*$')


################################################################################
#### DATA STRUCTURES ###########################################################
#
SpecDocument = namedtuple("SpecDocument", "name polynomial zeta")
SpecDocument.__doc__ = \
"""A parsed spec file.

Attributes:
    name (str): The ``name`` key, or '' when absent.
    polynomial (DirichletPolynomial): The polynomial to study.
    zeta (GeometricZeta or None): Set when the file describes a string.

"""


################################################################################
#### PARSING ###################################################################
#
def _blocks(text):
    """Split text into (section, line, {key: (value, line, column)})."""
    blocks = [(None, 1, {})]
    for lineNo, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith('#'):
            continue
        indent = len(raw) - len(raw.lstrip())
        match = _REGEXSECTION.match(line)
        if match:
            section = match.group(1).lower()
            if section not in KEYS:
                raise ValidationError("unknown section [" + section + "]",
                    line=lineNo, column=indent + 1)
            blocks.append((section, lineNo, {}))
            continue
        match = _REGEXKEYVALUE.match(line)
        if not match:
            raise ValidationError("expected 'key = value' or '[section]'",
                line=lineNo, column=indent + 1)
        key = match.group(1).lower()
        section, _, entries = blocks[-1]
        if key not in KEYS[section]:
            where = "at the top level" if section is None else \
                "in [" + section + "]"
            raise ValidationError("unknown key '" + key + "' " + where,
                line=lineNo, column=indent + 1)
        if key in entries:
            raise ValidationError("duplicate key '" + key + "'",
                line=lineNo, column=indent + 1)
        entries[key] = (match.group(2), lineNo, indent + match.start(2) + 1)
    return blocks
#
#
def _expr(entry):
    value, lineNo, column = entry
    try:
        return numerics.parse_expr(value, column)
    except ValidationError as err:
        raise ValidationError(err.reason, line=lineNo, column=err.column)
#
#
def _multiplicity(entry):
    try:
        return numerics.exact_value(_expr(entry))
    except ValidationError as err:
        try:
            return Fraction(entry[0])
        except (ValueError, ZeroDivisionError):
            raise err
#
#
def _rational(entry):
    value, lineNo, column = entry
    try:
        return Fraction(value)
    except (ValueError, ZeroDivisionError):
        raise ValidationError("expected a rational number, got " +
            repr(value), line=lineNo, column=column)
#
#
def _require(entries, key, section, lineNo):
    if key not in entries:
        raise ValidationError("missing '" + key + "' in [" + section + "]",
            line=lineNo)
    return entries[key]
#
#
def parse_spec(text):
    """Parse spec-file text.

    Returns:
        SpecDocument

    Raises:
        ValidationError: With line (and column where it applies) of the
            first problem found, including invalid polynomials.

    """
    blocks = _blocks(text)
    _, _, top = blocks[0]
    sections = set(section for section, _, _ in blocks[1:])
    name = top['name'][0] if 'name' in top else ''
    if SECTION_TERM in sections and (sections - {SECTION_TERM}):
        raise ValidationError("[term] sections cannot be mixed with " +
            "[ratio] or [gap] sections")
    if SECTION_TERM in sections:
        if 'base_ratio' not in top:
            raise ValidationError("missing 'base_ratio' at the top level")
        baseRatio = _expr(top['base_ratio'])
        exponents = []
        multiplicities = []
        for _, lineNo, entries in blocks[1:]:
            exponents.append(_expr(_require(entries, 'exponent', SECTION_TERM,
                lineNo)))
            multiplicities.append(_multiplicity(_require(entries,
                'multiplicity', SECTION_TERM, lineNo)))
        try:
            polynomial = dirichlet.dirichlet_polynomial(baseRatio, exponents,
                multiplicities)
        except ValidationError as err:
            raise ValidationError(err.reason, line=top['base_ratio'][1])
        return SpecDocument(name, polynomial, None)
    if SECTION_RATIO in sections:
        ratios = []
        gaps = []
        for section, lineNo, entries in blocks[1:]:
            value = _rational(_require(entries, 'value', section, lineNo))
            if section == SECTION_GAP:
                gaps.append(value)
            else:
                multiplicity = 1
                if 'multiplicity' in entries:
                    multiplicity = _rational(entries['multiplicity'])
                    if multiplicity.denominator != 1:
                        raise ValidationError("ratio multiplicities must be " +
                            "integers", line=entries['multiplicity'][1],
                            column=entries['multiplicity'][2])
                ratios.append((value, int(multiplicity)))
        length = _rational(top['length']) if 'length' in top else Fraction(1)
        try:
            zeta = dirichlet.from_self_similar_string(ratios, gaps, length)
        except ValidationError as err:
            raise ValidationError(err.reason, line=blocks[1][1])
        return SpecDocument(name, zeta.denominator, zeta)
    raise ValidationError("a spec file needs [term] or [ratio] sections")
#
#
def load_spec(path):
    """Read and parse a spec file.

    Raises:
        ValidationError: As ``parse_spec``, or if the file cannot be read.

    """
    try:
        with open(path, encoding='utf-8') as specFile:
            text = specFile.read()
    except (IOError, UnicodeDecodeError) as err:
        raise ValidationError("cannot read " + str(path) + ": " + str(err))
    return parse_spec(text)
#
#
def format_spec(polynomial, name=''):
    """Spec-file text for a polynomial (inverse of ``parse_spec``)."""
    lines = []
    if name:
        lines.append("name = " + name)
    lines.append("base_ratio = " + numerics.format_expr(polynomial.base_ratio))
    for exponent, multiplicity in zip(polynomial.exponents,
            polynomial.multiplicities):
        if isinstance(multiplicity, numerics.RealExpr):
            multiplicity = numerics.format_expr(multiplicity)
        lines += ["", "[" + SECTION_TERM + "]",
            "exponent = " + numerics.format_expr(exponent),
            "multiplicity = " + str(multiplicity)]
    return "\n".join(lines) + "\n"
#
#### EOF #######################################################################
################################################################################
