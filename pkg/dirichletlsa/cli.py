"""Command line interface of dirichletlsa.

    DirichletLSA.py classify SPEC
    DirichletLSA.py dio SPEC [--count N] [--max-degree K] [--format FMT]
    DirichletLSA.py roots SPEC [--q Q] [--strip-height T] [--format FMT]
    DirichletLSA.py refine SPEC [--q Q] [--seed-height T] [--format FMT]
    DirichletLSA.py plot CSV [CSV ...] --out FILE.svg [--circle-radius R]

SPEC is a spec file (see dirichletlsa.specfile) or the name of a shipped
example (2-3, golden, type1_2, 2-3-5-7, 3-4-13, type1_3, cantor). Results go
to stdout unless --out is given; notifications go to stderr. The exit code is
0 on success, 2 for bad input and 1 when a numerical method fails.

"""


################################################################################
#### LIBRARIES #################################################################
#
## STANDARD PACKAGES ###########################################################
import os                               # Shipped spec files
import sys                              # Standard streams
import csv                              # Root tables
import argparse                         # Argument parsing
from fractions import Fraction          # Exact numeric flags
from collections import namedtuple      # Lightweight structures
import mpmath                           # Reading and printing roots
from mpmath import mp
#
## OTHER PARTS OF DIRICHLETLSA #################################################
from dirichletlsa import numerics
from dirichletlsa import dirichlet
from dirichletlsa import dioph
from dirichletlsa import lsa
from dirichletlsa import specfile
from dirichletlsa import ui
from dirichletlsa.errors import ValidationError


################################################################################
#### CONSTANTS #################################################################
#
EXIT_OK = 0
EXIT_NUMERIC = 1
EXIT_INPUT = 2
#
FORMAT_CSV = 'csv'
FORMAT_SVG = 'svg'
FORMAT_TABLE = 'text-table'
#
# Output formats per command, the first being the default
FORMATS = {
    'classify': (FORMAT_TABLE,),
    'dio': (FORMAT_TABLE, FORMAT_CSV),
    'roots': (FORMAT_CSV, FORMAT_SVG),
    'refine': (FORMAT_CSV, FORMAT_SVG),
    'plot': (FORMAT_SVG,),
    }
#
# Significant digits in CSV files and in text tables
CSVDIGITS = 20
TABLEDIGITS = 6
#
ROOTCOLUMNS = ('re', 'im', 'source_q', 'residual')
REFINECOLUMNS = ('re', 'im', 'residual', 'seed_q', 'iterations')
#
DEFAULTCOUNT = 10
#
DATADIR = os.path.join(os.path.dirname(os.path.abspath(__file__)), 'data')


################################################################################
#### DATA STRUCTURES ###########################################################
#
JobConfig = namedtuple("JobConfig", "command spec precision epsilon delta0 " +
    "n_steps max_degree strip_height out format count q stability_circle " +
    "seed_height inputs circle_radius verbose")
JobConfig.__doc__ = \
"""Everything one command needs; build with ``job_config``.

Attributes:
    command (str): classify, dio, roots, refine or plot.
    spec (str or None): Spec file path or shipped example name.
    precision (int): Working precision in bits.
    epsilon (Fraction): Approximation error of the region of stability.
    delta0 (Fraction): First delta of the LLL stream.
    n_steps (int): Number of LLL stream steps.
    max_degree (int): Largest k_N solved or listed.
    strip_height (Fraction or None): Half-height of the root strip; None
        means half an oscillatory period.
    out (str or None): Output path; None writes to stdout.
    format (str): One of FORMATS[command].
    count (int): Number of approximations to search for.
    q (int or None): Denominator of the approximation to use.
    stability_circle (bool): Overlay the region of stability on SVG output.
    seed_height (Fraction or None): Only refine seeds with |Im| below this.
    inputs (tuple of str): CSV files to plot.
    circle_radius (Fraction or None): Circle overlay radius for plot.
    verbose (bool): Show debug messages.

"""


################################################################################
#### CONFIGURATION #############################################################
#
def _number(text):
    """Fraction from '1/10', '0.1' or '3' for argparse."""
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError("expected a rational number, got " +
            repr(text))
#
#
def build_parser():
    """The argparse parser of every command."""
    parser = argparse.ArgumentParser(prog='DirichletLSA.py',
        description="Lattice string approximation of Dirichlet polynomials.")
    commands = parser.add_subparsers(dest='command', metavar='COMMAND')
    commands.required = True
    helps = {
        'classify': "lattice/nonlattice class, rank, D_l, D and C",
        'dio': "table of simultaneous Diophantine approximations",
        'roots': "roots of a lattice approximation f_q",
        'refine': "roots of the polynomial by Newton from stable roots",
        'plot': "SVG scatter plot of root CSV files",
        }
    for name in ('classify', 'dio', 'roots', 'refine', 'plot'):
        sub = commands.add_parser(name, help=helps[name])
        if name == 'plot':
            sub.add_argument('inputs', nargs='+', metavar='CSV')
            sub.add_argument('--circle-radius', type=_number, default=None,
                help="draw the circle |s| = R")
        else:
            sub.add_argument('spec', metavar='SPEC',
                help="spec file or shipped example name")
        sub.add_argument('--precision', type=int,
            default=numerics.DEFAULTPRECISION, help="working precision in bits")
        sub.add_argument('--epsilon', type=_number, default=lsa.DEFAULTEPSILON)
        sub.add_argument('--delta0', type=_number,
            default=lsa.LatticeStringApproximator.DELTA0)
        sub.add_argument('--steps', type=int,
            default=lsa.LatticeStringApproximator.NSTEPS)
        sub.add_argument('--max-degree', type=int,
            default=lsa.LatticeStringApproximator.MAXDEGREE)
        sub.add_argument('--strip-height', type=_number, default=None)
        sub.add_argument('--seed-height', type=_number, default=None)
        sub.add_argument('--count', type=int, default=DEFAULTCOUNT,
            help="number of approximations to search for")
        sub.add_argument('--q', type=int, default=None,
            help="denominator of the approximation to use")
        sub.add_argument('--stability-circle', action='store_true')
        sub.add_argument('--out', default=None)
        sub.add_argument('--format', choices=FORMATS[name],
            default=FORMATS[name][0])
        sub.add_argument('--verbose', action='store_true')
    return parser
#
#
def job_config(args):
    """Validate parsed arguments into a JobConfig.

    Raises:
        ValidationError: For out-of-range values.

    """
    if args.precision < 53:
        raise ValidationError("--precision must be at least 53 bits")
    if args.epsilon <= 0:
        raise ValidationError("--epsilon must be positive")
    if args.max_degree < 1:
        raise ValidationError("--max-degree must be positive")
    if args.count < 1:
        raise ValidationError("--count must be positive")
    for flag, value in (('--strip-height', args.strip_height),
            ('--seed-height', args.seed_height)):
        if value is not None and value <= 0:
            raise ValidationError(flag + " must be positive")
    if args.format == FORMAT_SVG and args.out is None:
        raise ValidationError("SVG output needs --out")
    return JobConfig(args.command, getattr(args, 'spec', None),
        args.precision, args.epsilon, args.delta0, args.steps,
        args.max_degree, args.strip_height, args.out, args.format, args.count,
        args.q, args.stability_circle, args.seed_height,
        tuple(getattr(args, 'inputs', ())),
        getattr(args, 'circle_radius', None), args.verbose)
#
#
def load_document(spec):
    """A SpecDocument from a path or a shipped example name.

    Raises:
        ValidationError: If neither exists or the file is invalid.

    """
    if os.path.isfile(spec):
        return specfile.load_spec(spec)
    shipped = os.path.join(DATADIR, spec + '.txt')
    if os.path.isfile(shipped):
        return specfile.load_spec(shipped)
    raise ValidationError("no spec file or shipped example named " +
        repr(spec))


################################################################################
#### OUTPUT ####################################################################
#
def _fmt(x, digits=CSVDIGITS):
    return mpmath.nstr(x, digits)
#
#
def _writer(stream):
    return csv.writer(stream, lineterminator='\n')
#
#
def _open(job):
    if job.out is None:
        return sys.stdout, False
    return open(job.out, 'w', encoding='utf-8', newline=''), True
#
#
def _emit(job, write):
    stream, mustClose = _open(job)
    try:
        write(stream)
    finally:
        if mustClose:
            stream.close()
#
#
def read_roots_csv(path, precision=numerics.DEFAULTPRECISION):
    """Rows of a root CSV with 're' and 'im' parsed to mpc.

    Returns:
        (list of mpc, list of dict) in file order.

    Raises:
        ValidationError: If the file has no 're'/'im' columns or no rows.

    """
    with open(path, encoding='utf-8', newline='') as csvFile:
        reader = csv.DictReader(csvFile)
        if reader.fieldnames is None or 're' not in reader.fieldnames or \
                'im' not in reader.fieldnames:
            raise ValidationError(str(path) + " is not a root CSV (needs " +
                "'re' and 'im' columns)")
        rows = list(reader)
    if not rows:
        raise ValidationError(str(path) + " has no roots")
    values = []
    with mp.workprec(precision):
        for lineNo, row in enumerate(rows, 2):
            try:
                values.append(mpmath.mpc(mpmath.mpf(row['re']),
                    mpmath.mpf(row['im'])))
            except (ValueError, TypeError):
                raise ValidationError("bad number in " + str(path),
                    line=lineNo)
    return values, rows


################################################################################
#### COMMANDS ##################################################################
#
def _approximator(job, polynomial):
    approximator = lsa.LatticeStringApproximator()
    approximator.initialise(polynomial, precision=job.precision,
        epsilon=job.epsilon, delta0=job.delta0, nSteps=job.n_steps,
        maxDegree=job.max_degree, verbose=job.verbose)
    return approximator
#
#
def select_approximation(approximator, job):
    """The LatticeApproximation a roots/refine job works on.

    A lattice polynomial is its own approximation. Otherwise it is the
    approximation with denominator --q, or the last of --count
    approximations of degree at most --max-degree.

    Raises:
        ValidationError: If no approximation has denominator --q, or none
            was found.
        DomainError: If the approximation with denominator --q has k_N above
            --max-degree.

    """
    if approximator.classification().kind == dirichlet.KIND_LATTICE:
        return approximator.approximation(approximator.exact_sda())
    if job.q is None:
        found = approximator.sdas(count=job.count, maxDegree=job.max_degree)
        if not found:
            raise ValidationError("no approximation of degree at most " +
                str(job.max_degree))
        return approximator.approximation(found[-1])
    sda, passed = approximator.sda_with(job.q)
    if sda is None:
        raise ValidationError("no approximation with q = " + str(job.q) +
            " among " + ", ".join(str(s.q) for s in passed))
    return approximator.approximation(sda)
#
#
def cmd_classify(job):
    """Report kind, rank, genericity, generator, D_l, D and C."""
    document = load_document(job.spec)
    approximator = _approximator(job, document.polynomial)
    classification = approximator.classification()
    bounds = approximator.bounds()
    lines = []
    if document.name:
        lines.append("name: " + document.name)
    lines.append("kind: " + classification.kind)
    lines.append("rank: " + str(classification.rank))
    lines.append("generic: " + ("yes" if classification.generic else "no"))
    if classification.kind == dirichlet.KIND_LATTICE:
        base, q = classification.generator
        generator = numerics.format_expr(base)
        if q != 1:
            generator = "(" + generator + ")^(1/" + str(q) + ")"
        lines.append("generator: " + generator)
        lines.append("k: (" + ",".join(str(k) for k in classification.k) +
            ")")
    lines.append("D_ell: " + _fmt(bounds.D_ell))
    lines.append("D: " + _fmt(bounds.D))
    lines.append("C: " + _fmt(approximator.constant(), TABLEDIGITS))
    if document.zeta is not None:
        lines.append("single gap: " +
            ("yes" if document.zeta.singlegap else "no"))
    _emit(job, lambda stream: stream.write("\n".join(lines) + "\n"))
#
#
def format_table(rows):
    """Text table of TableRows: Q, (q,k_2..k_N), p_q, radius."""
    header = ("Q", "(q,k)", "p_q", "eps*C*Q*p_q")
    cells = []
    for row in rows:
        radius = _fmt(row.radius, TABLEDIGITS)
        if row.radius < row.period:
            radius += " < p_" + str(row.q)
        cells.append((_fmt(row.Q, TABLEDIGITS),
            "(" + ",".join(str(v) for v in (row.q,) + tuple(row.k)) + ")",
            _fmt(row.period, TABLEDIGITS), radius))
    widths = [max([len(header[ix])] + [len(cell[ix]) for cell in cells])
        for ix in range(len(header))]
    lines = ["  ".join(text.ljust(width) for text, width in
        zip(line, widths)).rstrip() for line in [header] + cells]
    return "\n".join(lines) + "\n"
#
#
def cmd_dio(job):
    """Table of SDAs in decreasing Q."""
    document = load_document(job.spec)
    approximator = _approximator(job, document.polynomial)
    rows = approximator.table_rows(approximator.sdas(count=job.count,
        maxDegree=job.max_degree))
    if job.format == FORMAT_TABLE:
        _emit(job, lambda stream: stream.write(format_table(rows)))
        return
    nk = len(document.polynomial.exponents) - 1
    #
    def write(stream):
        writer = _writer(stream)
        writer.writerow(['Q', 'q'] + ['k_' + str(j + 2) for j in range(nk)] +
            ['period', 'radius'])
        for row in rows:
            writer.writerow([_fmt(row.Q), row.q] + list(row.k) +
                [_fmt(row.period), _fmt(row.radius)])
    _emit(job, write)
#
#
def _circle(approximator, approx, job):
    if not job.stability_circle:
        return None
    if approx.sda.Q == dioph.INFINITY:
        raise ValidationError("an exact lattice polynomial has no region " +
            "of stability")
    return approximator.region(approx).radius
#
#
def cmd_roots(job):
    """Roots of f_q up to --strip-height, sorted by (Im, Re)."""
    document = load_document(job.spec)
    approximator = _approximator(job, document.polynomial)
    approx = select_approximation(approximator, job)
    rootset = approximator.lattice_roots(approx, job.strip_height)
    if job.format == FORMAT_SVG:
        ui.plot_roots([("f_q, q = " + str(approx.sda.q),
            [root.value for root in rootset.roots])], job.out,
            _circle(approximator, approx, job), document.name or None)
        return
    #
    def write(stream):
        writer = _writer(stream)
        writer.writerow(ROOTCOLUMNS)
        for root in rootset.roots:
            writer.writerow([_fmt(root.value.real), _fmt(root.value.imag),
                approx.sda.q, _fmt(root.residual)])
    _emit(job, write)
#
#
def cmd_refine(job):
    """Newton-refined roots of f seeded from the stable roots of f_q."""
    document = load_document(job.spec)
    approximator = _approximator(job, document.polynomial)
    approx = select_approximation(approximator, job)
    if approx.sda.Q == dioph.INFINITY:
        raise ValidationError("a lattice polynomial needs no refinement; " +
            "use the roots command")
    report = approximator.refine(approx, job.seed_height)
    refined = sorted(report.roots, key=lambda root: (root.value.imag,
        root.value.real))
    ui.notifysummary("Refinement from the stable roots of f_" +
        str(approx.sda.q), [
        str(len(report.roots)) + " roots converged",
        str(len(report.failed)) + " seeds failed",
        str(len(report.merges)) + " duplicates merged"] +
        ["seed " + mpmath.nstr(failed.seed, TABLEDIGITS) + ": " +
        failed.reason for failed in report.failed])
    if job.format == FORMAT_SVG:
        _, stable = approximator.stable(approx)
        ui.plot_roots([("f", [root.value for root in refined]),
            ("f_q, q = " + str(approx.sda.q),
            [root.value for root in stable.roots])], job.out,
            _circle(approximator, approx, job), document.name or None)
        return
    #
    def write(stream):
        writer = _writer(stream)
        writer.writerow(REFINECOLUMNS)
        for root in refined:
            writer.writerow([_fmt(root.value.real), _fmt(root.value.imag),
                _fmt(root.residual), approx.sda.q, root.iterations])
    _emit(job, write)
#
#
def _label(path, rows):
    if 'source_q' in rows[0] and rows[0]['source_q']:
        return "f_q, q = " + rows[0]['source_q']
    if 'seed_q' in rows[0] and rows[0]['seed_q']:
        return "f (seeds from q = " + rows[0]['seed_q'] + ")"
    return os.path.basename(path)
#
#
def cmd_plot(job):
    """One SVG with a marker class per input CSV."""
    series = []
    for path in job.inputs:
        values, rows = read_roots_csv(path, job.precision)
        series.append((_label(path, rows), values))
    ui.plot_roots(series, job.out, job.circle_radius)
#
#
COMMANDS = {
    'classify': cmd_classify,
    'dio': cmd_dio,
    'roots': cmd_roots,
    'refine': cmd_refine,
    'plot': cmd_plot,
    }


################################################################################
#### MAIN FUNCTION #############################################################
#
def main(argv=None):
    """Run one command; returns the exit code.

    Args:
        argv (list of str, optional): Arguments without the program name;
            defaults to sys.argv[1:].

    """
    args = build_parser().parse_args(argv)
    try:
        job = job_config(args)
        COMMANDS[job.command](job)
    except ValueError as err:
        ui.notifyerror(str(err), args.command)
        return EXIT_INPUT
    except ArithmeticError as err:
        ui.notifyerror(str(err), args.command)
        return EXIT_NUMERIC
    except IOError as err:
        ui.notifyerror(str(err), args.command)
        return EXIT_INPUT
    return EXIT_OK
#
#### EOF #######################################################################
################################################################################
