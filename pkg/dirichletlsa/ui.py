"""Default console and plotting interface for dirichletlsa.

Notifications are printed to stderr with ANSI formatting, so that stdout
carries nothing but the tables and CSV a command produces. Applications that
embed the pipeline override the hook_...() methods of
lsa.LatticeStringApproximator instead of using these functions.

Plots are SVG scatter plots of roots in the complex plane, written with the
non-interactive Agg backend so that identical inputs give identical bytes.

"""


################################################################################
#### LIBRARIES #################################################################
#
## STANDARD PACKAGES ###########################################################
import sys                              # stderr for notifications
import matplotlib as mpl
mpl.use('Agg')
import matplotlib.pyplot as plt         # Scatter plots
from matplotlib.patches import Circle   # Region of stability overlay


################################################################################
#### CONSTANTS #################################################################
#
# Text format opener for errors
TXTFERROR = '\033[31;1m'
# ...and for important text
TXTFIMPORTANT = '\033[32;1m'
# ...and for debug messages
TXTFDEBUG = '\033[36m'
# ...and for titles
TXTFTITLE = '\033[32;1;4m'
# Text format closer
TXTFEND = '\033[0m'
#
# Marker per input series, cycled: dots for the first, then hollow circles
# and hollow diamonds
MARKERS = (('.', True), ('o', False), ('D', False))
#
# Fixed salt for the ids matplotlib writes into SVG files
SVGHASHSALT = 'dirichletlsa'


################################################################################
#### FUNCTIONS #################################################################
#
#### SIMPLE NOTIFICATIONS ######################################################
#
def _emit(text):
    sys.stderr.write(text + "\n")
    sys.stderr.flush()
#
#
def notifyerror(msg, subsystem=None):
    """Notify the user of an error."""
    if subsystem is None:
        _emit(TXTFERROR + "Oops - " + msg + TXTFEND)
    else:
        _emit(TXTFERROR + "Oops (" + subsystem + ") - " + msg + TXTFEND)
#
#
def notifydebug(msg, subsystem=None):
    """Show a debug message."""
    if subsystem is None:
        _emit(TXTFDEBUG + msg + TXTFEND)
    else:
        _emit(TXTFDEBUG + "[" + subsystem + "] " + msg + TXTFEND)
#
#
def notifywait(operation, subsystem=None):
    """Notify the user of the start of a potentially long operation."""
    _emit(TXTFIMPORTANT + "This may take a while: " + operation + "..." +
        TXTFEND)
#
#
def notifywaitover(operation, subsystem=None):
    """Notify the user of the completion of a long operation."""
    _emit(TXTFIMPORTANT + "Done: " + operation + TXTFEND)
#
#
def notifysummary(title, lines):
    """Show a titled block of result lines (e.g. a refinement report)."""
    _emit(TXTFTITLE + title + TXTFEND)
    for line in lines:
        _emit("  " + line)
#
#
def notifyprogress(operation, progress, progressLim=1., subsystem=None):
    """Report progress as a debug-style line."""
    notifydebug(operation + "... (" + str(progress) + "/" + str(progressLim) +
        ")", subsystem)
#
#
#### PLOTTING ##################################################################
#
def plot_roots(series, outFile, circleRadius=None, title=None):
    """Write an SVG scatter plot of one or more root sets.

    Args:
        series (list of (str, list of complex)): One (legend label, roots)
            pair per input; each gets its own marker.
        outFile: Path or binary file object receiving the SVG.
        circleRadius (float, optional): Draw the circle |s| = radius (the
            region of stability) as a dotted line.
        title (str, optional): Axes title.

    Returns:
        None

    Raises:
        ValueError: If there is no series or a series is empty.

    """
    if not series:
        raise ValueError("nothing to plot")
    mpl.rcParams['svg.hashsalt'] = SVGHASHSALT
    fig, ax = plt.subplots(figsize=(6, 8))
    try:
        for ixSeries, (label, values) in enumerate(series):
            if len(values) == 0:
                raise ValueError("series " + repr(label) + " has no roots")
            marker, filled = MARKERS[ixSeries % len(MARKERS)]
            color = 'C' + str(ixSeries % 10)
            ax.scatter([complex(v).real for v in values],
                [complex(v).imag for v in values], marker=marker,
                s=12 if filled else 24, label=label,
                facecolors=color if filled else 'none', edgecolors=color,
                linewidths=0.8)
        if circleRadius is not None:
            ax.add_patch(Circle((0., 0.), float(circleRadius), fill=False,
                linestyle=':', edgecolor='k', label='region of stability'))
        ax.set_xlabel('Re(s)')
        ax.set_ylabel('Im(s)')
        if title is not None:
            ax.set_title(title)
        ax.legend(loc='upper right', fontsize='small')
        fig.savefig(outFile, format='svg', metadata={'Date': None})
    finally:
        plt.close(fig)
#
#### EOF #######################################################################
################################################################################
