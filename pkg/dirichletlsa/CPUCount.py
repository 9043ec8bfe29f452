"""Available CPU count and the parallel width used by the worker pools.

The width of every multiprocessing pool in dirichletlsa is the number of CPUs
this process may run on, capped by the DIRICHLET_LSA_THREADS environment
variable and by any explicit request.

"""


################################################################################
#### LIBRARIES #################################################################
#
## STANDARD PACKAGES ###########################################################
import os                               # Environment and affinity queries
import re                               # /proc/self/status parsing
import multiprocessing                  # Fallback CPU count


################################################################################
#### CONSTANTS #################################################################
#
# Environment variable capping the pool width
ENVTHREADS = 'DIRICHLET_LSA_THREADS'


################################################################################
#### FUNCTIONS #################################################################
#
def available_cpu_count():
    """Number of CPUs this process is allowed to run on.

    Tries the cpuset mask in /proc/self/status, then the scheduler affinity,
    then multiprocessing.cpu_count(). Never returns less than 1.

    """
    # cpuset may restrict the number of *available* processors
    try:
        with open('/proc/self/status') as status:
            m = re.search(r'(?m)^Cpus_allowed:\s*(.*)$', status.read())
        if m:
            res = bin(int(m.group(1).replace(',', ''), 16)).count('1')
            if res > 0:
                return res
    except (IOError, ValueError):
        pass
    try:
        res = len(os.sched_getaffinity(0))
        if res > 0:
            return res
    except (AttributeError, OSError):
        pass
    try:
        return max(1, multiprocessing.cpu_count())
    except NotImplementedError:
        return 1
#
#
def parallel_width(requested=None):
    """Pool width: min(requested, DIRICHLET_LSA_THREADS, available CPUs).

    Args:
        requested (int or None): Width asked for by the caller; None means
            "as many as allowed".

    Returns:
        int >= 1

    Raises:
        ValueError: If ``requested`` or the environment variable is not a
            positive integer.

    """
    width = available_cpu_count()
    cap = os.environ.get(ENVTHREADS)
    if cap is not None and cap.strip():
        try:
            cap = int(cap)
        except ValueError:
            raise ValueError(ENVTHREADS + " must be a positive integer, got " +
                repr(cap))
        if cap < 1:
            raise ValueError(ENVTHREADS + " must be a positive integer, got " +
                str(cap))
        width = min(width, cap)
    if requested is not None:
        if int(requested) != requested or requested < 1:
            raise ValueError("thread count must be a positive integer, got " +
                repr(requested))
        width = min(width, int(requested))
    return width
#
#### EOF #######################################################################
################################################################################
