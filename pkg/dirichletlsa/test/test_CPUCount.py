"""py.test tests for the dirichletlsa.CPUCount module"""

################################################################################
#### LIBRARIES #################################################################
#
## STANDARD PACKAGES ###########################################################
import pytest                           # Fixtures and exception checks
#
## OTHER PARTS OF DIRICHLETLSA #################################################
from .. import CPUCount                 # Under test


################################################################################
#### TEST CLASSES ##############################################################
#
class TestParallelWidth(object):
    """Tests for CPUCount.parallel_width()"""
    def test_available(self):
        assert CPUCount.available_cpu_count() >= 1
    #
    def test_caps(self, monkeypatch):
        monkeypatch.delenv(CPUCount.ENVTHREADS, raising=False)
        available = CPUCount.available_cpu_count()
        assert CPUCount.parallel_width() == available
        assert CPUCount.parallel_width(1) == 1
        assert CPUCount.parallel_width(available + 5) == available
        monkeypatch.setenv(CPUCount.ENVTHREADS, "1")
        assert CPUCount.parallel_width() == 1
        assert CPUCount.parallel_width(4) == 1
        monkeypatch.setenv(CPUCount.ENVTHREADS, " ")
        assert CPUCount.parallel_width() == available, \
            "A blank variable is ignored."
    #
    def test_invalid(self, monkeypatch):
        monkeypatch.delenv(CPUCount.ENVTHREADS, raising=False)
        for requested in (0, -2, 1.5):
            with pytest.raises(ValueError):
                CPUCount.parallel_width(requested)
        for cap in ("0", "many"):
            monkeypatch.setenv(CPUCount.ENVTHREADS, cap)
            with pytest.raises(ValueError):
                CPUCount.parallel_width()
#
#### EOF #######################################################################
################################################################################
