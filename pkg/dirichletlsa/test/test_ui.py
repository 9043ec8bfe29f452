"""py.test tests for the dirichletlsa.ui module"""

################################################################################
#### LIBRARIES #################################################################
#
## STANDARD PACKAGES ###########################################################
import io                               # In-memory SVG
import pytest                           # Fixtures and exception checks
#
## OTHER PARTS OF DIRICHLETLSA #################################################
from .. import ui                       # Under test


################################################################################
#### TEST CLASSES ##############################################################
#
class TestNotifications(object):
    """Notifications go to stderr only"""
    def test_stderr(self, capsys):
        ui.notifyerror("bad input", "cli")
        ui.notifydebug("detail")
        ui.notifywait("solving")
        ui.notifywaitover("solving")
        ui.notifyprogress("searching", 3, 10)
        ui.notifysummary("Report", ["one", "two"])
        captured = capsys.readouterr()
        assert captured.out == ""
        assert "Oops (cli) - bad input" in captured.err
        assert "(3/10)" in captured.err
        assert "  two" in captured.err
    #
    def test_formats(self):
        formats = sorted(name for name in dir(ui) if name.startswith('TXTF'))
        assert formats == ['TXTFDEBUG', 'TXTFEND', 'TXTFERROR',
            'TXTFIMPORTANT', 'TXTFTITLE'], \
            "Only the formats the notifiers use should be defined."


class TestPlot(object):
    """Tests for ui.plot_roots()"""
    def test_deterministic(self):
        series = [("first", [0.5 + 1j, 0.5 - 1j]), ("second", [0.4, 0.3j])]
        outputs = []
        for _ in range(2):
            buffer = io.BytesIO()
            ui.plot_roots(series, buffer, circleRadius=2., title="test")
            outputs.append(buffer.getvalue())
        assert outputs[0] == outputs[1]
        assert b"<svg" in outputs[0]
    #
    def test_empty(self):
        with pytest.raises(ValueError):
            ui.plot_roots([], io.BytesIO())
        with pytest.raises(ValueError):
            ui.plot_roots([("empty", [])], io.BytesIO())
#
#### EOF #######################################################################
################################################################################
