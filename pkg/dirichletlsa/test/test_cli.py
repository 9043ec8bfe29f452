"""py.test tests for the dirichletlsa.cli module

Every command runs end to end through cli.main(); results are read back from
stdout or from the files written with --out.

"""

################################################################################
#### LIBRARIES #################################################################
#
## STANDARD PACKAGES ###########################################################
import csv                              # Reading results back
import pytest                           # Fixtures
import mpmath                           # Checking roots
#
## OTHER PARTS OF DIRICHLETLSA #################################################
from .. import cli                      # Under test
from .. import dirichlet
from .. import catalogue
from ..errors import ConvergenceError


################################################################################
#### UTILITY FUNCTIONS #########################################################
#
def readcsv(path):
    with open(str(path), encoding='utf-8', newline='') as csvFile:
        return list(csv.DictReader(csvFile))
#
#
def keyvalues(text):
    """Parse 'key: value' lines."""
    return dict(line.split(": ", 1) for line in text.splitlines())


################################################################################
#### TEST CLASSES ##############################################################
#
class TestConfiguration(object):
    """Tests for argument validation and exit codes"""
    def test_defaults(self):
        args = cli.build_parser().parse_args(['dio', '2-3'])
        job = cli.job_config(args)
        assert job.format == cli.FORMAT_TABLE
        assert job.count == cli.DEFAULTCOUNT
        assert job.precision == cli.numerics.DEFAULTPRECISION
    #
    def test_badvalues(self, capsys):
        for argv in (['classify', '2-3', '--precision', '32'],
                ['dio', '2-3', '--epsilon', '0'],
                ['dio', '2-3', '--count', '0'],
                ['roots', '2-3', '--strip-height', '-1'],
                ['roots', '2-3', '--format', 'svg'],
                ['classify', 'no-such-polynomial']):
            assert cli.main(argv) == cli.EXIT_INPUT, " ".join(argv)
        assert "Oops" in capsys.readouterr().err
    #
    def test_badsyntax(self):
        with pytest.raises(SystemExit):
            cli.main(['dio', '2-3', '--format', 'svg'])
        with pytest.raises(SystemExit):
            cli.main(['frobnicate', '2-3'])
    #
    def test_badspec(self, tmp_path, capsys):
        spec = tmp_path / "bad.txt"
        spec.write_text("base_ratio = 1/2\n\n[term]\nexponent = 1 + foo\n" +
            "multiplicity = 1\n", encoding='utf-8')
        assert cli.main(['classify', str(spec)]) == cli.EXIT_INPUT
        assert "line 4" in capsys.readouterr().err
    #
    def test_numericfailure(self, monkeypatch):
        def fail(job):
            raise ConvergenceError("no convergence")
        monkeypatch.setitem(cli.COMMANDS, 'classify', fail)
        assert cli.main(['classify', '2-3']) == cli.EXIT_NUMERIC


class TestClassify(object):
    """Tests for the classify command"""
    def test_twothree(self, capsys):
        assert cli.main(['classify', '2-3']) == cli.EXIT_OK
        result = keyvalues(capsys.readouterr().out)
        assert result['name'] == '2-3'
        assert result['kind'] == dirichlet.KIND_NONLATTICE
        assert result['rank'] == '2' and result['generic'] == 'yes'
        assert abs(float(result['D']) - 0.787885) < 1e-5
        assert abs(float(result['D_ell']) + 1) < 1e-15
        assert abs(float(result['C'])/8.267e-4 - 1) < 0.01
        assert 'generator' not in result
    #
    def test_cantor(self, tmp_path):
        out = tmp_path / "cantor.txt"
        assert cli.main(['classify', 'cantor', '--out', str(out)]) == \
            cli.EXIT_OK
        result = keyvalues(out.read_text(encoding='utf-8'))
        assert result['kind'] == dirichlet.KIND_LATTICE
        assert result['k'] == '(1)'
        assert result['single gap'] == 'yes'
        assert abs(float(result['D']) - float(result['D_ell'])) < 1e-15


class TestDio(object):
    """Tests for the dio command"""
    def test_table(self, capsys):
        assert cli.main(['dio', '2-3', '--count', '8']) == cli.EXIT_OK
        lines = capsys.readouterr().out.splitlines()
        assert lines[0].split() == ["Q", "(q,k)", "p_q", "eps*C*Q*p_q"]
        assert len(lines) == 9
        assert any("(306,485)" in line for line in lines)
        assert any("< p_53" in line for line in lines), \
            "Regions smaller than a period are flagged."
    #
    def test_csv(self, tmp_path):
        out = tmp_path / "dio.csv"
        assert cli.main(['dio', '2-3', '--count', '8', '--format', 'csv',
            '--out', str(out)]) == cli.EXIT_OK
        rows = readcsv(out)
        assert list(rows[0].keys()) == ['Q', 'q', 'k_2', 'period', 'radius']
        assert [row['q'] for row in rows][:2] == ['665', '306'], \
            "Rows come in decreasing Q."
        Q = [float(row['Q']) for row in rows]
        assert Q == sorted(Q, reverse=True)
        row = [row for row in rows if row['q'] == '306'][0]
        assert abs(float(row['radius']) - 155.49) < 0.2
    #
    def test_lattice(self, capsys):
        assert cli.main(['dio', 'cantor']) == cli.EXIT_INPUT
        assert "lattice" in capsys.readouterr().err


class TestRoots(object):
    """Tests for the roots, refine and plot commands"""
    def test_roots(self, tmp_path):
        out = tmp_path / "roots.csv"
        assert cli.main(['roots', '2-3', '--q', '53', '--out', str(out)]) == \
            cli.EXIT_OK
        rows = readcsv(out)
        assert tuple(rows[0].keys()) == cli.ROOTCOLUMNS
        assert 84 <= len(rows) <= 85
        assert all(row['source_q'] == '53' for row in rows)
        heights = [float(row['im']) for row in rows]
        assert heights == sorted(heights)
        values, _ = cli.read_roots_csv(str(out))
        assert len(values) == len(rows)
    #
    def test_lattice(self, tmp_path):
        out = tmp_path / "cantor.csv"
        assert cli.main(['roots', 'cantor', '--out', str(out)]) == cli.EXIT_OK
        rows = readcsv(out)
        assert len(rows) == 1, "Half a period holds the real root only."
        expected = mpmath.log(2)/mpmath.log(3)
        assert abs(float(rows[0]['re']) - float(expected)) < 1e-15
        assert cli.main(['roots', 'cantor', '--stability-circle', '--format',
            'svg', '--out', str(tmp_path / "cantor.svg")]) == cli.EXIT_INPUT
    #
    def test_missingq(self, capsys):
        assert cli.main(['roots', '2-3', '--q', '300']) == cli.EXIT_INPUT
        err = capsys.readouterr().err
        assert "q = 300" in err and "41, 53" in err
    #
    def test_degreecap(self, capsys):
        assert cli.main(['roots', '2-3', '--q', '306', '--max-degree',
            '100']) == cli.EXIT_INPUT
        assert "k_N = 485" in capsys.readouterr().err, \
            "The error should name the degree over the cap."
    #
    def test_refine(self, tmp_path, capsys):
        out = tmp_path / "refined.csv"
        assert cli.main(['refine', '2-3', '--q', '53', '--seed-height', '10',
            '--out', str(out)]) == cli.EXIT_OK
        assert "roots converged" in capsys.readouterr().err
        rows = readcsv(out)
        assert tuple(rows[0].keys()) == cli.REFINECOLUMNS
        assert len(rows) > 0
        f = catalogue.two_three()
        for row in rows:
            s = mpmath.mpc(mpmath.mpf(row['re']), mpmath.mpf(row['im']))
            assert abs(s.imag) < 12
            assert abs(dirichlet.evaluate(f, s)) < 1e-15
        assert cli.main(['refine', 'cantor']) == cli.EXIT_INPUT
    #
    def test_plot(self, tmp_path):
        data = tmp_path / "roots.csv"
        assert cli.main(['roots', '2-3', '--q', '53', '--out', str(data)]) == \
            cli.EXIT_OK
        first = tmp_path / "first.svg"
        second = tmp_path / "second.svg"
        for out in (first, second):
            assert cli.main(['plot', str(data), '--circle-radius', '13.18',
                '--out', str(out)]) == cli.EXIT_OK
        assert first.read_bytes() == second.read_bytes(), \
            "Identical inputs should give identical SVG bytes."
        assert b"<svg" in first.read_bytes()
        assert "f_q, q = 53" in first.read_text(encoding='utf-8')
    #
    def test_badplot(self, tmp_path):
        data = tmp_path / "junk.csv"
        data.write_text("a,b\n1,2\n", encoding='utf-8')
        assert cli.main(['plot', str(data), '--out',
            str(tmp_path / "junk.svg")]) == cli.EXIT_INPUT
        assert cli.main(['plot', str(data)]) == cli.EXIT_INPUT
        assert cli.main(['plot', str(tmp_path / "missing.csv"), '--out',
            str(tmp_path / "missing.svg")]) == cli.EXIT_INPUT
#
#### EOF #######################################################################
################################################################################
