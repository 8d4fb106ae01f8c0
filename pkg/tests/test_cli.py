import json
import logging
from pathlib import Path

import pytest

from main import main
from src.app import (EXIT_DISAGREEMENT, EXIT_OK, EXIT_VALIDATION, LOG_LEVEL_ENV, TautChernApp,
                     resolve_log_level)
from src.cli import (CommandEngine, RequestError, ResultDocument, parse_a_flag, parse_d_flag,
                     parse_request, render_output, render_text)
from src.cli import commands
from src.combin import Bipartition
from src.strata import TautClass

CONFIGS = Path(__file__).resolve().parents[1] / "configs"


def run_app(argv):
    app = TautChernApp()
    app.initialize({'workers': 1})
    return app, app.run(argv)


class TestParsing:
    def test_defaults(self):
        req = parse_request(["chern-char", "--g", "2", "--markings", "1,2"])
        assert req.space.dim == 5
        assert req.smax == 5
        assert req.mode == "theorem"
        assert req.format == "json"
        assert req.divisor.degree == 0
        assert req.phi is None

    def test_markings_default_to_the_anchor(self):
        req = parse_request(["bn-class", "--g", "3", "--d", "1=2"])
        assert req.space.markings == ("1",)
        assert req.mode == "symbolic"
        assert req.smax is None

    def test_flags(self):
        req = parse_request(["chern-char", "--g", "2", "--markings", "1,2", "--ell", "1",
                             "--d", "1=2,2=-1", "--a", "1:1=3;0:1,2=-1", "--smax", "2",
                             "--mode", "both", "--format", "text"])
        assert req.divisor.ell == 1
        assert dict(req.divisor.d) == {"1": 2, "2": -1}
        assert req.divisor.a_of(Bipartition(1, frozenset({"1"}))) == 3
        assert req.divisor.a_of(Bipartition(0, frozenset({"1", "2"}))) == -1
        assert (req.smax, req.mode, req.format) == (2, "both", "text")

    def test_flag_syntax(self):
        assert parse_d_flag("1=2, 3=-1") == {"1": 2, "3": -1}
        assert parse_a_flag("1:1=2") == [{"h": 1, "S": ["1"], "value": 2}]
        with pytest.raises(RequestError):
            parse_d_flag("1:2")
        with pytest.raises(RequestError):
            parse_a_flag("1=2")
        with pytest.raises(RequestError, match="integer"):
            parse_d_flag("1=x")

    @pytest.mark.parametrize("argv, message", [
        (["chern-char", "--g", "2", "--markings", "2,3"], "anchor"),
        (["chern-char", "--markings", "1"], "--g is required"),
        (["chern-char", "--g", "2", "--smax", "9"], "smax"),
        (["bn-class", "--g", "2", "--mode", "theorem"], "--mode"),
        (["drc-divisor", "--g", "2", "--markings", "1,2", "--i", "1"], "--i and --j"),
        (["drc-divisor", "--g", "2", "--markings", "1,2", "--i", "1", "--j", "7"], "unknown marking"),
        (["validate-phi", "--g", "2"], "phi document"),
        (["chern-char", "--g", "2", "--a", "1:2=1", "--markings", "1,2"], "anchor"),
        (["chern-char", "--g", "2", "--r", "-1"], "r must be"),
    ])
    def test_invalid_requests(self, argv, message):
        with pytest.raises(RequestError, match=message):
            parse_request(argv)

    def test_unknown_command_is_a_request_error(self):
        with pytest.raises(RequestError):
            parse_request(["mystery", "--g", "2"])

    def test_config_file_and_flag_precedence(self):
        path = str(CONFIGS / "chern_char_g2.json")
        req = parse_request(["--config", path])
        assert (req.command, req.smax, req.mode) == ("chern-char", 2, "both")
        assert parse_request(["--config", path, "--smax", "1", "--mode", "oracle"]).smax == 1
        defaults = {"command": "bn-class", "g": 3}
        assert parse_request(["--config", path], defaults).command == "chern-char"

    def test_echo_rebuilds_the_request(self):
        path = str(CONFIGS / "phi_zero_g2.json")
        req = parse_request(["chern-char", "--g", "2", "--markings", "1,2", "--ell", "1",
                             "--d", "1=-2", "--phi-file", path, "--smax", "3"])
        assert req.phi is not None
        assert parse_request([], req.echo()) == req
        assert json.loads(json.dumps(req.echo())) == req.echo()

    def test_missing_config_file(self, tmp_path):
        with pytest.raises(RequestError, match="cannot read"):
            parse_request(["--config", str(tmp_path / "absent.json")])


class TestRendering:
    def test_text_lines(self, space_g2p2):
        req = parse_request(["chern-char", "--g", "2", "--markings", "1,2", "--format", "text"])
        doc = ResultDocument(req.echo(), "ch", {0: TautClass.unit(space_g2p2) * 3,
                                                1: TautClass.zero(space_g2p2)})
        doc.data["rho"] = 1
        doc.metadata["agreement"] = True
        text = render_text(doc)
        assert text.splitlines() == ["command: chern-char g=2 markings=1,2", "ch:",
                                     "deg 0: 3·1", "deg 1: 0", "rho: 1", "agreement: true"]
        assert render_output(doc, "text") == text.encode("utf-8")

    def test_json_document(self, space_g2p2):
        req = parse_request(["chern-char", "--g", "2", "--markings", "1,2"])
        doc = ResultDocument(req.echo(), "ch", {0: TautClass.unit(space_g2p2) * -1})
        doc.fill_metadata()
        data = json.loads(render_output(doc, "json"))
        assert data["result"]["degrees"][0]["terms"][0]["coeff"] == "-1"
        assert data["metadata"] == {"generators": 1, "autOrders": {"1": 1}}
        with pytest.raises(ValueError):
            render_output(doc, "yaml")


class TestApp:
    def test_chern_char_to_stdout(self, capsys):
        app, code = run_app(["chern-char", "--g", "2", "--markings", "1", "--ell", "2",
                             "--smax", "0", "--format", "text"])
        assert code == EXIT_OK
        out = capsys.readouterr().out
        assert "deg 0: 3·1" in out
        assert "elapsed" not in out
        assert app.get_status()['last_command'] == "chern-char"

    def test_hodge_bundle_even_degree_prints_zero(self, tmp_path):
        out = tmp_path / "hodge.txt"
        _, code = run_app(["chern-char", "--g", "2", "--markings", "1", "--ell", "1",
                           "--format", "text", "--out", str(out)])
        assert code == EXIT_OK
        assert "deg 2: 0" in out.read_text(encoding="utf-8").splitlines()

    def test_timing_is_opt_in(self, tmp_path):
        out = tmp_path / "timed.json"
        _, code = run_app(["chern-char", "--g", "1", "--smax", "1", "--timing", "--out", str(out)])
        assert code == EXIT_OK
        assert "elapsed" in json.loads(out.read_text())["metadata"]

    def test_both_modes_agree(self, tmp_path):
        out = tmp_path / "both.json"
        _, code = run_app(["--config", str(CONFIGS / "chern_char_g2.json"), "--format", "json",
                           "--out", str(out)])
        assert code == EXIT_OK
        data = json.loads(out.read_text())
        assert data["metadata"]["agreement"] is True
        assert "diff" not in data

    def test_disagreement_exit_code(self, tmp_path, monkeypatch):
        def broken_oracle(divisor, smax, workers=1):
            return {s: TautClass.zero(divisor.space) for s in range(smax + 1)}

        monkeypatch.setattr(commands, "chern_char_oracle", broken_oracle)
        out = tmp_path / "broken.json"
        _, code = run_app(["chern-char", "--g", "2", "--ell", "2", "--smax", "1",
                           "--mode", "both", "--out", str(out)])
        assert code == EXIT_DISAGREEMENT
        data = json.loads(out.read_text())
        assert data["metadata"]["agreement"] is False
        assert [entry["degree"] for entry in data["diff"]] == [0, 1]

    def test_invalid_input_exit_code(self, tmp_path):
        out = tmp_path / "never.json"
        _, code = run_app(["chern-char", "--g", "0", "--out", str(out)])
        assert code == EXIT_VALIDATION
        assert not out.exists()
        # d >= g + r is refused by the Brill-Noether request
        _, code = run_app(["bn-class", "--g", "2", "--d", "1=3", "--out", str(out)])
        assert code == EXIT_VALIDATION

    def test_bad_log_level_from_environment(self, tmp_path, monkeypatch):
        monkeypatch.setenv(LOG_LEVEL_ENV, "bogus")
        out = tmp_path / "never.json"
        argv = ["chern-char", "--g", "1", "--smax", "0", "--out", str(out)]
        assert run_app(argv)[1] == EXIT_VALIDATION
        assert main(argv) == EXIT_VALIDATION
        assert not out.exists()

    def test_log_level_flag_is_scoped_to_the_run(self, tmp_path):
        root = logging.getLogger()
        before = root.level
        out = tmp_path / "quiet.json"
        app, code = run_app(["chern-char", "--g", "1", "--smax", "0", "--log-level", "error",
                             "--out", str(out)])
        assert code == EXIT_OK
        assert root.level == before
        assert app.run(["chern-char", "--g", "1", "--log-level", "loud"]) == EXIT_VALIDATION
        assert root.level == before

    def test_resolve_log_level(self):
        assert resolve_log_level("debug") == logging.DEBUG
        assert resolve_log_level("WARNING") == logging.WARNING
        with pytest.raises(RequestError, match="log level"):
            resolve_log_level("chatty")

    def test_chern_classes_genus_limit(self, tmp_path):
        out = tmp_path / "never.json"
        _, code = run_app(["chern-classes", "--g", "4", "--smax", "1", "--out", str(out)])
        assert code == EXIT_VALIDATION
        assert not out.exists()

    def test_validate_phi(self, tmp_path):
        out = tmp_path / "phi.json"
        argv = ["validate-phi", "--g", "2", "--markings", "1,2", "--out", str(out), "--phi-file"]
        _, code = run_app(argv + [str(CONFIGS / "phi_zero_g2.json")])
        assert code == EXIT_OK
        assert json.loads(out.read_text())["data"] == {"valid": True, "diagnostics": []}
        _, code = run_app(argv + [str(CONFIGS / "phi_degenerate_g2.json")])
        assert code == EXIT_VALIDATION
        data = json.loads(out.read_text())["data"]
        assert data["valid"] is False
        assert data["diagnostics"][0]["value"] == "3/2"

    def test_theta_class(self, tmp_path):
        out = tmp_path / "theta.json"
        _, code = run_app(["--config", str(CONFIGS / "theta_g2.json"), "--out", str(out)])
        assert code == EXIT_OK
        data = json.loads(out.read_text())
        assert data["data"]["codimension"] == 1
        assert data["result"]["label"] == "bn"
        assert data["result"]["degrees"][0]["degree"] == 1

    def test_drc_divisor(self, tmp_path):
        out = tmp_path / "drc.json"
        _, code = run_app(["--config", str(CONFIGS / "drc_g2.json"), "--out", str(out)])
        assert code == EXIT_OK
        data = json.loads(out.read_text())["data"]
        assert {"h": 1, "S": ["1"], "value": -1} in data["divisor"]["a"]
        assert len(data["divisor"]["a"]) == 3
        assert data["value"] == "c_2"

    def test_chern_classes_negated(self, tmp_path):
        out = tmp_path / "classes.json"
        _, code = run_app(["chern-classes", "--g", "1", "--markings", "1,2", "--d", "1=1",
                           "--negate", "--out", str(out)])
        assert code == EXIT_OK
        result = json.loads(out.read_text())["result"]
        assert result["label"] == "c(-F)"
        assert [entry["degree"] for entry in result["degrees"]] == [0, 1, 2]

    def test_worker_count_does_not_change_output(self, tmp_path):
        argv = ["chern-char", "--g", "2", "--markings", "1,2", "--ell", "1", "--d", "1=1",
                "--a", "1:1=2", "--smax", "3", "--mode", "both"]
        one, many = tmp_path / "one.json", tmp_path / "many.json"
        assert run_app(argv + ["--workers", "1", "--out", str(one)])[1] == EXIT_OK
        assert run_app(argv + ["--workers", "4", "--out", str(many)])[1] == EXIT_OK
        assert one.read_bytes() == many.read_bytes()


class TestCommandEngine:
    def test_registry(self):
        engine = CommandEngine()
        assert engine.get_available_commands() == sorted(
            ['bn-class', 'chern-char', 'chern-classes', 'drc-divisor', 'validate-phi'])
        assert engine.get_command('bn-class') is engine.get_command('bn-class')
        with pytest.raises(ValueError, match="not found"):
            engine.get_command('nope')

    def test_only_commands_can_be_registered(self):
        engine = CommandEngine()
        with pytest.raises(ValueError, match="BaseCommand"):
            engine.register_command_class(dict)
        engine.register_command_class(commands.ChernCharCommand, 'ch-again')
        assert 'ch-again' in engine.get_available_commands()
        assert engine.get_command('ch-again').get_name() == 'ch-again'
