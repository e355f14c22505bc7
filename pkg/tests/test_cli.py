import json
import math
import subprocess
import sys

import pytest

from renyix import cli


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


class TestCommands:
    def test_extrapolate(self, capsys):
        code, out, _ = run(capsys, "extrapolate", "--h2", "0.980829", "--h3", "0.928149", "--n", "3")
        assert code == 0
        d = json.loads(out)
        assert d["H_star"] == pytest.approx(1.036615, abs=1e-6)
        assert d["rigor"] == "heuristic"
        assert {e["rigor"] for e in d["estimates"].values()} == {"heuristic"}

    def test_extrapolate_with_h0(self, capsys):
        code, out, _ = run(capsys, "extrapolate", "--h2", "0.980829", "--h3", "0.928149",
                           "--n", "3", "--h0", str(math.log(3)))
        assert code == 0
        assert "H_023" in json.loads(out)["estimates"]

    def test_bounds_uniform(self, capsys):
        code, out, _ = run(capsys, "bounds", "--h2", "1.098612", "--n", "3")
        d = json.loads(out)["from_H2"]
        assert d["lower"]["value"] == pytest.approx(math.log(3), abs=1e-6)
        assert d["upper"]["value"] == pytest.approx(math.log(3), abs=1e-6)
        assert d["lower"]["rigor"] == "rigorous"

    def test_entropy(self, capsys):
        code, out, _ = run(capsys, "entropy", "--values", "0.5,0.25,0.25")
        d = json.loads(out)
        assert d["shannon"] == pytest.approx(1.5 * math.log(2), abs=1e-15)
        assert d["purity"]["coincidence_index"] == pytest.approx(0.375)

    def test_entropy_from_file(self, capsys, tmp_path):
        f = tmp_path / "p.json"
        f.write_text("[1, 1, 2]")
        code, out, _ = run(capsys, "entropy", "--file", str(f), "--renormalize")
        assert code == 0
        assert json.loads(out)["shannon"] == pytest.approx(1.5 * math.log(2), abs=1e-15)

    def test_sample_is_byte_identical(self, capsys, tmp_path):
        outs = []
        for name in ("a", "b"):
            code, _, _ = run(capsys, "sample", "--n", "10", "--count", "10000", "--seed", "42",
                             "--out", str(tmp_path / name))
            assert code == 0
            outs.append(sorted((tmp_path / name).iterdir()))
        assert [p.name for p in outs[0]] == [p.name for p in outs[1]]
        for a, b in zip(*outs):
            assert a.read_bytes() == b.read_bytes()

    @pytest.mark.parametrize("fig,extra", [(1, ["--grid", "64"]), (2, ["--n", "4"]),
                                           (3, []), (4, ["--count", "200"])])
    def test_figure(self, capsys, tmp_path, fig, extra):
        code, out, _ = run(capsys, "figure", "--id", str(fig), "--out", str(tmp_path), "--gnuplot", *extra)
        assert code == 0
        files = json.loads(out)["files"]
        assert set(files) == {"csv", "json", "gnuplot"}
        json.loads((tmp_path / f"figure{fig}.json").read_text())


class TestExitCodes:
    def test_validation_error(self, capsys):
        code, _, err = run(capsys, "entropy", "--values", "0.5,0.6")
        assert code == 2
        assert json.loads(err)["error"] == "NotNormalizedError"

    def test_out_of_range(self, capsys):
        code, _, err = run(capsys, "bounds", "--h2", "2.0", "--n", "3")
        assert code == 2
        assert json.loads(err)["error"] == "OutOfRangeError"

    @pytest.mark.parametrize("argv", [["bogus"], ["bounds", "--h2", "x", "--n", "3"], []])
    def test_usage_errors_are_structured(self, capsys, argv):
        code, _, err = run(capsys, *argv)
        assert code == 2
        assert json.loads(err)["error"] == "UsageError"

    def test_internal_error(self, capsys, monkeypatch):
        def boom(args):
            raise RuntimeError("boom")
        monkeypatch.setattr(cli, "cmd_bounds", boom)
        code, _, err = run(capsys, "bounds", "--h2", "0.5", "--n", "3")
        assert code == 1
        assert json.loads(err) == {"error": "RuntimeError", "message": "boom"}

    def test_module_entry_point(self):
        r = subprocess.run([sys.executable, "-m", "renyix", "bounds", "--h2", "0.5", "--n", "3"],
                           capture_output=True, text=True)
        assert r.returncode == 0
        assert "from_H2" in json.loads(r.stdout)
