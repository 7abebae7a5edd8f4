import json

import pytest

from cupcap import build_free_set
from cupcap.cli import RunConfig, main
from cupcap.espts import load_file


def run(*argv):
    return main(list(argv))


class TestGen:
    def test_gen_x_round_trip(self, tmp_path):
        out = tmp_path / "x.pts"
        assert run("gen-x", "3", "5", "5", "--out", str(out)) == 0
        ps = load_file(str(out))
        assert len(ps) == 20
        assert ps == build_free_set(3, 5, 5)

    def test_gen_x_with_cert(self, tmp_path):
        out, cert = tmp_path / "x.pts", tmp_path / "c.json"
        assert run("gen-x", "4", "4", "4", "--out", str(out),
                   "--cert", str(cert)) == 0
        payload = json.loads(cert.read_text())
        assert payload["passes"] is True
        assert payload["size"] == 8

    def test_gen_es(self, tmp_path):
        out, cert = tmp_path / "es.pts", tmp_path / "c.json"
        assert run("gen-es", "3", "6", "--out", str(out),
                   "--cert", str(cert)) == 0
        assert len(load_file(str(out))) == 16
        payload = json.loads(cert.read_text())
        assert payload["passes"] is True
        assert payload["bounds"]["max_convex_points"] <= 5

    def test_gen_es_small_n_usage_error(self, tmp_path):
        assert run("gen-es", "3", "4", "--out", str(tmp_path / "z.pts")) == 2


class TestVerify:
    def test_pass_exit_zero(self, tmp_path):
        out = tmp_path / "x.pts"
        run("gen-x", "3", "5", "5", "--out", str(out))
        assert run("verify", "--in", str(out), "--claim", "x:3,5,5") == 0

    def test_fail_exit_one(self, tmp_path):
        bad = tmp_path / "bad.pts"
        bad.write_text("espts v1\n0 0\n1 1\n2 2\n")
        rep = tmp_path / "r.json"
        assert run("verify", "--in", str(bad), "--claim", "x:3,4,4",
                   "--report", str(rep)) == 1
        payload = json.loads(rep.read_text())
        assert payload["passes"] is False

    def test_exit_matches_passes_flag(self, tmp_path):
        out, rep = tmp_path / "es.pts", tmp_path / "r.json"
        run("gen-es", "4", "6", "--out", str(out))
        code = run("verify", "--in", str(out), "--claim", "es:4,6",
                   "--report", str(rep))
        assert code == 0
        assert json.loads(rep.read_text())["passes"] is True

    def test_malformed_claim(self, tmp_path):
        out = tmp_path / "x.pts"
        run("gen-x", "3", "4", "4", "--out", str(out))
        assert run("verify", "--in", str(out), "--claim", "x:1") == 2


class TestAnalyze:
    def test_report_schema(self, tmp_path):
        out, rep = tmp_path / "x.pts", tmp_path / "r.json"
        run("gen-x", "3", "4", "4", "--out", str(out))
        assert run("analyze", "--in", str(out), "--report", str(rep),
                   "--l", "3", "--m", "4", "--n", "4") == 0
        payload = json.loads(rep.read_text())
        for key in ("input_file", "n_points", "longest_cup", "longest_cap",
                    "max_collinear", "max_convex_subset", "witnesses"):
            assert key in payload
        assert payload["n_points"] == 6
        assert payload["structure"] is None
        assert len(payload["witnesses"]["longest_cup"]) == \
            payload["longest_cup"]

    def test_parse_error_exit_two(self, tmp_path, capsys):
        bad = tmp_path / "bad.pts"
        bad.write_text("espts v1\n0 0\n1 zz\n")
        assert run("analyze", "--in", str(bad), "--report",
                   str(tmp_path / "r.json")) == 2
        assert "line 3" in capsys.readouterr().err

    def test_handles_duplicate_x_by_shearing(self, tmp_path):
        f = tmp_path / "v.pts"
        f.write_text("espts v1\n0 0\n0 1\n1 0\n2 5\n")
        rep = tmp_path / "r.json"
        assert run("analyze", "--in", str(f), "--report", str(rep)) == 0


class TestBounds:
    def test_table(self, tmp_path):
        out = tmp_path / "b.json"
        assert run("bounds", "--l", "3", "--maxmn", "6", "--out",
                   str(out)) == 0
        payload = json.loads(out.read_text())
        row = next(r for r in payload["cup_cap"]
                   if r["m"] == 4 and r["n"] == 4)
        assert row["general_position_threshold"] == 7
        conv = {r["n"]: r["lower"] for r in payload["convex"]}
        assert conv[6] == 17  # 2^(n-2) + 1 at l = 3

    def test_flag_overrides(self, tmp_path):
        out = tmp_path / "b.json"
        assert run("bounds", "--l", "3", "--maxmn", "3", "--out", str(out),
                   "--c", "7") == 0
        payload = json.loads(out.read_text())
        assert payload["config"]["c"] == 7
        # c * (min(m-1, n-1) + l) * C(m+n-4, n-2) at (3, 3, 3)
        assert payload["cup_cap"][0]["upper_conditional"] == 7 * (2 + 3) * 2


class TestFatCap:
    def test_report(self, tmp_path):
        import random
        from conftest import random_point_set
        from cupcap.espts import save_file
        ps = random_point_set(random.Random(1), 300)
        src = tmp_path / "p.pts"
        save_file(ps, str(src))
        rep = tmp_path / "fc.json"
        assert run("fat-cap", "--in", str(src), "--k", "4", "--seed", "3",
                   "--budget", "25", "--report", str(rep)) == 0
        payload = json.loads(rep.read_text())
        assert payload["k"] == 4
        assert len(payload["cap"]) == 4
        assert len(payload["occupancies"]) == 3
        assert payload["min_occupancy"] == min(payload["occupancies"])
        assert payload["transversal"]["violations"] == 0


class TestPlot:
    def test_svg_and_determinism(self, tmp_path):
        out = tmp_path / "x.pts"
        run("gen-x", "3", "5", "5", "--out", str(out))
        svg1, svg2 = tmp_path / "a.svg", tmp_path / "b.svg"
        assert run("plot", "--in", str(out), "--svg", str(svg1),
                   "--highlight", "0,2,4") == 0
        assert run("plot", "--in", str(out), "--svg", str(svg2),
                   "--highlight", "0,2,4") == 0
        assert svg1.read_bytes() == svg2.read_bytes()
        text = svg1.read_text()
        assert text.startswith("<svg") and "<circle" in text and \
            "polyline" in text

    def test_highlight_out_of_range(self, tmp_path):
        out = tmp_path / "x.pts"
        run("gen-x", "3", "4", "4", "--out", str(out))
        assert run("plot", "--in", str(out), "--svg",
                   str(tmp_path / "z.svg"), "--highlight", "99") == 2


class TestRunConfig:
    def test_round_trip(self, tmp_path):
        cfg = tmp_path / "run.cfg"
        cfg.write_text("# comment\nc = 5\nepsilon = 1/20\nseed = 7\n"
                       "sample_budget = 123\n")
        rc = RunConfig.from_file(str(cfg))
        assert rc.bounds.c == 5
        assert rc.bounds.epsilon.denominator == 20
        assert rc.seed == 7
        assert rc.sample_budget == 123

    def test_unknown_key_rejected(self, tmp_path):
        cfg = tmp_path / "run.cfg"
        cfg.write_text("mystery = 1\n")
        with pytest.raises(ValueError):
            RunConfig.from_file(str(cfg))

    def test_cli_rejects_bad_config(self, tmp_path, capsys):
        cfg = tmp_path / "run.cfg"
        cfg.write_text("mystery = 1\n")
        assert run("--config", str(cfg), "bounds", "--l", "3", "--maxmn",
                   "3", "--out", str(tmp_path / "b.json")) == 2

    def test_pipeline_determinism(self, tmp_path):
        r1, r2 = tmp_path / "r1.json", tmp_path / "r2.json"
        out = tmp_path / "x.pts"
        run("gen-x", "3", "5", "5", "--out", str(out))
        run("analyze", "--in", str(out), "--report", str(r1))
        run("analyze", "--in", str(out), "--report", str(r2))
        assert r1.read_bytes() == r2.read_bytes()
