import json
from pathlib import Path

import pytest

from edgebetti.cli import main
from edgebetti.graph6 import graph6_encode
from edgebetti.graphs import path
from edgebetti.reports import strip_timing

FIXTURES = Path(__file__).parent / "fixtures"


def run(capsys, argv):
    code = main(argv)
    out = capsys.readouterr().out
    return code, json.loads(out) if out.lstrip().startswith("{") else out


class TestCompute:
    def test_complete_four(self, capsys):
        code, doc = run(capsys, ["compute", "--graph6", "C~"])
        assert code == 0
        assert doc["results"]["pd"] == 2 and doc["results"]["reg"] == 2

    def test_path_five(self, capsys):
        code, doc = run(capsys, ["compute", "--graph6", graph6_encode(path(5))])
        assert code == 0
        assert (doc["results"]["pd"], doc["results"]["reg"]) == (3, 5)

    def test_edge_list_input(self, capsys):
        code, doc = run(capsys, ["compute", "--edges", "1-2,2-3"])
        assert code == 0
        assert (doc["results"]["pd"], doc["results"]["reg"]) == (1, 3)

    def test_betti_triples_sorted(self, capsys):
        code, doc = run(capsys, ["compute", "--graph6", "C~", "--betti"])
        triples = doc["results"]["betti"]
        assert triples == sorted(triples)
        assert triples[0] == [0, 0, 1]

    def test_edgeless_is_a_structured_error(self, capsys):
        code, doc = run(capsys, ["compute", "--graph6", "C?"])
        assert code == 2
        assert "error" in doc["results"]

    def test_isolated_vertex_rejected(self, capsys):
        code, doc = run(capsys, ["compute", "--edges", "1-2", "--n", "3"])
        assert code == 2
        assert "isolated" in doc["results"]["error"]

    def test_bad_graph6(self, capsys):
        code, _ = run(capsys, ["compute", "--graph6", "B~"])
        assert code == 2


class TestConstruct:
    def test_witness_verified(self, capsys):
        code, doc = run(capsys, ["construct", "--n", "6", "--pd", "7", "--reg", "3"])
        assert code == 0
        assert doc["results"]["claimed_pd"] == 7
        assert doc["results"]["claimed_reg"] == 3
        assert doc["results"]["verified"] is True

    def test_large_n_skips_certificate(self, capsys):
        code, doc = run(capsys, ["construct", "--n", "9", "--pd", "7", "--reg", "2"])
        assert code == 0
        assert doc["results"]["verified"] is False

    def test_undetermined_slice(self, capsys):
        code, doc = run(capsys, ["construct", "--n", "6", "--pd", "5", "--reg", "5"])
        assert code == 2
        assert "undetermined" in doc["results"]["error"]

    def test_connected_flag(self, capsys):
        code, doc = run(
            capsys,
            ["construct", "--n", "5", "--pd", "3", "--reg", "3", "--connected"],
        )
        assert code == 0


class TestVerifyAndAtlas:
    def test_verify_n3(self, capsys):
        code, doc = run(capsys, ["verify", "--n", "3", "--jobs", "1"])
        assert code == 0
        assert doc["results"]["passed"] is True

    def test_atlas_n4_matches_golden(self, capsys, tmp_path):
        out = tmp_path / "atlas4.json"
        code = main(["atlas", "--n", "4", "--jobs", "1", "--out", str(out)])
        capsys.readouterr()
        assert code == 0
        got = strip_timing(json.loads(out.read_text()))
        want = strip_timing(json.loads((FIXTURES / "atlas_n4_report.json").read_text()))
        assert got == want

    def test_atlas_report_roundtrips(self, capsys):
        code, doc = run(capsys, ["atlas", "--n", "3", "--jobs", "1"])
        assert code == 0
        assert json.loads(json.dumps(doc)) == doc

    def test_n7_gated(self, capsys):
        code, doc = run(capsys, ["atlas", "--n", "7"])
        assert code == 2
        assert "slow" in doc["results"]["error"]

    def test_conjecture_n5(self, capsys):
        code, doc = run(capsys, ["conjecture", "--n", "5", "--jobs", "1"])
        assert code == 0
        assert doc["results"]["passed"] is True
