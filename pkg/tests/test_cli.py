import csv
import io
import json
import subprocess
import sys

import pytest
from click.testing import CliRunner
from hypothesis import given, settings, strategies as st

from betamoments.cli import OutputRecord, cli

runner = CliRunner()


def run(*args):
    return runner.invoke(cli, list(args), catch_exceptions=False)


def payload(*args):
    res = run("-f", "json", *args)
    return res, json.loads(res.output)


def test_moments_catalan():
    res, doc = payload("moments", "-c", "0", "-a", "1/2", "-b", "3/2", "-n", "6")
    assert res.exit_code == 0
    assert [r["M_n"] for r in doc["payload"]] == ["1", "1", "2", "5", "14", "42"]
    assert doc["format_version"] == 1


def test_moments_motzkin_negative_c():
    res, doc = payload("moments", "-c", "-1", "-a", "3/2", "-b", "3/2", "-n", "6")
    assert [r["M_n"] for r in doc["payload"]] == ["1", "1", "2", "4", "9", "21"]


def test_moments_fraction_output_and_scale():
    res, doc = payload("moments", "-c", "-3/4", "-a", "1/2", "-b", "1/2", "-n", "3", "-s", "4")
    assert [r["M_n"] for r in doc["payload"]] == ["1", "5/4", "57/16"]
    assert [r["scaled"] for r in doc["payload"]] == ["1", "5", "57"]


@pytest.mark.parametrize("args", [
    ["moments", "-a", "0", "-b", "1"],
    ["moments", "-a", "0.5", "-b", "1"],
    ["verify", "nope"],
    ["integrality", "2", "4"],
    ["integrality", "x"],
    ["hankel"],
    ["gf", "no-such"],
])
def test_usage_errors(args):
    res = runner.invoke(cli, args)
    assert res.exit_code == 2


def test_verify_all():
    res, doc = payload("verify", "all", "--n-max", "30")
    assert res.exit_code == 0 and doc["ok"]
    finite = {r["identity"] for r in doc["payload"] if r["method"] == "exact"}
    assert {"c0-i", "c0-ii-odd", "c0-ii-even", "c0-v", "st-i", "st-vi", "motz"} <= finite
    assert all(r["status"] in ("ExactMatch", "EnclosureContains") for r in doc["payload"])
    keys = [(r["identity"], r["n"]) for r in doc["payload"]]
    assert keys == sorted(keys)


def test_verify_list():
    res, doc = payload("verify", "--list")
    assert {"c0-iv", "st-vii", "motz"} <= {r["identity"] for r in doc["payload"]}


def test_hankel():
    res, doc = payload("hankel", "-c", "0", "-a", "1/2", "-b", "1/2", "-N", "6")
    assert res.exit_code == 0
    assert all(int(r["det"]) > 0 for r in doc["payload"])
    assert doc["summary"]["pm"] and doc["summary"]["stieltjes"]
    res, doc = payload("hankel", "-c", "-2", "-a", "3/2", "-b", "3/2", "-N", "3")
    assert "stieltjes" not in doc["summary"]


def test_hankel_catalog():
    res = run("hankel", "--catalog", "-N", "4")
    assert res.exit_code == 0 and res.output.rstrip().endswith("PASS")


def test_gf():
    res, doc = payload("gf", "G(0,3/2,3/2)", "--order", "3")
    assert [r["coefficient"] for r in doc["payload"]] == ["1", "2", "5", "14"]
    res, doc = payload("gf", "-c", "1", "-a", "1/2", "-b", "1/2", "--order", "3")
    assert [r["coefficient"] for r in doc["payload"]] == ["1", "3", "11", "45"]
    res, doc = payload("gf", "--list")
    assert len(doc["payload"]) > 40


def test_match():
    res, doc = payload("match", "all")
    assert res.exit_code == 0
    assert all(r["status"] == "ExactPrefixMatch" for r in doc["payload"])
    res, doc = payload("match", "-a", "3/2", "-b", "3/2", "--oeis", "A000108")
    assert doc["payload"][0]["transform"] == "r-s(1)"


def test_match_unresolved_exits_nonzero():
    res = run("match", "-a", "1/2", "-b", "1/2", "--oeis", "A999999")
    assert res.exit_code == 1


def test_integrality():
    res, doc = payload("integrality", "demo")
    assert [r["value"] for r in doc["payload"][:5]] == ["1", "8/7", "3", "20/3", "26/3"]
    res, doc = payload("integrality", "1", "3", "-N", "3")
    assert [r["product"] for r in doc["payload"]] == ["1", "1", "2", "14"]
    assert doc["ok"]


def test_csv_and_table():
    res = run("-f", "csv", "moments", "-a", "1/2", "-b", "1/2", "-n", "3")
    rows = list(csv.DictReader(io.StringIO(res.output)))
    assert [r["M_n"] for r in rows] == ["1", "2", "6"]
    res = run("moments", "-a", "1/2", "-b", "1/2", "-n", "3")
    assert res.output.splitlines()[0].split() == ["n", "M_n"]


def test_deterministic():
    a = run("-f", "json", "verify", "c0-iii", "--n-max", "4").output
    b = run("-f", "json", "verify", "c0-iii", "--n-max", "4").output
    assert a == b


def test_module_entry_point():
    out = subprocess.run([sys.executable, "-m", "betamoments", "moments", "-a", "1/2", "-b", "3/2", "-n", "4"],
                         capture_output=True, text=True, check=True)
    assert "14" not in out.stdout and out.stdout.split()[-2] == "5"


text = st.text(st.characters(blacklist_categories=("Cs",)), max_size=8)


@settings(max_examples=40)
@given(st.dictionaries(text, text, max_size=3),
       st.lists(st.dictionaries(text, st.one_of(text, st.integers(), st.booleans()), max_size=3), max_size=4),
       st.booleans())
def test_record_round_trip(params, rows, ok):
    rec = OutputRecord("cmd", params, rows, {"k": "1/2"}, ok)
    assert OutputRecord.from_json(rec.to_json()) == rec
