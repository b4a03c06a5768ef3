from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from betamoments.catalog import catalog, entry, entry_terms
from betamoments.moments import MomentSpec
from betamoments.oeis import (
    DEFAULT_FIXTURES,
    NetworkUnavailable,
    NotFound,
    OeisClient,
    OeisEntry,
    ParseError,
    fetch,
    parse_bfile,
    serialize_bfile,
    verify_claim,
    verify_sequence,
)

H = F(1, 2)
ROWS = [e for e in catalog() if e.oeis_id]


def test_fetch_catalan():
    assert fetch("A000108").terms[:6] == (1, 1, 2, 5, 14, 42)


def test_malformed_id():
    with pytest.raises(ParseError):
        fetch("A00")


def test_offline_missing(tmp_path):
    client = OeisClient(fixtures=tmp_path, offline=True)
    with pytest.raises(NetworkUnavailable):
        client.fetch("A000001")


def test_fixture_dir_override(tmp_path, monkeypatch):
    (tmp_path / "A000001.txt").write_text("# test\n0 7\n1 8\n")
    monkeypatch.setenv("BETAMOMENTS_FIXTURES", str(tmp_path))
    assert OeisClient().fetch("A000001").terms == (7, 8)


def test_network_404(monkeypatch, tmp_path):
    import urllib.error
    import urllib.request

    def boom(url, timeout):
        raise urllib.error.HTTPError(url, 404, "nope", None, None)

    monkeypatch.setattr(urllib.request, "urlopen", boom)
    with pytest.raises(NotFound):
        OeisClient(fixtures=tmp_path, offline=False).fetch("A000002")


def test_parse_skips_comments_and_gaps():
    e = parse_bfile("A000003", "# c\n\n3 10\n4 11\n6 13\n")
    assert e.offset == 3 and e.terms == (10, 11)
    with pytest.raises(ParseError):
        parse_bfile("A000003", "1 x\n")
    with pytest.raises(ParseError):
        parse_bfile("A000003", "# only comments\n")


def test_every_fixture_round_trips():
    for path in sorted(DEFAULT_FIXTURES.glob("A*.txt")):
        e = parse_bfile(path.stem, path.read_text())
        assert parse_bfile(e.id, serialize_bfile(e)) == e
        assert OeisClient().fixture_provenance(e.id)


@given(st.integers(0, 5), st.lists(st.integers(-10**30, 10**30), min_size=1, max_size=30))
def test_round_trip_property(offset, terms):
    e = OeisEntry("A123456", offset, tuple(terms))
    assert parse_bfile("A123456", serialize_bfile(e, ["header"])) == e


def test_all_cited_ids_have_fixtures():
    present = {p.stem for p in DEFAULT_FIXTURES.glob("A*.txt")}
    assert {e.oeis_id for e in ROWS} <= present


@pytest.mark.parametrize("row", ROWS, ids=lambda e: e.label)
def test_claim(row):
    rep = verify_claim(row, 25)
    assert rep.ok, rep
    assert rep.compared >= 20


def test_claim_examples():
    assert verify_claim(entry("central binomial")).status == "ExactPrefixMatch"
    rep = verify_claim(entry("arcsine at -3/2"))
    assert rep.oeis_id == "A084605" and rep.ok


def test_negative_control():
    terms = entry_terms(entry("Catalan"), 25)
    terms[7] += 1
    rep = verify_sequence("A000108", terms)
    assert rep.status == "Mismatch" and rep.index == 7


def test_unresolved_without_fixture(tmp_path):
    client = OeisClient(fixtures=tmp_path, offline=True)
    rep = verify_sequence("A004117", [1] * 25, client)
    assert rep.status == "Unresolved" and "NetworkUnavailable" in rep.cause


def test_both_super_ballot_ids_checked():
    assert verify_claim(entry("super ballot / 3")).oeis_id == "A007054"
    assert verify_claim(entry("super ballot 60(2n)!/(n!(n+3)!) / 10")).oeis_id == "A007272"


def test_reference_rows():
    for e in catalog():
        if e.reference:
            assert entry_terms(e, len(e.reference)) == list(e.reference)


def test_catalog_examples():
    assert entry("Catalan").spec == MomentSpec.of(0, H, 3 * H) and entry("Catalan").oeis_id == "A000108"
    assert entry("Riordan").spec == MomentSpec.of(-1, H, 3 * H) and entry("Riordan").oeis_id == "A005043"
    assert entry("2S(3/2,5/2)").oeis_id == "A089408"
    with pytest.raises(KeyError):
        entry("nothing")
