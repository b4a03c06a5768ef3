"""OEIS b-file client with an offline fixture store.

Lookup order: in-memory cache, fixture directory, network.  Setting
``BETAMOMENTS_OFFLINE=1`` disables the network; ``BETAMOMENTS_FIXTURES``
points at a different fixture directory.
"""
from __future__ import annotations

import os
import re
import threading
import urllib.error
import urllib.request
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Optional, Sequence

__all__ = [
    "ClaimReport",
    "NetworkUnavailable",
    "NotFound",
    "OeisClient",
    "OeisEntry",
    "OeisError",
    "ParseError",
    "fetch",
    "parse_bfile",
    "serialize_bfile",
    "verify_claim",
]

OFFLINE_ENV = "BETAMOMENTS_OFFLINE"
FIXTURES_ENV = "BETAMOMENTS_FIXTURES"
DEFAULT_FIXTURES = Path(__file__).parent / "data" / "oeis"
BFILE_URL = "https://oeis.org/{id}/b{digits}.txt"
TIMEOUT = 10.0
ALIGNMENT_SHIFTS = (0, -1, 1, -2, 2)
MIN_CLAIM_TERMS = 20

_ID = re.compile(r"^A\d{6}$")


class OeisError(Exception):
    pass


class NotFound(OeisError):
    pass


class NetworkUnavailable(OeisError):
    pass


class ParseError(OeisError):
    pass


@dataclass(frozen=True)
class OeisEntry:
    id: str
    offset: int
    terms: tuple[int, ...]

    def __post_init__(self) -> None:
        if not _ID.match(self.id):
            raise ParseError(f"malformed OEIS id {self.id!r}")
        if not self.terms:
            raise ParseError(f"{self.id}: no terms")


def check_id(aid: str) -> str:
    if not isinstance(aid, str) or not _ID.match(aid):
        raise ParseError(f"malformed OEIS id {aid!r}")
    return aid


def parse_bfile(aid: str, text: str) -> OeisEntry:
    """Parse b-file text: '#' comments, then 'index value' pairs."""
    check_id(aid)
    pairs = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) < 2:
            raise ParseError(f"{aid}: line {lineno}: expected 'index value', got {raw!r}")
        try:
            pairs.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise ParseError(f"{aid}: line {lineno}: non-integer field in {raw!r}") from None
    if not pairs:
        raise ParseError(f"{aid}: no data lines")
    # keep the leading run of consecutive indices; b-files may skip later on
    offset = pairs[0][0]
    terms = [pairs[0][1]]
    for (i0, _), (i1, v) in zip(pairs, pairs[1:]):
        if i1 != i0 + 1:
            break
        terms.append(v)
    return OeisEntry(aid, offset, tuple(terms))


def serialize_bfile(entry: OeisEntry, header: Sequence[str] = ()) -> str:
    lines = [f"# {h}" for h in header]
    lines += [f"{entry.offset + i} {t}" for i, t in enumerate(entry.terms)]
    return "\n".join(lines) + "\n"


def _offline() -> bool:
    return os.environ.get(OFFLINE_ENV, "").strip().lower() in ("1", "true", "yes", "on")


class OeisClient:
    """Caching fetcher; safe to share between threads."""

    def __init__(self, fixtures: Optional[Path] = None, offline: Optional[bool] = None):
        env_dir = os.environ.get(FIXTURES_ENV)
        self.fixtures = Path(fixtures) if fixtures else Path(env_dir) if env_dir else DEFAULT_FIXTURES
        self._offline = offline
        self._cache: dict[str, OeisEntry] = {}
        self._locks: dict[str, threading.Lock] = {}
        self._guard = threading.Lock()

    @property
    def offline(self) -> bool:
        return _offline() if self._offline is None else self._offline

    def _lock_for(self, aid: str) -> threading.Lock:
        with self._guard:
            return self._locks.setdefault(aid, threading.Lock())

    def fixture_provenance(self, aid: str) -> Optional[str]:
        path = self.fixtures / f"{aid}.txt"
        if not path.exists():
            return None
        for line in path.read_text().splitlines():
            if line.startswith("# provenance:"):
                return line.split(":", 1)[1].strip()
        return None

    def fetch(self, aid: str) -> OeisEntry:
        check_id(aid)
        hit = self._cache.get(aid)
        if hit is not None:
            return hit
        with self._lock_for(aid):
            hit = self._cache.get(aid)
            if hit is not None:
                return hit
            entry = self._from_fixture(aid) or self._from_network(aid)
            self._cache[aid] = entry
            return entry

    def _from_fixture(self, aid: str) -> Optional[OeisEntry]:
        path = self.fixtures / f"{aid}.txt"
        if not path.exists():
            return None
        return parse_bfile(aid, path.read_text())

    def _from_network(self, aid: str) -> OeisEntry:
        if self.offline:
            raise NetworkUnavailable(f"{aid}: offline mode and no fixture in {self.fixtures}")
        url = BFILE_URL.format(id=aid, digits=aid[1:])
        last: Exception | None = None
        for _ in range(2):
            try:
                with urllib.request.urlopen(url, timeout=TIMEOUT) as resp:
                    return parse_bfile(aid, resp.read().decode("utf-8", "replace"))
            except urllib.error.HTTPError as exc:
                if exc.code == 404:
                    raise NotFound(f"{aid}: no b-file at {url}") from exc
                last = exc
            except (urllib.error.URLError, OSError) as exc:
                last = exc
        raise NetworkUnavailable(f"{aid}: {last}")


_default = OeisClient()


def fetch(aid: str) -> OeisEntry:
    return _default.fetch(aid)


@dataclass(frozen=True)
class ClaimReport:
    """Outcome of checking a computed sequence against an OEIS entry.

    ``status`` is ``ExactPrefixMatch``, ``Mismatch`` or ``Unresolved``.
    ``shift`` is the alignment that matched (terms[k] == oeis[k + shift]);
    for a mismatch ``index`` is the first differing position at shift 0.
    """

    oeis_id: str
    status: str
    compared: int = 0
    shift: Optional[int] = None
    index: Optional[int] = None
    cause: str = ""

    @property
    def ok(self) -> bool:
        return self.status == "ExactPrefixMatch"


def _compare(ours: list[Fraction], theirs: tuple[int, ...], shift: int) -> tuple[int, Optional[int]]:
    # returns (number compared, first mismatch index or None)
    n = 0
    for k, v in enumerate(ours):
        j = k + shift
        if j < 0:
            continue
        if j >= len(theirs):
            break
        if v != theirs[j]:
            return n, k
        n += 1
    return n, None


def verify_sequence(aid: str, terms: Sequence, client: Optional[OeisClient] = None,
                    min_terms: int = MIN_CLAIM_TERMS) -> ClaimReport:
    client = client or _default
    try:
        entry = client.fetch(aid)
    except OeisError as exc:
        return ClaimReport(aid, "Unresolved", cause=f"{type(exc).__name__}: {exc}")
    ours = [Fraction(t) for t in terms]
    first_bad = None
    for shift in ALIGNMENT_SHIFTS:
        compared, bad = _compare(ours, entry.terms, shift)
        if bad is None and compared >= min(min_terms, len(ours)):
            return ClaimReport(aid, "ExactPrefixMatch", compared=compared, shift=shift)
        if shift == 0:
            first_bad = bad
    if first_bad is None:
        return ClaimReport(aid, "Unresolved", cause="too few overlapping terms")
    return ClaimReport(aid, "Mismatch", index=first_bad)


def verify_claim(row, count: int = 25, client: Optional[OeisClient] = None) -> ClaimReport:
    """Check a catalog row against its OEIS entry."""
    from .catalog import entry_terms

    if not row.oeis_id:
        raise ValueError(f"catalog row {row.label!r} has no OEIS id")
    if count < MIN_CLAIM_TERMS:
        raise ValueError(f"need at least {MIN_CLAIM_TERMS} terms")
    return verify_sequence(row.oeis_id, entry_terms(row, count), client)
