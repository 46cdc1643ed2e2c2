"""The verification suite itself: shape of results and suite selection."""

import pytest

from liefoliate.verify import SUITES, run_suite


def test_suite_names():
    assert "all" in SUITES
    assert set(SUITES["all"]) == set(range(11))
    with pytest.raises(KeyError, match="unknown suite"):
        run_suite("bogus")


def test_fast_suites_pass():
    for suite in ("catalog", "parabolic"):
        for name, ok, detail in run_suite(suite):
            assert ok, f"{name}: {detail}"
            assert isinstance(detail, str) and detail
