"""Full acceptance battery; prints one pass/fail line per criterion."""

import pytest

from ajack.acceptance import ALL_CHECKS


@pytest.mark.parametrize("check", ALL_CHECKS,
                         ids=[c.__name__.replace("check_", "").upper()
                              for c in ALL_CHECKS])
def test_acceptance(check, capsys):
    cid, ok, detail = check()
    with capsys.disabled():
        print(f"{cid}: {'PASS' if ok else 'FAIL'} - {detail}")
    assert ok, f"{cid} failed: {detail}"
