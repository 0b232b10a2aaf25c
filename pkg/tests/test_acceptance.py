"""Acceptance suite: every criterion runs at its stated tolerance and prints
one pass/fail line.  The implementations live in cdalg.verify so the same
checks back the verify-paper CLI command; each test here fails loudly with
the claim's own diagnostic when a criterion regresses."""

import pytest

from cdalg.verify import CLAIMS, run_claim


@pytest.mark.parametrize(
    "claim_id,description",
    [(cid, desc) for cid, desc, _ in CLAIMS],
    ids=[cid for cid, _, _ in CLAIMS],
)
def test_acceptance_criterion(claim_id, description, capsys):
    outcome = run_claim(claim_id)
    status = "PASS" if outcome.passed else "FAIL"
    with capsys.disabled():
        print(f"\n{claim_id} {status} ({outcome.elapsed_ms:7.0f} ms) {description}")
        print(f"      {outcome.detail}")
    assert outcome.passed, f"{claim_id}: {outcome.detail}"


def test_every_claim_appears_once():
    ids = [cid for cid, _, _ in CLAIMS]
    assert len(ids) == len(set(ids)) == 12
