"""Acceptance suite: every criterion at its stated size, exact (zero
tolerance), one printed pass line per criterion.

Sizes follow the verification contract: worked-example fidelity; the
ndinv theorem for m+n <= 6; the shuffle <-> two-car bijection for
m+n-k <= 6; recursion reconciliation for m+n <= 5; the symmetric-function
identities on the prime grid for m+n <= 6; the two-part and content-
refined conjecture checks for m+n <= 5; and engine self-validation.
"""

from qtcomb.suites import (
    suite_delta_tiny,
    suite_ehh,
    suite_engine,
    suite_examples,
    suite_identities,
    suite_ndinv,
    suite_recursion,
)


def _run(label, reports, budget):
    elapsed = sum(r.seconds for r in reports)
    failed = [r for r in reports if r.status == "fail"]
    status = "PASS" if not failed else "FAIL"
    print(f"{status}: {label} ({len(reports)} checks, {elapsed:.1f}s)")
    for r in failed[:5]:
        print(f"  failed: {r.suite} {r.instance}: {r.witness}")
    assert not failed, f"{label}: {len(failed)} failed checks"
    assert elapsed < budget, f"{label}: {elapsed:.1f}s over the {budget}s budget"


def test_criterion_1_worked_examples():
    _run("criterion 1: worked-example fidelity", suite_examples(), 1.0)


def test_criterion_1_caption_discrepancy_documented():
    """The printed 18-letter caption differs from the drawing at two
    positions (letters 8 and 11, 1-based); the codec follows the
    geometry, which is the reading consistent with the block-step
    figure pair."""
    from qtcomb.suites import EXAMPLE_POLYOMINO_CAPTION, EXAMPLE_POLYOMINO_WORD

    got = EXAMPLE_POLYOMINO_WORD.split()
    printed = EXAMPLE_POLYOMINO_CAPTION.split()
    diff = [i for i, (a, b) in enumerate(zip(got, printed)) if a != b]
    assert diff == [7, 10]
    assert sorted(got) == sorted(printed)


def test_criterion_2_ndinv_theorem():
    reports = suite_ndinv(max_size=6)
    total = sum(int(r.instance.split("members=")[1]) for r in reports)
    # the full family count at this size, by the two-path determinant
    assert total == 625
    _run(f"criterion 2: ndinv theorem over {total} paths", reports, 60.0)


def test_criterion_3_ehh_bijection():
    _run("criterion 3: shuffle <-> two-car bijection", suite_ehh(max_size=6), 120.0)


def test_criterion_4_recursion_reconciliation():
    reports = suite_recursion(max_size=5)
    assert "survivors=1" in reports[0].instance
    assert "printed_offsets=yes" in reports[0].instance
    _run("criterion 4: recursion reconciliation", reports, 120.0)


def test_criterion_5_identities_on_grid():
    reports = suite_identities(max_size=6)
    _run("criterion 5: identities on the prime grid", reports, 300.0)


def test_criterion_6_delta_tiny():
    _run("criterion 6: conjecture checks at tiny sizes", suite_delta_tiny(max_size=5), 300.0)


def test_criterion_7_engine_self_validation():
    _run("criterion 7: engine self-validation", suite_engine(), 60.0)
