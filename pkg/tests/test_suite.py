import pytest

from expanso.constructions import chain_space, discrete_example
from expanso.dynamics import Cover
from expanso.errors import ScaleCap
from expanso.suite import SuiteReport, check_shifts, reproducer, run_suite, shrink


def test_suite_three_points():
    r = run_suite(3, seed=0)
    assert r.ok, r.failures[:3]
    assert r.as_dict()["spaces"] == {"1": 1, "2": 4, "3": 29}
    assert all(v > 0 for v in r.checked.values())


def test_suite_parallel_matches_serial():
    a = run_suite(2, seed=1, jobs=1, include_sft=False).as_dict()
    b = run_suite(2, seed=1, jobs=2, include_sft=False).as_dict()
    assert a == b


def test_suite_cap():
    with pytest.raises(ScaleCap):
        run_suite(6)


def test_shift_checks():
    r = check_shifts(2, seed=0)
    assert r.ok


def test_shrink_drops_cover_elements():
    sp, f = discrete_example(3)
    c = Cover.from_points(sp, [[0, 1], [0], [1], [2]])
    # pretend the failure is "points 0 and 1 share an element"
    fails = lambda g, cov: any(u & 0b11 == 0b11 for u in cov)
    g, small = shrink(f, c, fails)
    assert fails(g, small)
    assert len(small) <= 2


def test_reproducer_is_instance_doc():
    sp, f = chain_space(2)
    doc = reproducer(f, Cover(sp, (sp.full,)))
    assert doc["kind"] == "finite" and doc["points"] == 2


def test_report_merge_is_order_independent():
    a, b = SuiteReport(2, 0), SuiteReport(2, 0)
    a.record("x", True)
    b.record("x", False, detail="d")
    ab, ba = SuiteReport(2, 0), SuiteReport(2, 0)
    for x in (a, b):
        ab.merge(x)
    for x in (b, a):
        ba.merge(x)
    assert ab.as_dict() == ba.as_dict()
