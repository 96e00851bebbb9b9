import pytest

from bivfib.identities import (
    GridError,
    IdentityCase,
    UnknownIdentity,
    check,
    check_many,
    get_case,
    ids_in_block,
    mutated,
    parse_grid,
    registry,
)

REPORT_KEYS = {"id", "grid", "passed", "failed", "first_failure", "ms", "status"}


def _case(checker, expect="pass", **grid):
    return IdentityCase("TEST_ADHOC", "ad hoc", {k: tuple(v) for k, v in grid.items()}, checker, expect=expect)


def test_parse_grid_forms():
    assert parse_grid("m=-2..2; n=0,3,5") == {"m": (-2, -1, 0, 1, 2), "n": (0, 3, 5)}
    assert parse_grid(["m=1", "n=2..3"]) == {"m": (1,), "n": (2, 3)}


@pytest.mark.parametrize("bad", ["m=2..1", "m", "m=a", "=3", "m=1..x"])
def test_parse_grid_rejects(bad):
    with pytest.raises(GridError):
        parse_grid(bad)


def test_unknown_identity_and_parameter():
    with pytest.raises(UnknownIdentity):
        check("NO_SUCH_ID")
    with pytest.raises(UnknownIdentity):
        get_case("NO_SUCH_ID")
    with pytest.raises(GridError):
        check("EQ_1_11", "q=1")


def test_grid_override_narrows_the_run():
    r = check("EQ_1_11", "m=-2..2")
    assert r.ok and r.passed == 5 * 9 * 9 and r.grid["m"] == [-2, -1, 0, 1, 2]


def test_report_schema():
    r = check("EQ_1_3")
    d = r.to_json()
    assert REPORT_KEYS <= set(d)
    assert d["status"] == "PASS" and d["first_failure"] is None and d["failed"] == 0


def test_failure_names_the_first_tuple():
    r = check(_case(lambda a, b: (a * b, a + b), a=range(0, 4), b=range(0, 4)))
    assert r.status == "FAIL"
    assert r.first_failure == {"a": 0, "b": 1}
    assert r.passed == 2  # (0,0) and (2,2)


def test_checker_exception_counts_as_failure():
    def boom(n):
        if n == 2:
            raise ZeroDivisionError("pole")
        return n, n

    r = check(_case(boom, n=range(4)))
    assert r.failed == 1 and r.first_failure == {"n": 2} and "pole" in r.error


def test_predicate_checker_cannot_pass_when_mutated():
    assert check(_case(lambda n: n >= 0, n=range(2))).status == "PASS"
    # a yes/no checker has nothing to perturb, so its mutated copy must not pass silently
    r = check(mutated("EQ_1_15"))
    assert r.status == "FAIL" and r.passed == 0 and "TypeError" in r.error


def test_typo_entries_fail_by_design():
    for id_, first in [("EQ_2_24_PRINTED", {"s": 2, "t": 0, "k": 0}), ("EQ_5_10_PRINTED", {"s": 1, "p": 2, "n": 4})]:
        r = check(id_)
        assert r.status == "XFAIL" and r.ok
        assert r.first_failure == first
        assert check(id_[: -len("_PRINTED")]).status == "PASS"
    # a flagged misprint that never fails is itself a failure
    r = check(_case(lambda n: (n, n), expect="typo", n=range(3)))
    assert r.status == "XPASS" and not r.ok


@pytest.mark.parametrize("id_", ["EQ_1_11", "EQ_4_14", "EQ_5_19", "EQ_4_19", "EQ_2_16", "TAB_1_S2"])
def test_mutation_is_detected(id_):
    r = check(mutated(id_))
    assert r.status == "FAIL" and r.passed == 0


def test_parallel_run_matches_serial():
    a = check("EQ_4_11", jobs=1)
    b = check("EQ_4_11", jobs=3)
    assert (a.passed, a.failed, a.grid) == (b.passed, b.failed, b.grid)


def test_check_many_applies_overrides_where_they_fit():
    reports = check_many(["EQ_1_11", "EQ_1_3"], parse_grid("m=0"))
    assert [r.id for r in reports] == ["EQ_1_11", "EQ_1_3"]
    assert reports[0].grid["m"] == [0]
    assert all(r.ok for r in reports)


def test_blocks():
    assert "EQ_4_14" in ids_in_block("4")
    assert all(i.startswith(("EQ_5_",)) for i in ids_in_block("5"))
    assert get_case("TAB_1_S1").block == "1"


@pytest.mark.parametrize("id_", sorted(registry()))
def test_registered_identity(id_):
    r = check(id_)
    assert r.ok, r.line()
