import json
import math

import pytest

from orderspec import verify
from orderspec.groups import Cyclic, DirectProduct, FrobeniusMetacyclic, GroupSpecError, is_solvable_spec


def test_solvable_family_examples():
    assert verify.solvable_family(1) == [Cyclic(1)]
    small = verify.solvable_family(25)
    for g in (Cyclic(24), FrobeniusMetacyclic(5, 2, 4), FrobeniusMetacyclic(7, 2, 3)):
        assert g in small
    two_frobenius = DirectProduct((FrobeniusMetacyclic(7, 2, 3), FrobeniusMetacyclic(13, 3, 3)))
    # 21 * 39 = 819 elements: inside a cap of 1000, outside a cap of 300
    assert two_frobenius.order == 819
    assert two_frobenius in verify.solvable_family(1000)
    assert two_frobenius not in verify.solvable_family(300)
    assert two_frobenius in verify.solvable_family(verify.SWEEP_CAP)


@pytest.mark.parametrize("cap", [0, 10**4 + 1])
def test_solvable_family_range(cap):
    with pytest.raises(ValueError):
        verify.solvable_family(cap)


def test_solvable_family_deterministic_and_bounded():
    a = verify.solvable_family(400)
    assert a == verify.solvable_family(400)
    assert len(a) == len(set(a))
    assert all(g.order <= 400 for g in a)
    assert all(all(f.order > 1 for f in g.factors) for g in a if isinstance(g, DirectProduct))


def brute_frobenius(order_cap, max_kernel):
    """Every valid (m, t, k), one per subgroup <t> of the units mod m."""
    seen, out = set(), []
    for m in range(2, max_kernel + 1):
        for t in range(2, m):
            for k in range(2, order_cap // m + 1):
                try:
                    f = FrobeniusMetacyclic(m, t, k)
                except GroupSpecError:
                    continue
                if any(pow(t, j, m) == 1 for j in range(1, k)):
                    continue  # k must be the exact order of t
                key = (m, frozenset(pow(t, j, m) for j in range(k)))
                if key not in seen:
                    seen.add(key)
                    out.append(f)
    return sorted(out, key=lambda f: (f.m, f.k, f.t))


def test_frobenius_family_matches_brute():
    assert verify.frobenius_family(600, 60) == brute_frobenius(600, 60)


def test_corpus_is_solvable_sample():
    corpus = verify.solvable_family(200)
    assert all(is_solvable_spec(g) for g in corpus[::5])


def test_small_sweep():
    res = verify.sweep(500)
    assert res["size"] >= 200
    assert res["witnesses"] == [] and res["t_above_2"] == [] and res["higman_failures"] == []
    assert res["not_solvable"] == [] and res["max_t"] <= 2


def test_report_rendering():
    r = verify.SuiteReport("demo")
    r.add("b.check", 1, 1)
    r.add("a.check", [1, 2], (1, 3))
    r.add("c.check", ">= 2", 5, True)
    assert not r.passed
    obj = json.loads(json.dumps(r.to_json()))
    assert obj["suite"] == "demo" and obj["passed"] is False
    assert [c["passed"] for c in obj["checks"]] == [True, False, True]
    table = r.to_table()
    assert table.splitlines()[0].startswith("suite demo: FAIL")
    assert "a.check" in table and "FAIL" in table


def test_run_suite_unknown():
    with pytest.raises(ValueError):
        verify.run_suite("nope")


@pytest.mark.parametrize("name", ["sz8-master", "recognition", "bounds"])
def test_passing_suites(name):
    r = verify.run_suite(name)
    assert r.passed, r.to_table()
    assert [c.name for c in r.checks] == sorted(c.name for c in r.checks)


def test_zsigmondy_suite_flags_composite_base():
    r = verify.run_suite("zsigmondy")
    failing = [c.name for c in r.checks if not c.passed]
    assert failing == ["zsig.exceptions"]
    res = verify.zsigmondy_sweep()
    assert sorted(set(res["missing"]) - set(res["expected_exceptions"])) == [(15, 2)]


@pytest.mark.parametrize("q, n", [(2, 6), (3, 2), (15, 2), (2, 5), (10, 3), (7, 4)])
def test_brute_primitive_divisor_scan(q, n):
    # independent of the gcd stripping: look for a prime r | q^n - 1 of order n
    v = q**n - 1
    primes = [r for r in range(2, v + 1) if v % r == 0 and all(r % d for d in range(2, math.isqrt(r) + 1))]
    has = any(q % r and min(i for i in range(1, r) if pow(q, i, r) == 1) == n for r in primes)
    assert verify.brute_has_primitive_divisor(q, n) == has
