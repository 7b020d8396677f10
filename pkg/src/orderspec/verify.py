"""Verification suites tying the closed formulas to brute force.

Each suite returns a SuiteReport; failures are report rows, never
exceptions.  Suites are deterministic: the solvable corpus is exhaustive
under its cap rather than sampled.
"""

from __future__ import annotations

import itertools
import json
import math
import time
from dataclasses import dataclass, field
from typing import Any, Callable

from . import numth, suzuki
from .groups import (
    Cyclic,
    DirectProduct,
    FrobeniusMetacyclic,
    GroupSpec,
    element_order,
    enumerate_group,
    field_make,
    is_solvable,
    is_solvable_spec,
    spectrum_of,
    suzuki_generators,
)
from .groups.matrices import torus
from .spectrum import (
    Spectrum,
    contains,
    higman_bound_holds,
    max_coclique,
    nonsolvability_criterion,
    prime_graph,
    satisfies_conditions,
)

SUITES = ("sz8-master", "solvable-sweep", "recognition", "zsigmondy", "bounds")
SWEEP_CAP = 5000
FROBENIUS_MAX_KERNEL = 200


@dataclass
class Check:
    name: str
    expected: Any
    actual: Any
    passed: bool


@dataclass
class SuiteReport:
    name: str
    checks: list[Check] = field(default_factory=list)
    duration: float = 0.0

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def add(self, name: str, expected: Any, actual: Any, passed: bool | None = None) -> None:
        if passed is None:
            passed = expected == actual
        self.checks.append(Check(name, expected, actual, bool(passed)))

    def to_json(self) -> dict:
        return {
            "suite": self.name,
            "passed": self.passed,
            "duration": round(self.duration, 3),
            "checks": [
                {"name": c.name, "expected": _jsonable(c.expected), "actual": _jsonable(c.actual), "passed": c.passed}
                for c in self.checks
            ],
        }

    def to_table(self) -> str:
        rows = [(c.name, _short(c.expected), _short(c.actual), "PASS" if c.passed else "FAIL") for c in self.checks]
        widths = [max([len(h)] + [len(r[i]) for r in rows]) for i, h in enumerate(("check", "expected", "actual", ""))]
        lines = [f"suite {self.name}: {'PASS' if self.passed else 'FAIL'} ({self.duration:.2f}s)"]
        for r in rows:
            lines.append("  " + "  ".join(v.ljust(w) for v, w in zip(r, widths)).rstrip())
        return "\n".join(lines)


def _jsonable(v: Any) -> Any:
    if isinstance(v, Spectrum):
        return list(v.mu)
    if isinstance(v, (tuple, set, frozenset)):
        return [_jsonable(x) for x in (sorted(v) if isinstance(v, (set, frozenset)) else v)]
    if isinstance(v, list):
        return [_jsonable(x) for x in v]
    if isinstance(v, dict):
        return {str(k): _jsonable(x) for k, x in v.items()}
    return v


def _short(v: Any, limit: int = 48) -> str:
    text = json.dumps(_jsonable(v))
    return text if len(text) <= limit else text[: limit - 3] + "..."


def frobenius_family(order_cap: int, max_kernel: int = FROBENIUS_MAX_KERNEL) -> list[FrobeniusMetacyclic]:
    """Every Frobenius C_m x| C_k with m <= max_kernel and mk <= order_cap.

    Parameters t generating the same subgroup of units give isomorphic
    groups; only the smallest such t is kept.
    """
    out = []
    for m in range(2, min(max_kernel, order_cap // 2) + 1):
        for t in range(2, m):
            if math.gcd(t, m) != 1:
                continue
            powers = [1, t]
            while powers[-1] != 1:
                powers.append(powers[-1] * t % m)
            k = len(powers) - 1  # t^j != 1 for 0 < j < k forces k = ord(t)
            if m * k > order_cap:
                continue
            if any(math.gcd(powers[j] - 1, m) != 1 for j in range(1, k)):
                continue
            if any(powers[j] < t for j in range(2, k) if math.gcd(j, k) == 1):
                continue
            out.append(FrobeniusMetacyclic(m, t, k))
    out.sort(key=lambda f: (f.m, f.k, f.t))
    return out


def solvable_family(order_cap: int = SWEEP_CAP) -> list[GroupSpec]:
    """Cyclic groups, metacyclic Frobenius groups and products of 2-3 of them,
    all of order at most order_cap.  Solvable by construction."""
    if not 1 <= order_cap <= 10**4:
        raise ValueError(f"order_cap must lie in [1, 10^4], got {order_cap}")
    base: list[GroupSpec] = [Cyclic(n) for n in range(1, order_cap + 1)]
    base += frobenius_family(order_cap)
    nontrivial = [g for g in base if g.order > 1]
    nontrivial.sort(key=lambda g: g.order)
    products: list[GroupSpec] = []
    for r in (2, 3):
        products += _bounded_combinations(nontrivial, r, order_cap)
    return base + products


def _bounded_combinations(items: list[GroupSpec], r: int, cap: int) -> list[DirectProduct]:
    """Multisets of r items (sorted by order) with product of orders <= cap."""
    out = []

    def extend(start: int, chosen: list[GroupSpec], order: int) -> None:
        if len(chosen) == r:
            out.append(DirectProduct(tuple(chosen)))
            return
        for i in range(start, len(items)):
            o = order * items[i].order
            if o * items[i].order ** (r - len(chosen) - 1) > cap:
                break
            extend(i, chosen + [items[i]], o)

    extend(0, [], 1)
    return out


def _timed(name: str, body: Callable[[SuiteReport], None]) -> SuiteReport:
    report = SuiteReport(name)
    start = time.perf_counter()
    body(report)
    report.duration = time.perf_counter() - start
    report.checks.sort(key=lambda c: c.name)
    return report


def _sz8_master(r: SuiteReport) -> None:
    p = suzuki.params(3)
    ctx = field_make(3)
    gens = suzuki_generators(ctx)
    e = enumerate_group(gens)
    r.add("sz8.order", p.order, e.order)
    r.add("sz8.order_formula", 29120, p.q**2 * (p.q - 1) * (p.q**2 + 1))
    r.add("sz8.mu", suzuki.mu_sz(3), spectrum_of(gens))
    r.add("sz8.solvable", False, is_solvable(e))
    r.add("sz8.torus_order", p.q - 1, element_order(gens, torus(ctx, ctx.primitive_element()), 2 * p.q))
    sz2 = suzuki_generators(field_make(1))
    r.add("sz2.order", 20, enumerate_group(sz2).order)
    r.add("sz2.mu", suzuki.mu_sz(1), spectrum_of(sz2))
    r.add("sz2.mu_vs_frobenius", spectrum_of(FrobeniusMetacyclic(5, 2, 4)), spectrum_of(sz2))
    omega = sorted(d for d in range(1, 21) if contains(spectrum_of(FrobeniusMetacyclic(5, 2, 4)), d))
    r.add("sz2.omega_hardcoded", list(suzuki.SZ2_OMEGA), omega)


def two_frobenius_checks(r: SuiteReport) -> None:
    g = DirectProduct((FrobeniusMetacyclic(7, 2, 3), FrobeniusMetacyclic(13, 3, 3)))
    s = spectrum_of(g)
    r.add("two_frobenius.mu", Spectrum((21, 39, 91)), s)
    r.add("two_frobenius.primes", (3, 7, 13), s.primes)
    r.add("two_frobenius.three_prime_conditions", True, satisfies_conditions(s, s.primes))
    r.add("two_frobenius.solvable", True, is_solvable(enumerate_group(g)))
    r.add("two_frobenius.no_witness", None, nonsolvability_criterion(s))


def sweep(order_cap: int = SWEEP_CAP) -> dict[str, Any]:
    corpus = solvable_family(order_cap)
    witnesses, big_t, higman, unsolvable = [], [], [], []
    analysed: dict[tuple[int, ...], tuple] = {}
    for spec in corpus:
        s = spectrum_of(spec)
        if s.mu not in analysed:
            w = nonsolvability_criterion(s)
            t = max_coclique(prime_graph(s))[0]
            analysed[s.mu] = (w, t, higman_bound_holds(s))
        w, t, h = analysed[s.mu]
        if w is not None:
            witnesses.append(spec.describe())
        if t > 2:
            big_t.append(spec.describe())
        if not h:
            higman.append(spec.describe())
        if not is_solvable_spec(spec):
            unsolvable.append(spec.describe())
    return {
        "size": len(corpus),
        "distinct_spectra": len(analysed),
        "max_t": max(a[1] for a in analysed.values()),
        "witnesses": witnesses,
        "t_above_2": big_t,
        "higman_failures": higman,
        "not_solvable": unsolvable,
    }


def _solvable_sweep(r: SuiteReport, order_cap: int = SWEEP_CAP) -> None:
    res = sweep(order_cap)
    r.add("sweep.corpus_size", ">= 200", res["size"], res["size"] >= 200)
    r.add("sweep.criterion_witnesses", [], res["witnesses"][:5])
    r.add("sweep.max_coclique", "<= 2", res["max_t"], res["max_t"] <= 2)
    r.add("sweep.higman_failures", [], res["higman_failures"][:5])
    r.add("sweep.all_solvable", [], res["not_solvable"][:5])
    two_frobenius_checks(r)


RECOGNITION_ALPHAS = (3, 5, 7, 9, 11, 13, 15)
TWIST_CASES = ((3, 3), (5, 5), (7, 7), (9, 3), (15, 3), (15, 5))


def _recognition(r: SuiteReport) -> None:
    for a in RECOGNITION_ALPHAS:
        c = suzuki.classify_isospectral_squares(a)
        r.add(f"count.alpha={a:02d}", 4 if a == 5 else 1, c.count)
    c5 = suzuki.classify_isospectral_squares(5)
    r.add("labels.alpha=05", ["LxL", "X1", "X2", "X4"], c5.labels)
    r.add("labels.outer_classes_5", (3, [1, 2, 4]), suzuki.outer_class_count(5, 5))
    for a, p in TWIST_CASES:
        r.add(f"twist.alpha={a:02d}.p={p}", (a, p) == (5, 5), suzuki.twisted_square_spectrum(a, p)[1])
    w3 = nonsolvability_criterion(suzuki.square_spectrum(3))
    r.add("square_witness.alpha=03", (2, 5, 7, 13), w3.sigma if w3 else None)
    for a in (5, 7, 9, 11, 13):
        w = nonsolvability_criterion(suzuki.square_spectrum(a))
        r.add(f"square_witness.alpha={a:02d}", "some witness", w.sigma if w else None, w is not None)


def _zsigmondy(r: SuiteReport) -> None:
    res = zsigmondy_sweep()
    r.add("zsig.exceptions", res["expected_exceptions"], res["missing"])
    r.add("zsig.exceptions_q_plus_1_power_of_2", res["power_of_two_exceptions"], res["missing"])
    r.add("zsig.agreement", [], res["disagreements"])
    r.add("zsig.orders", [], res["bad_orders"])


def brute_has_primitive_divisor(q: int, n: int) -> bool:
    """Strip from q^n - 1 every prime shared with some q^i - 1, i < n, using gcds only."""
    rest = q**n - 1
    for i in range(1, n):
        g = math.gcd(rest, q**i - 1)
        while g > 1:
            rest //= g
            g = math.gcd(rest, g)
    return rest > 1


def zsigmondy_sweep(q_max: int = 50, n_max: int = 20) -> dict[str, Any]:
    missing, disagreements, bad_orders = [], [], []
    for q in range(2, q_max + 1):
        for n in range(2, n_max + 1):
            brute = brute_has_primitive_divisor(q, n)
            if not brute:
                missing.append((q, n))
            res = numth.primitive_prime_divisor(q, n)
            if res.exists != brute:
                disagreements.append((q, n))
            if res.exists:
                rr = res.prime
                if (q**n - 1) % rr or any(pow(q, i, rr) == 1 for i in range(1, n)):
                    bad_orders.append((q, n, rr))
    expected = [(2, 6)] + [(q, 2) for q in range(2, q_max + 1) if numth.is_mersenne_prime(q)]
    pow2 = [(2, 6)] + [(q, 2) for q in range(2, q_max + 1) if numth.is_power_of_two(q + 1)]
    return {
        "missing": sorted(missing),
        "expected_exceptions": sorted(expected),
        "power_of_two_exceptions": sorted(pow2),
        "disagreements": disagreements,
        "bad_orders": bad_orders,
    }


def _bounds(r: SuiteReport) -> None:
    composite = [a for a in range(3, suzuki.MAX_ALPHA + 1, 2) if not numth.is_prime(a)]
    r.add("aut_bounds.composite_alpha", [], [a for a in composite if not suzuki.aut_bounds_check(a)])
    r.add("aut_bounds.alpha=05", True, suzuki.aut_bounds_check(5))
    r.add("aut_coset.alpha=05.max", 25, max(suzuki.aut_coset_spectrum(5, 5).mu))
    coset = suzuki.aut_coset_spectrum(5, 5)
    r.add("aut_coset.alpha=05.divides_100", True, all(100 % math.lcm(a, b) == 0 for a in coset.mu for b in coset.mu))
    bad = []
    for a in range(3, suzuki.MAX_ALPHA + 1, 2):
        p = suzuki.params(a)
        q = p.q
        ok = (
            p.m3 * p.m4 == q * q + 1
            and all(math.gcd(x, y) == 1 for x, y in itertools.combinations(p.m, 2))
            and all(q / 2 < x < 2 * q for x in p.m[1:])
            and suzuki.coclique_number(a) == 4
        )
        if not ok:
            bad.append(a)
    r.add("suzuki_identities.alpha<=45", [], bad)


_SUITE_BODIES = {
    "sz8-master": _sz8_master,
    "solvable-sweep": _solvable_sweep,
    "recognition": _recognition,
    "zsigmondy": _zsigmondy,
    "bounds": _bounds,
}


def run_suite(name: str) -> SuiteReport:
    if name not in _SUITE_BODIES:
        raise ValueError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    return _timed(name, _SUITE_BODIES[name])
