"""Acceptance criteria, one test per criterion.

Each test records a PASS/FAIL line (with its runtime and limit) that is
printed in the "acceptance criteria" section at the end of the pytest run.
Tolerances are exact unless stated; runtime limits are wall-clock seconds.
"""

from __future__ import annotations

import time

import mpmath
import pytest

from parry import density as D
from parry.coincidence import compare_profiles, make_pair, multiplicative_dependence, profile
from parry.dynamics import orbit_of_one
from parry.exactnum import quadratic_family_field
from parry.harness import (
    SearchConfig,
    enumerate_parry_catalogue,
    family_density_matches,
    mc_validate,
    search_coincident_pairs,
)
from parry.render import decimal_str
from parry.transfer import check_invariance

from .conftest import ACCEPTANCE_LINES

FAMILY_BOUND = 20
CATALOGUE_CFG = SearchConfig(max_degree=2, coeff_bound=6, root_max=7, orbit_budget=10_000)
SEARCH_CFG = SearchConfig(max_degree=3, coeff_bound=3, root_max=5, orbit_budget=5000)

# coincidence reports gathered by criteria 2-4, checked again by criterion 7
FOUND_REPORTS: list = []
FOUND_SEARCH_ITEMS: list = []


def record(n: int, title: str, ok: bool, elapsed: float | None = None, limit: float | None = None, extra: str = ""):
    timing = ""
    if elapsed is not None:
        timing = f" [{elapsed:.2f}s" + (f" / limit {limit:g}s]" if limit is not None else "]")
    line = f"criterion {n}: {'PASS' if ok else 'FAIL'}  {title}{timing}{(' ' + extra) if extra else ''}"
    ACCEPTANCE_LINES.append(line)
    print(line)


@pytest.fixture(scope="module")
def family_profiles():
    """Profiles of both members of every family pair with q <= 20, timed."""
    start = time.perf_counter()
    out = {}
    for q in range(1, FAMILY_BOUND + 1):
        for p in range(1, q + 1):
            b1, b2 = make_pair(p, q)
            out[p, q] = (profile(b1), profile(b2))
    return out, time.perf_counter() - start


@pytest.fixture(scope="module")
def catalogue():
    start = time.perf_counter()
    cat = enumerate_parry_catalogue(CATALOGUE_CFG)
    return cat, time.perf_counter() - start


def test_criterion_1_golden_density():
    start = time.perf_counter()
    beta = quadratic_family_field(1, 1).gen
    dens = D.normalize(D.build_density(orbit_of_one(beta)))
    s5 = 2 * beta - 1  # sqrt 5
    exact_ok = (
        dens.cuts == ((s5 - 1) / 2,)
        and dens.values == ((5 + 3 * s5) / 10, (5 + s5) / 10)
    )
    with mpmath.workdps(40):
        r5 = mpmath.sqrt(5)
        ref = [mpmath.nstr((5 + 3 * r5) / 10, 11), mpmath.nstr((5 + r5) / 10, 10)]
    got = [decimal_str(v, 10) for v in dens.values]
    decimal_ok = got == ["1.1708203932", "0.7236067977"] and got == ref
    elapsed = time.perf_counter() - start
    ok = exact_ok and decimal_ok and elapsed < 1.0
    record(1, "golden-ratio density values exact and to 10 digits", ok, elapsed, 1, f"values={got}")
    assert exact_ok and decimal_ok
    assert elapsed < 1.0


def test_criterion_2_sufficiency_sweep(family_profiles):
    profiles, build_time = family_profiles
    start = time.perf_counter()
    failures = []
    for (p, q), (p1, p2) in profiles.items():
        rep = compare_profiles(p1, p2, 10_000)
        ok = (rep.coincide is True and rep.K_equal is True
              and D.equal(p1.normalized, p2.normalized)
              and family_density_matches(p1.beta, q, p1.h))
        if rep.coincide:
            FOUND_REPORTS.append(rep)
        if not ok:
            failures.append((p, q))
    elapsed = build_time + time.perf_counter() - start
    ok = len(profiles) == 210 and not failures and elapsed < 30
    record(2, f"all {len(profiles)} family pairs coincide with h1 = 1 + (1/b1) 1_[0, b1 - q)", ok, elapsed, 30,
           f"failures={failures}" if failures else "")
    assert len(profiles) == 210
    assert not failures
    assert elapsed < 30


@pytest.mark.slow
def test_criterion_3_invariance(family_profiles, catalogue):
    profiles, _ = family_profiles
    cat, cat_time = catalogue
    start = time.perf_counter()
    bad = []
    for (p, q), pair in profiles.items():
        for prof in pair:
            if not check_invariance(prof.beta, prof.h):
                bad.append(f"family{(p, q)}")
    complete = 0
    for entry in cat:
        if not entry.orbit.is_complete:
            continue
        complete += 1
        if not check_invariance(entry.beta, D.build_density(entry.orbit)):
            bad.append(entry.key)
    # the catalogue build is part of this criterion's work
    elapsed = cat_time + time.perf_counter() - start
    ok = not bad and elapsed < 60
    record(3, f"L h = h for 420 family bases and {complete} resolved catalogue entries "
              f"({len(cat) - complete} unresolved within budget)", ok, elapsed, 60,
           f"bad={bad}" if bad else "")
    assert not bad
    assert elapsed < 60


@pytest.mark.slow
def test_criterion_4_necessity_search():
    start = time.perf_counter()
    rep = search_coincident_pairs(SEARCH_CFG)
    elapsed = time.perf_counter() - start
    FOUND_SEARCH_ITEMS.extend(rep["found"])
    no_cubic = all(item["degrees"] == [2, 2] for item in rep["found"])
    found = {(f["beta1"], f["beta2"]) for f in rep["found"]}
    predicted = {(f["beta1"], f["beta2"]) for f in rep["predicted"]}
    ok = rep["matches_theorem"] and found == predicted and no_cubic and elapsed < 600
    record(4, f"search found exactly the {len(predicted)} predicted family pairs "
              f"(catalogue {rep['catalogue_size']}, unknown {rep['unknown_entries']}, "
              f"exact comparisons {rep['pairs_fully_compared']})", ok, elapsed, 600,
           f"families={sorted(tuple(f['family']) for f in rep['found'])}")
    assert found == predicted
    assert rep["matches_theorem"]
    assert no_cubic
    assert elapsed < 600


def test_criterion_5_multiplicative_dependence():
    start = time.perf_counter()
    witnesses = {}
    for q in range(1, FAMILY_BOUND + 1):
        for p in range(1, q + 1):
            b1, b2 = make_pair(p, q)
            w = multiplicative_dependence(b1, b2, 10)
            if w is not None:
                witnesses[p, q] = w
    elapsed = time.perf_counter() - start
    ok = witnesses == {(1, 1): (2, 1)} and elapsed < 30
    record(5, "multiplicative dependence only for (1,1), witness (2,1)", ok, elapsed, 30, f"witnesses={witnesses}")
    assert witnesses == {(1, 1): (2, 1)}
    assert elapsed < 30


def test_criterion_6_two_formula_K(catalogue):
    cat, _ = catalogue
    bad = []
    checked = 0
    for entry in cat:
        if not entry.orbit.is_complete:
            continue
        checked += 1
        if D.integral(D.build_density(entry.orbit)) != D.series_K(entry.orbit):
            bad.append(entry.key)
    ok = not bad and checked > 0
    record(6, f"integral of h equals the orbit series for K on {checked} catalogue entries", ok,
           extra=f"bad={bad}" if bad else "")
    assert ok


def test_criterion_7_proof_ledger(catalogue):
    # the degree <= 2 catalogue is searched here as well, so its coincident pairs are included
    cat, _ = catalogue
    rep2 = search_coincident_pairs(CATALOGUE_CFG, cat)
    items = FOUND_SEARCH_ITEMS + rep2["found"]
    reports = list(FOUND_REPORTS)
    if not reports:  # criterion 2 not run in this session
        for q in range(1, FAMILY_BOUND + 1):
            for p in range(1, q + 1):
                b1, b2 = make_pair(p, q)
                reports.append(compare_profiles(profile(b1), profile(b2), 10_000))
    bad = []
    for r in reports:
        cs = r.coefficient_sets
        ok = (r.coincide
              and r.zero_membership is not None and sum(r.zero_membership) == 1
              and r.orbit_sets_equal_mod_zero
              and cs is not None and cs.union_equal and cs.max_C_is_inverse_base
              and r.zero_value_condition_holds)
        if not ok:
            bad.append(decimal_str(r.beta1, 6))
    keys = ("zero_in_exactly_one", "orbit_sets_equal_mod_zero", "coefficient_union_equal", "zero_value_condition_holds")
    for item in items:
        if not all(item[k] for k in keys):
            bad.append(item["beta1"])
    ok = not bad and len(reports) + len(items) > 0
    record(7, f"diagnostics hold for {len(reports)} sweep pairs and {len(items)} search pairs", ok,
           extra=f"bad={bad}" if bad else "")
    assert ok


@pytest.mark.statistical
def test_criterion_8_monte_carlo():
    start = time.perf_counter()
    beta = quadratic_family_field(1, 1).gen
    rep = mc_validate(beta, 1_000_000, 32, 42)
    elapsed = time.perf_counter() - start
    ok = rep["max_deviation"] < 0.01 and elapsed < 30
    record(8, "Monte Carlo bin masses for the golden ratio (statistical, non-rigorous)", ok, elapsed, 30,
           f"max_deviation={rep['max_deviation']:.6f}")
    assert rep["max_deviation"] < 0.01
    assert elapsed < 30
