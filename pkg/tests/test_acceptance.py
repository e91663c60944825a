"""Exit criteria.  Each test is reported as one PASS/FAIL line in the terminal summary."""
import random
import time

import pytest

from spinweave import coupling, verify
from spinweave.coupling import build_coupled_state
from spinweave.errors import ChildInadmissible
from spinweave.projection import apply_projection_sequence, permutation_sum_oracle
from spinweave.radical import Radical
from spinweave.spins import CouplingPath, HalfInt, enumerate_paths
from spinweave.state import SparseState, inner_product
from spinweave.verify import (
    check_algorithm_recursion,
    check_assignment_invariance,
    check_eigenvalues,
    check_proportionality,
    check_ratio_constraint,
    check_sum_identities,
)
from spinweave.wiring import AssignmentPolicy, compile_setup

R = Radical.sqrt
h = HalfInt.of


@pytest.fixture(autouse=True)
def cold_caches():
    coupling._coupled.cache_clear()
    verify._algorithm_state.cache_clear()


def labels(n_lo, n_hi):
    for n in range(n_lo, n_hi + 1):
        for path in enumerate_paths(n):
            for m in path.m_values():
                yield path, m


@pytest.mark.acceptance("1. Two-qubit outputs and normalization constants (n=2, exact, < 1 s)")
def test_table_one():
    start = time.perf_counter()
    rows = [
        ("1/2,1", "1", SparseState(2, {"++": 2}), Radical.of(1) / 2),
        ("1/2,1", "0", SparseState(2, {"+-": 1, "-+": 1}), 1 / R(2)),
        ("1/2,1", "-1", SparseState(2, {"--": 2}), Radical.of(1) / 2),
        ("1/2,0", "0", SparseState(2, {"+-": 1, "-+": -1}), 1 / R(2)),
    ]
    for path, m, expected, table_a in rows:
        path = CouplingPath.parse(path)
        assert apply_projection_sequence(compile_setup(path, h(m))) == expected
        rep = check_proportionality(path, h(m))
        assert rep.holds
        assert rep.table_a == table_a
    assert time.perf_counter() - start < 1.0


@pytest.mark.acceptance("2. Three-qubit worked example (exact, A = sqrt 6, < 1 s)")
def test_three_qubit_example(three_qubit_path, three_qubit_policy):
    start = time.perf_counter()
    cfg = compile_setup(three_qubit_path, h("1/2"), three_qubit_policy)
    out = apply_projection_sequence(cfg)
    assert out == SparseState(3, {"++-": 2, "+-+": -1, "-++": -1})
    ref = SparseState(3, {"++-": 2, "+-+": -1, "-++": -1}).scale(1 / R(6))
    assert build_coupled_state(three_qubit_path, h("1/2")) == ref
    rep = check_proportionality(three_qubit_path, h("1/2"), three_qubit_policy)
    assert rep.holds and rep.ratio == R(6)
    assert time.perf_counter() - start < 1.0


@pytest.mark.acceptance("3. Proportionality sweep, 508 cases 2 <= n <= 8 (exact, < 60 s)")
def test_proportionality_sweep():
    start = time.perf_counter()
    reports = [check_proportionality(p, m) for p, m in labels(2, 8)]
    elapsed = time.perf_counter() - start
    assert len(reports) == 508
    failures = [r.to_json() for r in reports if not r.holds]
    assert failures == []
    assert elapsed < 60.0


@pytest.mark.acceptance("4. Oracle equivalence n <= 6, compiled + 50 random per n (exact, < 5 min)")
def test_oracle_equivalence():
    start = time.perf_counter()
    rng = random.Random(20240611)
    checked = 0
    for n in range(1, 7):
        ns = list(labels(n, n))
        configs = [compile_setup(p, m) for p, m in ns]
        for _ in range(50):
            p, m = rng.choice(ns)
            configs.append(compile_setup(p, m, AssignmentPolicy.seeded(rng.getrandbits(64))))
        for cfg in configs:
            seq = apply_projection_sequence(cfg)
            assert not seq.is_zero()
            assert permutation_sum_oracle(cfg) == seq
            checked += 1
    assert checked == sum(2**n + 50 for n in range(1, 7))
    assert time.perf_counter() - start < 300.0


@pytest.mark.acceptance("5. Coefficient-sum identities, last emitter, n <= 8 (exact)")
def test_sum_identities():
    assert all(check_sum_identities(p, m) for p, m in labels(2, 8))


@pytest.mark.acceptance("6. Algorithm recursion, all labels n <= 8 (exact)")
def test_algorithm_recursion():
    assert all(check_algorithm_recursion(p, m) for p, m in labels(2, 8))


@pytest.mark.acceptance("7. Ratio constraint A1/A2, n <= 8, inadmissible children skipped (exact)")
def test_ratio_constraint():
    passed = skipped = 0
    for p, m in labels(2, 8):
        try:
            assert check_ratio_constraint(p, m), (str(p), str(m))
            passed += 1
        except ChildInadmissible:
            skipped += 1
    assert passed + skipped == 508 and passed > 0


@pytest.mark.acceptance("8. Eigenvalue checks S^2 and Sz, n <= 8 (exact)")
def test_eigenvalues():
    assert all(check_eigenvalues(p, m) for p, m in labels(1, 8))


@pytest.mark.acceptance("9. Completeness n <= 12 and orthonormality n <= 6 (exact)")
def test_completeness_and_orthonormality():
    for n in range(1, 13):
        assert sum(p.final.doubled + 1 for p in enumerate_paths(n)) == 2**n
    for n in range(1, 7):
        states = [build_coupled_state(p, m) for p, m in labels(n, n)]
        assert len(states) == 2**n
        for i, a in enumerate(states):
            for j in range(i, len(states)):
                assert inner_product(a, states[j]) == (1 if i == j else 0)


@pytest.mark.acceptance("10. Assignment invariance, 100 random layouts per label, n <= 6")
def test_assignment_invariance():
    seeds = random.Random(11)
    for p, m in labels(1, 6):
        assert check_assignment_invariance(p, m, trials=100, seed=seeds.getrandbits(64)), (str(p), str(m))
