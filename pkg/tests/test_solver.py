import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from linkrank import NonFiniteScoreError, SolverConfig, UpdateMode, iterate
from linkrank.solver import l1_delta


def test_defaults():
    c = SolverConfig()
    assert (c.damping, c.tolerance, c.max_iterations, c.initial_value) == (0.85, 1e-8, 100, 1.0)
    assert c.update_mode is UpdateMode.SEQUENTIAL


@pytest.mark.parametrize(
    "kwargs",
    [{"damping": -0.1}, {"damping": 1.5}, {"tolerance": 0.0}, {"max_iterations": 0}, {"initial_value": math.nan}],
)
def test_invalid_config(kwargs):
    with pytest.raises(ValueError):
        SolverConfig(**kwargs)


def test_mode_accepts_string():
    assert SolverConfig(update_mode="synchronous").update_mode is UpdateMode.SYNCHRONOUS


def test_constant_rule_converges_after_one_sweep():
    rv, trace = iterate(lambda n, x: 1.0, range(3), SolverConfig())
    assert rv.converged and rv.iterations_used == 1
    assert trace.deltas == [0.0]
    np.testing.assert_array_equal(rv.scores, 1.0)


def test_constant_rule_other_value():
    rv, trace = iterate(lambda n, x: 0.25, range(3), SolverConfig())
    # first sweep moves every node, second confirms the fixed point
    assert rv.converged and rv.iterations_used == 2
    np.testing.assert_array_equal(rv.scores, 0.25)


def test_identity_rule():
    rv, trace = iterate(lambda n, x: x[n], range(4), SolverConfig(initial_value=0.3))
    assert rv.iterations_used == 1 and trace.deltas == [0.0]


def test_sequential_reads_fresh_values():
    # node 1 copies node 0, which was just set to 5 in the same sweep
    rule = lambda n, x: 5.0 if n == 0 else x[0]
    seq, _ = iterate(rule, [0, 1], SolverConfig(max_iterations=1))
    syn, _ = iterate(rule, [0, 1], SolverConfig(max_iterations=1, update_mode="synchronous"))
    assert list(seq.scores) == [5.0, 5.0]
    assert list(syn.scores) == [5.0, 1.0]


def test_synchronous_vector_is_read_only():
    def rule(n, x):
        x[n] = 3.0
        return 0.0

    with pytest.raises(ValueError):
        iterate(rule, [0], SolverConfig(update_mode="synchronous"))


def test_max_iterations_is_not_an_error():
    rv, trace = iterate(lambda n, x: x[n] + 1, range(2), SolverConfig(max_iterations=5))
    assert not rv.converged and rv.iterations_used == 5
    assert len(trace.snapshots) == 6 and len(trace.deltas) == 5


def test_non_finite_identifies_node_and_sweep():
    rule = lambda n, x: math.inf if n == 1 else 1.0
    with pytest.raises(NonFiniteScoreError) as exc:
        iterate(rule, range(3), SolverConfig(), labels=["a", "b", "c"])
    assert exc.value.node == "b" and exc.value.sweep == 1


def test_node_order_must_be_permutation():
    with pytest.raises(ValueError):
        iterate(lambda n, x: 1.0, [0, 0, 2], SolverConfig())


@given(
    st.lists(st.floats(-2, 2), min_size=2, max_size=6),
    st.sampled_from(["sequential", "synchronous"]),
)
def test_trace_bookkeeping(weights, mode):
    n = len(weights)
    rule = lambda i, x: 0.5 * x[(i + 1) % n] + weights[i]
    rv, trace = iterate(rule, range(n), SolverConfig(update_mode=mode, max_iterations=40))
    assert len(trace.snapshots) == rv.iterations_used + 1
    assert len(trace.deltas) == rv.iterations_used
    for k, d in enumerate(trace.deltas):
        assert d == l1_delta(trace.snapshots[k + 1], trace.snapshots[k])
    np.testing.assert_array_equal(trace.snapshots[-1], rv.scores)


def test_deterministic():
    rule = lambda i, x: 0.15 + 0.85 * x[(i + 1) % 3] / 2
    a = iterate(rule, range(3), SolverConfig())[1]
    b = iterate(rule, range(3), SolverConfig())[1]
    assert all(np.array_equal(x, y) for x, y in zip(a.snapshots, b.snapshots))
