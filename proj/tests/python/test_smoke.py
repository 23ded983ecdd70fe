import math

import pytest

import mfnps


def test_base_frequency():
    assert mfnps.solve_base_frequency(1.0) == 2.0
    assert mfnps.build_chain(1.0, 2).steps[1] == pytest.approx(2.90538656129, abs=1e-10)


def test_ground_state_energy():
    sol = mfnps.energy(mfnps.scheme("chain:1", 1.0, 0), 0, 15)
    assert sol.converged
    assert sol.energy == pytest.approx(0.8037706537705593, rel=1e-15)
    assert sol.energy == pytest.approx(mfnps.oracle_energy(1.0, 0), rel=1e-8)


def test_no_convergence():
    sol = mfnps.energy(mfnps.scheme("chain:1", 1.0, 0), 8, 15)
    assert sol.status == mfnps.SolveStatus.NoConvergence
    assert sol.energy is None


def test_series_terms():
    ev = mfnps.evaluate_series(mfnps.scheme("var1", 0.0, 3), 3, 3.5, 4)
    assert ev.total == 3.5
    assert ev.per_order_terms[1] == 0.0


def test_table():
    columns, rows = mfnps.table(5)
    assert columns == ["lambda=0.1", "lambda=1", "lambda=100"]
    assert len(rows) == 10
    key, values = rows[7]
    assert key == 8 and values[0] is None
    assert math.isfinite(rows[0][1][1])


def test_errors():
    with pytest.raises(ValueError):
        mfnps.solve_base_frequency(-1.0)
    with pytest.raises(ValueError):
        mfnps.scheme("chain:0", 1.0, 0)
    with pytest.raises(ValueError):
        mfnps.table(4)
