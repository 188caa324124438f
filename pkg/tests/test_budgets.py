"""Budget and cap behavior: structured aborts with partial progress."""

import pytest

from groupdom.domination import gamma_exact, min_set_cover, sum_number
from groupdom.errors import BudgetExceeded
from groupdom.groups import build_group, parse_group_spec
from groupdom.lattice import enumerate_subgroups


def test_lattice_size_budget_reports_partial():
    G = build_group(parse_group_spec("S4"))
    with pytest.raises(BudgetExceeded) as exc:
        enumerate_subgroups(G, max_subgroups=5)
    assert exc.value.partial is not None and exc.value.partial > 5


def test_lattice_time_budget():
    G = build_group(parse_group_spec("S5"))
    with pytest.raises(BudgetExceeded):
        enumerate_subgroups(G, budget_ms=0.0)


def test_solver_budget_returns_incumbent():
    G = build_group(parse_group_spec("C2xC2xC2xC2"))
    L = enumerate_subgroups(G)
    cert = gamma_exact(L, budget_ms=0.0)
    assert not cert.optimal
    assert cert.gamma.finite is not None  # greedy incumbent still reported
    exact = gamma_exact(L)
    assert exact.optimal and exact.gamma <= cert.gamma


def test_sum_number_bracket_on_budget_abort():
    G = build_group(parse_group_spec("C2xC2xC2xC2"))
    L = enumerate_subgroups(G)
    res = sum_number(G, L, budget_ms=0.0)
    assert not res.optimal
    lo, hi = res.bracket
    assert lo <= 3 <= hi
    assert hi == res.value.finite


def test_min_set_cover_budget_flag():
    sets = [1 << i for i in range(12)]
    chosen, optimal = min_set_cover(12, sets, budget_ms=0.0)
    assert len(chosen) == 12  # greedy already optimal here
    assert not optimal
