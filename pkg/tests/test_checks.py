import itertools

import pytest

from src.config import cfg
from src.signs import POS, NEG
from src.exceptions import UnknownNameError, BudgetExceeded
from src.generators.paley import paley_plus, infinity_vertex
from src.generators.named_graphs import y_structure, switched_at_w
from src.solver.homomorphism import sp_hom
from src.harness.report import PASS, FAIL, SKIPPED
from src.harness.checks import (
    SUITES, CHECKS, CheckContext, RegisteredCheck, checks_for, passed, random_signed_graph,
    unsigned_classes, _positive_triangle_signs, _excluded_images)
from src.harness.suite import run_check, run_suite


def quick_context():
    return CheckContext(max_n=5, n_random_pairs=10, n_switch_samples=5, n_random_graphs=5,
                        n_signature_pairs=10, cubic_max_n=8, witness_budget=1.)


def test_every_suite_has_checks():
    for suite in SUITES:
        assert checks_for([suite]), suite
    assert [c.name for c in checks_for(['all'])] == list(CHECKS)


def test_selection_by_suite_and_name():
    names = [c.name for c in checks_for(['splitters'])]
    assert names == ['splitters_sp5_plus', 'splitters_k6_matching', 'splitters_switching_invariance']
    names = [c.name for c in checks_for(['bound_formulas', 'paley5_structure'])]
    assert names == ['paley5_structure', 'bound_formulas']
    with pytest.raises(UnknownNameError):
        checks_for(['nope'])


def test_context_from_config():
    ctx = CheckContext.from_cfg(cfg)
    assert ctx.max_n == cfg.verify.max_n
    assert ctx.policy == cfg.catalog.policy
    assert ctx.opts.parallel == 1


def test_check_streams_are_independent():
    ctx = quick_context()
    a = ctx.rng('first').random(4)
    assert (a == ctx.rng('first').random(4)).all()
    assert not (a == ctx.rng('second').random(4)).all()
    g = random_signed_graph(ctx.rng('first'), 6)
    assert g.order == 6


def test_unsigned_classes():
    assert len(unsigned_classes(3)) == 4
    assert len(unsigned_classes(4)) == 11


def test_splitters_suite_passes(tmp_path):
    path = tmp_path / 'report.json'
    report = run_suite(['splitters'], quick_context(), report_path=str(path))
    assert report.ok
    assert report.counts()[PASS] == 3
    assert path.exists()
    assert report.settings['suites'] == ['splitters']


@pytest.mark.parametrize('name', [
    'paley5_structure', 'k4_bad_classification', 'path_extension_sp5', 'sp5_mixed_neighbourhoods',
    'gadget_forced_distinct', 'sp9_neighbourhoods', 'chi_sp_p5_matching', 'bound_formulas',
])
def test_quick_checks_pass(name):
    result = run_check(CHECKS[name], quick_context())
    assert result.status == PASS, result.detail
    assert result.detail.startswith(CHECKS[name].claim)


def test_parallel_suite_keeps_order():
    serial = run_suite(['paley', 'splitters'], quick_context())
    parallel = run_suite(['paley', 'splitters'], quick_context(), n_workers=3)
    assert serial.names() == parallel.names()
    assert [c.status for c in serial.checks] == [c.status for c in parallel.checks]


def test_structure_checks_pass():
    ctx = quick_context()
    for name in ('x_structure_clauses', 'y_structure_extension'):
        result = run_check(CHECKS[name], ctx)
        assert result.status == PASS, result.detail
    assert run_suite(['gadget-cases'], ctx).ok


def test_structure_signatures_have_positive_triangle():
    signs = _positive_triangle_signs()
    assert len(signs) == 8
    assert all(s[0] * s[1] * s[2] is POS for s in signs)
    # uvw negative: outside the domain of the Y extension claim, and indeed
    # u, v, y on 0, 2, 1 extends neither way.
    assert (NEG, POS, POS, NEG) not in signs
    target = paley_plus(5)
    for template in (y_structure('-++-'), switched_at_w(y_structure('-++-'))):
        fixed = {template.port('u'): 0, template.port('v'): 2, template.port('y'): 1}
        assert sp_hom(template.graph, target, fixed=fixed) is None


def test_excluded_images_ignore_orientation():
    inf = infinity_vertex(5)
    for a, b in itertools.permutations(range(6), 2):
        for same in (True, False):
            assert _excluded_images(a, b, inf, same) == _excluded_images(b, a, inf, same)
    assert _excluded_images(1, 3, inf, True) == ('e', {3, 0})
    assert _excluded_images(3, 1, inf, False) == ('f', {1, 4})


def test_run_check_statuses():
    def over_budget(ctx):
        raise BudgetExceeded("out of time")

    def broken(ctx):
        raise RuntimeError("boom")

    ctx = quick_context()
    result = run_check(RegisteredCheck('budget', ('all',), 'claim', over_budget), ctx)
    assert result.status == SKIPPED and 'out of time' in result.detail
    result = run_check(RegisteredCheck('broken', ('all',), 'claim', broken), ctx)
    assert result.status == FAIL and 'RuntimeError' in result.counterexample
    result = run_check(RegisteredCheck('fine', ('all',), 'claim', lambda ctx: passed()), ctx)
    assert result.status == PASS and result.detail == 'claim'
