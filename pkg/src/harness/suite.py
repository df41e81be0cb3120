# Copyright (c) 2025, sghom developers.  All rights reserved.
#
# Use of this source code is governed by an MIT-style license that can be
# found in the LICENSE file at the root of this source tree.

import time
import traceback

from tqdm import tqdm

from src.exceptions import BudgetExceeded, CapExhausted, CatalogCapError, SizeCapError
from src.harness.report import CheckResult, VerificationReport, FAIL, SKIPPED
from src.harness.checks import CheckContext, checks_for
from src.utils.system_utils import ordered_parallel_map, seed_everything


def run_check(check, ctx):
    '''
    Run one registered check. Budgets and caps turn into skips; any other
    exception is a failure carrying its traceback.
    '''
    start = time.perf_counter()
    try:
        outcome = check.fn(ctx)
        status, detail, counterexample = outcome.status, outcome.detail, outcome.counterexample
    except (BudgetExceeded, CapExhausted, CatalogCapError, SizeCapError) as e:
        status, detail, counterexample = SKIPPED, f"{type(e).__name__}: {e}", None
    except Exception as e:
        status, detail, counterexample = FAIL, f"{type(e).__name__}: {e}", traceback.format_exc()
    millis = (time.perf_counter() - start) * 1000
    detail = check.claim + (f" | {detail}" if detail else '')
    return CheckResult(check.name, status, detail, counterexample, millis)


def run_suite(names=('all',), ctx=None, report_path=None, n_workers=1, verbose=False):
    '''
    Execute the checks selected by suite or check names and assemble the
    report in registration order.

    Input:
        @names:        suite names and/or check names
        @ctx:          CheckContext with sample sizes, caps and seed
        @report_path:  optional JSON output path
    Output:
        @report:       VerificationReport
    '''
    ctx = ctx or CheckContext()
    seed_everything(ctx.seed)
    checks = checks_for(names)

    if n_workers <= 1:
        results = []
        for check in tqdm(checks, desc="Checks", disable=not verbose):
            results.append(run_check(check, ctx))
            if verbose:
                r = results[-1]
                print(f"[{r.status:>14}] {r.name} in {r.millis / 1000:.3f} seconds.")
    else:
        results = ordered_parallel_map(lambda c: run_check(c, ctx), checks, n_workers=n_workers)

    report = VerificationReport(
        checks=results,
        settings={
            'suites': list(names),
            'seed': ctx.seed,
            'max_n': ctx.max_n,
            'n_random_pairs': ctx.n_random_pairs,
            'n_switch_samples': ctx.n_switch_samples,
            'n_random_graphs': ctx.n_random_graphs,
            'n_signature_pairs': ctx.n_signature_pairs,
            'cubic_max_n': ctx.cubic_max_n,
            'witness_budget': ctx.witness_budget,
            'policy': ctx.policy,
        })
    if report_path:
        report.save(report_path)
    return report
