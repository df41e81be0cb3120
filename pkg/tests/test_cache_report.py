import json

import pytest

from src.generators.named_graphs import named_graph
from src.harness.cache import ResultCache, cache_lookup, cache_store
from src.harness.report import CheckResult, VerificationReport, PASS, FAIL, SKIPPED

KEY = named_graph('P5_M').canonical_key('sp')


def test_store_and_lookup(tmp_path):
    path = str(tmp_path / 'cache.json')
    cache = ResultCache(path)
    assert len(cache) == 0 and cache_lookup(cache, KEY, 'chi_sp') is None
    cache_store(cache, KEY, {'chi_sp': 4}, {'source': 'test'})
    assert KEY in cache
    assert cache.lookup(KEY, 'chi_sp') == 4
    assert cache.lookup(KEY, 'chi_s') is None
    with pytest.raises(AssertionError):
        cache.lookup(KEY, 'girth')

    reopened = ResultCache(path)
    assert not reopened.corrupted
    assert reopened.lookup(KEY, 'chi_sp') == 4
    assert reopened.entries[KEY.hex()]['meta'] == {'source': 'test'}


def test_cached_computes_once(tmp_path):
    cache = ResultCache(str(tmp_path / 'cache.json'))
    calls = []

    def compute():
        calls.append(1)
        return 4

    assert cache.cached(KEY, 'chi_sp', compute) == (4, False)
    assert cache.cached(KEY, 'chi_sp', compute) == (4, True)
    assert len(calls) == 1


def test_corrupted_file_is_ignored(tmp_path, capsys):
    path = tmp_path / 'cache.json'
    cache = ResultCache(str(path))
    cache.store(KEY, {'chi_sp': 4})
    data = json.loads(path.read_text())
    data['entries'][KEY.hex()]['chi_sp'] = 3
    path.write_text(json.dumps(data))

    tampered = ResultCache(str(path))
    assert tampered.corrupted
    assert len(tampered) == 0
    assert 'integrity' in capsys.readouterr().out

    path.write_text('{not json')
    assert ResultCache(str(path)).corrupted


def test_audit_replaces_wrong_entries(tmp_path, capsys):
    path = str(tmp_path / 'cache.json')
    ResultCache(path).store(KEY, {'chi_sp': 5})
    cache = ResultCache(path, audit_rate=1.)
    assert cache.cached(KEY, 'chi_sp', lambda: 4) == (4, False)
    assert cache.audits == 1 and cache.audit_mismatches == 1
    assert 'mismatch' in capsys.readouterr().out
    assert ResultCache(path).lookup(KEY, 'chi_sp') == 4
    assert cache.cached(KEY, 'chi_sp', lambda: 4) == (4, True)
    assert cache.audit_mismatches == 1


def test_memory_only_cache():
    cache = ResultCache('')
    cache.store(KEY, {'chi_s': 2})
    assert cache.lookup(KEY, 'chi_s') == 2
    cache.drop(KEY)
    assert KEY not in cache


def test_report_serialization(tmp_path):
    report = VerificationReport(
        [CheckResult('a', PASS, 'claim | ok', millis=1.5),
         CheckResult('b', FAIL, 'claim | broken', {'vertex': 3}),
         CheckResult('c', SKIPPED, 'claim | budget')],
        {'seed': 0})
    assert not report.ok
    assert [c.name for c in report.failed] == ['b']
    assert report.counts() == {PASS: 1, FAIL: 1, SKIPPED: 1}
    assert report.summary_line() == "1 passed, 1 failed, 1 skipped of 3 checks."

    data = report.to_dict(with_timings=False)
    assert 'millis' not in data['checks'][0]
    assert data['checks'][1]['counterexample'] == {'vertex': 3}
    assert report.to_json(with_timings=False) == report.to_json(with_timings=False)

    path = tmp_path / 'report.json'
    report.save(str(path))
    loaded = json.loads(path.read_text())
    assert loaded['summary'] == {'pass': 1, 'fail': 1, 'skipped-by-cap': 1}
    assert loaded['checks'][0]['millis'] == 1.5
    assert loaded['settings'] == {'seed': 0}


def test_check_result_rejects_unknown_status():
    with pytest.raises(AssertionError):
        CheckResult('a', 'maybe')
