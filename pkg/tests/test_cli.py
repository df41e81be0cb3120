import json
import os

import pytest

import sg
from src.config import cfg, update_config
from src.signed_graph_model import SignedGraph
from src.generators.paley import paley
from src.generators.named_graphs import named_graph

from conftest import positive_cycle

CFG_DIR = os.path.join(os.path.dirname(os.path.dirname(os.path.abspath(__file__))), 'cfg')


@pytest.fixture
def files(tmp_path):
    paths = {}
    for name, g in [('p5m', named_graph('P5_M')), ('k4', SignedGraph.complete(4)),
                    ('c5', positive_cycle(5)), ('sp5', paley(5))]:
        paths[name] = g.save(str(tmp_path / f"{name}.sg"))
    return paths


def test_gen_paley(capsys):
    assert sg.main(['gen', 'paley', '--q', '5']) == sg.EXIT_OK
    assert SignedGraph.from_text(capsys.readouterr().out) == paley(5)


def test_gen_to_file_and_json(tmp_path, capsys):
    out = str(tmp_path / 'sp5plus.json')
    assert sg.main(['gen', 'paley', '--q', '5', '--plus', '--json', '-o', out]) == sg.EXIT_OK
    assert SignedGraph.load(out).order == 6
    assert sg.main(['gen', 'tower', '--level', '1', '--json']) == sg.EXIT_OK
    assert 'saved to' in capsys.readouterr().out


def test_gen_errors(capsys):
    assert sg.main(['gen', 'named', '--name', 'Petersen']) == sg.EXIT_USAGE
    assert sg.main(['gen', 'paley', '--q', '7']) == sg.EXIT_USAGE
    assert sg.main(['gen', 'paley']) == sg.EXIT_USAGE
    assert 'Error' in capsys.readouterr().err


def test_gen_cubic(tmp_path, capsys):
    out = tmp_path / 'cubic'
    assert sg.main(['gen', 'cubic', '--n', '6', '-o', str(out)]) == sg.EXIT_OK
    assert sorted(os.listdir(out)) == ['cubic_6_0000.sg', 'cubic_6_0001.sg']


def test_switch(files, capsys):
    assert sg.main(['switch', '-i', files['sp5'], '--set', '0,2']) == sg.EXIT_OK
    switched = SignedGraph.from_text(capsys.readouterr().out)
    assert switched == paley(5).switch({0, 2})


def test_hom(files, capsys):
    assert sg.main(['hom', '-s', files['c5'], '-t', files['sp5'], '--sp']) == sg.EXIT_OK
    assert capsys.readouterr().out.strip() == 'sp-homomorphism: yes'
    assert sg.main(['hom', '-s', files['k4'], '-t', files['c5'], '--json']) == sg.EXIT_OK
    assert json.loads(capsys.readouterr().out) == {'kind': 'homomorphism', 'exists': False}
    assert sg.main(['hom', '-s', files['c5'], '-t', files['sp5'], '--witness']) == sg.EXIT_OK
    out = capsys.readouterr().out
    assert 'image:' in out and 'switch:' in out


def test_chi(files, capsys):
    assert sg.main(['chi', '-i', files['p5m']]) == sg.EXIT_OK
    assert capsys.readouterr().out.strip() == 'chi_sp = 4'
    assert sg.main(['chi', '-i', files['k4'], '--max-order', '3']) == sg.EXIT_BUDGET
    assert capsys.readouterr().out.strip() == 'chi_sp > 3'
    assert sg.main(['chi', '-i', files['k4'], '--mode', 's', '--json']) == sg.EXIT_OK
    data = json.loads(capsys.readouterr().out)
    assert data['mode'] == 'signed' and data['value'] == 4


def test_chi_cache(files, tmp_path, capsys):
    cache = str(tmp_path / 'chi.json')
    assert sg.main(['chi', '-i', files['p5m'], '--cache', cache]) == sg.EXIT_OK
    assert capsys.readouterr().out.strip() == 'chi_sp = 4'
    assert sg.main(['chi', '-i', files['p5m'], '--cache', cache, '--audit-rate', '0']) == sg.EXIT_OK
    assert capsys.readouterr().out.strip() == 'chi_sp = 4 (cached)'


def test_props_and_canon(files, capsys):
    assert sg.main(['props', '-i', files['sp5'], '--check', 'P:1,2', '--check', 'P:1,3',
                    '--check', 'transitivity:sp_vertex']) == sg.EXIT_OK
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == 'P(1,2): true'
    assert lines[1].startswith('P(1,3): false')
    assert lines[2] == 'sp_vertex transitive: true'
    assert sg.main(['props', '-i', files['sp5'], '--check', 'Q:1']) == sg.EXIT_USAGE

    assert sg.main(['props', '-i', files['c5'], '--json']) == sg.EXIT_OK
    summary = json.loads(capsys.readouterr().out)['summary']
    assert summary['girth'] == 5 and summary['components'] == 1

    assert sg.main(['canon', '-i', files['c5']]) == sg.EXIT_OK
    assert capsys.readouterr().out.strip() == positive_cycle(5).canonical_key('sp').hex()


def test_verify(tmp_path, capsys):
    report = str(tmp_path / 'report.json')
    assert sg.main(['verify', '--suite', 'splitters', '--report', report]) == sg.EXIT_OK
    out = capsys.readouterr().out
    assert '3 passed, 0 failed, 0 skipped of 3 checks.' in out
    data = json.loads(open(report).read())
    assert data['summary'] == {'pass': 3, 'fail': 0, 'skipped-by-cap': 0}
    assert data['settings']['suites'] == ['splitters']


def test_verify_usage_errors(capsys):
    assert sg.main(['verify', '--suite', 'nope']) == sg.EXIT_USAGE
    with pytest.raises(SystemExit) as info:
        sg.main(['verify', '--no-such-flag', '1'])
    assert info.value.code == 2


def test_config_layers(monkeypatch):
    update_config([os.path.join(CFG_DIR, 'quick.yaml')])
    assert cfg.verify.max_n == 6
    assert cfg.catalog.policy == 'complete'

    monkeypatch.setenv('SG_THREADS', '3')
    monkeypatch.setenv('SG_CACHE', '/tmp/sg-cache.json')
    update_config([])
    assert cfg.search.n_workers == 3
    assert cfg.cache.path == '/tmp/sg-cache.json'
    update_config([], ['--n-workers', '2', '--deterministic', 'no', '--suite', 'paley', 'k4'])
    assert cfg.search.n_workers == 2
    assert cfg.search.deterministic is False
    assert list(cfg.verify.suite) == ['paley', 'k4']
