# Copyright (c) 2025, sghom developers.  All rights reserved.
#
# Use of this source code is governed by an MIT-style license that can be
# found in the LICENSE file at the root of this source tree.

import os
import sys
import json
import time
import argparse

from src.config import cfg, update_config, reset_config
from src.exceptions import SignedGraphError, CapExhausted, BudgetExceeded
from src.signed_graph_model import SignedGraph
from src.generators.paley import paley, paley_plus, paley_plus_double
from src.generators.named_graphs import named_graph, as_graph
from src.generators.gadgets import build_tower
from src.generators.constructions import iterated_star
from src.generators.enumeration import enumerate_cubic_graphs
from src.solver.homomorphism import sp_hom, hom, validate_sp_hom, validate_hom, SearchOptions
from src.solver.chromatic import chi_sp, chi_s
from src.analysis.neighborhoods import property_P_violation
from src.analysis.transitivity import transitivity, is_double_switching_graph, KINDS
from src.analysis.splitters import splitters, non_splitter_partners
from src.harness.cache import ResultCache
from src.harness.checks import CheckContext
from src.harness.suite import run_suite

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3

GEN_KINDS = ('paley', 'named', 'tower', 'star', 'double', 'cubic')


def chi_mode(value):
    modes = {'s': 'signed', 'signed': 'signed', 'sp': 'sp'}
    if value not in modes:
        raise ValueError(f"Unknown mode {value!r}, expected s, signed or sp.")
    return modes[value]


def emit(args, text, data=None):
    if args.json and data is not None:
        print(json.dumps(data, indent=2))
    else:
        print(text)


def emit_graph(args, g):
    out = getattr(args, 'output', None)
    if out:
        g.save(out, fmt='json' if args.json else None)
        print(f"Graph with {g.order} vertices and {g.num_edges} edges saved to {out}.")
    else:
        sys.stdout.write(g.to_json() if args.json else g.to_text())


def search_options():
    return SearchOptions.from_cfg(cfg.search)


#################################################
# Subcommands
#################################################
def cmd_gen(args):
    if args.kind == 'paley':
        if args.q is None:
            raise ValueError("sg gen paley needs --q.")
        if args.double:
            g = paley_plus_double(args.q)
        else:
            g = paley_plus(args.q) if args.plus else paley(args.q)
    elif args.kind == 'named':
        if args.name is None:
            raise ValueError("sg gen named needs --name.")
        g = as_graph(named_graph(args.name))
    elif args.kind == 'tower':
        g = build_tower(args.level)
    elif args.kind == 'star':
        g = iterated_star(SignedGraph.load(args.input), args.times)
    elif args.kind == 'double':
        g = SignedGraph.load(args.input).double_switching()
    else:
        return gen_cubic(args)
    emit_graph(args, g)
    return EXIT_OK


def gen_cubic(args):
    if args.n is None:
        raise ValueError("sg gen cubic needs --n.")
    out_dir = args.output or f"cubic_{args.n}"
    os.makedirs(out_dir, exist_ok=True)
    count = 0
    for i, g in enumerate(enumerate_cubic_graphs(args.n, verbose=args.verbose)):
        g.save(os.path.join(out_dir, f"cubic_{args.n}_{i:04d}.sg"))
        count += 1
    print(f"{count} connected cubic graphs on {args.n} vertices written to {out_dir}.")
    return EXIT_OK


def cmd_switch(args):
    g = SignedGraph.load(args.input)
    members = [int(v) for v in args.set.split(',') if v.strip() != ''] if args.set else []
    emit_graph(args, g.switch(members))
    return EXIT_OK


def cmd_hom(args):
    source = SignedGraph.load(args.source)
    target = SignedGraph.load(args.target)
    opts = search_options()
    eps_time = time.perf_counter()
    if args.sp:
        found = sp_hom(source, target, opts=opts)
        ok = found is None or validate_sp_hom(source, target, found)
    else:
        found = hom(source, target, opts=opts)
        ok = found is None or validate_hom(source, target, found)
    assert ok, 'Search returned an invalid witness.'
    kind = 'sp-homomorphism' if args.sp else 'homomorphism'
    data = {'kind': kind, 'exists': found is not None}
    lines = [f"{kind}: {'yes' if found is not None else 'no'}"]
    if args.witness and found is not None:
        data.update(found.as_dict())
        lines.append('image: ' + ' '.join(f"{source.label(v)}->{target.label(t)}" for v, t in enumerate(found.image)))
        if found.switch_witness is not None:
            lines.append('switch: ' + ' '.join(source.label(v) for v in sorted(found.switch_witness)))
    if args.verbose:
        lines.append(f"Searched in {time.perf_counter() - eps_time:.3f} seconds.")
    emit(args, '\n'.join(lines), data)
    return EXIT_OK


def cmd_chi(args):
    g = SignedGraph.load(args.input)
    mode = chi_mode(cfg.chi.mode)
    name = 'chi_sp' if mode == 'sp' else 'chi_s'
    solve = chi_sp if mode == 'sp' else chi_s
    catalog_cap = cfg.catalog.max_order_sp if mode == 'sp' else cfg.catalog.max_order_signed

    def compute():
        return solve(
            g, cap=cfg.chi.max_order, opts=search_options(), policy=cfg.catalog.policy,
            start_order=cfg.chi.start_order, max_order=catalog_cap)

    path = args.cache or cfg.cache.path
    result = None
    try:
        if path:
            cache = ResultCache(path, audit_rate=cfg.cache.audit_rate, seed=cfg.verify.seed)
            state = {}

            def value_only():
                state['result'] = compute()
                return state['result'].value
            value, hit = cache.cached(g.canonical_key('sp'), name, value_only)
            result = state.get('result')
        else:
            result = compute()
            value, hit = result.value, False
    except CapExhausted as e:
        emit(args, f"{name} > {e.lower_bound}", {'mode': mode, 'lower_bound': e.lower_bound, 'exact': False})
        return EXIT_BUDGET

    data = {'mode': mode, 'value': value, 'exact': True, 'cached': hit}
    lines = [f"{name} = {value}" + (' (cached)' if hit else '')]
    if args.witness and result is not None:
        data['witness_map'] = result.witness_map.as_dict()
        data['witness_target'] = json.loads(result.witness_target.to_json())
        lines.append('image: ' + ' '.join(str(t) for t in result.witness_map.image))
        lines.append(result.witness_target.to_text().rstrip('\n'))
    emit(args, '\n'.join(lines), data)
    return EXIT_OK


def parse_property(spec):
    '''
    P:k,l | Phat:k,l | transitivity:KIND | splitters | summary
    '''
    head, _, rest = spec.partition(':')
    if head in ('P', 'Phat'):
        try:
            k, l = (int(x) for x in rest.split(','))
        except ValueError:
            raise ValueError(f"Expected {head}:k,l, got {spec!r}.") from None
        return head, (k, l)
    if head == 'transitivity':
        if rest not in KINDS:
            raise ValueError(f"Unknown transitivity kind {rest!r}, expected one of {', '.join(KINDS)}.")
        return head, (rest,)
    if head in ('splitters', 'summary') and rest == '':
        return head, ()
    raise ValueError(f"Unknown property {spec!r}.")


def cmd_props(args):
    g = SignedGraph.load(args.input)
    lines, data = [], {}
    for spec in args.check or ['summary']:
        head, params = parse_property(spec)
        if head in ('P', 'Phat'):
            k, l = params
            violation = property_P_violation(g, k, l, hat=head == 'Phat')
            data[spec] = violation is None
            line = f"{head}({k},{l}): {'true' if violation is None else 'false'}"
            if violation is not None:
                vertices, alphas = violation
                line += f" (vertices {list(vertices)}, signs {alphas})"
                data[spec + ':violation'] = {'vertices': list(vertices), 'signs': str(alphas)}
            lines.append(line)
        elif head == 'transitivity':
            value = transitivity(g, params[0], deadline=search_options().deadline())
            data[spec] = value
            lines.append(f"{params[0]} transitive: {'true' if value else 'false'}")
        elif head == 'splitters':
            records = splitters(g)
            data[spec] = [{'pair': list(r.pair), 'teams': [list(t) for t in r.teams]} for r in records]
            lines.append(f"{len(records)} splitters")
            for r in records:
                lines.append(f"  {r.pair[0]}{r.pair[1]}: teams {r.teams[0]} {r.teams[1]}")
            partners = non_splitter_partners(g)
            data['non_splitter_partners'] = {str(v): p for v, p in partners.items()}
        else:
            summary = {
                'order': g.order,
                'edges': g.num_edges,
                'negative_edges': g.num_negative_edges,
                'max_degree': g.max_degree,
                'components': len(g.components()),
                'girth': None if g.girth() == float('inf') else int(g.girth()),
                'bipartite': g.is_bipartite(),
                'complete': g.is_complete(),
                'double_switching_graph': is_double_switching_graph(g),
            }
            data[spec] = summary
            lines += [f"{k}: {v}" for k, v in summary.items()]
    emit(args, '\n'.join(lines), data)
    return EXIT_OK


def cmd_canon(args):
    g = SignedGraph.load(args.input)
    mode = chi_mode(cfg.chi.mode)
    key = g.canonical_key(mode).hex()
    emit(args, key, {'mode': mode, 'key': key})
    return EXIT_OK


def cmd_verify(args):
    ctx = CheckContext.from_cfg(cfg, verbose=args.verbose)
    eps_time = time.perf_counter()
    report = run_suite(
        cfg.verify.suite, ctx, report_path=cfg.verify.report or None,
        n_workers=cfg.search.n_workers, verbose=args.verbose)
    if args.json:
        print(report.to_json())
    else:
        for c in report.checks:
            print(f"[{c.status:>14}] {c.name}: {c.detail}")
        print(report.summary_line())
        print(f"Suite done in {time.perf_counter() - eps_time:.3f} seconds.")
    if cfg.verify.report:
        print(f"Report saved to {cfg.verify.report}.")
    return EXIT_OK if report.ok else EXIT_FAILED


#################################################
# Argument parsing
#################################################
def build_parser():
    common = argparse.ArgumentParser(add_help=False, allow_abbrev=False)
    common.add_argument('--cfg_files', default=[], nargs='*')
    common.add_argument('--json', action='store_true', help="JSON output instead of text.")
    common.add_argument('--verbose', action='store_true')

    parser = argparse.ArgumentParser(
        prog='sg',
        description="Signed graph homomorphisms, chromatic numbers and verification suites. "
        "Config fields of src/config.py can be overwritten by config files and by command line, "
        "e.g. --time-budget 10 --n-workers 4.",
        allow_abbrev=False)
    sub = parser.add_subparsers(dest='command', required=True)

    p = sub.add_parser('gen', parents=[common], allow_abbrev=False, help="Generate a graph.")
    p.add_argument('kind', choices=GEN_KINDS)
    p.add_argument('--q', type=int)
    p.add_argument('--plus', action='store_true', help="Add the dominating vertex inf.")
    p.add_argument('--double', action='store_true', help="Double switching graph of SP_q+.")
    p.add_argument('--name')
    p.add_argument('--level', type=int, default=0)
    p.add_argument('-i', '--input')
    p.add_argument('--times', type=int, default=1)
    p.add_argument('--n', type=int)
    p.add_argument('-o', '--output')
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser('switch', parents=[common], allow_abbrev=False, help="Switch at a vertex set.")
    p.add_argument('-i', '--input', required=True)
    p.add_argument('--set', default='')
    p.add_argument('-o', '--output')
    p.set_defaults(func=cmd_switch)

    p = sub.add_parser('hom', parents=[common], allow_abbrev=False, help="Decide a homomorphism.")
    p.add_argument('-s', '--source', required=True)
    p.add_argument('-t', '--target', required=True)
    p.add_argument('--sp', action='store_true', help="Sign-preserving homomorphism.")
    p.add_argument('--witness', action='store_true')
    p.set_defaults(func=cmd_hom)

    p = sub.add_parser('chi', parents=[common], allow_abbrev=False,
                       help="Chromatic number, --mode s|sp and --max-order N.")
    p.add_argument('-i', '--input', required=True)
    p.add_argument('--cache', default='')
    p.add_argument('--witness', action='store_true')
    p.set_defaults(func=cmd_chi)

    p = sub.add_parser('props', parents=[common], allow_abbrev=False, help="Graph properties.")
    p.add_argument('-i', '--input', required=True)
    p.add_argument('--check', action='append',
                   help="P:k,l | Phat:k,l | transitivity:KIND | splitters | summary; repeatable.")
    p.set_defaults(func=cmd_props)

    p = sub.add_parser('canon', parents=[common], allow_abbrev=False,
                       help="Canonical key, --mode sp|signed.")
    p.add_argument('-i', '--input', required=True)
    p.set_defaults(func=cmd_canon)

    p = sub.add_parser('verify', parents=[common], allow_abbrev=False,
                       help="Run verification suites, --suite NAMES --max-n N --seed S --report FILE.")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None):
    parser = build_parser()
    args, cmd_lst = parser.parse_known_args(argv)

    try:
        # Update config from files and command line
        reset_config()
        update_config(args.cfg_files, cmd_lst)
        return args.func(args)
    except (CapExhausted, BudgetExceeded) as e:
        print(f"Budget exhausted: {e}", file=sys.stderr)
        return EXIT_BUDGET
    except (SignedGraphError, ValueError, KeyError, OSError) as e:
        print(f"Error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
