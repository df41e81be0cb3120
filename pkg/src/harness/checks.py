# Copyright (c) 2025, sghom developers.  All rights reserved.
#
# Use of this source code is governed by an MIT-style license that can be
# found in the LICENSE file at the root of this source tree.

import zlib
import itertools
from dataclasses import dataclass, field
from typing import Callable, NamedTuple, Optional, Any, Tuple

import numpy as np
from tqdm import tqdm

from src.signs import POS, NEG, SIGNS
from src.exceptions import UnknownNameError, CapExhausted, BudgetExceeded
from src.signed_graph_model import SignedGraph
from src.generators.paley import paley, paley_plus, infinity_vertex
from src.generators.named_graphs import named_graph, x_structure, y_structure, switched_at_w, as_graph, NAMED_GRAPHS
from src.generators.gadgets import build_tower
from src.generators.constructions import star_construction
from src.generators.enumeration import (
    enumerate_targets, complete_targets, enumerate_all_signatures,
    enumerate_signatures_mod_switching, enumerate_cubic_graphs,
    MAX_ORDER_SP, MAX_ORDER_SIGNED)
from src.generators.configurations import contains_any_configuration
from src.solver.homomorphism import sp_hom, hom, hom_oracle, validate_sp_hom, validate_hom, SearchOptions
from src.solver.chromatic import chi_sp, chi_s
from src.solver.colorings import acyclic_chromatic_number
from src.solver.bounds import (
    kn_lower_bound_formulas, kn_upper_bound_formulas, acyclic_bound_formulas, chi_s_lower_from_sp)
from src.analysis.neighborhoods import property_P_violation, alpha_neighborhood, induced_signed_subgraph
from src.analysis.transitivity import transitivity
from src.analysis.splitters import splitters, splitter_counts, non_splitter_partners
from src.harness.report import PASS, FAIL, SKIPPED
from src.utils.system_utils import Deadline

SUITES = ('all', 'paley', 'k4', 'gadget-cases', 'sp9', 'equivalences', 'star', 'cubic', 'splitters', 'acyclic')

# Connected cubic graphs up to isomorphism, by order.
CUBIC_COUNTS = {4: 1, 6: 2, 8: 5, 10: 19, 12: 85, 14: 509}


@dataclass
class CheckContext:
    seed: int = 0
    max_n: int = 8
    n_random_pairs: int = 500
    n_switch_samples: int = 50
    n_random_graphs: int = 200
    n_signature_pairs: int = 1000
    cubic_max_n: int = 12
    witness_budget: float = 60.
    policy: str = 'all'
    opts: SearchOptions = field(default_factory=SearchOptions)
    verbose: bool = False

    @classmethod
    def from_cfg(cls, cfg, verbose=False):
        v = cfg.verify
        return cls(
            seed=v.seed, max_n=v.max_n,
            n_random_pairs=v.n_random_pairs, n_switch_samples=v.n_switch_samples,
            n_random_graphs=v.n_random_graphs, n_signature_pairs=v.n_signature_pairs,
            cubic_max_n=v.cubic_max_n, witness_budget=v.witness_budget,
            policy=cfg.catalog.policy,
            # Checks run side by side, so each search stays on one thread.
            opts=SearchOptions(cfg.search.deterministic, cfg.search.time_budget, 1),
            verbose=verbose)

    def rng(self, name):
        # Independent stream per check, so results do not depend on which
        # other checks ran.
        return np.random.default_rng([self.seed, zlib.crc32(name.encode('utf-8'))])

    def progress(self, iterable, desc, total=None):
        return tqdm(iterable, desc=desc, total=total, disable=not self.verbose, leave=False)


class Outcome(NamedTuple):
    status: str
    detail: str = ''
    counterexample: Optional[Any] = None


def passed(detail=''):
    return Outcome(PASS, detail)


def failed(detail, counterexample=None):
    return Outcome(FAIL, detail, counterexample)


def skipped(detail):
    return Outcome(SKIPPED, detail)


@dataclass(frozen=True)
class RegisteredCheck:
    name: str
    suites: Tuple[str, ...]
    claim: str
    fn: Callable


CHECKS = {}


def register(name, suites, claim):
    '''
    Add a check to the registry. `claim` is the statement the check replays
    and opens the detail field of its report entry.
    '''
    def wrapper(fn):
        assert name not in CHECKS, f"Check {name!r} registered twice."
        for s in suites:
            assert s in SUITES, f"Unknown suite {s!r}."
        CHECKS[name] = RegisteredCheck(name, tuple(suites), claim, fn)
        return fn
    return wrapper


def checks_for(names):
    '''
    Registered checks selected by suite or check names, in registration order.
    '''
    names = list(names)
    for name in names:
        if name not in SUITES and name not in CHECKS:
            raise UnknownNameError(
                f"Unknown suite or check {name!r}; suites: {', '.join(SUITES)}.")
    selected = []
    for check in CHECKS.values():
        if ('all' in names or check.name in names or
                any(s in names for s in check.suites)):
            selected.append(check)
    return selected


def random_signed_graph(rng, n, p=0.5):
    mat = np.zeros((n, n), dtype=np.int8)
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                mat[u, v] = mat[v, u] = 1 if rng.random() < 0.5 else -1
    return SignedGraph(mat)


def unsigned_classes(n):
    # All-positive members of the sp catalog are the underlying graphs up to isomorphism.
    return [g for g in enumerate_targets(n, 'sp', max_order=n) if g.num_negative_edges == 0]


def _signs(signs):
    return ''.join(str(s) for s in signs)


#################################################
# Paley graphs
#################################################
@register('paley5_structure', ['paley'],
          "SP5 is the positive 5-cycle 0-1-2-3-4 with the complementary negative 5-cycle; "
          "inf is positive to all five vertices of SP5+.")
def check_paley5_structure(ctx):
    g = paley(5)
    for u in range(5):
        for v in range(u + 1, 5):
            expected = POS if (v - u) % 5 in (1, 4) else NEG
            if g.sign(u, v) is not expected:
                return failed(f"pair {u}{v} has sign {g.sign(u, v)}", {'pair': [u, v]})
    plus = paley_plus(5)
    inf = infinity_vertex(5)
    if plus.degree(inf, POS) != 5 or plus.degree(inf, NEG) != 0:
        return failed(f"inf has degrees (+{plus.degree(inf, POS)}, -{plus.degree(inf, NEG)})")
    return passed("10 pairs of SP5 and the 5 edges at inf match")


PROPERTY_GRID = [
    # (q, plus, hat, k, l)
    (5, False, False, 1, 2), (5, False, False, 2, 0),
    (9, False, False, 1, 4), (9, False, False, 2, 1),
    (13, False, False, 1, 6), (13, False, False, 2, 2),
    (5, True, True, 1, 5), (5, True, True, 2, 2),
    (9, True, True, 1, 9), (9, True, True, 2, 4), (9, True, True, 3, 1),
]


@register('paley_property_grid', ['paley'],
          "SP5, SP9, SP13 have P(1,2), P(2,0), P(1,4), P(2,1), P(1,6), P(2,2) and "
          "SP5+, SP9+ have Phat(1,5), Phat(2,2), Phat(1,9), Phat(2,4), Phat(3,1).")
def check_paley_property_grid(ctx):
    for q, plus, hat, k, l in PROPERTY_GRID:
        t = paley_plus(q) if plus else paley(q)
        violation = property_P_violation(t, k, l, hat=hat)
        name = f"SP{q}{'+' if plus else ''} {'Phat' if hat else 'P'}({k},{l})"
        if violation is not None:
            vertices, alphas = violation
            return failed(f"{name} fails", {'vertices': list(vertices), 'signs': str(alphas)})
    return passed(f"{len(PROPERTY_GRID)} properties hold")


@register('paley_transitivity', ['paley'],
          "SP5 and SP9 are sp-vertex- and sp-edge-transitive; "
          "SP5+ and SP9+ are vertex- and edge-transitive.")
def check_paley_transitivity(ctx):
    cases = [
        ('SP5', paley(5), ('sp_vertex', 'sp_edge')),
        ('SP9', paley(9), ('sp_vertex', 'sp_edge')),
        ('SP5+', paley_plus(5), ('vertex', 'edge')),
        ('SP9+', paley_plus(9), ('vertex', 'edge')),
    ]
    deadline = ctx.opts.deadline()
    for name, t, kinds in cases:
        for kind in kinds:
            if not transitivity(t, kind, deadline=deadline):
                return failed(f"{name} is not {kind} transitive", {'graph': name, 'kind': kind})
    return passed("8 transitivity properties hold")


#################################################
# Signatures of K4
#################################################
@register('k4_bad_classification', ['k4'],
          "A signature of K4 maps to SP5+ iff it is not switching equivalent "
          "to the all-positive or the all-negative K4.")
def check_k4_bad_classification(ctx):
    target = paley_plus(5)
    bad_pos = SignedGraph.complete(4, POS)
    bad_neg = SignedGraph.complete(4, NEG)
    n_bad = 0
    for g in enumerate_all_signatures(SignedGraph.complete(4)):
        bad = g.is_switch_equivalent(bad_pos) or g.is_switch_equivalent(bad_neg)
        n_bad += bad
        found = hom(g, target, opts=ctx.opts)
        if found is not None and not validate_hom(g, target, found):
            return failed("invalid homomorphism witness", {'graph': g.to_text()})
        if (found is None) != bad:
            return failed(
                f"signature with negative edges {[(u, v) for u, v, s in g.edges() if s is NEG]} "
                f"is {'bad' if bad else 'good'} but a homomorphism {'exists' if found else 'does not exist'}",
                {'graph': g.to_text()})
    if n_bad != 16:
        return failed(f"expected 16 bad signatures, found {n_bad}")
    return passed("64 signatures, 16 bad")


#################################################
# Gadget cases
#################################################
@register('path_extension_sp5', ['gadget-cases'],
          "A signed 3-path u1u2u3u4 with u1, u4 pinned to i, j of SP5 extends to an "
          "sp-homomorphism unless its three signs are equal and i = j.")
def check_path_extension_sp5(ctx):
    target = paley(5)
    cases = 0
    for signs in itertools.product(SIGNS, repeat=3):
        path = SignedGraph.from_edges(4, [(k, k + 1, s) for k, s in enumerate(signs)])
        all_equal = len(set(signs)) == 1
        for i in range(5):
            for j in range(5):
                cases += 1
                found = sp_hom(path, target, opts=ctx.opts, fixed={0: i, 3: j})
                if (found is not None) == (all_equal and i == j):
                    return failed(
                        f"signs {_signs(signs)}, ends ({i}, {j}): extension "
                        f"{'exists' if found else 'missing'}",
                        {'signs': _signs(signs), 'ends': [i, j]})
                if found is not None and not validate_sp_hom(path, target, found):
                    return failed("invalid sp-homomorphism witness", {'signs': _signs(signs), 'ends': [i, j]})
    return passed(f"{cases} cases")


@register('sp5_mixed_neighbourhoods', ['gadget-cases'],
          "For distinct i, j of SP5 and {alpha, beta} = {+, -}, "
          "N^alpha(i) and N^beta(j) intersect.")
def check_sp5_mixed_neighbourhoods(ctx):
    t = paley(5)
    for i, j in itertools.permutations(range(5), 2):
        for alpha in SIGNS:
            if not alpha_neighborhood(t, [i, j], [alpha, -alpha]):
                return failed(f"N^{alpha}({i}) and N^{-alpha}({j}) are disjoint", {'pair': [i, j]})
    return passed("20 ordered pairs, both sign orders")


def _positive_triangle_signs():
    # Sign tuples for (uv, vw, wu, wx) with uvw a positive 3-cycle.
    return [s for s in itertools.product(SIGNS, repeat=4) if s[0] * s[1] * s[2] is POS]


def _excluded_images(a, b, inf, same):
    '''
    Clause label and excluded x images for the endpoint images {a, b} of
    {u, v}. `same` tells whether wx and uw carry the same sign.
    '''
    if inf in (a, b):
        i = b if a == inf else a
        if same:
            return 'a', {(i - 1) % 5, (i + 1) % 5}
        return 'b', {inf, i}
    d = (b - a) % 5
    if d in (1, 4):
        i = a if d == 1 else b
        if same:
            return 'c', {inf}
        return 'd', {i, (i + 1) % 5, (i + 3) % 5}
    i = a if d == 2 else b
    if same:
        return 'e', {(i + 2) % 5, (i + 4) % 5}
    return 'f', {i, (i - 2) % 5}


@register('x_structure_clauses', ['gadget-cases'],
          "With u, v of the positive 3-cycle uvw pinned in SP5+, the signature or its switch at w "
          "extends to the pendant x with x avoiding the excluded images of cases (a) to (f).")
def check_x_structure_clauses(ctx):
    target = paley_plus(5)
    inf = infinity_vertex(5)
    per_clause = {c: 0 for c in 'abcdef'}
    for signs in _positive_triangle_signs():
        pair = [x_structure(signs), switched_at_w(x_structure(signs))]
        same = signs[3] is signs[2]
        for a, b in itertools.permutations(range(6), 2):
            if target.sign(a, b) is not signs[0]:
                continue
            reachable = set()
            for tmpl in pair:
                u, v, x = tmpl.port('u'), tmpl.port('v'), tmpl.port('x')
                for c in range(6):
                    if sp_hom(tmpl.graph, target, opts=ctx.opts, fixed={u: a, v: b, x: c}) is not None:
                        reachable.add(c)
            clause, excluded = _excluded_images(a, b, inf, same)
            per_clause[clause] += 1
            if not reachable - excluded:
                return failed(
                    f"clause ({clause}) signs {_signs(signs)}, u -> {a}, v -> {b}: "
                    f"reachable x images {sorted(reachable)} all excluded",
                    {'signs': _signs(signs), 'u': a, 'v': b, 'clause': clause,
                     'reachable': sorted(reachable), 'excluded': sorted(excluded)})
    return passed("cases per clause " + ', '.join(f"({c}) {k}" for c, k in per_clause.items()))


@register('y_structure_extension', ['gadget-cases'],
          "With u, v, y pinned in SP5+ and uvw a positive 3-cycle, the structure Y or its "
          "switch at w extends to an sp-homomorphism.")
def check_y_structure_extension(ctx):
    target = paley_plus(5)
    exceptions = []
    cases = 0
    for signs in _positive_triangle_signs():
        pair = [y_structure(signs), switched_at_w(y_structure(signs))]
        ports = pair[0].ports
        for a, b in itertools.permutations(range(6), 2):
            if target.sign(a, b) is not signs[0]:
                continue
            for c in range(6):
                cases += 1
                fixed = {ports['u']: a, ports['v']: b, ports['y']: c}
                if all(sp_hom(t.graph, target, opts=ctx.opts, fixed=fixed) is None for t in pair):
                    exceptions.append({'signs': _signs(signs), 'u': a, 'v': b, 'y': c})
    if exceptions:
        return failed(
            f"{len(exceptions)} of {cases} pinnings admit no extension "
            "(signs listed for uv, vw, wu, wx)", exceptions[:10])
    return passed(f"{cases} pinnings extend")


@register('gadget_forced_distinct', ['gadget-cases'],
          "In the main gadget, x, y, a1, a2, d1, d2 have pairwise distinct images "
          "under every homomorphism.")
def check_gadget_forced_distinct(ctx):
    h = build_tower(0)
    forced = h.forced_distinct_pairs()
    names = ('x', 'y', 'a1', 'a2', 'd1', 'd2')
    missing = []
    for p, q in itertools.combinations(names, 2):
        u, v = sorted((h.vertex_of(p), h.vertex_of(q)))
        if (u, v) not in forced:
            missing.append(f"{p}{q}")
    if missing:
        return failed(f"pairs not forced distinct: {', '.join(missing)}", missing)
    return passed("15 pairs forced distinct")


#################################################
# SP9 neighbourhoods
#################################################
@register('sp9_neighbourhoods', ['sp9'],
          "In SP9 every N+(v) induces (K4, M+) and every N-(v) induces (K4, M-); "
          "every induced (K4, M+) or (K4, M-) is such a neighbourhood.")
def check_sp9_neighbourhoods(ctx):
    t = paley(9)
    key_of = {
        POS: named_graph('K4_Mplus').canonical_key('sp'),
        NEG: named_graph('K4_Mminus').canonical_key('sp'),
    }
    neighbourhoods = {s: set() for s in SIGNS}
    for v in range(9):
        for s in SIGNS:
            members = frozenset(t.neighbors(v, s))
            sub = induced_signed_subgraph(t, members).without_labels()
            if sub.canonical_key('sp') != key_of[s]:
                return failed(f"N{s}({v}) does not induce (K4, M{s})", {'vertex': v, 'sign': str(s)})
            neighbourhoods[s].add(members)
    found = 0
    for subset in itertools.combinations(range(9), 4):
        key = induced_signed_subgraph(t, subset).without_labels().canonical_key('sp')
        for s in SIGNS:
            if key == key_of[s]:
                found += 1
                if frozenset(subset) not in neighbourhoods[s]:
                    return failed(f"{list(subset)} induces (K4, M{s}) but is no N{s}(v)", list(subset))
    return passed(f"126 subsets, {found} induce (K4, M+-)")


#################################################
# Equivalences
#################################################
@register('hom_vs_oracle', ['equivalences'],
          "hom and the switching-enumeration oracle agree: a homomorphism exists iff "
          "some switching of the source sp-maps to the target.")
def check_hom_vs_oracle(ctx):
    targets = [t for k in range(1, 5) for t in enumerate_targets(k, 'signed')]
    sources = [
        sig
        for n in range(1, min(5, ctx.max_n) + 1)
        for base in unsigned_classes(n)
        for sig in enumerate_signatures_mod_switching(base)]
    rng = ctx.rng('hom_vs_oracle')
    random_pairs = []
    for _ in range(ctx.n_random_pairs):
        n = int(rng.integers(1, min(8, ctx.max_n) + 1))
        m = int(rng.integers(1, 6))
        random_pairs.append((random_signed_graph(rng, n, rng.uniform(0.2, 0.9)),
                             random_signed_graph(rng, m, rng.uniform(0.3, 1.))))

    pairs = [(s, t) for s in sources for t in targets] + random_pairs
    for source, target in ctx.progress(pairs, 'hom vs oracle'):
        found = hom(source, target, opts=ctx.opts)
        if (found is not None) != hom_oracle(source, target):
            return failed("verdicts differ", {'source': source.to_text(), 'target': target.to_text()})
        if found is not None and not validate_hom(source, target, found):
            return failed("invalid homomorphism witness", {'source': source.to_text(), 'target': target.to_text()})
    return passed(f"{len(sources)} sources x {len(targets)} targets exhaustive, {len(random_pairs)} random pairs")


@register('switch_equivalence_bruteforce', ['equivalences'],
          "Two signatures on one graph are switching equivalent iff they have the same "
          "cycle signs, checked against all 2^n switchings.")
def check_switch_equivalence_bruteforce(ctx):
    rng = ctx.rng('switch_equivalence_bruteforce')
    compared = 0
    for n in range(1, min(5, ctx.max_n) + 1):
        flips = np.array(list(itertools.product((1, -1), repeat=n)), dtype=np.int8)
        switchings = flips[:, :, None] * flips[:, None, :]
        for base in unsigned_classes(n):
            edges = sorted(base.underlying_edges())
            if not edges:
                continue
            for _ in range(ctx.n_signature_pairs):
                g1, g2 = (
                    SignedGraph.from_edges(n, [(u, v, int(s)) for (u, v), s in zip(edges, rng.choice([1, -1], len(edges)))])
                    for _ in range(2))
                brute = bool(np.any(np.all(g1.sign_matrix[None] * switchings == g2.sign_matrix[None], axis=(1, 2))))
                compared += 1
                if g1.is_switch_equivalent(g2) != brute:
                    return failed("verdicts differ", {'g1': g1.to_text(), 'g2': g2.to_text()})
    return passed(f"{compared} signature pairs")


def _small_corpus(ctx, name):
    corpus = []
    for key in sorted(NAMED_GRAPHS):
        g = as_graph(named_graph(key))
        if g.order <= 6:
            corpus.append((key, g.without_labels()))
    rng = ctx.rng(name)
    for i in range(20):
        corpus.append((f"random{i}", random_signed_graph(rng, int(rng.integers(1, 6)), 0.6)))
    return corpus


@register('chromatic_sandwich', ['equivalences'],
          "chi_s <= chi_sp <= 2 chi_s on named and random small graphs.")
def check_chromatic_sandwich(ctx):
    corpus = _small_corpus(ctx, 'chromatic_sandwich')
    for name, g in ctx.progress(corpus, 'sandwich'):
        s = chi_s(g, cap=max(g.order, 1), opts=ctx.opts, policy='complete').value
        sp = chi_sp(g, cap=max(g.order, 1), opts=ctx.opts, policy='complete').value
        if not (s <= sp <= 2 * s and chi_s_lower_from_sp(sp) <= s):
            return failed(f"{name}: chi_s = {s}, chi_sp = {sp}", {'graph': g.to_text()})
    return passed(f"{len(corpus)} graphs")


#################################################
# Star construction
#################################################
@register('chi_sp_p5_matching', ['star'],
          "The 5-edge path whose negative edges form a maximum matching has chi_sp = 4.")
def check_chi_sp_p5_matching(ctx):
    g = named_graph('P5_M')
    result = chi_sp(g, cap=g.order, opts=ctx.opts, policy=ctx.policy)
    if result.value != 4:
        return failed(f"chi_sp = {result.value}")
    if not validate_sp_hom(g, result.witness_target, result.witness_map):
        return failed("invalid witness", {'target': result.witness_target.to_text()})
    return passed(f"witness {list(result.witness_map.image)} into a target with {result.witness_target.num_edges} edges")


@register('star_doubling', ['star'],
          "chi_sp(star(g)) = 2 chi_sp(g) + 1 for K1, positive K2, negative K2 "
          "and the negative triangle.")
def check_star_doubling(ctx):
    cases = [
        ('K1', SignedGraph.empty(1)),
        ('K2+', SignedGraph.complete(2, POS)),
        ('K2-', SignedGraph.complete(2, NEG)),
        ('K3-', SignedGraph.complete(3, NEG)),
    ]
    values = []
    for name, g in cases:
        base = chi_sp(g, cap=g.order, opts=ctx.opts, policy='complete').value
        star = star_construction(g)
        doubled = chi_sp(star, cap=star.order, opts=ctx.opts, policy='complete').value
        values.append(f"{name}: {base} -> {doubled}")
        if doubled != 2 * base + 1:
            return failed(f"{name}: chi_sp = {base} but star has {doubled}")
    return passed('; '.join(values))


#################################################
# Splitters
#################################################
@register('splitters_sp5_plus', ['splitters'],
          "All 15 vertex pairs of SP5+ are splitters; every vertex lies in 5 of them.")
def check_splitters_sp5_plus(ctx):
    t = paley_plus(5)
    records = splitters(t)
    counts = splitter_counts(t)
    if len(records) != 15 or counts != [5] * 6:
        return failed(f"{len(records)} splitters, counts {counts}")
    return passed("15 splitters")


@register('splitters_k6_matching', ['splitters'],
          "In (K6, M) and (K6, Mbar) every vertex has exactly one non-splitter partner.")
def check_splitters_k6_matching(ctx):
    for name in ('K6_M', 'K6_Mbar'):
        partners = non_splitter_partners(named_graph(name))
        for v, others in partners.items():
            if len(others) != 1:
                return failed(f"{name}: vertex {v} has non-splitter partners {others}", {'graph': name, 'vertex': v})
    return passed("12 vertices with one partner each")


@register('splitters_switching_invariance', ['splitters'],
          "Splitters and their teams do not change under switching.")
def check_splitters_switching_invariance(ctx):
    rng = ctx.rng('splitters_switching_invariance')
    for name, t in (('SP5+', paley_plus(5)), ('K6_M', named_graph('K6_M')), ('K6_Mbar', named_graph('K6_Mbar'))):
        base = splitters(t)
        for _ in range(ctx.n_switch_samples):
            subset = {v for v in range(6) if rng.random() < 0.5}
            if splitters(t.switch(subset)) != base:
                return failed(f"{name} switched at {sorted(subset)} changes its splitters",
                              {'graph': name, 'switch': sorted(subset)})
    return passed(f"3 graphs x {ctx.n_switch_samples} switchings")


#################################################
# Cubic graphs
#################################################
@register('cubic_census', ['cubic'],
          "The cubic generator yields 1, 2, 5, 19, 85 connected cubic graphs on 4, 6, 8, 10, 12 vertices.")
def check_cubic_census(ctx):
    found = {}
    for n in range(4, ctx.cubic_max_n + 1, 2):
        found[n] = sum(1 for g in enumerate_cubic_graphs(n, verbose=ctx.verbose)
                       if g.is_connected() and set(g.degrees()) == {3})
        if n in CUBIC_COUNTS and found[n] != CUBIC_COUNTS[n]:
            return failed(f"{found[n]} graphs on {n} vertices, expected {CUBIC_COUNTS[n]}")
    return passed(', '.join(f"{n}: {k}" for n, k in found.items()))


@register('cubic_sp5_plus_bound', ['cubic'],
          "Every signed connected cubic graph on at most 8 vertices maps to SP5+ "
          "unless it is a bad K4.")
def check_cubic_sp5_plus_bound(ctx):
    target = paley_plus(5)
    bad = [SignedGraph.complete(4, POS), SignedGraph.complete(4, NEG)]
    classes = 0
    for n in range(4, min(8, ctx.max_n) + 1, 2):
        for base in enumerate_cubic_graphs(n):
            for g in enumerate_signatures_mod_switching(base):
                classes += 1
                is_bad = n == 4 and any(g.is_switch_equivalent(b) for b in bad)
                found = hom(g, target, opts=ctx.opts)
                if (found is None) != is_bad:
                    return failed(
                        f"{'bad K4 maps' if is_bad else 'no homomorphism'} on {n} vertices",
                        {'graph': g.to_text()})
                if found is not None and not validate_hom(g, target, found):
                    return failed("invalid homomorphism witness", {'graph': g.to_text()})
    return passed(f"{classes} signature classes")


@register('cubic_configurations', ['cubic'],
          "Every connected cubic graph other than K4 contains one of the "
          "configurations (a) to (d).")
def check_cubic_configurations(ctx):
    per_name = {}
    total = 0
    for n in range(6, ctx.cubic_max_n + 1, 2):
        for g in enumerate_cubic_graphs(n, verbose=ctx.verbose):
            total += 1
            found = contains_any_configuration(g)
            if found is None:
                return failed(f"cubic graph on {n} vertices without a configuration", {'graph': g.to_text()})
            per_name[found[0]] = per_name.get(found[0], 0) + 1
    return passed(f"{total} graphs; first match " + ', '.join(f"({k}) {v}" for k, v in sorted(per_name.items())))


@register('cubic_lower_bound_witness', ['cubic'],
          "Some signed subcubic graph has chi_s > 5.")
def check_cubic_lower_bound_witness(ctx):
    deadline = Deadline(ctx.witness_budget)
    # A graph maps to some target of order <= 5 iff it maps to a complete one of order 5.
    targets = complete_targets(5, 'signed')
    tried = 0
    try:
        for n in range(4, ctx.cubic_max_n + 1, 2):
            for base in enumerate_cubic_graphs(n):
                for g in enumerate_signatures_mod_switching(base):
                    deadline.check()
                    tried += 1
                    if all(hom(g, t, opts=ctx.opts, deadline=deadline) is None for t in targets):
                        return Outcome(PASS, f"witness on {n} vertices after {tried} classes", g.to_text())
    except BudgetExceeded:
        return skipped(f"not found within {ctx.witness_budget:g} seconds ({tried} classes tried)")
    return skipped(f"not found among {tried} classes of cubic graphs on <= {ctx.cubic_max_n} vertices")


#################################################
# Acyclic colourings and formulas
#################################################
@register('acyclic_coloring_bounds', ['acyclic'],
          "A graph with acyclic chromatic number k has chi_s <= k 2^(k-2) and chi_sp <= k 2^(k-1).")
def check_acyclic_coloring_bounds(ctx):
    rng = ctx.rng('acyclic_coloring_bounds')
    compared = skipped_bounds = 0
    for _ in ctx.progress(range(ctx.n_random_graphs), 'acyclic bounds'):
        n = int(rng.integers(1, min(8, ctx.max_n) + 1))
        g = random_signed_graph(rng, n, rng.uniform(0.2, 0.8))
        k = acyclic_chromatic_number(g)
        bound_s, bound_sp = acyclic_bound_formulas(k)
        for chi, bound, cap in ((chi_s, bound_s, MAX_ORDER_SIGNED), (chi_sp, bound_sp, MAX_ORDER_SP)):
            compared += 1
            if bound >= n:
                # chi <= |V(g)| always
                continue
            if bound > cap:
                compared -= 1
                skipped_bounds += 1
                continue
            try:
                chi(g, cap=bound, opts=ctx.opts, policy='complete')
            except CapExhausted:
                return failed(f"{chi.__name__} exceeds {bound} with k = {k}", {'graph': g.to_text()})
    if compared == 0:
        return skipped(f"all {skipped_bounds} bounds above the catalog caps")
    return passed(f"{compared} bounds verified, {skipped_bounds} above the catalog caps")


@register('bound_formulas', ['acyclic'],
          "The K_n-minor lower bounds give (chi_sp, chi_s) = (1, 1), (4, 2), (9, 5), (20, 10) "
          "for n = 2..5; the acyclic and upper bound formulas match their closed forms.")
def check_bound_formulas(ctx):
    expected = {2: (1, 1), 3: (4, 2), 4: (9, 5), 5: (20, 10)}
    for n, values in expected.items():
        got = tuple(kn_lower_bound_formulas(n))
        if got != values:
            return failed(f"n = {n}: got {got}, expected {values}")
    for k, values in {1: (1, 1), 2: (2, 4), 3: (6, 12), 4: (16, 32)}.items():
        if tuple(acyclic_bound_formulas(k)) != values:
            return failed(f"acyclic k = {k}: got {acyclic_bound_formulas(k)}")
    if tuple(kn_upper_bound_formulas(3)) != (5 * 2 ** 3, 5 * 2 ** 4):
        return failed(f"upper bounds n = 3: got {kn_upper_bound_formulas(3)}")
    return passed("12 formula values")
