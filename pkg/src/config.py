# Copyright (c) 2025, sghom developers.  All rights reserved.
#
# Use of this source code is governed by an MIT-style license that can be
# found in the LICENSE file at the root of this source tree.

import argparse
from yacs.config import CfgNode

from src.utils.system_utils import env_threads, env_cache_path


cfg = CfgNode()

cfg.search = CfgNode(dict(
    deterministic = True,     # Witnesses are the first solution of the fixed search order
    time_budget = 0.,         # Wall-clock seconds per search, 0 for unlimited
    n_workers = 1,            # Threads for root splitting and catalog scans (SG_THREADS)
))

cfg.catalog = CfgNode(dict(
    max_order_sp = 7,         # Largest sp target catalog built without override
    max_order_signed = 6,     # Largest signed target catalog built without override
    # all | complete
    # Complete targets give the same chromatic values and are much fewer.
    policy = "all",
))

cfg.chi = CfgNode(dict(
    max_order = 6,            # Search cap, the value is reported as "> cap" beyond it
    mode = "sp",              # sp | s (signed)
    start_order = 1,
))

cfg.verify = CfgNode(dict(
    suite = ["all"],
    max_n = 8,                # Largest source order of the exhaustive checks
    seed = 0,
    report = "",              # JSON report path, empty for none

    # Sample sizes of the randomized checks
    n_random_pairs = 500,
    n_switch_samples = 50,
    n_random_graphs = 200,
    n_signature_pairs = 1000,

    cubic_max_n = 12,         # Largest order of the cubic configuration census
    witness_budget = 60.,     # Seconds for the subcubic chi_s > 5 witness search
))

cfg.cache = CfgNode(dict(
    path = "",                # Result cache file, empty for none (SG_CACHE)
    audit_rate = 0.01,        # Fraction of cache hits recomputed and compared
))

for i_cfg in cfg.values():
    i_cfg.set_new_allowed(True)

_default_cfg = cfg.clone()


def reset_config():
    cfg.merge_from_other_cfg(_default_cfg)


def everytype2bool(v):
    if isinstance(v, bool):
        return v
    if v.isnumeric():
        return bool(int(v))
    v = v.lower()
    if v in ['n', 'no', 'none', 'false']:
        return False
    return True


def flag_name(key):
    return '--' + key.replace('_', '-')


def update_argparser(parser, groups=None):
    for name in cfg.keys():
        if groups is not None and name not in groups:
            continue
        group = parser.add_argument_group(name)
        for key, value in getattr(cfg, name).items():
            t = type(value)

            if t == bool:
                group.add_argument(flag_name(key), dest=key, default=value, type=everytype2bool)
            elif t == list:
                group.add_argument(flag_name(key), dest=key, default=value, type=type(value[0]), nargs="*")
            elif t == tuple:
                group.add_argument(flag_name(key), dest=key, default=value, type=type(value[0]), nargs=len(value))
            else:
                group.add_argument(flag_name(key), dest=key, default=value, type=t)


def update_config(cfg_files, cmd_lst=[]):
    # Update from config files
    if isinstance(cfg_files, str):
        cfg_files = [cfg_files]
    for cfg_path in cfg_files:
        cfg.merge_from_file(cfg_path)

    # Environment overrides come before command line values
    cfg.search.n_workers = env_threads(cfg.search.n_workers)
    cfg.cache.path = env_cache_path(cfg.cache.path)

    if len(cmd_lst) == 0:
        return

    # Parse the arguments from command line
    internal_parser = argparse.ArgumentParser()
    update_argparser(internal_parser)
    internal_args = internal_parser.parse_args(cmd_lst)

    # Update from command line args
    for name in cfg.keys():
        cfg_subgroup = getattr(cfg, name)
        for key in cfg_subgroup.keys():
            arg_val = getattr(internal_args, key)
            # Check if the default values is updated
            if internal_parser.get_default(key) != arg_val:
                cfg_subgroup[key] = arg_val
