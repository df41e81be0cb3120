# Copyright (c) 2025, sghom developers.  All rights reserved.
#
# Use of this source code is governed by an MIT-style license that can be
# found in the LICENSE file at the root of this source tree.

import os
import time
import random
import concurrent.futures
import numpy as np

from src.exceptions import BudgetExceeded


def seed_everything(seed):
    random.seed(seed)
    np.random.seed(seed)


def env_threads(default=1):
    # SG_THREADS overrides the configured worker count.
    value = os.environ.get('SG_THREADS', '')
    if value.strip() == '':
        return default
    return max(1, int(value))


def env_cache_path(default=''):
    return os.environ.get('SG_CACHE', default)


def ordered_parallel_map(fn, items, n_workers=1):
    '''
    Apply fn to every item, possibly concurrently, and return the results in
    the order of items.
    '''
    items = list(items)
    if n_workers <= 1 or len(items) <= 1:
        return [fn(item) for item in items]
    with concurrent.futures.ThreadPoolExecutor(max_workers=n_workers) as executor:
        futures = [executor.submit(fn, item) for item in items]
        return [f.result() for f in futures]


class Deadline:
    '''
    Wall-clock budget polled by the search loops.
    A budget of None or <= 0 never expires.
    '''

    def __init__(self, budget=None, poll_every=256):
        self.budget = budget if (budget is not None and budget > 0) else None
        self.start = time.perf_counter()
        self.poll_every = poll_every
        self._ticks = 0

    @property
    def elapsed(self):
        return time.perf_counter() - self.start

    def expired(self):
        return self.budget is not None and self.elapsed > self.budget

    def tick(self):
        if self.budget is None:
            return
        self._ticks += 1
        if self._ticks % self.poll_every == 0 and self.expired():
            raise BudgetExceeded(f"Time budget of {self.budget:.3f} seconds exceeded.")

    def check(self):
        if self.expired():
            raise BudgetExceeded(f"Time budget of {self.budget:.3f} seconds exceeded.")
