# Copyright (c) 2025, sghom developers.  All rights reserved.
#
# Use of this source code is governed by an MIT-style license that can be
# found in the LICENSE file at the root of this source tree.

import json
from dataclasses import dataclass, field, asdict
from typing import Any, Dict, List, Optional

PASS = 'pass'
FAIL = 'fail'
SKIPPED = 'skipped-by-cap'
STATUSES = (PASS, FAIL, SKIPPED)


@dataclass
class CheckResult:
    '''
    Outcome of one registered check. `detail` starts with the claim the
    check replays; `millis` is the only field that varies between runs.
    '''
    name: str
    status: str
    detail: str = ''
    counterexample: Optional[Any] = None
    millis: float = 0.

    def __post_init__(self):
        assert self.status in STATUSES, f"Unknown check status {self.status!r}."


@dataclass
class VerificationReport:
    checks: List[CheckResult] = field(default_factory=list)
    settings: Dict[str, Any] = field(default_factory=dict)

    @property
    def failed(self):
        return [c for c in self.checks if c.status == FAIL]

    @property
    def ok(self):
        return len(self.failed) == 0

    def counts(self):
        return {s: sum(c.status == s for c in self.checks) for s in STATUSES}

    def names(self):
        return [c.name for c in self.checks]

    def to_dict(self, with_timings=True):
        checks = []
        for c in self.checks:
            entry = asdict(c)
            if not with_timings:
                entry.pop('millis')
            checks.append(entry)
        return {
            'settings': dict(self.settings),
            'summary': self.counts(),
            'checks': checks,
        }

    def to_json(self, with_timings=True):
        return json.dumps(self.to_dict(with_timings), indent=2, default=str)

    def save(self, path):
        with open(path, 'w') as f:
            f.write(self.to_json())
            f.write('\n')

    def summary_line(self):
        c = self.counts()
        return f"{c[PASS]} passed, {c[FAIL]} failed, {c[SKIPPED]} skipped of {len(self.checks)} checks."
