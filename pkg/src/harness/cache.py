# Copyright (c) 2025, sghom developers.  All rights reserved.
#
# Use of this source code is governed by an MIT-style license that can be
# found in the LICENSE file at the root of this source tree.

import os
import json
import hashlib
import tempfile
import threading

import numpy as np

CACHE_VERSION = 1
VALUE_FIELDS = ('chi_s', 'chi_sp')


def _checksum(entries):
    blob = json.dumps(entries, sort_keys=True, separators=(',', ':'))
    return hashlib.sha256(blob.encode('utf-8')).hexdigest()


class ResultCache:
    '''
    Persistent map from sp canonical keys (hex) to chromatic values and
    metadata, stored as one JSON file with a checksum over the entries.

    Writes replace the file atomically, so concurrent readers see either the
    old or the new content. A process-wide lock serializes writers.
    '''

    _write_lock = threading.Lock()

    def __init__(self, path, audit_rate=0., seed=0):
        self.path = path
        self.audit_rate = audit_rate
        self.rng = np.random.default_rng(seed)
        self.entries = {}
        self.corrupted = False
        self.audits = 0
        self.audit_mismatches = 0
        self.reload()

    def reload(self):
        self.entries = {}
        self.corrupted = False
        if not self.path or not os.path.exists(self.path):
            return
        try:
            with open(self.path) as f:
                data = json.load(f)
            entries = data['entries']
            ok = data.get('version') == CACHE_VERSION and data.get('checksum') == _checksum(entries)
        except (OSError, ValueError, KeyError, TypeError):
            ok = False
        if not ok:
            print(f"Cache {self.path} failed its integrity check; ignoring it and recomputing.")
            self.corrupted = True
            return
        self.entries = entries

    def save(self):
        if not self.path:
            return
        data = {
            'version': CACHE_VERSION,
            'entries': self.entries,
            'checksum': _checksum(self.entries),
        }
        directory = os.path.dirname(os.path.abspath(self.path))
        os.makedirs(directory, exist_ok=True)
        with self._write_lock:
            fd, tmp_path = tempfile.mkstemp(dir=directory, prefix='.sgcache-', suffix='.json')
            try:
                with os.fdopen(fd, 'w') as f:
                    json.dump(data, f, sort_keys=True)
                os.replace(tmp_path, self.path)
            except BaseException:
                if os.path.exists(tmp_path):
                    os.remove(tmp_path)
                raise

    def lookup(self, key, field):
        '''
        Cached value of field for the key, or None on a miss.
        '''
        assert field in VALUE_FIELDS, f"Unknown cache field {field!r}."
        entry = self.entries.get(_hex(key))
        if entry is None:
            return None
        return entry.get(field)

    def store(self, key, values, metadata=None, persist=True):
        entry = self.entries.setdefault(_hex(key), {})
        for name, value in values.items():
            assert name in VALUE_FIELDS, f"Unknown cache field {name!r}."
            entry[name] = value
        if metadata:
            entry.setdefault('meta', {}).update(metadata)
        if persist:
            self.save()

    def drop(self, key, persist=True):
        self.entries.pop(_hex(key), None)
        if persist:
            self.save()

    def cached(self, key, field, compute):
        '''
        Value of field for the key, computed and stored on a miss. A hit is
        recomputed with probability audit_rate; on disagreement the entry is
        replaced by the fresh value.

        Output:
            @value:  the value
            @hit:    True when served from the cache
        '''
        value = self.lookup(key, field)
        if value is None:
            value = compute()
            self.store(key, {field: value})
            return value, False
        if self.audit_rate > 0 and self.rng.random() < self.audit_rate:
            self.audits += 1
            fresh = compute()
            if fresh != value:
                self.audit_mismatches += 1
                print(f"Cache audit mismatch for {field}: cached {value}, recomputed {fresh}; replacing the entry.")
                self.drop(key, persist=False)
                self.store(key, {field: fresh})
                return fresh, False
        return value, True

    def __len__(self):
        return len(self.entries)

    def __contains__(self, key):
        return _hex(key) in self.entries


def _hex(key):
    return key.hex() if isinstance(key, (bytes, bytearray)) else str(key)


def cache_lookup(cache, key, field):
    return cache.lookup(key, field)


def cache_store(cache, key, values, metadata=None):
    cache.store(key, values, metadata)
