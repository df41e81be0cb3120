# Copyright (c) 2025, sghom developers.  All rights reserved.
#
# Use of this source code is governed by an MIT-style license that can be
# found in the LICENSE file at the root of this source tree.


class SignedGraphError(Exception):
    pass


class GraphStructureError(SignedGraphError, ValueError):
    pass


class InvalidWalkError(SignedGraphError, ValueError):
    pass


class UnderlyingGraphMismatch(SignedGraphError, ValueError):
    pass


class FieldOrderError(SignedGraphError, ValueError):
    pass


class UnknownNameError(SignedGraphError, KeyError):

    def __str__(self):
        # KeyError quotes its argument; keep the plain message.
        return str(self.args[0]) if self.args else ''


class CatalogCapError(SignedGraphError, ValueError):
    pass


class SizeCapError(SignedGraphError, ValueError):
    pass


class FormulaDomainError(SignedGraphError, ValueError):
    pass


class BudgetExceeded(SignedGraphError):
    '''
    Wall-clock budget ran out before the search finished. Never means "absent".
    '''
    pass


class CapExhausted(SignedGraphError):
    '''
    No target of order <= cap admits a homomorphism, so the value is > cap.
    '''

    def __init__(self, message, lower_bound):
        super().__init__(message)
        self.lower_bound = lower_bound


class GraphFileError(SignedGraphError, ValueError):

    def __init__(self, message, lineno=None):
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)
        self.lineno = lineno
