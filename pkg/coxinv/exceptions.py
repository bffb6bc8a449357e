# coxinv.exceptions
# Exception hierarchy for the invariant toolkit
#
# Created:  Sat Oct 17 09:12:40 2026 -0400
#
# Copyright (C) 2026 coxinv developers
# For license information, see LICENSE.txt
#
# ID: exceptions.py [] coxinv $

"""
Exception hierarchy for the invariant toolkit. Every error raised on
purpose by the package derives from CoxinvException so that the command
line can turn it into an exit code.
"""

##########################################################################
## Exceptions
##########################################################################

class CoxinvException(Exception):
    """
    Top-level toolkit exception
    """
    pass

## Configuration Exceptions

class ImproperlyConfigured(CoxinvException):
    """
    The parameters have a bad value or missing configuration
    """
    pass

class ConfigError(ImproperlyConfigured):
    """
    A run configuration (usually from the command line) is invalid
    """
    pass

class VerificationFailed(CoxinvException):
    """
    A bundled verification suite found a failing property; the suite
    report, if any, rides along as `result`.
    """

    def __init__(self, message, result=None):
        super(VerificationFailed, self).__init__(message)
        self.result = result

## Reflection group exceptions

class GroupError(CoxinvException):
    pass

class UnsupportedType(GroupError):
    """
    The factor label is not one of A, B, D or I2
    """
    pass

class RankOutOfRange(GroupError):
    """
    The rank (or dihedral order) is too small for the factor type
    """
    pass

class IndexOutOfRange(GroupError):
    """
    A word refers to a reflection that does not exist
    """
    pass

class OrbitCapExceeded(GroupError):
    """
    The group is too large to enumerate orbits under the configured cap
    """
    pass

## Polynomial exceptions

class PolynomialError(CoxinvException):
    pass

class DimensionMismatch(PolynomialError):
    """
    Number of variables or point dimension does not agree
    """
    pass

## Chevalley mapping exceptions

class ChevalleyError(CoxinvException):
    pass

class FactorizationFailed(ChevalleyError):
    """
    The Jacobian determinant is not a constant multiple of the product of
    the reflection forms
    """
    pass

class NotInvariant(ChevalleyError):
    """
    A polynomial is not fixed by the reflections of the group
    """
    pass

class SolveFailed(ChevalleyError):
    """
    Rewriting in the basic invariants did not reproduce the input
    """
    pass

## Jet exceptions

class JetError(CoxinvException):
    pass

class OrderExceeded(JetError):
    """
    A derivation or truncation asks for more than the jet order
    """
    pass

class PointNotInField(JetError):
    """
    The point is not a sample of the jet field
    """
    pass

class InvalidJetField(JetError):
    """
    Jets of mixed order, duplicated samples, or malformed input
    """
    pass

class InsufficientScales(JetError):
    """
    Sample pairs do not cover enough distance decades for a slope fit
    """
    pass

class MissingDerivative(JetError):
    """
    A derivative required at a chamber interior sample is not supplied
    """
    pass

## Transfer exceptions

class TransferError(CoxinvException):
    pass

class BasePointMismatch(TransferError):
    """
    The jet of F is not based at P(a)
    """
    pass

class SingularSystem(TransferError):
    """
    The triangular identification has a vanishing pivot
    """
    pass

class NotInImage(TransferError):
    """
    The jet is not the composition of a jet of F with P
    """
    pass

class SingularJacobian(TransferError):
    """
    The point lies on a reflecting hyperplane
    """
    pass

## Geometry exceptions

class GeometryError(CoxinvException):
    pass

class AmbiguousStratum(GeometryError):
    """
    The tolerance merges distinct strata; shrink it
    """
    pass

class DisconnectedGraph(GeometryError):
    """
    The neighbor graph of the sampled image is not connected
    """
    pass
