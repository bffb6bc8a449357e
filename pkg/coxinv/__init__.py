# coxinv
# Chevalley mappings and jet transfer for finite reflection groups
#
# Created:  Sat Oct 17 09:02:41 2026 -0400
#
# Copyright (C) 2026 coxinv developers
# For license information, see LICENSE.txt
#
# ID: __init__.py [] coxinv $

"""
Chevalley mappings and jet transfer for finite reflection groups.

Builds reflection groups of types A, B, D and I2 (and their products),
their basic invariants P = (p_1, ..., p_n), and moves jets between
invariant functions f and functions F of the invariants with f = F o P.
"""

##########################################################################
## Imports
##########################################################################

from coxinv.exceptions import *
from coxinv.groups import GroupSpec, GroupData, build_group, group_order, orbit, apply_element
from coxinv.polynomials import Poly, MultiIndex
from coxinv.chevalley import ChevalleyMap, basic_invariants, eval_P, jacobian
from coxinv.chevalley import verify_jacobian_factorization, rewrite_invariant_polynomial
from coxinv.jets import Jet, JetField, whitney_remainder, seminorms, r_regularity_probe
from coxinv.transfer import compose_jet, recover_jet, epsilon_beta, cramer_first_derivatives
from coxinv.transfer import continuity_ledger, weighted_seminorm
from coxinv.geometry import StratumInfo, stratify, fundamental_domain_rep, regularity_probe

##########################################################################
## Package Version
##########################################################################

__version__ = "1.0"
