#!/usr/bin/env python

# coxinv
# Runs the coxinv command line tools
#
# Created:  Sun Oct 18 15:40:12 2026 -0400
#
# Copyright (C) 2026 coxinv developers
# For license information, see LICENSE.txt
#
# ID: runcoxinv.py [] coxinv $

"""
Run the coxinv command line tools, see `coxinv --help`.
"""

##########################################################################
## Imports
##########################################################################

import sys

from coxinv.cli import main

if __name__ == '__main__':
    sys.exit(main(*sys.argv[1:]))
