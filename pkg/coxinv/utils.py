# coxinv.utils
# Helper functions
#
# Created:  Sat Oct 17 09:41:02 2026 -0400
#
# Copyright (C) 2026 coxinv developers
# For license information, see LICENSE.txt
#
# ID: utils.py [] coxinv $

"""
Helper functions: file system paths, logging setup, the parallelism cap,
a deterministic parallel map and log-log slope fitting.
"""

##########################################################################
## Imports
##########################################################################

import os
import math
import logging
import numpy as np

from concurrent.futures import ThreadPoolExecutor
from coxinv.params import settings

##########################################################################
## Logging
##########################################################################

def configure_logging(level=None):
    """
    Configures the package logger from the settings. Log records go to
    stderr; standard output is reserved for JSON.
    """
    level  = level or settings.get('log_level', 'WARNING')
    logger = logging.getLogger('coxinv')
    if not logger.handlers:
        handler = logging.StreamHandler()
        handler.setFormatter(logging.Formatter(settings.get('log_format')))
        logger.addHandler(handler)
    logger.setLevel(getattr(logging, str(level).upper(), logging.WARNING))
    return logger

##########################################################################
## Parallelism helpers
##########################################################################

def thread_count():
    """
    Number of worker threads: COXINV_THREADS if set, else the configured
    number of threads. Never less than one.
    """
    value = os.environ.get('COXINV_THREADS', settings.get('threads', 1))
    try:
        return max(1, int(value))
    except (TypeError, ValueError):
        return 1

def pmap(func, items):
    """
    Maps func across items with at most thread_count() workers. Results
    are returned in input order, so any reduction over them is
    deterministic.
    """
    items = list(items)
    workers = min(thread_count(), len(items))
    if workers <= 1:
        return [func(item) for item in items]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(func, items))

##########################################################################
## Numeric helpers
##########################################################################

def fit_slope(xs, ys):
    """
    Least squares slope of log(ys) against log(xs). Pairs with a non
    positive coordinate are dropped; returns None with fewer than two
    usable pairs.
    """
    pairs = [(math.log(float(x)), math.log(float(y))) for x, y in zip(xs, ys) if x > 0 and y > 0]
    if len(pairs) < 2:
        return None
    lx, ly = zip(*pairs)
    slope, _ = np.polyfit(np.array(lx), np.array(ly), 1)
    return float(slope)

def decade(value):
    """
    The base ten decade a positive distance falls in.
    """
    return int(math.floor(math.log10(float(value))))
