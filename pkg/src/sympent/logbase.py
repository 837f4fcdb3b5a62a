"""Logarithm-base selection, shared by the entropy engine and the Fock-space oracle.

This is intentionally the only code shared between the two entropy pipelines,
so that they stay independent checks of each other.
"""

import numpy as np

BITS = "bits"
NATS = "nats"
LOG_BASES = (BITS, NATS)

LN2 = float(np.log(2.0))


def log_fn(base: str):
    """Return the elementwise logarithm for ``base`` ("bits" -> log2, "nats" -> ln)."""
    if base == BITS:
        return np.log2
    if base == NATS:
        return np.log
    raise ValueError(f"unknown log base {base!r}, expected one of {LOG_BASES}")
