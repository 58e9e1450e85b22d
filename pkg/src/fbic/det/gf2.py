"""Bit-level signals of the linear deterministic model.

A signal is a length-q array over GF(2) with index 0 holding the most
significant level (level 1 in the usual top-down numbering). The K users'
signals for one channel use are stacked into a ``(K, q)`` array.

Functions here only use ``^`` and slicing, so they also work on
``dtype=object`` arrays whose entries are Python ints used as bitmasks
(handy for symbolic tracing of which payload bits end up on which level).
"""

from __future__ import annotations

import numpy as np

from ..errors import DimensionError
from .params import DetParams


def shift_down(vec: np.ndarray, s: int) -> np.ndarray:
    """Apply D^s: level i moves to level i + s, overflow is dropped."""
    vec = np.asarray(vec)
    out = np.zeros_like(vec)
    q = vec.shape[-1]
    if s < q:
        out[..., s:] = vec[..., : q - s]
    return out


def channel_apply(tx: np.ndarray, params: DetParams) -> np.ndarray:
    """Outputs of all K receivers for one channel use.

    Receiver k sees ``D^(q-n) tx[k] + sum_{j != k} D^(q-m) tx[j]`` mod 2.
    """
    tx = np.asarray(tx)
    shape = (params.k_users, params.q)
    if tx.shape != shape:
        raise DimensionError(f"expected transmit array of shape {shape}, got {tx.shape}")
    q = params.q
    direct = shift_down(tx, q - params.n)
    cross = shift_down(tx, q - params.m)
    # sum over j != k is the total minus own term; over GF(2) that is XOR
    total = np.bitwise_xor.reduce(cross, axis=0)
    return direct ^ (total ^ cross)
