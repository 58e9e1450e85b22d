"""Two-slot feedback schemes for the deterministic interference channel.

Each scheme sends ``B`` fresh bits per user over two channel uses:

* slot 1 carries fresh bits; receivers pick out equations that mix their
  own bits with the aligned interference sum and feed them back;
* the transmitter strips its own bits from the feedback, leaving the sum
  of the other users' bits, and forwards that sum in slot 2 together with
  more fresh bits;
* each receiver peels the levels in a fixed order.

Index comments use 1-based, top-down levels (level 1 = most significant);
code slices are the 0-based equivalents. ``abar[j]`` is the XOR of all
other users' bit ``j``.

Slot-2 levels that carry the forwarded sums see, at receiver k,
``sum_{u != k} abar_u[j] = (K-1) a_k[j] + (K-2) abar_k[j]``. Coefficients
are reduced mod 2, so the decoder branches on the parity of K.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..errors import DimensionError, SchemeError
from .gf2 import channel_apply
from .params import DetParams, DetRegime
from .rates import block_payload_bits


@dataclass
class DetBlockTrace:
    """Everything that happened during one two-slot block."""

    params: DetParams
    regime: DetRegime
    seed: int | None
    payload: np.ndarray
    tx_round1: np.ndarray
    tx_round2: np.ndarray
    rx_round1: np.ndarray
    rx_round2: np.ndarray
    fb_bits: np.ndarray
    decoded: np.ndarray
    # False where the decoder's equation has a zero coefficient on the unknown
    resolved: np.ndarray
    interference_sums: np.ndarray

    @property
    def payload_bits(self) -> int:
        return self.payload.shape[1]

    @property
    def success(self) -> bool:
        return bool(self.resolved.all() and np.array_equal(self.decoded, self.payload))


def interference_sums(payload: np.ndarray) -> np.ndarray:
    """``abar[k, j]``: XOR over users u != k of ``payload[u, j]``."""
    total = np.bitwise_xor.reduce(payload, axis=0)
    return payload ^ total


def _peel_forwarded(y, a_known, abar_known, k_users):
    """Remove the known parts of ``x + (K-1) a + (K-2) abar`` over GF(2)."""
    if (k_users - 2) % 2:
        y = y ^ abar_known
    if (k_users - 1) % 2:
        y = y ^ a_known
    return y


def _very_weak(params, pay, zeros):
    # m <= n/2, q = n; l = (m - 2p)^+, f = m - l feedback bits
    n, m, K = params.n, params.m, params.k_users
    l = max(m - params.p2, 0)
    f = m - l
    B = 2 * n - m - l

    tx1 = zeros()
    tx1[:, : n - l] = pay[:, : n - l]  # a_1..a_{n-l} on levels 1..n-l
    rx1 = channel_apply(tx1, params)
    # levels n-m+1..n-l hold a_{n-m+j} + abar_j, j = 1..f
    fb = rx1[:, n - m : n - l].copy()
    abar_fwd = fb ^ pay[:, n - m : n - l]

    tx2 = zeros()
    tx2[:, :f] = abar_fwd  # levels 1..m-l
    tx2[:, m:n] = pay[:, n - l : B]  # levels m+1..n, fresh a_{n-l+1}..a_{2n-m-l}
    rx2 = channel_apply(tx2, params)

    dec = np.zeros_like(pay)
    res = np.ones(pay.shape, dtype=bool)
    dec[:, : n - m] = rx1[:, : n - m]
    abar_hat = rx2[:, :f]
    dec[:, n - m : n - l] = rx1[:, n - m : n - l] ^ abar_hat
    # levels m+1..n-m of slot 2 are interference free
    dec[:, n - l : 2 * n - 2 * m - l] = rx2[:, m : n - m]
    # levels n-m+1..n-l: fresh a + (K-1) a_j + (K-2) abar_j
    lo = 2 * n - 2 * m - l
    dec[:, lo : lo + f] = _peel_forwarded(rx2[:, n - m : n - l], dec[:, :f], abar_hat, K)
    # lowest l levels are clean again
    dec[:, lo + f : B] = rx2[:, n - l : n]
    return tx1, tx2, rx1, rx2, fb, dec, res


def _weak(params, pay, zeros):
    # n/2 < m <= 2n/3, q = n; l' = (2n - 3m - 2p)^+, f = 2n - 3m - l'
    n, m, K = params.n, params.m, params.k_users
    lp = max(2 * n - 3 * m - params.p2, 0)
    f = 2 * n - 3 * m - lp
    B = 2 * n - m - lp
    w = 2 * m - n  # width of the pure-interference band
    h = n - m - lp  # clean levels at the top of slot 1; note w + f == h

    tx1 = zeros()
    tx1[:, :h] = pay[:, :h]
    tx1[:, m:n] = pay[:, h : h + n - m]  # lowest n-m levels
    rx1 = channel_apply(tx1, params)
    # levels m+1..m+f hold a_{h+t} + abar_{w+t}
    fb = rx1[:, m : m + f].copy()
    abar_fwd = fb ^ pay[:, h : h + f]

    tx2 = zeros()
    tx2[:, :w] = pay[:, 2 * n - 2 * m - lp : n - lp]  # levels 1..2m-n
    tx2[:, w:h] = abar_fwd  # next 2n-3m-l' levels
    tx2[:, m:n] = pay[:, n - lp : B]  # lowest n-m levels
    rx2 = channel_apply(tx2, params)

    dec = np.zeros_like(pay)
    res = np.ones(pay.shape, dtype=bool)
    dec[:, :h] = rx1[:, :h]
    dec[:, h + f : 2 * n - 2 * m - lp] = rx1[:, m + f : n]
    dec[:, 2 * n - 2 * m - lp : n - lp] = rx2[:, :w]
    abar_hat = rx2[:, w:h]
    dec[:, n - lp + f : B] = rx2[:, m + f : n]
    dec[:, h : h + f] = rx1[:, m : m + f] ^ abar_hat
    # slot-2 levels m+1..m+f: fresh a_{n-l'+t} + (K-1) a_{w+t} + (K-2) abar_{w+t}
    dec[:, n - lp : n - lp + f] = _peel_forwarded(rx2[:, m : m + f], dec[:, w:h], abar_hat, K)
    return tx1, tx2, rx1, rx2, fb, dec, res


def _very_strong(params, pay, zeros):
    # m >= 2n, q = m; l'' = (m - 2n - 2p)^+, f = m - 2n - l''
    n, m, K = params.n, params.m, params.k_users
    lpp = max(m - 2 * n - params.p2, 0)
    B = m - lpp
    t = m - n - lpp  # fresh bits in slot 1; t = n + f

    tx1 = zeros()
    tx1[:, :t] = pay[:, :t]
    rx1 = channel_apply(tx1, params)
    # levels 1..t: abar_1..abar_t; lowest n levels: a_1..a_n
    fb = rx1[:, n:t].copy()  # abar_{n+1}..abar_t, pure interference

    tx2 = zeros()
    tx2[:, :n] = pay[:, t:B]
    tx2[:, n:t] = fb
    rx2 = channel_apply(tx2, params)

    dec = np.zeros_like(pay)
    res = np.ones(pay.shape, dtype=bool)
    dec[:, :n] = rx1[:, m - n : m]
    abar_hat = rx1[:, n:t]
    dec[:, t:B] = rx2[:, m - n : m]
    # slot-2 levels n+1..t carry only (K-1) a_j + (K-2) abar_j: no fresh bit
    y = rx2[:, n:t]
    if (K - 2) % 2:
        y = y ^ abar_hat
    if (K - 1) % 2:
        dec[:, n:t] = y
    else:
        # (K-1) a_j vanishes mod 2 for odd K: a_j is not on any level
        res[:, n:t] = False
    return tx1, tx2, rx1, rx2, fb, dec, res


_SCHEMES = {
    DetRegime.VERY_WEAK: _very_weak,
    DetRegime.WEAK: _weak,
    DetRegime.VERY_STRONG: _very_strong,
}


def random_payload(params: DetParams, rng: np.random.Generator) -> np.ndarray:
    B = block_payload_bits(params)
    return rng.integers(0, 2, size=(params.k_users, B), dtype=np.uint8)


def run_block(
    params: DetParams,
    payload: np.ndarray | None = None,
    rng_seed: int | None = None,
) -> DetBlockTrace:
    """Run one two-slot block of the scheme for ``params``'s regime.

    If ``payload`` is omitted it is drawn from ``rng_seed``. A payload of
    ``dtype=object`` holding int bitmasks is traced symbolically.

    Raises ``UnsupportedRegime`` for 2/3 < m/n < 2.
    """
    regime = params.scheme_regime()
    B = block_payload_bits(params)
    if payload is None:
        payload = random_payload(params, np.random.default_rng(rng_seed))
    payload = np.asarray(payload)
    if payload.shape != (params.k_users, B):
        raise DimensionError(
            f"payload must have shape {(params.k_users, B)}, got {payload.shape}"
        )

    def zeros():
        return np.zeros((params.k_users, params.q), dtype=payload.dtype)

    tx1, tx2, rx1, rx2, fb, dec, res = _SCHEMES[regime](params, payload, zeros)
    if fb.shape[1] > params.p2:
        raise SchemeError(f"{fb.shape[1]} feedback bits exceed the budget p2={params.p2}")
    return DetBlockTrace(
        params=params,
        regime=regime,
        seed=rng_seed,
        payload=payload,
        tx_round1=tx1,
        tx_round2=tx2,
        rx_round1=rx1,
        rx_round2=rx2,
        fb_bits=fb,
        decoded=dec,
        resolved=res,
        interference_sums=interference_sums(payload),
    )


def simulate(params: DetParams, blocks: int, seed: int = 0) -> tuple[int, int]:
    """Run ``blocks`` random blocks from one seeded stream.

    Returns ``(decoded_ok, blocks)``.
    """
    rng = np.random.default_rng(seed)
    ok = 0
    for _ in range(blocks):
        trace = run_block(params, random_payload(params, rng))
        ok += trace.success
    return ok, blocks
