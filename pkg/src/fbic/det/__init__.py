"""Linear deterministic K-user interference channel with rate-limited feedback."""

from .gf2 import channel_apply, shift_down
from .params import DetParams, DetRegime
from .rates import block_payload_bits, csym_infinite, csym_zero, scheme_rate, feedback_rate, theorem1_rate
from .schemes import DetBlockTrace, interference_sums, run_block, simulate

__all__ = [
    "DetBlockTrace",
    "DetParams",
    "DetRegime",
    "block_payload_bits",
    "channel_apply",
    "csym_infinite",
    "csym_zero",
    "interference_sums",
    "run_block",
    "scheme_rate",
    "shift_down",
    "simulate",
    "feedback_rate",
    "theorem1_rate",
]
