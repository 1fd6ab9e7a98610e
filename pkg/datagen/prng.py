"""
SplitMix64 stream

Fixed, published 64-bit-state generator (Steele, Lea & Flood, 2014; the
seeder of the xoshiro family), so that generated fixtures reproduce in any
language:

    state_k = seed + k * 0x9E3779B97F4A7C15          (mod 2^64, k = 1, 2, ...)
    z = (state_k ^ (state_k >> 30)) * 0xBF58476D1CE4E5B9
    z = (z ^ (z >> 27)) * 0x94D049BB133111EB
    out_k = z ^ (z >> 31)

The k-th output depends only on (seed, k), which lets numpy produce whole
blocks at once with wrapping uint64 arithmetic.
"""
import numpy as np

GAMMA = np.uint64(0x9E3779B97F4A7C15)
MIX1 = np.uint64(0xBF58476D1CE4E5B9)
MIX2 = np.uint64(0x94D049BB133111EB)
_S30, _S27, _S31, _S11 = np.uint64(30), np.uint64(27), np.uint64(31), np.uint64(11)
_TWO_POW_M53 = 2.0 ** -53

MASK64 = (1 << 64) - 1


def _closed_open(top53: np.ndarray) -> np.ndarray:
    """[0, 1)"""
    return top53.astype(np.float64) * _TWO_POW_M53


def _open_closed(top53: np.ndarray) -> np.ndarray:
    """(0, 1]"""
    return (top53.astype(np.float64) + 1.0) * _TWO_POW_M53


class SplitMix64:
    """Sequential stream; every draw advances the position by the number of outputs used."""

    def __init__(self, seed: int):
        self.seed = int(seed) & MASK64
        self.position = 0  # outputs consumed so far

    def next_u64(self, count: int) -> np.ndarray:
        k = np.arange(self.position + 1, self.position + count + 1, dtype=np.uint64)
        self.position += count
        with np.errstate(over="ignore"):
            z = np.full(count, self.seed, dtype=np.uint64) + k * GAMMA
            z = (z ^ (z >> _S30)) * MIX1
            z = (z ^ (z >> _S27)) * MIX2
        return z ^ (z >> _S31)

    def uniform(self, count: int) -> np.ndarray:
        """Doubles in [0, 1) from the top 53 bits."""
        return _closed_open(self.next_u64(count) >> _S11)

    def uniform_open(self, count: int) -> np.ndarray:
        """Doubles in (0, 1]; safe to take the logarithm of."""
        return _open_closed(self.next_u64(count) >> _S11)

    def normal(self, count: int) -> np.ndarray:
        """
        Standard normal deviates by Box-Muller.

        Consumes outputs in (u1, u2) pairs, u1 from the open-left variant;
        each pair yields r*cos(2*pi*u2) then r*sin(2*pi*u2).
        """
        pairs = (count + 1) // 2
        raw = self.next_u64(2 * pairs) >> _S11
        u1 = _open_closed(raw[0::2])
        u2 = _closed_open(raw[1::2])
        r = np.sqrt(-2.0 * np.log(u1))
        theta = 2.0 * np.pi * u2
        out = np.empty(2 * pairs, dtype=np.float64)
        out[0::2] = r * np.cos(theta)
        out[1::2] = r * np.sin(theta)
        return out[:count]
