"""Strand constructions that merge binary planes into quaternary blocks.

The balance construction puts a balanced binary word on the high plane,
so the strand's AT-content equals the balanced word's bit weight, and
fills the low plane with raw payload.  The run-length construction puts
a run-constrained binary word on the low plane, which caps the strand's
homopolymer runs, and carries raw payload on the high plane.
"""

from __future__ import annotations

from fractions import Fraction

from .balancing import KnuthBalancer, WeakKnuthBalancer
from .blockcodes import STREAM_START, TwoModeRllCode
from .words import Bits, Oligo, merge_planes, split_planes

__all__ = ["Construction1Codec", "Construction2Codec", "make_codec"]


class Construction1Codec:
    """Balance construction: balancer output on the high plane, payload low.

    A block of data_bits + n source bits becomes one strand of n symbols
    whose AT-content deviation from n/2 is capped by the balancer's
    weight bound.  Blocks are independent; no state crosses boundaries.
    """

    def __init__(self, balancer: KnuthBalancer | WeakKnuthBalancer):
        self.balancer = balancer
        self.oligo_len = balancer.output_bits
        self.source_bits = balancer.data_bits + self.oligo_len
        self.weight_bound = balancer.weight_bound

    @property
    def rate(self) -> Fraction:
        """Source bits per emitted symbol, 1 + data_bits/n."""
        return Fraction(self.source_bits, self.oligo_len)

    def encode_block(self, bits: Bits, last_symbol: int | None = STREAM_START) -> Oligo:
        if len(bits) != self.source_bits:
            raise ValueError(f"expected {self.source_bits} source bits, got {len(bits)}")
        cut = self.balancer.data_bits
        high = self.balancer.encode_word(tuple(bits[:cut]))
        low = tuple(bits[cut:])
        return merge_planes(low, high)

    def decode_block(self, word: Oligo, last_symbol: int | None = STREAM_START) -> Bits:
        if len(word) != self.oligo_len:
            raise ValueError(f"expected {self.oligo_len} symbols, got {len(word)}")
        low, high = split_planes(word)
        return self.balancer.decode_word(high) + low


class Construction2Codec:
    """Run-length construction: two-mode RLL words on the low plane, payload high.

    Any run in the strand is also a run in its low plane, so the strand
    inherits the inner code's max-run guarantee, including across block
    boundaries (the inner mode choice keys off the previous low bit).
    """

    def __init__(self, m: int, n: int):
        self.inner = TwoModeRllCode(m, n)
        self.m = m
        self.oligo_len = n
        self.source_bits = self.inner.source_bits + n

    @property
    def rate(self) -> Fraction:
        """Source bits per emitted symbol, (n - 1 + floor(log2 N_2(m,n))) / n."""
        return Fraction(self.source_bits, self.oligo_len)

    def encode_block(self, bits: Bits, last_symbol: int | None = STREAM_START) -> Oligo:
        if len(bits) != self.source_bits:
            raise ValueError(f"expected {self.source_bits} source bits, got {len(bits)}")
        cut = self.inner.source_bits
        last_bit = STREAM_START if last_symbol is STREAM_START else last_symbol & 1
        low = self.inner.encode_block(tuple(bits[:cut]), last_bit)
        high = tuple(bits[cut:])
        return merge_planes(low, high)

    def decode_block(self, word: Oligo, last_symbol: int | None = STREAM_START) -> Bits:
        if len(word) != self.oligo_len:
            raise ValueError(f"expected {self.oligo_len} symbols, got {len(word)}")
        low, high = split_planes(word)
        return self.inner.decode_block(low) + high


def make_codec(construction: str, **params):
    """Build a codec by name: the shared entry point for the CLI and the oracle.

    construction1 takes ell (data bits) plus balancer="knuth" or
    balancer="weak-knuth" with p0; construction2, state-independent and
    state-dependent take m and n.
    """
    from .blockcodes import StateDependentCode, StateIndependentCode

    if construction == "construction1":
        ell = params.pop("ell")
        kind = params.pop("balancer", "knuth")
        if kind == "knuth":
            balancer = KnuthBalancer(ell)
        elif kind == "weak-knuth":
            balancer = WeakKnuthBalancer(ell, params.pop("p0"))
        else:
            raise ValueError(f"unknown balancer {kind!r}")
        codec = Construction1Codec(balancer)
    elif construction == "construction2":
        codec = Construction2Codec(params.pop("m"), params.pop("n"))
    elif construction == "state-independent":
        codec = StateIndependentCode(params.pop("m"), params.pop("n"))
    elif construction == "state-dependent":
        codec = StateDependentCode(params.pop("m"), params.pop("n"))
    else:
        raise ValueError(f"unknown construction {construction!r}")
    if params:
        raise ValueError(f"unused parameters: {sorted(params)}")
    return codec
