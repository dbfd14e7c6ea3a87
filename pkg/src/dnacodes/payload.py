"""Byte-payload framing for block codecs.

Bytes travel most-significant-bit first.  The bit stream is closed with
zero padding followed by a one-byte trailer holding the pad length, so
the total divides evenly into codec blocks and the decoder can strip
deterministically: data bits, then pad zeros, then the trailer byte.
The one-byte trailer caps the block size at 256 bits.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence

from .blockcodes import STREAM_START
from .words import Oligo

__all__ = ["bits_to_bytes", "bytes_to_bits", "decode_bytes", "encode_bytes"]

MAX_BLOCK_BITS = 256


def bytes_to_bits(data: bytes) -> list[int]:
    """Unpack bytes into bits, most significant bit of each byte first."""
    bits = []
    for byte in data:
        bits.extend(byte >> (7 - i) & 1 for i in range(8))
    return bits


def bits_to_bytes(bits: Sequence[int]) -> bytes:
    """Pack bits (MSB-first per byte) back into bytes."""
    if len(bits) % 8:
        raise ValueError("bit count must be a multiple of 8")
    out = bytearray()
    for i in range(0, len(bits), 8):
        byte = 0
        for b in bits[i : i + 8]:
            byte = byte << 1 | b
        out.append(byte)
    return bytes(out)


def _check_block_size(codec) -> int:
    k = codec.source_bits
    if not 1 <= k <= MAX_BLOCK_BITS:
        raise ValueError(
            f"block size {k} outside 1..{MAX_BLOCK_BITS} supported by the one-byte pad trailer"
        )
    return k


def encode_bytes(codec, data: bytes) -> list[Oligo]:
    """Encode a byte payload into a list of blocks, threading encoder state."""
    k = _check_block_size(codec)
    bits = bytes_to_bits(data)
    pad = (-(len(bits) + 8)) % k
    bits.extend([0] * pad)
    bits.extend(bytes_to_bits(bytes([pad])))
    assert len(bits) % k == 0
    blocks = []
    state = STREAM_START
    for i in range(0, len(bits), k):
        word = codec.encode_block(tuple(bits[i : i + k]), state)
        blocks.append(word)
        state = word[-1]
    return blocks


def decode_bytes(codec, blocks: Iterable[Oligo]) -> bytes:
    """Invert encode_bytes, validating the pad trailer."""
    k = _check_block_size(codec)
    bits: list[int] = []
    state = STREAM_START
    for word in blocks:
        bits.extend(codec.decode_block(tuple(word), state))
        state = word[-1]
    if len(bits) < 8 or len(bits) % k:
        raise ValueError("decoded stream is not a whole number of blocks")
    pad = 0
    for b in bits[-8:]:
        pad = pad << 1 | b
    data_len = len(bits) - 8 - pad
    if pad >= k or data_len < 0 or data_len % 8:
        raise ValueError(f"corrupt pad trailer (pad={pad}, stream={len(bits)} bits)")
    if any(bits[data_len : len(bits) - 8]):
        raise ValueError("nonzero padding bits")
    return bits_to_bytes(bits[:data_len])
