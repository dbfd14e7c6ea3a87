"""Run-constrained block codes built from explicit codeword tables.

Three table codes live here.  The binary two-mode code alternates the
first bit against the previous block's last bit.  The state-independent
quaternary code gives every source index two codewords with different
first symbols and decodes from the received block alone.  The
state-dependent quaternary code keeps one table per encoder state (the
previous block's last symbol) holding only words that do not start with
that symbol; decoding needs the state as well.

Tables are truncated to power-of-two sizes; indices always follow
lexicographic codeword order.  n is capped because table sizes grow as
4**n.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from . import counting
from .words import Bits, Oligo, at_weight

__all__ = [
    "BlockCodebook",
    "CODEBOOK_MAX_N",
    "StateDependentCode",
    "StateIndependentCode",
    "TwoModeRllCode",
    "constrained_words",
    "rate_state_dependent",
    "rate_state_independent",
    "rate_two_mode",
    "state_dependent_table_capacity",
]

CODEBOOK_MAX_N = 14

# Encoder state at stream start: no previous symbol has been emitted.
STREAM_START = None


@lru_cache(maxsize=32)
def constrained_words(q: int, m: int, n: int) -> tuple[tuple[int, ...], ...]:
    """All q-ary length-n words with max run m, in lexicographic order."""
    if n > CODEBOOK_MAX_N:
        raise ValueError(f"codebooks are limited to n <= {CODEBOOK_MAX_N} (got {n})")
    if n < 1:
        raise ValueError("length must be at least 1")
    if m < 1:
        raise ValueError("maximum run must be at least 1")
    words: list[tuple[int, ...]] = []
    word: list[int] = []

    def extend(last: int, run: int) -> None:
        if len(word) == n:
            words.append(tuple(word))
            return
        for s in range(q):
            new_run = run + 1 if s == last else 1
            if new_run > m:
                continue
            word.append(s)
            extend(s, new_run)
            word.pop()

    extend(-1, 0)
    return tuple(words)


def _floor_log2(value: int) -> int:
    if value < 1:
        raise ValueError("value must be positive")
    return value.bit_length() - 1


@dataclass(frozen=True, eq=False)
class BlockCodebook:
    """Indexed codeword tables of one block code.

    modes[mode][index] is a codeword; every mode holds the same
    power-of-two number of words, one per source index.
    """

    n: int
    q: int
    source_bits: int
    modes: tuple[tuple[tuple[int, ...], ...], ...]
    constraint: str

    @property
    def mode_count(self) -> int:
        return len(self.modes)

    @property
    def size(self) -> int:
        return len(self.modes[0])

    def __post_init__(self):
        expected = 2**self.source_bits
        for mode in self.modes:
            if len(mode) != expected:
                raise ValueError("mode size must equal 2**source_bits")
            if len(set(mode)) != len(mode):
                raise ValueError("duplicate codeword within a mode")


def _bits_to_index(bits: Bits) -> int:
    value = 0
    for b in bits:
        if b not in (0, 1):
            raise ValueError("source bits must be 0 or 1")
        value = value << 1 | b
    return value


def _index_to_bits(value: int, width: int) -> Bits:
    return tuple(value >> (width - 1 - i) & 1 for i in range(width))


def rate_two_mode(m: int, n: int) -> float:
    """Composite code rate (n - 1 + floor(log2 N_2(m,n))) / n in bits per symbol.

    Counts both the run-constrained plane's table bits and the n - 1
    free payload bits the companion plane contributes per block.
    """
    return (n - 1 + _floor_log2(counting.rll_count(2, m, n))) / n


def rate_state_independent(m: int, n: int) -> float:
    """Code rate (floor(log2 N_4(m,n)) - 1) / n in bits per symbol."""
    return (_floor_log2(counting.rll_count(4, m, n)) - 1) / n


def state_dependent_table_capacity(m: int, n: int) -> int:
    """Largest per-state table size: three quarters of the constrained count."""
    total = counting.rll_count(4, m, n)
    assert total % 4 == 0, "constrained quaternary count must be a multiple of 4"
    return 3 * (total // 4)


def rate_state_dependent(m: int, n: int) -> float:
    """Code rate floor(log2(3/4 * N_4(m,n))) / n in bits per symbol."""
    return _floor_log2(state_dependent_table_capacity(m, n)) / n


class TwoModeRllCode:
    """Binary block code whose first bit always differs from the previous last bit.

    Mode 0 holds words starting with 0 and is used after a block ending
    in 1, and vice versa; concatenated blocks therefore never extend a
    run across a boundary.  Decoding reads the mode off the first bit.
    """

    def __init__(self, m: int, n: int):
        words = constrained_words(2, m, n)
        if len(words) < 4:
            raise ValueError(f"too few constrained words for a two-mode code (m={m}, n={n})")
        self.m = m
        self.n = n
        self.source_bits = _floor_log2(len(words)) - 1
        keep = 2**self.source_bits
        modes = tuple(
            tuple(w for w in words if w[0] == first)[:keep] for first in (0, 1)
        )
        self.codebook = BlockCodebook(
            n=n, q=2, source_bits=self.source_bits, modes=modes,
            constraint=f"binary, max run {m}",
        )
        self._reverse = {
            word: index for mode in modes for index, word in enumerate(mode)
        }

    def encode_block(self, bits: Bits, last_bit: int | None = STREAM_START) -> Bits:
        """Encode source_bits bits given the previous block's final bit."""
        if len(bits) != self.source_bits:
            raise ValueError(f"expected {self.source_bits} source bits, got {len(bits)}")
        first = 0 if last_bit in (STREAM_START, 1) else 1
        return self.codebook.modes[first][_bits_to_index(bits)]

    def decode_block(self, word: Bits, last_bit: int | None = STREAM_START) -> Bits:
        # last_bit is accepted for interface uniformity and ignored: the
        # mode is visible in the word's first bit.
        index = self._reverse.get(tuple(word))
        if index is None:
            raise ValueError("not a codeword of this two-mode code")
        return _index_to_bits(index, self.source_bits)


class StateIndependentCode:
    """Quaternary block code with two codewords per index, decoded without state.

    Words starting with G pair with words starting with A, C-words with
    T-words, so the two representations of an index always differ at the
    first symbol and one of them is safe to append to any previous block.
    """

    def __init__(self, m: int, n: int):
        words = constrained_words(4, m, n)
        if len(words) < 8:
            raise ValueError(f"too few constrained words (m={m}, n={n})")
        self.m = m
        self.n = n
        self.oligo_len = n
        self.source_bits = _floor_log2(len(words)) - 1
        keep = 2**self.source_bits
        by_first = [[w for w in words if w[0] == s] for s in range(4)]
        assert len({len(group) for group in by_first}) == 1, (
            "symbol relabeling must split the words evenly"
        )
        pairs = list(zip(by_first[0], by_first[2])) + list(zip(by_first[1], by_first[3]))
        pairs = pairs[:keep]
        modes = (
            tuple(p[0] for p in pairs),
            tuple(p[1] for p in pairs),
        )
        self.codebook = BlockCodebook(
            n=n, q=4, source_bits=self.source_bits, modes=modes,
            constraint=f"quaternary, max run {m}",
        )
        self._reverse: dict[Oligo, int] = {}
        for mode in modes:
            for index, word in enumerate(mode):
                assert word not in self._reverse, "representations must be distinct words"
                self._reverse[word] = index

    def encode_block(self, bits: Bits, last_symbol: int | None = STREAM_START) -> Oligo:
        """Encode source_bits bits; picks the representation safe after last_symbol."""
        if len(bits) != self.source_bits:
            raise ValueError(f"expected {self.source_bits} source bits, got {len(bits)}")
        index = _bits_to_index(bits)
        first_choice = self.codebook.modes[0][index]
        if last_symbol is STREAM_START or first_choice[0] != last_symbol:
            return first_choice
        return self.codebook.modes[1][index]

    def decode_block(self, word: Oligo, last_symbol: int | None = STREAM_START) -> Bits:
        # last_symbol is accepted for interface uniformity and ignored:
        # decoding is state-independent.
        index = self._reverse.get(tuple(word))
        if index is None:
            raise ValueError("not a codeword of this state-independent code")
        return _index_to_bits(index, self.source_bits)


class StateDependentCode:
    """Quaternary block code with one table per previous-last-symbol state.

    Table a holds only words that do not start with symbol a.  The table
    is pruned to a power of two by dropping the words of highest
    relative unbalance first (ties dropped in lexicographic order), per
    the freedom the construction leaves in discarding excess words.
    Decoding needs the received block and the previous block's last
    symbol; the stream starts in state G.
    """

    START_STATE = 0

    def __init__(self, m: int, n: int):
        words = constrained_words(4, m, n)
        capacity = state_dependent_table_capacity(m, n)
        self.m = m
        self.n = n
        self.oligo_len = n
        self.source_bits = _floor_log2(capacity)
        if self.source_bits < 1:
            raise ValueError(f"table too small for a useful code (m={m}, n={n})")
        keep = 2**self.source_bits
        modes = []
        for state in range(4):
            candidates = [w for w in words if w[0] != state]
            assert len(candidates) == capacity
            removal_order = sorted(candidates, key=lambda w: (-abs(2 * at_weight(w) - n), w))
            dropped = set(removal_order[: len(candidates) - keep])
            modes.append(tuple(w for w in candidates if w not in dropped))
        self.codebook = BlockCodebook(
            n=n, q=4, source_bits=self.source_bits, modes=tuple(modes),
            constraint=f"quaternary, max run {m}, state-dependent",
        )
        self._reverse = tuple(
            {word: index for index, word in enumerate(mode)} for mode in modes
        )

    def _state(self, last_symbol: int | None) -> int:
        return self.START_STATE if last_symbol is STREAM_START else last_symbol

    def encode_block(self, bits: Bits, last_symbol: int | None = STREAM_START) -> Oligo:
        if len(bits) != self.source_bits:
            raise ValueError(f"expected {self.source_bits} source bits, got {len(bits)}")
        return self.codebook.modes[self._state(last_symbol)][_bits_to_index(bits)]

    def decode_block(self, word: Oligo, last_symbol: int | None = STREAM_START) -> Bits:
        index = self._reverse[self._state(last_symbol)].get(tuple(word))
        if index is None:
            raise ValueError("not a codeword of this state-dependent code for this state")
        return _index_to_bits(index, self.source_bits)
