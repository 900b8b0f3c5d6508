"""Multisets, multiset partitions and the three-row gluings used by the product.

A multiset over ``[k] u [k̄]`` (or ``[k] u [k̄] u [k̄̄]``) is stored as an exponent
vector.  Position ``row * k + (v - 1)`` holds the multiplicity of value ``v`` in
``row`` (0 = unbarred, 1 = barred, 2 = double-barred), which also fixes the
alphabet order ``1 < ... < k < 1̄ < ... < k̄ < 1̄̄ < ...``.
"""

from __future__ import annotations

import itertools
import os
import re
from collections import Counter, defaultdict
from functools import cache
from math import factorial, prod
from typing import Iterable, Iterator, Sequence

from .errors import PartitionSyntaxError, ResourceLimitError
from .polynomial import PolyX

DEFAULT_MAX_PARTITIONS = 10**7


def max_partitions() -> int:
    return int(os.environ.get("MPALG_MAX_PARTITIONS", DEFAULT_MAX_PARTITIONS))


@cache
def _ll_key(exponents: tuple[int, ...]) -> tuple[int, ...]:
    # Descending letter sequence; tuple order then is exactly last-letter order
    # (a proper prefix, including the empty sequence, sorts first).
    out: list[int] = []
    for idx in range(len(exponents) - 1, -1, -1):
        out.extend([idx] * exponents[idx])
    return tuple(out)


class Multiset:
    """A finite multiset over ``rows`` copies of ``[k]``, as an exponent vector."""

    __slots__ = ("exponents", "k", "_key", "_hash")

    def __init__(self, exponents: Sequence[int], k: int):
        exponents = tuple(int(e) for e in exponents)
        if k < 1 or len(exponents) % k or not exponents:
            raise ValueError(f"exponent vector of length {len(exponents)} does not fit k={k}")
        if any(e < 0 for e in exponents):
            raise ValueError("negative exponent")
        self.exponents = exponents
        self.k = k
        self._key = _ll_key(exponents)
        self._hash = hash(exponents)

    @classmethod
    def from_elements(cls, elements: Iterable[tuple[int, int]], k: int, rows: int = 2) -> Multiset:
        """Build from ``(value, row)`` pairs, values in ``1..k``."""
        exps = [0] * (rows * k)
        for value, row in elements:
            if not 1 <= value <= k or not 0 <= row < rows:
                raise ValueError(f"element {(value, row)} outside alphabet")
            exps[row * k + value - 1] += 1
        return cls(exps, k)

    @property
    def rows(self) -> int:
        return len(self.exponents) // self.k

    @property
    def size(self) -> int:
        return sum(self.exponents)

    def row(self, i: int) -> tuple[int, ...]:
        return self.exponents[i * self.k:(i + 1) * self.k]

    def elements(self) -> list[tuple[int, int]]:
        """``(value, row)`` pairs in alphabet order, with repetition."""
        return [(idx % self.k + 1, idx // self.k)
                for idx, e in enumerate(self.exponents) for _ in range(e)]

    def bar_swap(self) -> Multiset:
        if self.rows != 2:
            raise ValueError("bar swap is defined on two-row multisets")
        return Multiset(self.row(1) + self.row(0), self.k)

    def is_self_symmetric(self) -> bool:
        return self.rows == 2 and self.row(0) == self.row(1)

    def ll_key(self) -> tuple[int, ...]:
        return self._key

    def _check(self, other: Multiset) -> None:
        if not isinstance(other, Multiset):
            raise TypeError(f"cannot compare Multiset with {type(other).__name__}")
        if other.k != self.k or len(other.exponents) != len(self.exponents):
            raise ValueError("multisets over different alphabets")

    def __lt__(self, other: Multiset) -> bool:
        self._check(other)
        return self._key < other._key

    def __le__(self, other: Multiset) -> bool:
        self._check(other)
        return self._key <= other._key

    def __gt__(self, other: Multiset) -> bool:
        self._check(other)
        return self._key > other._key

    def __ge__(self, other: Multiset) -> bool:
        self._check(other)
        return self._key >= other._key

    def __eq__(self, other) -> bool:
        return (isinstance(other, Multiset) and self.k == other.k
                and self.exponents == other.exponents)

    def __hash__(self) -> int:
        return self._hash

    def __str__(self) -> str:
        return "[" + ",".join(f"{v}{_MARKS[row]}" for v, row in self.elements()) + "]"

    def __repr__(self) -> str:
        return f"Multiset({str(self)}, k={self.k})"


_MARKS = ("", "'", "''")


def last_letter_cmp(s: Multiset, t: Multiset) -> int:
    """-1, 0 or 1 as ``s`` is below, equal to or above ``t`` in last-letter order."""
    s._check(t)
    return (s._key > t._key) - (s._key < t._key)


class MultisetPartition:
    """A multiset of non-empty multisets, stored sorted in last-letter order.

    ``rows`` is 2 for elements of ``Π_{r,k}`` and 3 for the gluings in ``Γ_{r,k}``;
    one-row partitions arise as restrictions.
    """

    __slots__ = ("blocks", "k", "rows", "_hash")

    def __init__(self, blocks: Iterable[Multiset | Sequence[int]], k: int, rows: int = 2):
        width = rows * k
        bl = []
        for b in blocks:
            if not isinstance(b, Multiset):
                b = Multiset(b, k)
            if b.k != k or len(b.exponents) != width:
                raise ValueError(f"block {b!r} does not lie in the {rows}-row alphabet with k={k}")
            if b.size == 0:
                raise ValueError("empty block")
            bl.append(b)
        bl.sort(key=Multiset.ll_key)
        self.blocks = tuple(bl)
        self.k = k
        self.rows = rows
        self._hash = hash((k, rows, tuple(b.exponents for b in self.blocks)))

    @classmethod
    def _raw(cls, blocks: Iterable[tuple[int, ...]], k: int, rows: int = 2) -> MultisetPartition:
        return cls([Multiset(b, k) for b in blocks], k, rows)

    def row_sizes(self) -> tuple[int, ...]:
        return tuple(sum(sum(b.row(i)) for b in self.blocks) for i in range(self.rows))

    @property
    def r(self) -> int:
        """Number of entries in the top row (equal in every row for Π and Γ)."""
        return self.row_sizes()[0] if self.rows else 0

    def is_balanced(self) -> bool:
        return len(set(self.row_sizes())) <= 1

    def in_pi(self, r: int, k: int) -> bool:
        return self.rows == 2 and self.k == k and self.row_sizes() == (r, r)

    def __len__(self) -> int:
        return len(self.blocks)

    @property
    def length(self) -> int:
        return len(self.blocks)

    def multiplicities(self) -> Counter:
        return Counter(self.blocks)

    def m_factorial(self) -> int:
        """``m(π)!``: product of factorials of block multiplicities."""
        return prod(factorial(m) for m in self.multiplicities().values())

    def content(self) -> tuple[int, ...]:
        width = self.rows * self.k
        return tuple(sum(b.exponents[i] for b in self.blocks) for i in range(width))

    def bar_swap(self) -> MultisetPartition:
        return MultisetPartition([b.bar_swap() for b in self.blocks], self.k)

    def is_self_symmetric(self) -> bool:
        return all(b.is_self_symmetric() for b in self.blocks)

    def canonical(self) -> MultisetPartition:
        return MultisetPartition(self.blocks, self.k, self.rows)

    def __eq__(self, other) -> bool:
        return (isinstance(other, MultisetPartition) and self.k == other.k
                and self.rows == other.rows and self.blocks == other.blocks)

    def __hash__(self) -> int:
        return self._hash

    def sort_key(self):
        return (len(self.blocks), tuple(b.ll_key() for b in self.blocks))

    def __str__(self) -> str:
        return format_partition(self)

    def __repr__(self) -> str:
        return f"MultisetPartition({format_partition(self)!r}, k={self.k})"

    def to_json(self) -> dict:
        """Blocks as signed integers (negative = barred) plus ``r`` and ``k``."""
        if self.rows != 2:
            raise ValueError("signed-integer export is defined for two-row partitions")
        return {"r": self.r, "k": self.k,
                "blocks": [[v if row == 0 else -v for v, row in b.elements()] for b in self.blocks]}

    @classmethod
    def from_json(cls, data: dict) -> MultisetPartition:
        k = int(data["k"])
        pi = cls([Multiset.from_elements(((abs(v), int(v < 0)) for v in blk), k)
                  for blk in data["blocks"]], k)
        if "r" in data and pi.r != int(data["r"]):
            raise ValueError(f"declared r={data['r']} but content has r={pi.r}")
        return pi


class ThreeRowPartition(MultisetPartition):
    """Multiset partition over ``[k] u [k̄] u [k̄̄]`` (an element of ``Γ_{r,k}``)."""

    __slots__ = ()

    def __init__(self, blocks: Iterable[Multiset | Sequence[int]], k: int, rows: int = 3):
        if rows != 3:
            raise ValueError("ThreeRowPartition always has three rows")
        super().__init__(blocks, k, 3)

    @classmethod
    def _raw(cls, blocks: Iterable[tuple[int, ...]], k: int, rows: int = 3) -> ThreeRowPartition:
        return cls([Multiset(b, k) for b in blocks], k)


# ---------------------------------------------------------------------------
# text format

def format_partition(pi: MultisetPartition) -> str:
    return "[" + ",".join(str(b) for b in pi.blocks) + "]"


_TOKEN = re.compile(r"\s*(?:(\[)|(\])|(,)|(\d+)('{0,2}))")


def parse_partition(text: str, k: int | None = None, rows: int | None = None) -> MultisetPartition:
    """Parse ``[[1],[1,1'],[1']]``; apostrophes mark bars, blocks may be unsorted.

    ``k`` defaults to the largest value present and ``rows`` to 2 (3 when a
    double bar occurs).  Raises :class:`PartitionSyntaxError` with the offending
    character position.
    """
    pos = 0
    tokens: list[tuple[str, object, int]] = []
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            start = len(text) - len(text[pos:].lstrip())
            raise PartitionSyntaxError(f"unexpected character {text[start]!r}", start)
        start = m.start() + len(m.group(0)) - len(m.group(0).lstrip())
        if m.group(1):
            tokens.append(("[", None, start))
        elif m.group(2):
            tokens.append(("]", None, start))
        elif m.group(3):
            tokens.append((",", None, start))
        else:
            tokens.append(("num", (int(m.group(4)), len(m.group(5))), start))
        pos = m.end()

    blocks: list[list[tuple[int, int]]] = []
    i = 0

    def expect(kind: str) -> int:
        nonlocal i
        if i >= len(tokens):
            raise PartitionSyntaxError(f"expected {kind!r} but input ended", len(text))
        if tokens[i][0] != kind:
            raise PartitionSyntaxError(f"expected {kind!r}", tokens[i][2])
        i += 1
        return tokens[i - 1][2]

    expect("[")
    if i < len(tokens) and tokens[i][0] == "]":
        i += 1
    else:
        while True:
            expect("[")
            block: list[tuple[int, int]] = []
            while True:
                if i >= len(tokens):
                    raise PartitionSyntaxError("unterminated block", len(text))
                kind, val, at = tokens[i]
                if kind != "num":
                    raise PartitionSyntaxError("expected a value", at)
                value, bars = val
                if value < 1:
                    raise PartitionSyntaxError("values start at 1", at)
                block.append((value, bars))
                i += 1
                if i < len(tokens) and tokens[i][0] == ",":
                    i += 1
                    continue
                expect("]")
                break
            blocks.append(block)
            if i < len(tokens) and tokens[i][0] == ",":
                i += 1
                continue
            expect("]")
            break
    if i != len(tokens):
        raise PartitionSyntaxError("trailing input", tokens[i][2])

    max_bars = max((bars for blk in blocks for _, bars in blk), default=0)
    if rows is None:
        rows = 3 if max_bars == 2 else 2
    if max_bars >= rows:
        raise PartitionSyntaxError(f"{max_bars} bars do not fit a {rows}-row alphabet", 0)
    top = max((v for blk in blocks for v, _ in blk), default=1)
    if k is None:
        k = top
    elif top > k:
        raise PartitionSyntaxError(f"value {top} exceeds k={k}", 0)
    ms = [Multiset.from_elements(blk, k, rows) for blk in blocks]
    cls = ThreeRowPartition if rows == 3 else MultisetPartition
    return cls(ms, k) if rows == 3 else cls(ms, k, rows)


# ---------------------------------------------------------------------------
# restriction

def restrict(pi: MultisetPartition, rows: Iterable[str | int]) -> MultisetPartition:
    """Restrict every block to the chosen rows, dropping blocks that become empty.

    Rows are named ``top``/``bot`` (and ``mid`` for three-row partitions) or given
    as indices.  The kept rows are relabelled in order: the first becomes unbarred, the
    second barred.  Hence ``ν|_{top,bot}`` has its double bars reduced to single
    bars and a single kept row is returned unbarred.
    """
    names = {"top": 0, "bot": pi.rows - 1}
    if pi.rows == 3:
        names["mid"] = 1
    try:
        idx = sorted({names[r] if isinstance(r, str) else int(r) for r in rows})
    except KeyError as exc:
        raise ValueError(f"row {exc.args[0]!r} not present in a {pi.rows}-row partition") from None
    if not idx:
        raise ValueError("restriction needs at least one row")
    if idx[-1] >= pi.rows:
        raise ValueError(f"row {idx[-1]} not present in a {pi.rows}-row partition")
    k = pi.k
    out = []
    for b in pi.blocks:
        e = tuple(itertools.chain.from_iterable(b.row(i) for i in idx))
        if any(e):
            out.append(Multiset(e, k))
    return MultisetPartition(out, k, len(idx))


# ---------------------------------------------------------------------------
# enumeration of Π_{r,k}

def _vectors(total: int, length: int) -> list[tuple[int, ...]]:
    """Exponent vectors of the given length summing to ``total``."""
    out = []
    for combo in itertools.combinations_with_replacement(range(length), total):
        v = [0] * length
        for c in combo:
            v[c] += 1
        out.append(tuple(v))
    return out


@cache
def _submultisets_with_max(content: tuple[int, ...]) -> tuple[tuple[int, ...], ...]:
    top = max(i for i, e in enumerate(content) if e)
    ranges = [range(e + 1) for e in content[:top]] + [range(1, content[top] + 1)]
    subs = [s + (0,) * (len(content) - top - 1) for s in itertools.product(*ranges)]
    return tuple(sorted(subs, key=_ll_key, reverse=True))


@cache
def _partitions_bounded(content: tuple[int, ...], bound: tuple[int, ...] | None,
                        max_len: int) -> tuple[tuple[tuple[int, ...], ...], ...]:
    """Partitions of ``content`` with blocks in descending last-letter order, each
    block <= ``bound``.  The largest block must hold the largest letter."""
    if not any(content):
        return ((),)
    if max_len == 0:
        return ()
    out = []
    for block in _submultisets_with_max(content):
        key = _ll_key(block)
        if bound is not None and key > bound:
            continue
        rest = tuple(c - b for c, b in zip(content, block))
        for tail in _partitions_bounded(rest, key, max_len - 1):
            out.append((block,) + tail)
    return tuple(out)


def multiset_partitions(content: Sequence[int], max_len: int | None = None) -> list[tuple[tuple[int, ...], ...]]:
    """All partitions of the multiset with exponent vector ``content``, blocks ascending."""
    content = tuple(content)
    bound = sum(content) if max_len is None else max_len
    return [tuple(reversed(p)) for p in _partitions_bounded(content, None, bound)]


def enumerate_msp(r: int, k: int, max_len: int | None = None,
                  limit: int | None = None) -> list[MultisetPartition]:
    """All of ``Π_{r,k}`` (or ``Π_{r,k,n}`` with ``n = max_len``), deterministic order."""
    if r < 0 or k < 1:
        raise ValueError(f"need r >= 0 and k >= 1, got r={r}, k={k}")
    limit = max_partitions() if limit is None else limit
    out: list[MultisetPartition] = []
    for top in _vectors(r, k):
        for bot in _vectors(r, k):
            for p in multiset_partitions(top + bot, max_len):
                out.append(MultisetPartition._raw(p, k))
                if len(out) > limit:
                    raise ResourceLimitError(f"more than {limit} multiset partitions in Π_{{{r},{k}}}")
    return out


def count_msp(r: int, k: int, max_len: int | None = None) -> int:
    """``|Π_{r,k,n}|`` without building partition objects."""
    return sum(len(_partitions_bounded(top + bot, None, 2 * r if max_len is None else max_len))
               for top in _vectors(r, k) for bot in _vectors(r, k))


def is_self_symmetric(pi: MultisetPartition) -> bool:
    return pi.is_self_symmetric()


def self_symmetric_msp(r: int, k: int) -> list[MultisetPartition]:
    """Self-symmetric elements of ``Π_{r,k}``: partitions of a multiset of [k] with
    each block doubled into its barred copy."""
    out = []
    for top in _vectors(r, k):
        for p in multiset_partitions(top):
            out.append(MultisetPartition._raw((b + b for b in p), k))
    return out


# ---------------------------------------------------------------------------
# colorings

class ColoredMultisetPartition:
    """A multiset partition with distinct colors from ``[n]`` on its blocks."""

    __slots__ = ("base", "colors")

    def __init__(self, base: MultisetPartition, colors: Sequence[int]):
        colors = tuple(colors)
        if len(colors) != len(base.blocks):
            raise ValueError("one color per block required")
        if len(set(colors)) != len(colors):
            raise ValueError("colors must be distinct")
        for i in range(len(colors) - 1):
            if base.blocks[i] == base.blocks[i + 1] and colors[i] > colors[i + 1]:
                raise ValueError("colors must increase along runs of equal blocks")
        self.base = base
        self.colors = colors

    def colored_blocks(self) -> frozenset[tuple[Multiset, int]]:
        return frozenset(zip(self.base.blocks, self.colors))

    def __eq__(self, other) -> bool:
        return isinstance(other, ColoredMultisetPartition) and self.colored_blocks() == other.colored_blocks()

    def __hash__(self) -> int:
        return hash(self.colored_blocks())

    def __repr__(self) -> str:
        return f"ColoredMultisetPartition({self.base}, colors={self.colors})"


def colorings(pi: MultisetPartition, n: int) -> Iterator[tuple[int, ...]]:
    """Canonical colorings of ``pi`` by ``[n]``: distinct colors, increasing on runs
    of equal blocks.  There are ``(n)_ℓ / m(π)!`` of them."""
    blocks = pi.blocks
    for colors in itertools.permutations(range(1, n + 1), len(blocks)):
        if all(colors[i] < colors[i + 1] for i in range(len(blocks) - 1) if blocks[i] == blocks[i + 1]):
            yield colors


# ---------------------------------------------------------------------------
# gluings and structure constants

def _distinct_perms(items: Sequence) -> set[tuple]:
    return set(itertools.permutations(items))


def _partial_matchings(tops: list, bots: list) -> Iterator[list[tuple]]:
    """All ways to pair some ``tops`` with distinct ``bots``; unmatched items stay
    alone as ``(t, None)`` / ``(None, b)``."""
    if not tops:
        yield [(None, b) for b in bots]
        return
    first, rest = tops[0], tops[1:]
    for tail in _partial_matchings(rest, bots):
        yield [(first, None)] + tail
    seen = set()
    for j, b in enumerate(bots):
        if b in seen:
            continue
        seen.add(b)
        for tail in _partial_matchings(rest, bots[:j] + bots[j + 1:]):
            yield [(first, b)] + tail


def enumerate_gluings(pi: MultisetPartition, gamma: MultisetPartition) -> list[ThreeRowPartition]:
    """Distinct ``ν ∈ Γ_{r,k}`` with ``ν|_{top,mid} = π`` and ``ν|_{mid,bot} = γ``.

    Blocks of ``π`` with barred entries are glued bijectively to blocks of ``γ``
    whose unbarred part matches; blocks of ``π`` without barred entries may merge
    with blocks of ``γ`` without unbarred entries.  The result is empty exactly
    when ``π_bot != γ_top``.
    """
    if pi.k != gamma.k or pi.rows != 2 or gamma.rows != 2:
        raise ValueError("gluing needs two-row partitions with the same k")
    k = pi.k
    zero = (0,) * k
    by_mid_pi: dict[tuple, list] = defaultdict(list)
    by_mid_gamma: dict[tuple, list] = defaultdict(list)
    top_only: list[tuple] = []
    bot_only: list[tuple] = []
    for b in pi.blocks:
        t, m = b.row(0), b.row(1)
        if any(m):
            by_mid_pi[m].append(t)
        else:
            top_only.append(t)
    for b in gamma.blocks:
        m, bt = b.row(0), b.row(1)
        if any(m):
            by_mid_gamma[m].append(bt)
        else:
            bot_only.append(bt)
    if set(by_mid_pi) != set(by_mid_gamma) or any(
            len(by_mid_pi[m]) != len(by_mid_gamma[m]) for m in by_mid_pi):
        return []

    per_mid = []
    for m in sorted(by_mid_pi, key=_ll_key):
        tops = by_mid_pi[m]
        options = set()
        for perm in _distinct_perms(by_mid_gamma[m]):
            options.add(tuple(sorted(t + m + b for t, b in zip(tops, perm))))
        per_mid.append(sorted(options))

    loose = set()
    for matching in _partial_matchings(top_only, bot_only):
        loose.add(tuple(sorted((t or zero) + zero + (b or zero) for t, b in matching)))

    found = set()
    for glued in itertools.product(*per_mid):
        for extra in loose:
            found.add(tuple(sorted(itertools.chain(extra, *glued), key=_ll_key)))
    result = [ThreeRowPartition._raw(blocks, k) for blocks in found]
    result.sort(key=MultisetPartition.sort_key)
    return result


def _top_bot(block: Multiset) -> tuple[int, ...]:
    return block.row(0) + block.row(2)


def coeff_a(nu: ThreeRowPartition) -> int:
    """``a_ν = prod_S ℓ(ν_S)! / m(ν_S)!`` over distinct top-and-bottom restrictions S."""
    groups: dict[tuple, Counter] = defaultdict(Counter)
    for b in nu.blocks:
        s = _top_bot(b)
        if any(s):
            groups[s][b] += 1
    a = 1
    for counter in groups.values():
        a *= factorial(sum(counter.values())) // prod(factorial(m) for m in counter.values())
    return a


def coeff_b(nu: ThreeRowPartition) -> PolyX:
    """``b_ν(x) = (x - ℓ(ν|_{top,bot}))_{ℓ(β)} / m(β)!`` with β the middle-only blocks."""
    beta = Counter()
    glued = 0
    for b in nu.blocks:
        if any(_top_bot(b)):
            glued += 1
        else:
            beta[b] += 1
    return PolyX.falling_factorial(glued, sum(beta.values())) / prod(factorial(m) for m in beta.values())


def gluing_target(nu: ThreeRowPartition) -> MultisetPartition:
    """``ν|_{top,bot}`` read as an element of ``Π_{r,k}``."""
    return restrict(nu, ("top", "bot"))
