"""Cellular automata as rule tables ``(S, mu)``.

A :class:`RuleTable` is at once the global map ``T`` on configurations and
its local function ``f_T(x) = T(x)(1)``.  Patterns on the memory set
``S = (s_0, ..., s_{m-1})`` are encoded as ``sum_i p(s_i) * k**i``, so
coordinate ``s_0`` is least significant.

:func:`star` composes local functions symbolically; :func:`compose_global`
builds the same composite by running the two global maps on realising
configurations and is kept as an independent check of :func:`star`.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .config import Alphabet, Configuration, FiniteSupport, FullTable, Periodic
from .errors import CapExceededError, InvalidElementError, UnsupportedError
from .group import Element, FiniteSubset, GroupContext, group_to_json, parse_group

DEFAULT_TABLE_CAP = 2**20


@dataclass(frozen=True)
class RuleTable:
    ctx: GroupContext
    alphabet: Alphabet
    memory: FiniteSubset
    table: tuple

    def __post_init__(self):
        memory = tuple(self.memory)
        if self.ctx.subset(memory) != memory:
            raise ValueError("memory set must be canonically ordered without duplicates")
        object.__setattr__(self, "memory", memory)
        table = tuple(int(v) for v in self.table)
        k = self.alphabet.size
        if len(table) != k ** len(memory):
            raise ValueError(f"table has {len(table)} entries, expected {k}**{len(memory)}")
        if any(not 0 <= v < k for v in table):
            raise ValueError(f"table entries must lie in 0..{k - 1}")
        object.__setattr__(self, "table", table)

    @property
    def k(self) -> int:
        return self.alphabet.size

    @cached_property
    def array(self) -> np.ndarray:
        return np.asarray(self.table, dtype=np.int64)

    @cached_property
    def _weights(self) -> tuple:
        return tuple(self.k**i for i in range(len(self.memory)))

    def radius(self) -> int:
        return max((self.ctx.length(s) for s in self.memory), default=0)

    def _check(self, x: Configuration):
        if x.ctx != self.ctx:
            raise InvalidElementError(
                f"configuration over {x.ctx.describe()} used with a rule over {self.ctx.describe()}"
            )
        if max(x.symbols()) >= self.k:
            raise InvalidElementError(f"configuration uses symbols outside alphabet of size {self.k}")

    def mu(self, values) -> int:
        """The local defining function applied to values listed in memory order."""
        return self.table[sum(v * w for v, w in zip(values, self._weights))]

    def local_eval(self, x: Configuration) -> int:
        """``f_T(x) = mu(x|_S)``."""
        self._check(x)
        return self.mu([x.at(s) for s in self.memory])

    def apply_at(self, x: Configuration, g: Element) -> int:
        """``T(x)(g) = mu(s -> x(g s))``, without building ``g^-1 . x``."""
        self._check(x)
        op = self.ctx.op
        return self.mu([x.at(op(g, s)) for s in self.memory])

    def apply(self, x: Configuration) -> Configuration:
        """The global map ``T``; the result has the same presentation as ``x``."""
        self._check(x)
        op = self.ctx.op
        at = x.at
        cell = lambda g: self.mu([at(op(g, s)) for s in self.memory])  # noqa: E731
        if isinstance(x, FullTable):
            return FullTable(self.ctx, tuple(cell(g) for g in range(self.ctx.order)))
        if isinstance(x, Periodic):
            return Periodic(self.ctx, x.period, tuple(cell(g) for g in x.domain()))
        if isinstance(x, FiniteSupport):
            background = self.mu([x.background] * len(self.memory))
            inverses = [self.ctx.inv(s) for s in self.memory]
            candidates = {op(t, si) for t in x.support_set for si in inverses}
            return FiniteSupport(self.ctx, background, {g: cell(g) for g in candidates})
        raise UnsupportedError(f"cannot apply a rule to {type(x).__name__}")

    __call__ = apply


def _check_compatible(t1: RuleTable, t2: RuleTable):
    if t1.ctx != t2.ctx:
        raise InvalidElementError("rules live on different groups")
    if t1.alphabet.size != t2.alphabet.size:
        raise InvalidElementError(
            f"rules use different alphabets ({t1.alphabet.size} vs {t2.alphabet.size})"
        )


def identity_rule(ctx: GroupContext, alphabet: Alphabet) -> RuleTable:
    """The projection ``p_1(x) = x(1)``."""
    return RuleTable(ctx, alphabet, (ctx.identity,), tuple(range(alphabet.size)))


def constant_rule(ctx: GroupContext, alphabet: Alphabet, c: int) -> RuleTable:
    return RuleTable(ctx, alphabet, (), (alphabet.check(c),))


def pattern_digits(k: int, m: int) -> np.ndarray:
    """Row ``i`` holds the base-``k`` digits of ``i``, least significant first."""
    idx = np.arange(k**m, dtype=np.int64)
    out = np.empty((k**m, m), dtype=np.int64)
    for j in range(m):
        out[:, j] = idx % k
        idx //= k
    return out


def star(t1: RuleTable, t2: RuleTable, cap: int = DEFAULT_TABLE_CAP) -> RuleTable:
    """``(f1 * f2)(x) = f1((f2(g^-1 . x))_g)``, computed on tables.

    The composite has memory ``S1 S2`` and value
    ``mu1(s1 -> mu2(s2 -> p(s1 s2)))`` on a pattern ``p``.
    """
    _check_compatible(t1, t2)
    ctx, k = t1.ctx, t1.k
    memory = ctx.product_set(t1.memory, t2.memory)
    if k ** len(memory) > cap:
        raise CapExceededError("star table entries", k ** len(memory), cap)
    pos = {g: i for i, g in enumerate(memory)}
    digits = pattern_digits(k, len(memory))
    w1 = np.array(t1._weights, dtype=np.int64)
    w2 = np.array(t2._weights, dtype=np.int64)
    outer = np.zeros(len(digits), dtype=np.int64)
    for i, s1 in enumerate(t1.memory):
        cols = [pos[ctx.op(s1, s2)] for s2 in t2.memory]
        inner = t2.array[digits[:, cols] @ w2] if cols else np.full(len(digits), t2.table[0])
        outer += inner * w1[i]
    table = t1.array[outer] if len(t1.memory) else np.full(len(digits), t1.table[0])
    return RuleTable(ctx, t1.alphabet, memory, tuple(table.tolist()))


def compose_global(t1: RuleTable, t2: RuleTable, cap: int = DEFAULT_TABLE_CAP) -> RuleTable:
    """Table of ``T1 o T2`` read off the global maps.

    Each pattern on ``S1 S2`` is realised by a finitely supported configuration
    with background 0; ``T2`` and then ``T1`` are applied as global maps and
    the result is read at the identity.
    """
    _check_compatible(t1, t2)
    ctx, k = t1.ctx, t1.k
    memory = ctx.product_set(t1.memory, t2.memory)
    if k ** len(memory) > cap:
        raise CapExceededError("composite table entries", k ** len(memory), cap)
    table = []
    for digits in pattern_digits(k, len(memory)).tolist():
        x = FiniteSupport(ctx, 0, zip(memory, digits))
        table.append(t1.apply(t2.apply(x)).at(ctx.identity))
    return RuleTable(ctx, t1.alphabet, memory, tuple(table))


def equals(t1: RuleTable, t2: RuleTable) -> bool:
    """Whether two rule tables define the same cellular automaton."""
    from .memory import minimize

    _check_compatible(t1, t2)
    a, b = minimize(t1), minimize(t2)
    return a.memory == b.memory and a.table == b.table


# -- built-in rules on Z ----------------------------------------------------

BUILTIN_NAMES = ("identity", "const:c", "xor", "majority3", "rule110", "shift_right")


def wolfram_rule(ctx: GroupContext, number: int) -> RuleTable:
    """Elementary rule ``number`` on ``S = {-1, 0, 1}``.

    The Wolfram index reads ``p(-1)`` as the most significant bit, which is the
    reverse of the table encoding.
    """
    memory = ((-1,), (0,), (1,))
    table = []
    for idx in range(8):
        left, centre, right = idx & 1, (idx >> 1) & 1, (idx >> 2) & 1
        table.append((number >> (4 * left + 2 * centre + right)) & 1)
    return RuleTable(ctx, Alphabet(2), memory, tuple(table))


def builtin_rule(name: str, ctx: GroupContext | None = None, k: int | None = None) -> RuleTable:
    """Look up a named rule.

    ``identity`` and ``const:c`` exist on any group; the others are rules on Z
    over the binary alphabet.
    """
    if ctx is None:
        ctx = GroupContext.integers(1)
    if name == "identity":
        return identity_rule(ctx, Alphabet(k or 2))
    if name.startswith("const:"):
        return constant_rule(ctx, Alphabet(k or 2), int(name.split(":", 1)[1]))
    if name == "const":
        return constant_rule(ctx, Alphabet(k or 2), 0)
    if ctx != GroupContext.integers(1):
        raise UnsupportedError(f"built-in rule {name!r} is defined on Z only")
    if k not in (None, 2):
        raise UnsupportedError(f"built-in rule {name!r} is binary")
    A = Alphabet(2)
    if name == "xor":
        return RuleTable(ctx, A, ((0,), (1,)), (0, 1, 1, 0))
    if name == "majority3":
        table = [int(bin(i).count("1") >= 2) for i in range(8)]
        return RuleTable(ctx, A, ((-1,), (0,), (1,)), tuple(table))
    if name == "rule110":
        return wolfram_rule(ctx, 110)
    if name == "shift_right":
        return RuleTable(ctx, A, ((1,),), (0, 1))
    raise KeyError(f"unknown built-in rule {name!r}; known: {', '.join(BUILTIN_NAMES)}")


# -- JSON -------------------------------------------------------------------


def rule_to_json(t: RuleTable) -> dict:
    return {
        "group": group_to_json(t.ctx),
        "alphabet": t.k,
        "memory": [t.ctx.format_element(s) for s in t.memory],
        "table": list(t.table),
    }


def _infer_alphabet(memory, table) -> int:
    if not memory:
        return max(2, table[0] + 1)
    k = round(len(table) ** (1 / len(memory)))
    for cand in (k - 1, k, k + 1):
        if cand >= 1 and cand ** len(memory) == len(table):
            return cand
    raise ValueError(f"table of length {len(table)} does not fit {len(memory)} memory cells")


def rule_from_json(data, ctx: GroupContext | None = None, k: int | None = None) -> RuleTable:
    """Decode a rule object, or a ``"builtin:<name>"`` string."""
    if isinstance(data, str):
        if not data.startswith("builtin:"):
            raise ValueError(f"expected 'builtin:<name>', got {data!r}")
        data = {"builtin": data.split(":", 1)[1]}
    if "group" in data:
        ctx = parse_group(data["group"])
    ctx = ctx or GroupContext.integers(1)
    k = data.get("alphabet", k)
    if "builtin" in data:
        return builtin_rule(data["builtin"], ctx, k)
    parsed = [ctx.parse_element(s) for s in data["memory"]]
    table = [int(v) for v in data["table"]]
    k = k or _infer_alphabet(parsed, table)
    memory = ctx.subset(parsed)
    if len(memory) != len(parsed):
        raise ValueError("memory set lists an element twice")
    if tuple(parsed) != memory:
        # file lists the memory in another order; digit j of a file index is parsed[j]
        digits = pattern_digits(k, len(memory))
        cols = [memory.index(s) for s in parsed]
        src = digits[:, cols] @ np.array([k**j for j in range(len(parsed))], dtype=np.int64)
        table = [table[i] for i in src.tolist()]
    return RuleTable(ctx, Alphabet(k), memory, tuple(table))
