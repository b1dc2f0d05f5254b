"""Configurations ``x: G -> A`` in finite presentations, and the shift action.

``A^G`` is uncountable as soon as ``G`` is infinite, so a configuration is one
of three finitely describable kinds:

:class:`FullTable`
    every cell of a finite group, indexed by element index.
:class:`FiniteSupport`
    a background symbol plus finitely many exceptions.
:class:`Periodic`
    a fundamental-domain table over Z^d, stored row-major.

The shift is the left action ``(g.x)(h) = x(g^-1 h)``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property
from itertools import product
from math import prod
from typing import Iterator, Mapping, Sequence

from .errors import CapExceededError, InvalidElementError, UnsupportedError
from .group import Element, FiniteSubset, GroupContext

DEFAULT_CONFIG_CAP = 4096


@dataclass(frozen=True)
class Alphabet:
    size: int
    names: tuple | None = None

    def __post_init__(self):
        if self.size < 1:
            raise ValueError("alphabet must be non-empty")
        if self.names is not None:
            names = tuple(self.names)
            if len(names) != self.size or len(set(names)) != self.size:
                raise ValueError("alphabet names must be distinct, one per symbol")
            object.__setattr__(self, "names", names)

    @property
    def symbols(self) -> range:
        return range(self.size)

    def check(self, a: int) -> int:
        if not 0 <= a < self.size:
            raise InvalidElementError(f"symbol {a} outside alphabet of size {self.size}")
        return a


@dataclass(frozen=True)
class Pattern:
    """Values of a configuration on a finite domain, aligned with its canonical order."""

    domain: FiniteSubset
    values: tuple

    def __post_init__(self):
        object.__setattr__(self, "domain", tuple(self.domain))
        object.__setattr__(self, "values", tuple(self.values))
        if len(self.domain) != len(self.values):
            raise ValueError("pattern domain and values differ in length")

    def as_dict(self) -> dict:
        return dict(zip(self.domain, self.values))


class Configuration:
    """Common interface of the three presentations."""

    ctx: GroupContext

    def at(self, g: Element) -> int:
        raise NotImplementedError

    def shift(self, g: Element) -> Configuration:
        raise NotImplementedError

    def symbols(self) -> set:
        raise NotImplementedError

    def restrict(self, domain: Sequence[Element]) -> Pattern:
        domain = tuple(domain)
        return Pattern(domain, tuple(self.at(s) for s in domain))

    def to_json(self) -> dict:
        raise NotImplementedError


@dataclass(frozen=True)
class FullTable(Configuration):
    ctx: GroupContext
    cells: tuple

    def __post_init__(self):
        if not self.ctx.is_finite:
            raise UnsupportedError("full tables need a finite group")
        object.__setattr__(self, "cells", tuple(int(c) for c in self.cells))
        if len(self.cells) != self.ctx.order:
            raise ValueError(f"expected {self.ctx.order} cells, got {len(self.cells)}")

    def at(self, g):
        return self.cells[self.ctx.check(g)]

    def shift(self, g):
        gi = self.ctx.inv(g)
        return FullTable(self.ctx, tuple(self.cells[self.ctx.op(gi, h)] for h in range(self.ctx.order)))

    def symbols(self):
        return set(self.cells)

    def to_json(self):
        return {"kind": "table", "cells": list(self.cells)}


@dataclass(frozen=True)
class FiniteSupport(Configuration):
    """``background`` everywhere except on the keys of ``support``.

    ``support`` is normalised to a sorted tuple of ``(element, symbol)`` pairs
    with background-valued entries dropped, so equal configurations compare
    equal.
    """

    ctx: GroupContext
    background: int
    support: tuple = ()

    def __post_init__(self):
        items = self.support.items() if isinstance(self.support, Mapping) else self.support
        canon = {}
        for g, a in items:
            canon[self.ctx.check(g)] = int(a)
        key = self.ctx.sort_key
        object.__setattr__(
            self,
            "support",
            tuple(sorted(((g, a) for g, a in canon.items() if a != self.background), key=lambda p: key(p[0]))),
        )

    @classmethod
    def delta(cls, ctx: GroupContext, g=None, symbol: int = 1, background: int = 0):
        g = ctx.identity if g is None else g
        return cls(ctx, background, {g: symbol})

    @classmethod
    def constant(cls, ctx: GroupContext, symbol: int):
        return cls(ctx, symbol, ())

    @cached_property
    def support_map(self) -> dict:
        return dict(self.support)

    @property
    def support_set(self) -> FiniteSubset:
        return tuple(g for g, _ in self.support)

    def at(self, g):
        a = self.support_map.get(g)
        if a is not None:
            return a
        self.ctx.check(g)
        return self.background

    def shift(self, g):
        op = self.ctx.op
        return FiniteSupport(self.ctx, self.background, tuple((op(g, h), a) for h, a in self.support))

    def symbols(self):
        return {self.background} | {a for _, a in self.support}

    def to_json(self):
        fmt = self.ctx.format_element
        return {
            "kind": "finite_support",
            "background": self.background,
            "support": {fmt(g): a for g, a in self.support},
        }


@dataclass(frozen=True)
class Periodic(Configuration):
    """A Z^d configuration periodic under ``period[i]`` along each axis."""

    ctx: GroupContext
    period: tuple
    cells: tuple

    def __post_init__(self):
        if self.ctx.family != "integers":
            raise InvalidElementError("periodic configurations live on Z^d")
        object.__setattr__(self, "period", tuple(int(p) for p in self.period))
        object.__setattr__(self, "cells", tuple(int(c) for c in self.cells))
        if len(self.period) != self.ctx.rank or any(p < 1 for p in self.period):
            raise ValueError(f"need {self.ctx.rank} positive periods, got {self.period}")
        if len(self.cells) != prod(self.period):
            raise ValueError(f"expected {prod(self.period)} cells, got {len(self.cells)}")

    def _index(self, g) -> int:
        idx = 0
        for c, p in zip(g, self.period):
            idx = idx * p + c % p
        return idx

    def domain(self) -> Iterator[tuple]:
        """Coordinates of the fundamental domain in row-major order."""
        return product(*(range(p) for p in self.period))

    def at(self, g):
        if not isinstance(g, tuple) or len(g) != self.ctx.rank:
            raise InvalidElementError(f"{g!r} is not an element of Z^{self.ctx.rank}")
        return self.cells[self._index(g)]

    def shift(self, g):
        if self.ctx.family != "integers" or not isinstance(g, tuple) or len(g) != self.ctx.rank:
            raise InvalidElementError(f"cannot shift a periodic configuration by {g!r}")
        return Periodic(
            self.ctx,
            self.period,
            tuple(self.cells[self._index(tuple(c - s for c, s in zip(h, g)))] for h in self.domain()),
        )

    def symbols(self):
        return set(self.cells)

    def to_json(self):
        return {"kind": "periodic", "period": list(self.period), "cells": list(self.cells)}


def config_index(x: FullTable, k: int) -> int:
    """Position of ``x`` in :func:`all_configurations` order."""
    idx = 0
    for c in x.cells:
        idx = idx * k + c
    return idx


def all_configurations(ctx: GroupContext, alphabet: Alphabet, cap: int = DEFAULT_CONFIG_CAP) -> list:
    """Every configuration of a finite group, cell 0 most significant."""
    n = len(ctx.enumerate())
    k = alphabet.size
    if k**n > cap:
        raise CapExceededError("configurations", k**n, cap)
    return [FullTable(ctx, cells) for cells in product(range(k), repeat=n)]


def from_pattern(ctx: GroupContext, pattern: Pattern | Mapping, background: int = 0) -> Configuration:
    """A configuration realising ``pattern``, filled with ``background`` elsewhere."""
    values = pattern.as_dict() if isinstance(pattern, Pattern) else dict(pattern)
    if ctx.is_finite:
        return FullTable(ctx, tuple(values.get(g, background) for g in range(ctx.order)))
    return FiniteSupport(ctx, background, values)


def config_from_json(ctx: GroupContext, data: dict) -> Configuration:
    kind = data.get("kind")
    if kind == "table":
        return FullTable(ctx, tuple(data["cells"]))
    if kind == "periodic":
        return Periodic(ctx, tuple(data["period"]), tuple(data["cells"]))
    if kind == "finite_support":
        support = {ctx.parse_element(key): int(v) for key, v in data.get("support", {}).items()}
        return FiniteSupport(ctx, int(data.get("background", 0)), support)
    raise ValueError(f"unknown configuration kind {kind!r}")


def pattern_to_json(ctx: GroupContext, p: Pattern) -> dict:
    return {"domain": [ctx.format_element(g) for g in p.domain], "values": list(p.values)}


def pattern_from_json(ctx: GroupContext, data: dict) -> Pattern:
    pairs = {ctx.parse_element(g): int(v) for g, v in zip(data["domain"], data["values"])}
    if len(pairs) != len(data["domain"]) or len(data["domain"]) != len(data["values"]):
        raise ValueError(f"malformed pattern {json.dumps(data)}")
    domain = ctx.subset(pairs)
    return Pattern(domain, tuple(pairs[g] for g in domain))
