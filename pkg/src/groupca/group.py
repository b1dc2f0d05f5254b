"""Finitely generated groups with exact, canonical element arithmetic.

Three families are supported:

* ``finite``   -- given by a Cayley table; elements are row indices.
* ``integers`` -- the free abelian group Z^d; elements are tuples of ints.
* ``free``     -- the free group of rank r; elements are reduced words stored
  as tuples of nonzero ints, ``+i`` for the i-th generator and ``-i`` for its
  inverse (``1 -> a``, ``-1 -> A``, ``2 -> b``, ...).

Every element representation is canonical, so ``==`` is group equality.
Finite subsets are plain tuples sorted by :meth:`GroupContext.sort_key`.
"""

from __future__ import annotations

import json
import string
from dataclasses import dataclass, field
from functools import cached_property
from itertools import product
from typing import Hashable, Iterable, Sequence

from .errors import InvalidElementError, UnsupportedError

Element = Hashable
FiniteSubset = tuple

FAMILIES = ("finite", "integers", "free")


@dataclass(frozen=True)
class GroupContext:
    family: str
    rank: int = 0
    table: tuple = ()
    identity_index: int = 0
    generators: tuple = field(default=(), compare=False)

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown group family {self.family!r}")
        if self.family == "finite":
            self._check_cayley()
        elif self.rank < 1:
            raise ValueError("rank must be >= 1")
        if self.family == "free" and self.rank > 26:
            raise ValueError("free groups are limited to 26 generators")
        if not self.generators:
            object.__setattr__(self, "generators", self._default_generators())
        else:
            gens = tuple(self.check(g) for g in self.generators)
            if self.family != "finite" and set(gens) != set(self._default_generators()):
                raise UnsupportedError("infinite families use their default generators")
            if {self.inv(g) for g in gens} != set(gens):
                raise ValueError("generator list must be closed under inverses")
            object.__setattr__(self, "generators", gens)

    # -- constructors -----------------------------------------------------

    @classmethod
    def finite(cls, table: Sequence[Sequence[int]], identity: int = 0, generators=()):
        table = tuple(tuple(int(v) for v in row) for row in table)
        return cls("finite", table=table, identity_index=identity, generators=tuple(generators))

    @classmethod
    def cyclic(cls, n: int, generators=()):
        """Z/n as a Cayley table."""
        if n < 1:
            raise ValueError("n must be >= 1")
        return cls.finite([[(i + j) % n for j in range(n)] for i in range(n)], 0, generators)

    @classmethod
    def integers(cls, d: int = 1):
        return cls("integers", rank=d)

    @classmethod
    def free(cls, r: int = 2):
        return cls("free", rank=r)

    def _check_cayley(self):
        n = len(self.table)
        if n == 0:
            raise ValueError("Cayley table must be non-empty")
        full = set(range(n))
        for row in self.table:
            if len(row) != n or set(row) != full:
                raise ValueError("Cayley table is not a Latin square")
        for j in range(n):
            if {self.table[i][j] for i in range(n)} != full:
                raise ValueError("Cayley table is not a Latin square")
        e = self.identity_index
        if not 0 <= e < n:
            raise ValueError("identity index out of range")
        for g in range(n):
            if self.table[e][g] != g or self.table[g][e] != g:
                raise ValueError(f"{e} is not a two-sided identity")
        for g in range(n):
            if not any(self.table[g][h] == e and self.table[h][g] == e for h in range(n)):
                raise ValueError(f"element {g} has no two-sided inverse")

    def _default_generators(self):
        if self.family == "finite":
            return tuple(g for g in range(self.order) if g != self.identity_index)
        if self.family == "integers":
            gens = []
            for i in range(self.rank):
                for sign in (1, -1):
                    gens.append(tuple(sign if j == i else 0 for j in range(self.rank)))
            return tuple(gens)
        return tuple((s * i,) for i in range(1, self.rank + 1) for s in (1, -1))

    # -- basic arithmetic ---------------------------------------------------

    @property
    def is_finite(self) -> bool:
        return self.family == "finite"

    @property
    def order(self) -> int | None:
        return len(self.table) if self.is_finite else None

    @cached_property
    def identity(self) -> Element:
        if self.family == "finite":
            return self.identity_index
        if self.family == "integers":
            return (0,) * self.rank
        return ()

    @cached_property
    def _inverses(self):
        e = self.identity_index
        return tuple(row.index(e) for row in self.table)

    def check(self, g) -> Element:
        """Return ``g`` if it is a canonical element of this group, else raise."""
        if self.family == "finite":
            if isinstance(g, bool) or not isinstance(g, int) or not 0 <= g < self.order:
                raise InvalidElementError(f"{g!r} is not an element of a group of order {self.order}")
        elif self.family == "integers":
            if not isinstance(g, tuple) or len(g) != self.rank or not all(
                isinstance(c, int) and not isinstance(c, bool) for c in g
            ):
                raise InvalidElementError(f"{g!r} is not an element of Z^{self.rank}")
        else:
            if not isinstance(g, tuple) or not all(
                isinstance(c, int) and 0 < abs(c) <= self.rank for c in g
            ):
                raise InvalidElementError(f"{g!r} is not a word over {self.rank} letters")
            if any(a == -b for a, b in zip(g, g[1:])):
                raise InvalidElementError(f"{g!r} is not a reduced word")
        return g

    def op(self, g: Element, h: Element) -> Element:
        """The group product ``g h``."""
        if self.family == "finite":
            try:
                if g >= 0 and h >= 0:
                    return self.table[g][h]
            except (IndexError, TypeError):
                pass
            self.check(g)
            self.check(h)
            raise InvalidElementError(f"bad operands {g!r}, {h!r}")
        if self.family == "integers":
            if len(g) != self.rank or len(h) != self.rank:
                raise InvalidElementError(f"elements {g!r}, {h!r} do not lie in Z^{self.rank}")
            return tuple(a + b for a, b in zip(g, h))
        return _free_reduce_concat(g, h)

    def inv(self, g: Element) -> Element:
        if self.family == "finite":
            self.check(g)
            return self._inverses[g]
        if self.family == "integers":
            self.check(g)
            return tuple(-c for c in g)
        return tuple(-c for c in reversed(g))

    def sort_key(self, g: Element):
        if self.family == "free":
            return (len(g), tuple((abs(c), c < 0) for c in g))
        return g

    def subset(self, elements: Iterable[Element]) -> FiniteSubset:
        """Canonical finite subset: deduplicated and sorted."""
        return tuple(sorted({self.check(g) for g in elements}, key=self.sort_key))

    # -- enumeration ------------------------------------------------------

    def enumerate(self) -> FiniteSubset:
        if not self.is_finite:
            raise UnsupportedError(f"cannot enumerate the infinite {self.family} group")
        return tuple(range(self.order))

    def ball(self, r: int) -> FiniteSubset:
        """All products of at most ``r`` generators."""
        if r < 0:
            raise ValueError("radius must be non-negative")
        seen = {self.identity}
        layer = [self.identity]
        for _ in range(r):
            nxt = []
            for g in layer:
                for s in self.generators:
                    h = self.op(g, s)
                    if h not in seen:
                        seen.add(h)
                        nxt.append(h)
            if not nxt:
                break
            layer = nxt
        return self.subset(seen)

    def length(self, g: Element) -> int:
        """Word length of ``g`` with respect to the generators."""
        if self.family == "integers":
            return sum(abs(c) for c in self.check(g))
        if self.family == "free":
            return len(self.check(g))
        return self._finite_lengths[self.check(g)]

    @cached_property
    def _finite_lengths(self):
        dist = {self.identity: 0}
        layer = [self.identity]
        while layer:
            nxt = []
            for g in layer:
                for s in self.generators:
                    h = self.op(g, s)
                    if h not in dist:
                        dist[h] = dist[g] + 1
                        nxt.append(h)
            layer = nxt
        return tuple(dist.get(g, self.order) for g in range(self.order))

    def product_set(self, s1: Iterable[Element], s2: Iterable[Element]) -> FiniteSubset:
        s2 = tuple(s2)
        return self.subset(self.op(a, b) for a, b in product(tuple(s1), s2))

    # -- text encoding ----------------------------------------------------

    def format_element(self, g: Element) -> str:
        g = self.check(g)
        if self.family == "finite":
            return str(g)
        if self.family == "integers":
            return json.dumps(list(g), separators=(",", ":"))
        return "".join(
            string.ascii_lowercase[c - 1] if c > 0 else string.ascii_uppercase[-c - 1] for c in g
        )

    def parse_element(self, text) -> Element:
        """Inverse of :meth:`format_element`; also accepts already-decoded JSON values."""
        if self.family == "finite":
            if isinstance(text, str):
                text = text.strip()
                try:
                    text = int(text)
                except ValueError:
                    raise InvalidElementError(f"bad finite-group element {text!r}") from None
            return self.check(text)
        if self.family == "integers":
            if isinstance(text, str):
                try:
                    text = json.loads(text)
                except json.JSONDecodeError:
                    raise InvalidElementError(f"bad Z^{self.rank} element {text!r}") from None
            if isinstance(text, int) and self.rank == 1:
                text = [text]
            if not isinstance(text, list):
                raise InvalidElementError(f"bad Z^{self.rank} element {text!r}")
            return self.check(tuple(text))
        if not isinstance(text, str):
            raise InvalidElementError(f"free-group elements are strings, got {text!r}")
        letters = []
        for ch in text:
            if ch in string.ascii_lowercase:
                letters.append(string.ascii_lowercase.index(ch) + 1)
            elif ch in string.ascii_uppercase:
                letters.append(-string.ascii_uppercase.index(ch) - 1)
            else:
                raise InvalidElementError(f"bad letter {ch!r} in {text!r}")
        word = _free_reduce_concat((), tuple(letters))
        return self.check(word)

    def describe(self) -> str:
        if self.family == "integers":
            return "Z" if self.rank == 1 else f"Z^{self.rank}"
        if self.family == "free":
            return f"F{self.rank}"
        cyclic = all(self.table[i][j] == (i + j) % self.order for i in range(self.order) for j in range(self.order))
        return f"Z/{self.order}" if cyclic else f"finite({self.order})"


def _free_reduce_concat(g: tuple, h: tuple) -> tuple:
    out = list(g)
    for c in h:
        if out and out[-1] == -c:
            out.pop()
        else:
            out.append(c)
    return tuple(out)


def parse_group(spec) -> GroupContext:
    """Build a group from its text description.

    Accepted forms: ``"Z"``, ``"Z^d"``, ``"Z/n"``, ``"Fr"`` and a mapping
    ``{"cayley": [[...], ...], "identity": e}``.
    """
    if isinstance(spec, dict):
        if "cayley" not in spec:
            raise ValueError(f"group mapping needs a 'cayley' table: {spec!r}")
        return GroupContext.finite(spec["cayley"], spec.get("identity", 0), tuple(spec.get("generators", ())))
    if not isinstance(spec, str):
        raise ValueError(f"bad group spec {spec!r}")
    text = spec.strip().replace(" ", "")
    try:
        if text == "Z":
            return GroupContext.integers(1)
        if text.startswith("Z^"):
            return GroupContext.integers(int(text[2:]))
        if text.startswith("Z/"):
            return GroupContext.cyclic(int(text[2:]))
        if text.startswith("F"):
            return GroupContext.free(int(text[1:]))
    except ValueError:
        pass
    raise ValueError(f"bad group spec {spec!r}")


def group_to_json(ctx: GroupContext):
    name = ctx.describe()
    if not name.startswith("finite"):
        return name
    return {"cayley": [list(row) for row in ctx.table], "identity": ctx.identity_index}
