"""Enumeration, element orders, spectra and solvability of concrete groups.

Every group kind gets an engine that multiplies whole batches of elements at
once: an element is a fixed-width row of int64 and a batch is a 2-D array.
Hashing uses the raw bytes of a row.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass, field

import numpy as np

from .. import spectrum as sp
from .matrices import is_invertible
from .specs import Cyclic, DirectProduct, FrobeniusMetacyclic, GroupSpec, GroupSpecError, MatGenerators, PermGenerators

DEFAULT_CAP = 1 << 21


class EnumerationCapExceeded(RuntimeError):
    def __init__(self, cap: int, found: int):
        super().__init__(f"group has more than {cap} elements ({found} found so far)")
        self.cap = cap
        self.found = found


class OrderCapExceeded(RuntimeError):
    pass


def row_keys(rows: np.ndarray) -> list[bytes]:
    rows = np.ascontiguousarray(rows, dtype=np.int64)
    return rows.view(np.dtype((np.void, 8 * rows.shape[1]))).ravel().tolist()


class Engine:
    width: int

    def identity(self) -> np.ndarray:
        raise NotImplementedError

    def generators(self) -> np.ndarray:
        raise NotImplementedError

    def mul(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        """Row-wise products; ``y`` may be a single row."""
        raise NotImplementedError

    def inv(self, x: np.ndarray) -> np.ndarray:
        raise NotImplementedError

    def is_identity(self, x: np.ndarray) -> np.ndarray:
        return (x == self.identity()).all(axis=1)

    def orders(self, x: np.ndarray, cap: int) -> np.ndarray:
        """Orders of each row by repeated multiplication, giving up beyond cap."""
        x = np.atleast_2d(x)
        out = np.zeros(len(x), dtype=np.int64)
        active = np.arange(len(x))
        power = x.copy()
        d = 1
        while len(active):
            done = self.is_identity(power)
            out[active[done]] = d
            active = active[~done]
            power = power[~done]
            if not len(active):
                break
            d += 1
            if d > cap:
                raise OrderCapExceeded(f"element order exceeds cap {cap}")
            power = self.mul(power, x[active])
        return out


class CyclicEngine(Engine):
    width = 1

    def __init__(self, n: int):
        self.n = n

    def identity(self):
        return np.zeros(1, dtype=np.int64)

    def generators(self):
        return np.array([[1]] if self.n > 1 else [], dtype=np.int64).reshape(-1, 1)

    def mul(self, x, y):
        return (x + y) % self.n

    def inv(self, x):
        return (-x) % self.n


class FrobeniusEngine(Engine):
    """Rows (a, j) stand for x^a y^j with y x y^-1 = x^t."""

    width = 2

    def __init__(self, m: int, t: int, k: int):
        self.m, self.t, self.k = m, t, k
        self.tpow = np.array([pow(t, j, m) for j in range(k)], dtype=np.int64)

    def identity(self):
        return np.zeros(2, dtype=np.int64)

    def generators(self):
        return np.array([[1, 0], [0, 1]], dtype=np.int64)

    def mul(self, x, y):
        x = np.atleast_2d(x)
        y = np.atleast_2d(y)
        a = (x[:, 0] + self.tpow[x[:, 1]] * y[:, 0]) % self.m
        j = (x[:, 1] + y[:, 1]) % self.k
        return np.stack([a, j], axis=1)

    def inv(self, x):
        x = np.atleast_2d(x)
        j = (-x[:, 1]) % self.k
        a = (-self.tpow[j] * x[:, 0]) % self.m
        return np.stack([a, j], axis=1)


class PermEngine(Engine):
    """Rows are image arrays; the product x*y applies x first."""

    def __init__(self, degree: int, gens):
        self.width = degree
        self.gens = np.array(gens, dtype=np.int64).reshape(-1, degree)

    def identity(self):
        return np.arange(self.width, dtype=np.int64)

    def generators(self):
        return self.gens

    def mul(self, x, y):
        x = np.atleast_2d(x)
        y = np.broadcast_to(np.atleast_2d(y), x.shape)
        return np.take_along_axis(y, x, axis=1)

    def inv(self, x):
        return np.argsort(np.atleast_2d(x), axis=1).astype(np.int64)

    def orders(self, x, cap=None):
        return np.array([perm_order(row) for row in np.atleast_2d(x)], dtype=np.int64)


def perm_order(image) -> int:
    """lcm of the cycle lengths."""
    seen = [False] * len(image)
    out = 1
    for start in range(len(image)):
        if seen[start]:
            continue
        length = 0
        i = start
        while not seen[i]:
            seen[i] = True
            i = int(image[i])
            length += 1
        out = math.lcm(out, length)
    return out


class MatEngine(Engine):
    width = 16

    def __init__(self, ctx, gens):
        self.ctx = ctx
        for g in gens:
            if not is_invertible(ctx, g):
                raise GroupSpecError("matrix generator is not invertible")
        self.gens = np.array(gens, dtype=np.int64).reshape(-1, 16)

    def identity(self):
        return np.eye(4, dtype=np.int64).ravel()

    def generators(self):
        return self.gens

    def mul(self, x, y):
        x = np.atleast_2d(x).reshape(-1, 4, 4, 1).astype(np.uint64)
        y = np.atleast_2d(y).reshape(-1, 1, 4, 4).astype(np.uint64)
        terms = self.ctx.mul_array(x, y)  # [n, i, k, j]
        return np.bitwise_xor.reduce(terms, axis=2).reshape(-1, 16).astype(np.int64)

    def inv(self, x):
        from .matrices import mat_inverse

        rows = [mat_inverse(self.ctx, tuple(int(v) for v in row)) for row in np.atleast_2d(x)]
        return np.array(rows, dtype=np.int64).reshape(-1, 16)


class ProductEngine(Engine):
    def __init__(self, engines):
        self.parts = list(engines)
        self.offsets = np.cumsum([0] + [e.width for e in self.parts])
        self.width = int(self.offsets[-1])

    def _slices(self):
        return [slice(a, b) for a, b in zip(self.offsets[:-1], self.offsets[1:])]

    def identity(self):
        return np.concatenate([e.identity() for e in self.parts])

    def generators(self):
        rows = []
        for part, sl in zip(self.parts, self._slices()):
            for g in part.generators():
                row = self.identity()
                row[sl] = g
                rows.append(row)
        return np.array(rows, dtype=np.int64).reshape(-1, self.width)

    def mul(self, x, y):
        x = np.atleast_2d(x)
        y = np.broadcast_to(np.atleast_2d(y), x.shape)
        return np.concatenate([e.mul(x[:, sl], y[:, sl]) for e, sl in zip(self.parts, self._slices())], axis=1)

    def inv(self, x):
        x = np.atleast_2d(x)
        return np.concatenate([e.inv(x[:, sl]) for e, sl in zip(self.parts, self._slices())], axis=1)


def engine_for(spec: GroupSpec) -> Engine:
    if isinstance(spec, Cyclic):
        return CyclicEngine(spec.n)
    if isinstance(spec, FrobeniusMetacyclic):
        return FrobeniusEngine(spec.m, spec.t, spec.k)
    if isinstance(spec, PermGenerators):
        return PermEngine(spec.degree, spec.gens)
    if isinstance(spec, MatGenerators):
        return MatEngine(spec.ctx, spec.gens)
    if isinstance(spec, DirectProduct):
        return ProductEngine(engine_for(f) for f in spec.factors)
    raise TypeError(f"unknown group spec {spec!r}")


@dataclass
class ElementSet:
    spec: GroupSpec
    engine: Engine = field(repr=False)
    elements: np.ndarray = field(repr=False)
    index: dict[bytes, int] = field(repr=False)

    @property
    def order(self) -> int:
        return len(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, row) -> bool:
        row = np.asarray(row, dtype=np.int64).reshape(1, -1)
        return row_keys(row)[0] in self.index

    def generators(self) -> np.ndarray:
        return self.engine.generators()


def _closure(engine: Engine, seeds: np.ndarray, cap: int) -> tuple[np.ndarray, dict[bytes, int]]:
    """Breadth-first closure of the identity under right multiplication by seeds."""
    ident = engine.identity().reshape(1, -1)
    chunks = [ident]
    index = {row_keys(ident)[0]: 0}
    frontier = ident
    count = 1
    while len(frontier):
        fresh = []
        for g in seeds:
            prod = engine.mul(frontier, g)
            keep = []
            for i, key in enumerate(row_keys(prod)):
                if key not in index:
                    index[key] = count
                    count += 1
                    keep.append(i)
            if keep:
                fresh.append(prod[keep])
            if count > cap:
                raise EnumerationCapExceeded(cap, count)
        frontier = np.concatenate(fresh) if fresh else frontier[:0]
        if len(frontier):
            chunks.append(frontier)
    return np.concatenate(chunks), index


def enumerate_group(spec: GroupSpec, cap: int = DEFAULT_CAP) -> ElementSet:
    if cap < 1:
        raise ValueError("cap must be >= 1")
    engine = engine_for(spec)
    elements, index = _closure(engine, engine.generators(), cap)
    return ElementSet(spec, engine, elements, index)


def element_order(spec: GroupSpec, g, cap: int | None = None) -> int:
    """Order of a single element given as a row (image array, 16 field entries, ...)."""
    engine = spec if isinstance(spec, Engine) else engine_for(spec)
    row = np.asarray(g, dtype=np.int64).reshape(1, -1)
    if isinstance(engine, PermEngine):
        return perm_order(row[0])
    if cap is None:
        cap = DEFAULT_CAP
    return int(engine.orders(row, cap)[0])


def element_orders(e: ElementSet) -> np.ndarray:
    return e.engine.orders(e.elements, e.order)


def spectrum_of(spec: GroupSpec, cap: int = DEFAULT_CAP) -> sp.Spectrum:
    """Spectrum from enumeration; direct products via the lcm product of factor spectra."""
    return _spectrum_cached(spec, cap)


@functools.lru_cache(maxsize=4096)
def _spectrum_cached(spec: GroupSpec, cap: int) -> sp.Spectrum:
    if isinstance(spec, DirectProduct):
        return functools.reduce(sp.lcm_product, (_spectrum_cached(f, cap) for f in spec.factors))
    if isinstance(spec, Cyclic):
        if spec.n > cap:
            raise EnumerationCapExceeded(cap, cap)
        return sp.Spectrum((spec.n,))
    e = enumerate_group(spec, cap)
    return sp.normalize(int(d) for d in np.unique(element_orders(e)))


def commutators(engine: Engine, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """[a, b] = a^-1 b^-1 a b, row-wise."""
    return engine.mul(engine.mul(engine.mul(engine.inv(a), engine.inv(b)), a), b)


def _unique_rows(engine: Engine, rows: np.ndarray, drop_identity: bool = True) -> np.ndarray:
    seen = set()
    keep = []
    ident = row_keys(engine.identity().reshape(1, -1))[0]
    for i, key in enumerate(row_keys(rows)):
        if key in seen or (drop_identity and key == ident):
            continue
        seen.add(key)
        keep.append(i)
    return rows[keep]


def derived_subgroup(engine: Engine, gens: np.ndarray, cap: int = DEFAULT_CAP) -> tuple[np.ndarray, np.ndarray]:
    """Generators and elements of H' for H = <gens>.

    H' is the normal closure in H of the commutators of pairs of generators,
    so grow the seed set until it is closed under conjugation by ``gens``.
    """
    n = len(gens)
    width = engine.width
    if n < 2:
        ident = engine.identity().reshape(1, -1)
        return ident[:0], ident
    ii, jj = np.triu_indices(n, k=1)
    seeds = _unique_rows(engine, commutators(engine, gens[ii], gens[jj]))
    if not len(seeds):
        ident = engine.identity().reshape(1, -1)
        return seeds.reshape(0, width), ident
    gens_inv = engine.inv(gens)
    while True:
        elements, index = _closure(engine, seeds, cap)
        conj = np.concatenate(
            [engine.mul(engine.mul(np.broadcast_to(gi, seeds.shape), seeds), g) for g, gi in zip(gens, gens_inv)]
        )
        missing = [i for i, key in enumerate(row_keys(conj)) if key not in index]
        if not missing:
            return seeds, elements
        seeds = np.concatenate([seeds, _unique_rows(engine, conj[missing])])


def derived_series_orders(e: ElementSet) -> list[int]:
    """Orders |G|, |G'|, |G''|, ... until the series stabilizes."""
    orders = [e.order]
    gens = _unique_rows(e.engine, e.generators())
    while orders[-1] > 1:
        gens, elements = derived_subgroup(e.engine, gens, max(e.order, 1))
        if len(elements) == orders[-1]:
            break
        orders.append(len(elements))
    return orders


def is_solvable(e: ElementSet) -> bool:
    return derived_series_orders(e)[-1] == 1


def derived_subgroup_naive(engine: Engine, elements: np.ndarray) -> np.ndarray:
    """Closure of all commutators of all element pairs (test oracle)."""
    comms = [commutators(engine, np.broadcast_to(a, elements.shape), elements) for a in elements]
    seeds = _unique_rows(engine, np.concatenate(comms))
    if not len(seeds):
        return engine.identity().reshape(1, -1)
    return _closure(engine, seeds, len(elements))[0]


def is_solvable_naive(e: ElementSet) -> bool:
    current = e.elements
    while len(current) > 1:
        nxt = derived_subgroup_naive(e.engine, current)
        if len(nxt) == len(current):
            return False
        current = nxt
    return True


@functools.lru_cache(maxsize=4096)
def is_solvable_spec(spec: GroupSpec, cap: int = DEFAULT_CAP) -> bool:
    """Solvability from a spec: a direct product is solvable iff every factor
    is (its derived series is the product of the factors' series)."""
    if isinstance(spec, DirectProduct):
        return all(is_solvable_spec(f, cap) for f in spec.factors)
    if isinstance(spec, Cyclic):
        return True
    return is_solvable(enumerate_group(spec, cap))
