"""Named graph families and their ``name:params`` spellings.

=========  ===================  ===============================================
name       params               graph
=========  ===================  ===============================================
cycle      n (>= 3)             cycle C_n
bundle     k (>= 1)             two vertices joined by k parallel edges
path       n (>= 2)             path on n vertices (alias: ``tree``)
complete   n (>= 2)             K_n
theta      l1,l2,l3             three internally disjoint x-y paths, l1<=l2<=l3
hk         eta,k                the path/triangle gadget H_{eta,k}
k4e        (none)               K_4 minus the edge {0, 1}
er         n,rho,seed           G(n, rho) sample, one trial of ``seed``
=========  ===================  ===============================================
"""

from __future__ import annotations

import hashlib
import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .graph import GraphError, Multigraph, Terminals

FAMILY_NAMES = ("cycle", "bundle", "path", "tree", "complete", "theta", "hk", "k4e", "er")


@dataclass(frozen=True)
class FamilySpec:
    name: str
    params: tuple = ()

    def __post_init__(self):
        if self.name not in FAMILY_NAMES:
            raise GraphError(f"unknown family {self.name!r}")
        _validate(self.name, self.params)

    @classmethod
    def parse(cls, text: str) -> "FamilySpec":
        name, _, rest = text.strip().partition(":")
        name = name.lower()
        raw = [p for p in rest.split(",") if p.strip()] if rest else []
        if name == "er":
            if len(raw) != 3:
                raise GraphError("er needs n,rho,seed")
            params = (int(raw[0]), Fraction(raw[1].strip()), int(raw[2]))
        else:
            try:
                params = tuple(int(p) for p in raw)
            except ValueError as exc:
                raise GraphError(f"bad parameters in {text!r}") from exc
        return cls(name, params)

    def __str__(self) -> str:
        return self.name + (":" + ",".join(str(p) for p in self.params) if self.params else "")


def _validate(name: str, p: tuple) -> None:
    def need(count):
        if len(p) != count:
            raise GraphError(f"{name} takes {count} parameter(s), got {len(p)}")

    if name == "cycle":
        need(1)
        if p[0] < 3:
            raise GraphError("cycle needs n >= 3")
    elif name == "bundle":
        need(1)
        if p[0] < 1:
            raise GraphError("bundle needs k >= 1")
    elif name in ("path", "tree"):
        need(1)
        if p[0] < 2:
            raise GraphError("path needs n >= 2")
    elif name == "complete":
        need(1)
        if p[0] < 2:
            raise GraphError("complete needs n >= 2")
    elif name == "theta":
        need(3)
        l1, l2, l3 = p
        if not 1 <= l1 <= l2 <= l3:
            raise GraphError("theta needs 1 <= l1 <= l2 <= l3")
    elif name == "hk":
        need(2)
        eta, k = p
        if eta < 3 or not 1 <= k <= eta - 2:
            raise GraphError("hk needs eta >= 3 and 1 <= k <= eta - 2")
    elif name == "k4e":
        need(0)
    elif name == "er":
        need(3)
        n, rho, _seed = p
        if n < 1:
            raise GraphError("er needs n >= 1")
        if not 0 <= rho <= 1:
            raise GraphError("er needs 0 <= rho <= 1")


def cycle(n: int) -> Multigraph:
    return Multigraph(n, tuple((i, (i + 1) % n) for i in range(n)))


def bundle(k: int) -> Multigraph:
    return Multigraph(2, ((0, 1),) * k)


def path(n: int) -> Multigraph:
    return Multigraph(n, tuple((i, i + 1) for i in range(n - 1)))


def complete(n: int) -> Multigraph:
    return Multigraph(n, tuple(combinations(range(n), 2)))


def theta(l1: int, l2: int, l3: int) -> Multigraph:
    """Vertices 0 and 1 are the branch points; internal path vertices follow."""
    edges = []
    nxt = 2
    for length in (l1, l2, l3):
        prev = 0
        for _ in range(length - 1):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
        edges.append((prev, 1))
    return Multigraph(nxt, tuple(edges))


def hk_gadget(eta: int, k: int) -> tuple[Multigraph, Terminals]:
    """Path ``0 - 1 - ... - (eta-1)``: the first ``k`` edges stay single, each
    later edge becomes a triangle through a new apex vertex."""
    edges = []
    apex = eta
    for i in range(eta - 1):
        edges.append((i, i + 1))
        if i >= k:
            edges.extend([(i, apex), (apex, i + 1)])
            apex += 1
    return Multigraph(apex, tuple(edges)), Terminals(0, eta - 1)


def k4_minus_e() -> tuple[Multigraph, Terminals]:
    return Multigraph(4, ((0, 2), (0, 3), (1, 2), (1, 3), (2, 3))), Terminals(0, 1)


def trial_rng(seed: int, trial: int) -> random.Random:
    """Mersenne Twister stream for one trial.

    The stream is seeded with the first 8 bytes (big endian) of
    ``sha256(b"relroots:<seed>:<trial>")`` so every trial is reproducible
    on its own.
    """
    digest = hashlib.sha256(f"relroots:{seed}:{trial}".encode()).digest()
    return random.Random(int.from_bytes(digest[:8], "big"))


def erdos_renyi(n: int, rho, rng: random.Random) -> Multigraph:
    """One ``rng.random()`` draw per pair ``i < j`` in lexicographic order."""
    r = float(rho)
    return Multigraph(n, tuple((i, j) for i, j in combinations(range(n), 2) if rng.random() < r))


def make_family(spec: FamilySpec | str) -> tuple[Multigraph, Terminals | None]:
    """Build the graph named by ``spec`` and its designated terminals, if any.

    ``er`` samples may be disconnected; every other family is connected.
    """
    if isinstance(spec, str):
        spec = FamilySpec.parse(spec)
    name, p = spec.name, spec.params
    if name == "cycle":
        return cycle(p[0]), None
    if name == "bundle":
        return bundle(p[0]), Terminals(0, 1)
    if name in ("path", "tree"):
        return path(p[0]), Terminals(0, p[0] - 1)
    if name == "complete":
        return complete(p[0]), None
    if name == "theta":
        return theta(*p), Terminals(0, 1)
    if name == "hk":
        return hk_gadget(*p)
    if name == "k4e":
        return k4_minus_e()
    n, rho, seed = p
    return erdos_renyi(n, rho, trial_rng(seed, 0)), None
