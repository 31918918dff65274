from __future__ import annotations

from fractions import Fraction

import pytest

from relroots.families import (
    bundle,
    complete,
    cycle,
    erdos_renyi,
    hk_gadget,
    k4_minus_e,
    path,
    theta,
    trial_rng,
)
from relroots.graph import is_connected

CORPUS_SEED = 2024
CORPUS_RANDOM = 200

# lines printed in the terminal summary by test_acceptance
_ACCEPTANCE_LINES: list[str] = []


def record_acceptance(line: str) -> None:
    _ACCEPTANCE_LINES.append(line)


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


def family_instances(max_edges: int = 16):
    out = []
    out += [(f"cycle:{n}", cycle(n)) for n in range(3, 13)]
    out += [(f"bundle:{k}", bundle(k)) for k in range(1, 9)]
    out += [(f"path:{n}", path(n)) for n in range(2, 10)]
    out += [(f"complete:{n}", complete(n)) for n in range(2, 7)]
    for l1 in range(1, 7):
        for l2 in range(l1, 7):
            for l3 in range(l2, 7):
                if l1 + l2 + l3 <= max_edges:
                    out.append((f"theta:{l1},{l2},{l3}", theta(l1, l2, l3)))
    for eta in range(3, 6):
        for k in range(1, eta - 1):
            out.append((f"hk:{eta},{k}", hk_gadget(eta, k)[0]))
    out.append(("k4e", k4_minus_e()[0]))
    return [(name, G) for name, G in out if G.m <= max_edges]


def random_corpus(count: int = CORPUS_RANDOM, seed: int = CORPUS_SEED):
    """Connected G(n, 1/2) samples with 4 <= n <= 8 and at most 16 edges."""
    out, t = [], 0
    while len(out) < count:
        n = 4 + t % 5
        G = erdos_renyi(n, Fraction(1, 2), trial_rng(seed, t))
        if is_connected(G) and G.m <= 16:
            out.append((f"er:{n}/{seed}/{t}", G))
        t += 1
    return out


@pytest.fixture(scope="session")
def corpus():
    return family_instances() + random_corpus()
