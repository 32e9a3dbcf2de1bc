"""Property-fuzzing engine.

Every trial derives its own RNG from (seed, trial index) through a SplitMix64
finalizer (see `mix_seed`), so trials are independent of execution order and
a failing trial replays from its index alone. Failures are data: each record
carries the serialized graph to rerun any check by hand.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field

from .chordality import chordality, chordality_oracle, is_chordal_bipartite, is_k_chordal, largest_hole
from .generators import gen_random_bipartite, gen_random_graph, gen_random_tree
from .graphs import Graph, is_induced_cycle
from .io import write_edge_list
from .powers import bipartite_power, graph_power
from .witness import pullback_hole

PROPERTY_NAMES = (
    "theorem",
    "tree-corollary",
    "witness",
    "duchet",
    "oracle-equivalence",
)

_MASK64 = (1 << 64) - 1
_GAMMA = 0x9E3779B97F4A7C15


def mix_seed(seed: int, trial: int) -> int:
    """Per-trial seed: SplitMix64 finalizer of seed + (trial+1) * gamma,
    gamma = 0x9E3779B97F4A7C15. Stated here so failures can be replayed
    from (seed, trial) in any implementation of the same mixer."""
    x = (seed + (trial + 1) * _GAMMA) & _MASK64
    x = ((x ^ (x >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    x = ((x ^ (x >> 27)) * 0x94D049BB133111EB) & _MASK64
    return x ^ (x >> 31)


@dataclass(frozen=True)
class TrialConfig:
    seed: int
    trials: int
    max_n: int
    m_values: tuple[int, ...]
    property_name: str

    def __post_init__(self) -> None:
        if self.trials < 1:
            raise ValueError(f"trials must be >= 1, got {self.trials}")
        if self.max_n < 4:
            raise ValueError(f"max_n must be >= 4, got {self.max_n}")
        if not self.m_values:
            raise ValueError("need at least one exponent")
        for m in self.m_values:
            if m < 1 or m % 2 == 0:
                raise ValueError(f"exponents must be odd and >= 1, got {m}")
        if self.property_name not in PROPERTY_NAMES:
            raise ValueError(f"unknown property {self.property_name!r}")


@dataclass(frozen=True)
class TrialFailure:
    trial: int
    graph_text: str
    property_name: str
    detail: str


@dataclass(frozen=True)
class FuzzReport:
    property_name: str
    trials_run: int
    checked: int
    skipped: int
    failures: tuple[TrialFailure, ...]
    elapsed: float = field(compare=False)

    @property
    def ok(self) -> bool:
        return not self.failures


def run_property(cfg: TrialConfig) -> FuzzReport:
    """Run cfg.trials independent trials of the configured property."""
    start = time.perf_counter()
    runner = _RUNNERS[cfg.property_name]
    checked = 0
    skipped = 0
    failures: list[TrialFailure] = []
    for trial in range(cfg.trials):
        rng = random.Random(mix_seed(cfg.seed, trial))
        outcome = runner(cfg, trial, rng)
        checked += outcome.checked
        skipped += outcome.skipped
        failures.extend(outcome.failures)
    failures.sort(key=lambda f: f.trial)
    return FuzzReport(
        property_name=cfg.property_name,
        trials_run=cfg.trials,
        checked=checked,
        skipped=skipped,
        failures=tuple(failures),
        elapsed=time.perf_counter() - start,
    )


def format_report(report: FuzzReport) -> str:
    """Render a report without its timing field, so identical configurations
    produce byte-identical text."""
    lines = [
        f"property={report.property_name}",
        f"trials={report.trials_run}",
        f"checked={report.checked}",
        f"skipped={report.skipped}",
        f"failures={len(report.failures)}",
    ]
    for f in report.failures:
        lines.append(f"failure trial={f.trial} detail={f.detail}")
        lines.extend("  " + line for line in f.graph_text.rstrip("\n").splitlines())
    lines.append(f"result={'ok' if report.ok else 'fail'}")
    return "\n".join(lines) + "\n"


@dataclass
class _TrialOutcome:
    checked: int = 0
    skipped: int = 0
    failures: list[TrialFailure] = field(default_factory=list)

    def fail(self, cfg: TrialConfig, trial: int, g: Graph, detail: str) -> None:
        self.failures.append(
            TrialFailure(trial, write_edge_list(g), cfg.property_name, detail)
        )


def _random_bipartite(rng: random.Random, max_n: int) -> Graph:
    n = rng.randint(4, max_n)
    n_a = rng.randint(1, n - 1)
    return gen_random_bipartite(n_a, n - n_a, rng.random(), rng.getrandbits(64))


def _chorded_even_cycle(rng: random.Random, max_n: int) -> Graph:
    """Even cycle of random length >= 10 on shuffled labels, plus sparse
    random cross chords. Plain Erdos-Renyi graphs at desk scale almost never
    keep a hole of length >= 6 after bipartite cubing, so the corpora that
    exercise the pullback need long induced cycles seeded in."""
    length = 2 * rng.randint(5, max(5, max_n // 2))
    perm = list(range(length))
    rng.shuffle(perm)
    edges = [(perm[i], perm[(i + 1) % length]) for i in range(length)]
    on_cycle = {frozenset(e) for e in edges}
    chord_prob = rng.uniform(0.0, 0.10)
    for a in range(0, length, 2):
        for b in range(1, length, 2):
            pair = frozenset((perm[a], perm[b]))
            if pair not in on_cycle and rng.random() < chord_prob:
                edges.append((perm[a], perm[b]))
    return Graph.from_edges(length, edges)


def _bipartite_corpus(rng: random.Random, max_n: int) -> Graph:
    """Half plain bipartite Erdos-Renyi, half chorded even cycles."""
    if max_n >= 10 and rng.random() < 0.5:
        return _chorded_even_cycle(rng, max_n)
    return _random_bipartite(rng, max_n)


def _run_theorem(cfg: TrialConfig, trial: int, rng: random.Random) -> _TrialOutcome:
    out = _TrialOutcome()
    g = _bipartite_corpus(rng, cfg.max_n)
    bound = max(4, chordality(g))
    for m in cfg.m_values:
        power = bipartite_power(g, m)
        if is_k_chordal(power, bound):
            out.checked += 1
        else:
            out.fail(
                cfg, trial, g,
                f"m={m} chordality(G^[m])={chordality(power)} exceeds {bound}",
            )
    return out


def _run_tree_corollary(cfg: TrialConfig, trial: int, rng: random.Random) -> _TrialOutcome:
    out = _TrialOutcome()
    t = gen_random_tree(rng.randint(2, cfg.max_n), rng.getrandbits(64))
    for m in cfg.m_values:
        if is_chordal_bipartite(bipartite_power(t, m)):
            out.checked += 1
        else:
            out.fail(cfg, trial, t, f"m={m} tree power is not chordal bipartite")
    return out


def _run_witness(cfg: TrialConfig, trial: int, rng: random.Random) -> _TrialOutcome:
    out = _TrialOutcome()
    g = _bipartite_corpus(rng, cfg.max_n)
    for m in cfg.m_values:
        power = bipartite_power(g, m)
        hole = largest_hole(power)
        if hole is None or len(hole) < 6:
            out.skipped += 1
            continue
        try:
            report = pullback_hole(g, m, hole, strict=False)
        except Exception as exc:  # claim violations are failures, not crashes
            out.fail(cfg, trial, g, f"m={m} pullback raised {exc!r}")
            continue
        pulled = list(report.pulled_back_hole)
        if not is_induced_cycle(g, pulled):
            out.fail(cfg, trial, g, f"m={m} pulled-back hole not induced")
        elif len(pulled) < len(hole):
            out.fail(cfg, trial, g, f"m={m} pulled {len(pulled)} < hole {len(hole)}")
        elif not report.all_checks_pass():
            bad = sorted(k for k, v in report.claim_checks.items() if not v)
            out.fail(cfg, trial, g, f"m={m} claim checks failed: {bad}")
        else:
            out.checked += 1
    return out


def _run_duchet(cfg: TrialConfig, trial: int, rng: random.Random) -> _TrialOutcome:
    out = _TrialOutcome()
    g = gen_random_graph(rng.randint(2, cfg.max_n), rng.random(), rng.getrandbits(64))
    for m in cfg.m_values:
        bound = max(3, chordality(graph_power(g, m)))
        if is_k_chordal(graph_power(g, m + 2), bound):
            out.checked += 1
        else:
            out.fail(
                cfg, trial, g,
                f"m={m} chordality(G^{m + 2}) exceeds {bound}",
            )
    return out


def _run_oracle_equivalence(cfg: TrialConfig, trial: int, rng: random.Random) -> _TrialOutcome:
    out = _TrialOutcome()
    cap = min(cfg.max_n, 12)
    g = gen_random_graph(rng.randint(0, cap), rng.random(), rng.getrandbits(64))
    fast = chordality(g)
    slow = chordality_oracle(g, cap=cap)
    if fast == slow:
        out.checked += 1
    else:
        out.fail(cfg, trial, g, f"search says {fast}, subset oracle says {slow}")
    return out


_RUNNERS = {
    "theorem": _run_theorem,
    "tree-corollary": _run_tree_corollary,
    "witness": _run_witness,
    "duchet": _run_duchet,
    "oracle-equivalence": _run_oracle_equivalence,
}
