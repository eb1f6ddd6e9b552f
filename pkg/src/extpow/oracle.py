"""Mechanical checks of the balance characterization and its supporting facts.

Every check returns a :class:`VerificationReport`. A report passes when it
has no counterexamples.
"""

from __future__ import annotations

import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterable, Optional

from . import algebra, covers, exterior, families
from .signed import (
    SignedGraph,
    is_antibalanced,
    is_balanced,
    is_cycle_graph,
    is_path_graph,
    negate,
    relabel,
    switch,
    switching_equivalent,
    underlying,
)

Predicate = Callable[[SignedGraph, int], bool]


@dataclass
class Counterexample:
    graph: SignedGraph
    k: int
    expected: object
    got: object

    def to_dict(self) -> dict:
        return {
            "n": self.graph.n,
            "edges": [list(e) for e in self.graph.edges()],
            "k": self.k,
            "expected": self.expected,
            "got": self.got,
        }


@dataclass
class VerificationReport:
    claim: str
    description: str = ""
    instances: int = 0
    counterexamples: list[Counterexample] = field(default_factory=list)
    elapsed: float = 0.0
    notes: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.counterexamples

    def check(self, ok: bool, graph: SignedGraph, k: int, expected: object, got: object) -> None:
        self.instances += 1
        if not ok:
            self.counterexamples.append(Counterexample(graph, k, expected, got))

    def to_dict(self) -> dict:
        return {
            "claim": self.claim,
            "description": self.description,
            "passed": self.passed,
            "instances": self.instances,
            "counterexamples": [c.to_dict() for c in self.counterexamples],
            "elapsed": round(self.elapsed, 4),
            "notes": list(self.notes),
        }

    def render(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        line = f"[{status}] {self.claim}: {self.instances} instances, {len(self.counterexamples)} counterexamples, {self.elapsed:.2f}s"
        if self.description:
            line += f"\n       {self.description}"
        for note in self.notes:
            line += f"\n       note: {note}"
        for c in self.counterexamples[:5]:
            line += f"\n       counterexample k={c.k} expected={c.expected} got={c.got} edges={c.graph.edges()}"
        return line


class _Timer:
    def __init__(self, report: VerificationReport):
        self.report = report

    def __enter__(self):
        self.start = time.perf_counter()
        return self.report

    def __exit__(self, *exc):
        self.report.elapsed += time.perf_counter() - self.start
        return False


def balanced_characterization_predicate(g: SignedGraph, k: int) -> bool:
    """Right-hand side of the characterization: is the k-th exterior power balanced?"""
    n = g.n
    if n < 2:
        raise ValueError("need at least two vertices")
    if not (1 <= k <= n - 1):
        raise ValueError(f"need 1 <= k <= n-1, got n={n}, k={k}")
    if not g.is_connected():
        raise ValueError("the characterization is stated for connected graphs")
    if k == 1:
        return is_balanced(g).balanced
    if k == n - 1:
        return is_antibalanced(g).balanced
    if is_path_graph(g):
        return True
    if is_cycle_graph(g):
        return is_balanced(g).balanced == (k % 2 == 1)
    return False


def _signings(g: SignedGraph, budget: int, rng: random.Random) -> tuple[Iterable[SignedGraph], bool]:
    if (1 << g.m) <= budget:
        return families.all_signings(g), True
    return (families.random_signing(g, rng) for _ in range(budget)), False


def _sweep_chunk(args) -> tuple[int, list[Counterexample], int]:
    graphs, budget, seed, predicate = args
    rng = random.Random(seed)
    instances = 0
    bad: list[Counterexample] = []
    sampled = 0
    for g in graphs:
        signings, exhaustive = _signings(g, budget, rng)
        sampled += not exhaustive
        for sg in signings:
            for k in range(1, sg.n):
                got = is_balanced(exterior.wedge_graph(sg, k)).balanced
                expected = predicate(sg, k)
                instances += 1
                if got != expected:
                    bad.append(Counterexample(sg, k, expected, got))
    return instances, bad, sampled


def sweep_theorem1(
    n_max: int,
    signing_budget: int = 1024,
    seed: int = 0,
    n_min: int = 2,
    predicate: Optional[Predicate] = None,
    workers: int = 1,
) -> VerificationReport:
    """Compare the balance of every exterior power with the predicate.

    Covers every connected labeled graph with ``n_min <= n <= n_max`` and
    every ``k`` in ``1..n-1``. Signings are exhaustive when ``2**m`` fits the
    budget and a seeded sample of ``signing_budget`` signings otherwise.
    """
    predicate = predicate or balanced_characterization_predicate
    report = VerificationReport(
        "theorem1", f"balance of k-th exterior power vs characterization, connected graphs n={n_min}..{n_max}"
    )
    with _Timer(report):
        for n in range(n_min, n_max + 1):
            graphs = list(families.connected_graph_enumerator(n, max_n=max(n_max, families.DEFAULT_MAX_ENUM)))
            nchunks = max(1, workers * 4) if workers > 1 else 1
            size = -(-len(graphs) // nchunks)
            chunks = [
                (graphs[i : i + size], signing_budget, seed * 1_000_003 + n * 10_007 + i, predicate)
                for i in range(0, len(graphs), size)
            ]
            if workers > 1:
                with ProcessPoolExecutor(workers) as pool:
                    results = list(pool.map(_sweep_chunk, chunks))
            else:
                results = [_sweep_chunk(c) for c in chunks]
            sampled = 0
            for count, bad, s in results:
                report.instances += count
                report.counterexamples.extend(bad)
                sampled += s
            if sampled:
                report.notes.append(
                    f"n={n}: {sampled} of {len(graphs)} graphs sampled with {signing_budget} signings (budget saturated)"
                )
    return report


def sample_theorem1(
    n: int, samples: int, seed: int = 0, predicate: Optional[Predicate] = None
) -> VerificationReport:
    """Random connected signed graphs on ``n`` vertices, every k."""
    predicate = predicate or balanced_characterization_predicate
    report = VerificationReport("theorem1-sampled", f"{samples} random connected signed graphs, n={n}")
    rng = random.Random(seed)
    graphs = list(families.connected_graph_enumerator(n, max_n=max(n, families.DEFAULT_MAX_ENUM)))
    with _Timer(report):
        for _ in range(samples):
            sg = families.random_signing(rng.choice(graphs), rng)
            for k in range(1, n):
                got = is_balanced(exterior.wedge_graph(sg, k)).balanced
                expected = predicate(sg, k)
                report.check(got == expected, sg, k, expected, got)
    return report


def check_path_powers(n_max: int = 7, signings_per_graph: int = 16, seed: int = 1) -> VerificationReport:
    report = VerificationReport("path-exterior", "every signed path has balanced exterior powers")
    rng = random.Random(seed)
    with _Timer(report):
        for n in range(2, n_max + 1):
            p = families.path(n)
            signings, _ = _signings(p, signings_per_graph, rng)
            for sg in signings:
                for k in range(1, n):
                    got = is_balanced(exterior.wedge_graph(sg, k)).balanced
                    report.check(got, sg, k, True, got)
    return report


def check_cycle_powers(n_max: int = 7) -> VerificationReport:
    report = VerificationReport("cycle-exterior", "unsigned C_n: k-th exterior power balanced iff k odd")
    with _Timer(report):
        for n in range(3, n_max + 1):
            c = families.cycle(n)
            for k in range(1, n):
                got = is_balanced(exterior.wedge_graph(c, k)).balanced
                report.check(got == (k % 2 == 1), c, k, k % 2 == 1, got)
    return report


def check_signed_cycle_powers(n_max: int = 7) -> VerificationReport:
    report = VerificationReport(
        "signed-cycle", "signed C_n: balanced power iff (balanced and k odd) or (unbalanced and k even)"
    )
    with _Timer(report):
        for n in range(3, n_max + 1):
            for sg in families.all_signings(families.cycle(n)):
                bal = is_balanced(sg).balanced
                for k in range(1, n):
                    expected = bal == (k % 2 == 1)
                    got = is_balanced(exterior.wedge_graph(sg, k)).balanced
                    report.check(got == expected, sg, k, expected, got)
    return report


def check_claw_powers(n_max: int = 5) -> VerificationReport:
    report = VerificationReport("claw-free", "a claw in the base forces unbalanced powers for 2 <= k <= n-2")
    with _Timer(report):
        for n in range(4, n_max + 1):
            for g in families.all_graphs(n):
                if max(g.degrees()) < 3:
                    continue
                for sg in families.all_signings(g):
                    for k in range(2, n - 1):
                        got = is_balanced(exterior.wedge_graph(sg, k)).balanced
                        report.check(not got, sg, k, False, got)
    return report


def check_hypercube(d: int = 3) -> VerificationReport:
    q = families.hypercube(d)
    big_n = q.n
    report = VerificationReport(
        "hypercube", f"every exterior power of Q_{d} is bipartite; unbalanced exactly for k=2..{big_n - 2}"
    )
    with _Timer(report):
        for k in range(1, big_n):
            w = exterior.wedge_graph(q, k)
            bipartite = is_balanced(negate(underlying(w))).balanced
            report.check(bipartite, q, k, "bipartite", "bipartite" if bipartite else "not bipartite")
            expected = k in (1, big_n - 1)
            got = is_balanced(w).balanced
            report.check(got == expected, q, k, expected, got)
    return report


def check_unsigned_bipartite(n_max: int = 6) -> VerificationReport:
    report = VerificationReport("unsigned-balanced", "unsigned G: (n-1)-th power balanced iff G bipartite")
    with _Timer(report):
        for n in range(2, n_max + 1):
            for g in families.connected_graph_enumerator(n, max_n=max(n_max, families.DEFAULT_MAX_ENUM)):
                bipartite = is_antibalanced(g).balanced
                got = is_balanced(exterior.wedge_graph(g, n - 1)).balanced
                report.check(got == bipartite, g, n - 1, bipartite, got)
    return report


def check_switching_preservation(trials: int = 200, n_max: int = 7, seed: int = 2) -> VerificationReport:
    """Wedge commutes with switching through the subset-product lift."""
    report = VerificationReport("switching-class", "power of a switched graph is the lifted switch of the power")
    rng = random.Random(seed)
    with _Timer(report):
        for _ in range(trials):
            n = rng.randint(2, n_max)
            g = families.random_graph(n, rng.uniform(0.3, 0.9), rng)
            d = [rng.choice((-1, 1)) for _ in range(n)]
            k = rng.randint(1, n - 1)
            wp = exterior.wedge_power(g, k)
            lifted = exterior.subset_switching(d, wp.subsets)
            left = exterior.wedge_graph(switch(g, d), k)
            right = switch(wp.graph, lifted)
            report.check(left == right, g, k, "equal", "equal" if left == right else "different")
            report.check(
                switching_equivalent(left, wp.graph) is not None, g, k, "equivalent", "not equivalent"
            )
    return report


def check_ordering_invariance(trials: int = 200, n_max: int = 7, seed: int = 3) -> VerificationReport:
    report = VerificationReport("ordering-invariant", "relabeled exterior powers are switching equivalent")
    rng = random.Random(seed)
    with _Timer(report):
        for _ in range(trials):
            n = rng.randint(2, n_max)
            g = families.random_graph(n, rng.uniform(0.3, 0.9), rng)
            rho = list(range(n))
            rng.shuffle(rho)
            k = rng.randint(1, n - 1)
            wp = exterior.wedge_power(g, k)
            carried = exterior.relabel_power(wp, rho)
            direct = exterior.wedge_graph(relabel(g, rho), k)
            witness = switching_equivalent(direct, carried)
            report.check(witness is not None, g, k, "witness", witness)
            # an adjacent transposition is fixed by the explicit both-endpoints switching
            if n >= 2:
                x = rng.randrange(n - 1)
                swap = list(range(n))
                swap[x], swap[x + 1] = x + 1, x
                d = exterior.transposition_switching(x, x + 1, wp.subsets)
                ok = switch(exterior.relabel_power(wp, swap), d) == exterior.wedge_graph(relabel(g, swap), k)
                report.check(ok, g, k, "transposition witness", ok)
    return report


def check_johnson(n_max: int = 7) -> VerificationReport:
    report = VerificationReport("johnson", "|k-th power of K_n| equals J(n, k, k-1) edge for edge")
    with _Timer(report):
        for n in range(2, n_max + 1):
            kn = families.complete(n)
            for k in range(1, n):
                w = exterior.wedge_graph(kn, k)
                ok = families.edge_sets_equal_under_map(w, families.johnson(n, k, k - 1) if k > 1 else kn, range(w.n))
                report.check(ok, kn, k, True, ok)
    return report


def check_mirror(trials: int = 50, n_max: int = 7, seed: int = 4) -> VerificationReport:
    report = VerificationReport("palindrome-isomorphic", "|k-th power| and |(n-k)-th power| match under complement")
    rng = random.Random(seed)
    with _Timer(report):
        for _ in range(trials):
            n = rng.randint(2, n_max)
            g = families.random_graph(n, rng.uniform(0.3, 0.9), rng)
            for k in range(1, n):
                low, high = exterior.wedge_power(g, k), exterior.wedge_power(g, n - k)
                mapping = [high.index[exterior.mirror_map(u, n)] for u in low.subsets]
                ok = families.edge_sets_equal_under_map(low.graph, high.graph, mapping)
                report.check(ok, g, k, True, ok)
    return report


def check_covers(n_max: int = 5, k_max: int = 3) -> VerificationReport:
    report = VerificationReport("gain-cover", "S_k cover of the gain graph is the diagonal-deleted Cartesian power")
    double = 0
    with _Timer(report):
        for n in range(2, n_max + 1):
            for g in families.connected_graph_enumerator(n, max_n=max(n_max, families.DEFAULT_MAX_ENUM)):
                for k in range(1, min(k_max, n - 1) + 1):
                    ok = covers.verify_cover_isomorphism(g, k)
                    report.check(ok, g, k, True, ok)
                    if k == 2:
                        ok2 = covers.double_cover_matches_signs(g)
                        report.check(ok2, g, k, "double cover", ok2)
                        double += ok2
    report.notes.append(f"{double} k=2 instances confirmed as double covers of the signed exterior square")
    return report


def check_exterior_identities(
    trials: int = 30, n_max: int = 6, row_limit: int = 10**5, seed: int = 5
) -> VerificationReport:
    report = VerificationReport("alternator-identities", "anti-symmetrizer identities hold in exact integer arithmetic")
    rng = random.Random(seed)
    with _Timer(report):
        for _ in range(trials):
            n = rng.randint(2, n_max)
            g = families.random_graph(n, rng.uniform(0.3, 0.9), rng)
            for k in range(1, n):
                if n**k > row_limit:
                    continue
                result = algebra.verify_exterior_identities(g, k)
                report.check(result.ok, g, k, "all identities", result.failed() or "all identities")
    return report


def check_switching_invariance_of_balance(trials: int = 200, n_max: int = 7, seed: int = 6) -> VerificationReport:
    report = VerificationReport("balance-switching", "balance of the power depends only on the switching class")
    rng = random.Random(seed)
    with _Timer(report):
        for _ in range(trials):
            n = rng.randint(2, n_max)
            g = families.random_graph(n, rng.uniform(0.3, 0.9), rng)
            d = [rng.choice((-1, 1)) for _ in range(n)]
            k = rng.randint(1, n - 1)
            a = is_balanced(exterior.wedge_graph(g, k)).balanced
            b = is_balanced(exterior.wedge_graph(switch(g, d), k)).balanced
            report.check(a == b, g, k, a, b)
    return report


def verify_fact_suite(quick: bool = False) -> list[VerificationReport]:
    """Run every supporting check; ``quick`` shrinks the instance counts."""
    trials = 40 if quick else 200
    return [
        check_path_powers(),
        check_cycle_powers(),
        check_signed_cycle_powers(6 if quick else 7),
        check_claw_powers(),
        check_hypercube(),
        check_unsigned_bipartite(5 if quick else 6),
        check_switching_preservation(trials),
        check_ordering_invariance(trials),
        check_johnson(),
        check_mirror(20 if quick else 50),
        check_covers(4 if quick else 5),
        check_exterior_identities(10 if quick else 30),
        check_switching_invariance_of_balance(trials),
    ]


SUITES = ("all", "theorem1", "facts", "algebra", "covers")


def run_suite(name: str, n_max: int = 5, budget: int = 1024, seed: int = 0, workers: int = 1) -> list[VerificationReport]:
    if name == "theorem1":
        return [sweep_theorem1(n_max, budget, seed, workers=workers)]
    if name == "algebra":
        return [check_exterior_identities(row_limit=10**5)]
    if name == "covers":
        return [check_covers(min(n_max, 5))]
    if name == "facts":
        return verify_fact_suite()
    if name == "all":
        return [sweep_theorem1(n_max, budget, seed, workers=workers)] + verify_fact_suite()
    raise ValueError(f"unknown suite {name!r}; expected one of {', '.join(SUITES)}")
