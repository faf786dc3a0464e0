"""
Randomised self-checks of the bracket machinery against independent oracles.

``verify(seed, budget)`` runs every property below with a seeded generator
and returns a report; the same seed always gives the same report.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Optional

from . import bracket, freegroup, linking
from .freegroup import CyclicWord, Word, free_class
from .surface import PANTS, RibbonRose, enumerate_rank2_roses, standard_rose

# (a1 a2^-2, a1 a2^-1) on the pair of pants with sigma (a, a^-1, b, b^-1)
EXAMPLE_ROSE = PANTS
EXAMPLE_CLASSES = ("aBB", "aB")
EXAMPLE_RAW_TERMS = ((1, "BBa", "aB"), (-1, "aBB", "Ba"), (-1, "aBB", "aB"), (1, "BaB", "aB"))
EXAMPLE_REDUCED_TERMS = ((1, "BBa", "aB"), (-1, "aBB", "Ba"))


def random_reduced(rng: random.Random, rank: int, length: int) -> tuple:
    letters = [x for i in range(1, rank + 1) for x in (i, -i)]
    out: list = []
    while len(out) < length:
        x = rng.choice(letters)
        if out and out[-1] == -x:
            continue
        out.append(x)
    return tuple(out)


def random_cyclic(rng: random.Random, rank: int, length: int) -> tuple:
    """Uniform-ish cyclically reduced word of exactly ``length`` letters."""
    while True:
        t = random_reduced(rng, rank, length)
        if len(t) < 2 or t[0] != -t[-1]:
            return t


def random_primitive(rng: random.Random, rank: int, max_len: int) -> CyclicWord:
    while True:
        t = random_cyclic(rng, rank, rng.randint(1, max_len))
        if t and freegroup.smallest_period(t) == len(t):
            return CyclicWord(t)


def random_rose(rng: random.Random, rank: int) -> RibbonRose:
    choices = [r for r in enumerate_rank2_roses()] if rank == 2 else []
    if rank == 3:
        choices = [standard_rose(1, 2), standard_rose(0, 4)]
        sigma = [1, -1, 2, -2, 3, -3]
        rng.shuffle(sigma)
        choices.append(RibbonRose(3, tuple(sigma)))
    if rank == 1:
        choices = [RibbonRose(1, (1, -1))]
    return rng.choice(choices)


def random_class_pair(rng: random.Random, max_rank: int = 3, max_len: int = 8):
    """Two nontrivial classes with distinct primitive roots, and a rose."""
    while True:
        rank = rng.randint(2, max_rank)
        w1 = random_cyclic(rng, rank, rng.randint(1, max_len))
        w2 = random_cyclic(rng, rank, rng.randint(1, max_len))
        a1, a2 = free_class(Word(w1)), free_class(Word(w2))
        if bracket.shared_root(a1, a2) is None:
            return a1, a2, random_rose(rng, rank)


def random_class(rng: random.Random, max_rank: int = 3, max_root: int = 8, max_n: int = 3):
    rank = rng.randint(2, max_rank)
    root = random_primitive(rng, rank, max_root)
    n = rng.randint(1, max_n)
    return free_class(Word(root.letters * n)), random_rose(rng, rank)


# ---------------------------------------------------------------------------


@dataclass
class PropertyResult:
    name: str
    cases: int
    failures: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures


@dataclass
class Report:
    seed: int
    budget: int
    results: list

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    def failed(self) -> list:
        return [r.name for r in self.results if not r.passed]

    def lines(self) -> list:
        out = [f"verify seed={self.seed} budget={self.budget}"]
        for r in self.results:
            status = "PASS" if r.passed else "FAIL"
            out.append(f"{status} {r.name} ({r.cases} cases)")
            for f in r.failures[:3]:
                out.append(f"    counterexample: {f}")
        out.append("OK" if self.passed else "FAILED: " + ", ".join(self.failed()))
        return out

    def to_dict(self) -> dict:
        return {
            "seed": self.seed,
            "budget": self.budget,
            "passed": self.passed,
            "properties": [
                {"name": r.name, "cases": r.cases, "passed": r.passed, "counterexamples": r.failures}
                for r in self.results
            ],
        }


def _words_str(*ws) -> str:
    return ", ".join(str(w) for w in ws)


def check_simconj(rng: random.Random, budget: int) -> PropertyResult:
    res = PropertyResult("simultaneous-conjugacy-vs-brute-force", 0)
    for _ in range(budget):
        u1 = Word(random_reduced(rng, 2, rng.randint(1, 4)))
        u2 = Word(random_reduced(rng, 2, rng.randint(0, 4)))
        # half the cases are built to be conjugate so both answers occur
        if rng.random() < 0.5:
            g = Word(random_reduced(rng, 2, rng.randint(0, 3)))
            v1, v2 = freegroup.conjugate(g, u1), freegroup.conjugate(g, u2)
        else:
            v1 = Word(random_reduced(rng, 2, rng.randint(1, 4)))
            v2 = Word(random_reduced(rng, 2, rng.randint(0, 4)))
        res.cases += 1
        fast = freegroup.simultaneous_conjugacy(u1, u2, v1, v2)
        slow = freegroup.brute_force_simconj(u1, u2, v1, v2, 6, rank=2)
        ok = (fast is None) == (slow is None)
        if fast is not None:
            ok = ok and freegroup.conjugate(fast, u1) == v1 and freegroup.conjugate(fast, u2) == v2
        if not ok:
            res.failures.append(_words_str(u1, u2, v1, v2))
    return res


def check_no_cancellation(rng: random.Random, budget: int) -> PropertyResult:
    res = PropertyResult("theorem1-no-cancellation", 0)
    for _ in range(budget):
        a1, a2, rose = random_class_pair(rng)
        res.cases += 1
        r = bracket.amr_bracket(a1, a2, rose)
        if r.terms_count != len(r.raw):
            res.failures.append(f"{a1} {a2} on {rose}: raw {len(r.raw)} reduced {r.terms_count}")
    return res


def check_theorem2(rng: random.Random, budget: int) -> PropertyResult:
    res = PropertyResult("theorem2-identity", 0)
    exps = (-2, -1, 1, 2, 3)
    for _ in range(budget):
        a, rose = random_class(rng)
        p, q = rng.sample(exps, 2)
        res.cases += 1
        got = bracket.theorem2_selfint(a, p, q, rose)
        want = bracket.self_intersection(a, rose)
        if got != want:
            res.failures.append(f"{a} p={p} q={q} on {rose}: {got} != {want}")
    return res


def check_goldman_bound(rng: random.Random, budget: int) -> PropertyResult:
    res = PropertyResult("goldman-at-most-amr", 0)
    for _ in range(budget):
        a1, a2, rose = random_class_pair(rng)
        res.cases += 1
        g = bracket.goldman_terms(a1, a2, rose)
        t = bracket.amr_bracket(a1, a2, rose).terms_count
        if g > t:
            res.failures.append(f"{a1} {a2} on {rose}: goldman {g} > amr {t}")
    return res


def check_skew_symmetry(rng: random.Random, budget: int) -> PropertyResult:
    res = PropertyResult("skew-symmetry", 0)
    for _ in range(budget):
        a1, a2, rose = random_class_pair(rng)
        res.cases += 1
        c12 = linking.crossings_between(a1.canonical, a2.canonical, rose)
        c21 = linking.crossings_between(a2.canonical, a1.canonical, rose)
        s12 = sorted((c.pass1.position, c.pass2.position, c.sign) for c in c12)
        s21 = sorted((c.pass2.position, c.pass1.position, -c.sign) for c in c21)
        r12 = bracket.amr_bracket(a1, a2, rose)
        r21 = bracket.amr_bracket(a2, a1, rose)
        # swapping the loops of every term of [a1, a2] must give -[a2, a1]
        swapped = bracket.reduce_terms(bracket.ChordTerm(-t.sign, t.second, t.first) for t in r12.raw)
        if len(s12) != len(s21) or sorted(c[2] for c in s12) != sorted(c[2] for c in s21):
            res.failures.append(f"{a1} {a2} on {rose}: crossing signs not opposite")
        elif swapped.reduced != r21.reduced:
            res.failures.append(f"{a1} {a2} on {rose}: {r12.terms_count} vs {r21.terms_count} terms")
    return res


def check_example_fixture(rng: random.Random, budget: int) -> PropertyResult:
    res = PropertyResult("worked-example-fixture", 1)
    terms = [bracket.ChordTerm(s, a, b) for s, a, b in EXAMPLE_RAW_TERMS]
    reduced = bracket.reduce_terms(terms)
    expected = bracket.reduce_terms(bracket.ChordTerm(s, a, b) for s, a, b in EXAMPLE_REDUCED_TERMS)
    if reduced.reduced != expected.reduced or reduced.terms_count != 2:
        res.failures.append(f"four listed terms reduce to {reduced.sorted_reduced()}")
    smoothed: dict = {}
    for t in terms:
        sign, cls = bracket.smooth(t)
        smoothed[cls] = smoothed.get(cls, 0) + sign
    if any(smoothed.values()):
        res.failures.append("smoothed terms do not cancel")
    a1, a2 = (free_class(w) for w in EXAMPLE_CLASSES)
    r = bracket.amr_bracket(a1, a2, EXAMPLE_ROSE)
    if r.terms_count != 2 or bracket.min_intersection(a1, a2, EXAMPLE_ROSE) != 2:
        res.failures.append(f"end-to-end terms {r.terms_count} on {EXAMPLE_ROSE}")
    if r.reduced != expected.reduced:
        res.failures.append(f"end-to-end reduced {r.sorted_reduced()}")
    if bracket.goldman_bracket(a1, a2, EXAMPLE_ROSE):
        res.failures.append("goldman bracket of the example does not vanish")
    return res


CHECKS: tuple = (
    ("worked-example-fixture", check_example_fixture, 0),
    ("simultaneous-conjugacy-vs-brute-force", check_simconj, 1),
    ("theorem1-no-cancellation", check_no_cancellation, 1),
    ("theorem2-identity", check_theorem2, 1),
    ("goldman-at-most-amr", check_goldman_bound, 1),
    ("skew-symmetry", check_skew_symmetry, 1),
)


def verify(seed: int = 0, budget: int = 20, checks: Optional[tuple] = None) -> Report:
    """Run every property with ``budget`` random cases each.

    The worked-example fixture always runs, whatever the budget.
    """
    results = []
    for name, fn, scaled in checks or CHECKS:
        rng = random.Random(f"{seed}:{name}")
        try:
            results.append(fn(rng, budget if scaled else 1))
        except Exception as exc:  # a crash is a failure of that property
            results.append(PropertyResult(name, 0, [f"{type(exc).__name__}: {exc}"]))
    return Report(seed, budget, results)
