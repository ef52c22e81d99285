"""Acceptance gate: one test and one PASS/FAIL summary line per criterion.

Run alone with ``pytest tests/test_acceptance.py -v`` or as a script with
``python tests/test_acceptance.py``.
"""

import contextlib
import io
import random
import time
from fractions import Fraction as F
from pathlib import Path

from hypercontig import verify
from hypercontig.cli import main as cli_main
from hypercontig.exprio import parse_expr
from hypercontig.gauss_core import ContigRelation, gauss_relations
from hypercontig.pq_engine import clear_caches
from hypercontig.recurrence_classes import builtin, class_function, confluent_demo, same_class
from hypercontig.relation_builder import three_term
from hypercontig.series_oracle import check_relation_random
from hypercontig.special_evals import (
    gkummer_check,
    kummer_identity_check,
    kummer_p,
    kummer_points,
    kummer_q,
    kummer_recurrence,
    p_minus5_on_conic,
    specfo2_probe,
)

GOLDEN = Path(__file__).parent / "golden"
SEED = 2024
RESULTS = {}

PRINTED_TRIPLES = {
    "relation_a_up_a_down.json": ("1,0,0", "0,0,0", "-1,0,0"),
    "relation_a_up_c_down.json": ("1,0,0", "0,0,-1", "0,0,0"),
    "relation_a_up_b_up.json": ("1,0,0", "0,1,0", "0,0,0"),
}


def record(number, title, ok, detail):
    line = f"criterion {number} {'PASS' if ok else 'FAIL'}: {title} ({detail})"
    RESULTS[number] = line
    print(line)
    return ok


def _cli_json(*argv):
    buf = io.StringIO()
    with contextlib.redirect_stdout(buf):
        code = cli_main([*argv, "--format", "json"])
    return code, buf.getvalue()


def test_criterion_1_gauss_reproduction():
    clear_caches()
    start = time.perf_counter()
    mismatches = []
    for name, triple in PRINTED_TRIPLES.items():
        code, out = _cli_json("relation", *triple)
        if code != 0 or out != (GOLDEN / name).read_text():
            mismatches.append(name)
    elapsed = time.perf_counter() - start
    ok = not mismatches and elapsed < 1.0
    record(1, "printed relations byte-equal to golden JSON", ok, f"{elapsed:.3f}s, mismatches={mismatches}")
    assert ok


def test_criterion_2_method_agreement():
    clear_caches()
    chk = verify.check_method_agreement(radius=4)
    ok = chk.passed and chk.cases == 729 and chk.seconds < 60
    record(2, "path = divide-and-conquer = negation on [-4,4]^3", ok, f"{chk.cases} shifts, {chk.seconds:.1f}s")
    assert ok, chk.failures[:5]


def test_criterion_3_theorem_suite():
    clear_caches()
    start = time.perf_counter()
    checks = [
        verify.check_initcond(),
        verify.check_pinq(radius=3),
        verify.check_qargplus(trials=20, seed=SEED, radius=3),
        verify.check_pqdet(trials=20, seed=SEED, radius=3),
        verify.check_minklm(radius=3),
        verify.check_same_relations(radius=2),
    ]
    elapsed = time.perf_counter() - start
    ok = all(c.passed for c in checks) and elapsed < 120
    record(3, "theorem identities exact", ok, "; ".join(f"{c.name} {c.cases}" for c in checks) + f"; {elapsed:.1f}s")
    assert ok, [c.line() for c in checks if not c.passed]


def test_criterion_4_lemma_suite():
    checks = [
        verify.check_lemma_i(radius=3),
        verify.check_lemma_ii(radius=3),
        verify.check_lemma_iii(trials=20, seed=SEED, radius=2),
        verify.check_lemma_iv(radius=2),
        verify.check_woneklm(radius=3),
        verify.check_wpqrklm(trials=20, seed=SEED, radius=3),
        verify.check_antisymmetry(trials=20, seed=SEED, radius=3),
    ]
    ok = all(c.passed for c in checks)
    record(4, "W-symbol properties exact", ok, "; ".join(f"{c.name} {c.cases}" for c in checks))
    assert ok, [c.line() for c in checks if not c.passed]


def emitted_relations():
    """Relations produced while meeting criteria 1-4."""
    rels = [three_term(*t) for t in PRINTED_TRIPLES.values()]
    rels += gauss_relations()
    # the determinant identity relates F(0), F(s), F(s') for the seeded pairs
    rng = random.Random(SEED)
    while len(rels) < 3 + 15 + 20:
        s = tuple(rng.randint(-3, 3) for _ in range(3))
        s2 = tuple(rng.randint(-3, 3) for _ in range(3))
        if len({s, s2, (0, 0, 0)}) == 3:
            rels.append(three_term((0, 0, 0), s, s2))
    return rels


def test_criterion_5_series_oracle():
    start = time.perf_counter()
    rels = emitted_relations()
    failed = 0
    for i, r in enumerate(rels):
        verdicts = check_relation_random(r, trials=5, seed=SEED + i, order=20)
        failed += sum(1 for v in verdicts if not v.passed)
    elapsed = time.perf_counter() - start
    ok = failed == 0 and elapsed < 60
    record(5, "emitted relations vanish through z^20", ok, f"{len(rels)} relations x 5 points, {failed} failures, {elapsed:.1f}s")
    assert ok


def test_criterion_6_kummer_block():
    parts = {}
    parts["kummer"] = all(kummer_identity_check(a, b, tol=1e-8).passed for a, b in kummer_points(10, seed=SEED))
    r = kummer_recurrence()
    parts["recurrence"] = (
        r.A == parse_expr("-2*(a+n)")
        and r.B == parse_expr("2*a+3*n")
        and r.C == parse_expr("-(b+n)")
        and all(r.residual(f, n).is_zero() for f in (kummer_p, kummer_q) for n in range(1, 21))
    )
    points = [(F(5, 3), F(-1, 4)), (F(7, 11), F(-9, 13)), (F(-17, 8), F(-3, 10))]
    parts["gkummer"] = all(gkummer_check(n, a, b, tol=1e-8).passed for a, b in points for n in range(11))
    probe = specfo2_probe(tol=1e-6)
    parts["specfo2"] = probe.passed
    ok = all(parts.values())
    stretch = p_minus5_on_conic()
    detail = ", ".join(f"{k}={'ok' if v else 'FAIL'}" for k, v in parts.items())
    detail += f"; conic point a={probe.params['a']} b={probe.params['b']} rel_err={probe.rel_error:.1e}"
    detail += f"; stretch P(-5) on conic: {'vanishes' if stretch else 'does not vanish'}"
    record(6, "Kummer family", ok, detail)
    assert ok


def test_criterion_7_equivalence_classes():
    up, down = builtin("0f1-up"), builtin("0f1-down")
    exact = class_function(up).value == parse_expr("-(n+c-1)*(n+c-2)/z")
    same = same_class(up, down)
    gaps = confluent_demo(5 / 3, 0.25, 5)
    ok = exact and same and max(gaps) < 1e-10
    record(7, "class functions and confluent demo", ok, f"exact={exact}, same={same}, max gap {max(gaps):.1e}")
    assert ok


def mutations():
    """Ten single-coefficient corruptions of Gauss relations."""
    edits = [
        lambda c: c + 1,
        lambda c: c * 2,
        lambda c: -c,
        lambda c: c.shift("a", 1),
        lambda c: c.shift("c", -1),
        lambda c: c + parse_expr("z"),
        lambda c: c * parse_expr("(a+1)/a"),
        lambda c: c.subs({"z": parse_expr("z+1")}),
        lambda c: c - parse_expr("b"),
        lambda c: c.shift("b", 2),
    ]
    rels = gauss_relations()
    out = []
    for i, edit in enumerate(edits):
        # first (relation, coefficient) from the seeded start that the edit really changes
        candidates = ((rels[(3 * i + n) % len(rels)], (i + k) % 3) for n in range(len(rels)) for k in range(3))
        r, j = next((r, j) for r, j in candidates if edit(r.terms[j][1]) != r.terms[j][1])
        terms = [(s, edit(c) if k == j else c) for k, (s, c) in enumerate(r.terms)]
        mutated = ContigRelation(tuple(terms))
        assert mutated != r
        out.append(mutated)
    return out


def test_criterion_8_mutation_sensitivity():
    rejected = 0
    muts = mutations()
    for i, r in enumerate(muts):
        verdicts = check_relation_random(r, trials=5, seed=SEED + i)
        if all(not v.passed for v in verdicts):
            rejected += 1
    ok = rejected == len(muts) == 10
    record(8, "mutated relations rejected", ok, f"{rejected}/{len(muts)} rejected at every point")
    assert ok


if __name__ == "__main__":
    import sys

    status = 0
    for name, fn in sorted(globals().items()):
        if name.startswith("test_criterion_"):
            try:
                fn()
            except AssertionError:
                status = 1
    sys.exit(status)
