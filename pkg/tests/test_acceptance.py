"""Acceptance criteria, one check each. Every check prints a PASS/FAIL line
in the pytest terminal summary; ``python tests/test_acceptance.py`` prints
the same lines directly."""

import contextlib
import io
import json
import os
import random
import re
import sys
import tempfile
import time
from fractions import Fraction as F

import pytest

from hilbwalls.bridgeland import ChernCharacter, endpoints_nested, twist
from hilbwalls.cli import main
from hilbwalls.cones import ConeStatus, chamber_table, effective_cone, fibonacci_ratios, parse_locus, phi_contains
from hilbwalls.correspondence import check_bijection
from hilbwalls.gaeta import gaeta_resolution, generic_destabilizer_candidates
from hilbwalls.picard import DivisorClass, conic_pencil, diagonal_fiber, intersect, line_pencil
from hilbwalls.quiver import chern_to_dims, conversion_matrix, dims_to_chern, ideal_dims, inverse_conversion_matrix
from hilbwalls.walls import (
    ExclusionReason,
    HigherRankWitness,
    RankOneWitness,
    WitnessStatus,
    higher_rank_search,
    wall_list,
)

RESULTS = {}

GOLDEN_WALLS = {
    2: ["-5/2"],
    3: ["-7/2", "-5/2"],
    4: ["-9/2", "-7/2", "-3"],
    5: ["-11/2", "-9/2", "-7/2"],
    6: ["-13/2", "-11/2", "-9/2", "-4", "-7/2"],
    7: ["-15/2", "-13/2", "-11/2", "-9/2", "-4", "-39/10"],
    8: ["-17/2", "-15/2", "-13/2", "-11/2", "-5", "-9/2", "-25/6"],
    9: ["-19/2", "-17/2", "-15/2", "-13/2", "-11/2", "-5", "-9/2"],
}
# witnesses at the collapsing wall: rank-one (k, lW) and higher-rank characters
GOLDEN_COLLAPSE_WITNESSES = {
    2: ({(1, 0)}, set()),
    3: ({(1, 1), (2, 0)}, {("2", "-4", "4"), ("3", "-6", "6")}),
    4: ({(2, 0)}, {("2", "-4", "4")}),
    5: ({(1, 2), (2, 0)}, set()),
    6: ({(1, 3), (2, 1), (3, 0)}, set()),
    7: (set(), {("2", "-5", "11/2")}),
    8: ({(3, 0)}, {("2", "-6", "9")}),
    9: ({(1, 5), (2, 2), (3, 0)}, {("2", "-6", "9")}),
}
# (ray, base locus of the chamber beyond it) for every row of every table
GOLDEN_MORI = {
    2: [("B", "B"), ("H", "empty"), ("H - 1/2 B", None)],
    3: [("B", "B"), ("H", "empty"), ("H - 1/4 B", "L_3(3)"), ("H - 1/2 B", None)],
    4: [("B", "B"), ("H", "empty"), ("H - 1/6 B", "L_4(4)"), ("H - 1/4 B", "L_3(4)"), ("H - 1/3 B", None)],
    5: [("B", "B"), ("H", "empty"), ("H - 1/8 B", "L_5(5)"), ("H - 1/6 B", "L_4(5)"), ("H - 1/4 B", None)],
    6: [("B", "B"), ("H", "empty"), ("H - 1/10 B", "L_6(6)"), ("H - 1/8 B", "L_5(6)"), ("H - 1/6 B", "L_4(6)"),
        ("H - 1/5 B", "Q_6(6)"), ("H - 1/4 B", None)],
    7: [("B", "B"), ("H", "empty"), ("H - 1/12 B", "L_7(7)"), ("H - 1/10 B", "L_6(7)"), ("H - 1/8 B", "L_5(7)"),
        ("H - 1/6 B", "L_4(7) u Q_7(7)"), ("H - 1/5 B", "Q_6(7)"), ("H - 5/24 B", None)],
    8: [("B", "B"), ("H", "empty"), ("H - 1/14 B", "L_8(8)"), ("H - 1/12 B", "L_7(8)"), ("H - 1/10 B", "L_6(8)"),
        ("H - 1/8 B", "L_5(8)"), ("H - 1/7 B", "L_5(8) u Q_8(8)"), ("H - 1/6 B", "L_4(8) u Q_7(8)"),
        ("H - 3/16 B", None)],
    9: [("B", "B"), ("H", "empty"), ("H - 1/16 B", "L_9(9)"), ("H - 1/14 B", "L_8(9)"), ("H - 1/12 B", "L_7(9)"),
        ("H - 1/10 B", "L_6(9)"), ("H - 1/8 B", "L_5(9) u Q_9(9)"), ("H - 1/7 B", "L_5(9) u Q_8(9)"),
        ("H - 1/6 B", None)],
}
TABLE_EDGES = [F(1, 2), F(1, 2), F(1, 3), F(1, 4), F(1, 4), F(5, 24), F(3, 16), F(1, 6)]
WALL_COUNTS = [1, 2, 3, 3, 5, 6, 7, 7]


def _cli(*argv):
    out = io.StringIO()
    with contextlib.redirect_stdout(out), contextlib.redirect_stderr(io.StringIO()):
        try:
            code = main(list(argv))
        except SystemExit as exc:
            code = exc.code
    return code, out.getvalue()


def check_1():
    worst = 0.0
    for n, centers in GOLDEN_WALLS.items():
        wall_list.cache_clear()
        start = time.perf_counter()
        code, out = _cli("walls", str(n), "--json")
        worst = max(worst, time.perf_counter() - start)
        data = json.loads(out)
        if code != 0 or [w["center"] for w in data] != centers:
            return False, f"n={n} centers {[w['center'] for w in data]}"
        last = data[-1]["witnesses"]
        ones = {(w["k"], w["lW"]) for w in last if w["kind"] == "rank_one"}
        higher = {tuple(w["ch"]) for w in last if w["kind"] == "higher_rank" and w["status"] == "confirmed"}
        if (ones, higher) != GOLDEN_COLLAPSE_WITNESSES[n]:
            return False, f"n={n} collapse witnesses {ones} {higher}"
    return worst < 1.0, f"8 wall lists exact, slowest {worst:.3f}s"


def check_2():
    rows = 0
    start = time.perf_counter()
    for n, expected in GOLDEN_MORI.items():
        chamber_table.cache_clear()
        table = chamber_table(n)
        got = [(str(r.edge_ray), None if r.locus_below is None else str(r.locus_below)) for r in table.rows]
        if got != expected:
            return False, f"n={n}: {got}"
        rows += len(got)
    elapsed = time.perf_counter() - start
    return rows >= 40 and elapsed < 0.1, f"{rows} rows match, {elapsed:.4f}s"


def check_3():
    start = time.perf_counter()
    got = [effective_cone(n) for n in range(2, 10)]
    elapsed = time.perf_counter() - start
    ok = all(r.status is ConeStatus.EXACT and r.provenance.startswith("clause") for r in got)
    ok = ok and [r.alpha for r in got] == TABLE_EDGES
    ok = ok and [r.lower_edge for r in got] == [chamber_table(n).rows[-1].edge_ray for n in range(2, 10)]
    return ok and elapsed < 0.1, f"edges {[str(r.alpha) for r in got]}, {elapsed:.4f}s"


def check_4():
    reps = [check_bijection(n) for n in range(2, 10)]
    counts = [len(r.pairs) for r in reps]
    ok = all(r.bijection for r in reps) and counts == WALL_COUNTS
    ok = ok and counts == [len(wall_list(n).walls) for n in range(2, 10)]
    return ok, f"pair counts {counts}"


def check_5():
    six = higher_rank_search(6, F(-7, 2))
    a = HigherRankWitness(2, (2, -5, 6), WitnessStatus.EXCLUDED, ExclusionReason.NON_INTEGER_C2) in six
    seven = higher_rank_search(7, F(-39, 10))
    nid = [w for w in seven if w.rank == 2 and w.reason is ExclusionReason.NO_INTEGER_DEGREE]
    b = len(nid) == 1 and [x.rational_value() for x in nid[0].degree_bounds] == [F(-28, 5), F(-5)]
    c = higher_rank_search(2, F(-5, 2)) == [] and F(2 * 9, 4) < F(25, 4)
    no_candidates = not any(w.status is WitnessStatus.CANDIDATE for w in six + seven)
    return a and b and c and no_candidates, f"n=6 NonIntegerC2 {a}, n=7 NoIntegerDegree {b}, n=2 empty {c}"


def check_6():
    start = time.perf_counter()
    for n in range(2, 1001):
        res = gaeta_resolution(n)
        if res.chern_character() != ChernCharacter.ideal_sheaf(n) or min(res.a, res.c, res.c_prime, res.b) < 0:
            return False, f"n={n}"
    collapse = [min(c.center for c in generic_destabilizer_candidates(n)) for n in range(2, 10)]
    expected = [wall_list(n).walls[-1].center for n in range(2, 10)]
    elapsed = time.perf_counter() - start
    return collapse == expected and elapsed < 5, f"sweep to 1000 ok, outermost = collapse, {elapsed:.3f}s"


def check_7():
    for k in range(-10, 11):
        c, ci = conversion_matrix(k), inverse_conversion_matrix(k)
        for i in range(3):
            for j in range(3):
                if sum(c[i][m] * ci[m][j] for m in range(3)) != (i == j):
                    return False, f"k={k}"
        if dims_to_chern(k, (1, 2, 1)) != (0, 0, 1) or chern_to_dims(k, (0, 0, 1)) != (1, 2, 1):
            return False, f"skyscraper k={k}"
    pairs = 0
    for n in range(1, 101):
        d = 0
        while (d + 1) * (d + 2) // 2 <= n:
            if ideal_dims(n, d).as_tuple() != chern_to_dims(-d, (-1, 0, n)):
                return False, f"ideal_dims({n},{d})"
            pairs += 1
            d += 1
    return True, f"matrices inverse for 21 k, {pairs} ideal pairs consistent"


def check_8():
    rng = random.Random(20240601)
    q = lambda: F(rng.randint(-300, 300), rng.randint(1, 40))
    cases = 600
    for _ in range(cases):
        d1, d2, a, b = DivisorClass(q(), q()), DivisorClass(q(), q()), q(), q()
        n = rng.randint(2, 30)
        c = rng.choice([diagonal_fiber(n), line_pencil(n, rng.randint(1, n)), conic_pencil(n, rng.randint(1, n))])
        if intersect(d1 * a + d2 * b, c) != a * intersect(d1, c) + b * intersect(d2, c):
            return False, "bilinearity"
    for _ in range(cases):
        n = rng.randint(1, 60)
        x1, x2 = sorted(F(-rng.randint(1, 4000), rng.randint(1, 30)) for _ in range(2))
        if x1 == x2 or x1 * x1 <= 2 * n or x2 * x2 <= 2 * n:
            continue
        if not endpoints_nested(x1, x1 * x1 - 2 * n, x2, x2 * x2 - 2 * n):
            return False, f"nesting n={n} {x1} {x2}"
    for n in range(2, 10):
        walls = wall_list(n).walls
        for u, v in zip(walls, walls[1:]):
            if not endpoints_nested(u.center, u.radius_sq, v.center, v.radius_sq):
                return False, f"wall list n={n}"
    for _ in range(cases):
        ch = (q(), q(), q())
        s1, s2 = q(), q()
        if twist(twist(ch, s1), s2) != twist(ch, s1 + s2):
            return False, "twist"
    alphas = [effective_cone(n).alpha for n in range(2, 10)]
    if any(b > a for a, b in zip(alphas, alphas[1:])):
        return False, "monotonicity"
    ratios = fibonacci_ratios(10**7)
    if not all(phi_contains(r) for r in ratios[:10]) or phi_contains(F(3, 8)) or phi_contains(F(5, 13)):
        return False, "fibonacci chain"
    for _ in range(cases):
        x = F(rng.randint(0, 500), rng.randint(1, 500))
        if phi_contains(x) and x not in ratios and not phi_contains(x + F(1, rng.randint(1, 100))):
            return False, "phi monotone"
    return True, f"{cases} cases per property, five properties"


def check_9():
    code1, a = _cli("walls", "9", "--json")
    wall_list.cache_clear()
    code2, b = _cli("walls", "9", "--json")
    with tempfile.TemporaryDirectory() as tmp:
        path = os.path.join(tmp, "w6.svg")
        _cli("plot", "6", "--out", path)
        with open(path, encoding="utf-8") as fh:
            arcs = len(re.findall(r'<path class="wall"', fh.read()))
    ok = code1 == code2 == 0 and a == b and arcs == 5
    return ok, f"walls 9 --json identical: {a == b}, n=6 SVG arcs: {arcs}"


CHECKS = {
    1: ("golden Bridgeland walls", check_1),
    2: ("golden Mori chambers", check_2),
    3: ("effective cone formula vs tables", check_3),
    4: ("correspondence bijection", check_4),
    5: ("elimination reproductions", check_5),
    6: ("Gaeta identity sweep", check_6),
    7: ("quiver numerics", check_7),
    8: ("property suites", check_8),
    9: ("determinism", check_9),
}


def _run(number):
    name, func = CHECKS[number]
    try:
        ok, detail = func()
    except Exception as exc:  # report, then let pytest show the failure
        ok, detail = False, f"{type(exc).__name__}: {exc}"
    line = f"criterion {number} {'PASS' if ok else 'FAIL'}: {name} ({detail})"
    RESULTS[number] = line
    return ok, line


@pytest.mark.parametrize("number", sorted(CHECKS))
def test_criterion(number):
    ok, line = _run(number)
    print(line)
    assert ok, line


if __name__ == "__main__":
    failed = 0
    for number in sorted(CHECKS):
        ok, line = _run(number)
        failed += not ok
        print(line)
    sys.exit(1 if failed else 0)
