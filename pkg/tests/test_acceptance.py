"""Exit criteria for the package, one test per criterion.

Every check is exact integer equality; the only tolerances are wall-clock
limits.  Each test records a PASS/FAIL line shown in pytest's terminal
summary.
"""

import io
import time

import pytest

from moessner import GridRange, TriangleModel, verify_grid
from moessner.cli import main

from conftest import ACCEPTANCE_LINES


def record(label, ok, detail=""):
    ACCEPTANCE_LINES.append(f"{'PASS' if ok else 'FAIL'}  {label}  {detail}".rstrip())
    print(ACCEPTANCE_LINES[-1])
    return ok


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def test_1_theorem_reproduction():
    t0 = time.perf_counter()
    code, out, err = run("verify", "--identities", "I1", "--k-max", "50", "--n-max", "10")
    elapsed = time.perf_counter() - t0
    lines = out.splitlines()
    ok = (code == 0 and len(lines) == 51 * 11
          and all(line.endswith(" pass") for line in lines) and elapsed < 10)
    assert record("1 theorem k<=50 n<=10", ok, f"{len(lines)} cells, {elapsed:.2f}s")


def test_2_paper_prefix_goldens():
    _, squares, _ = run("sieve", "--n", "0", "--take", "5")
    _, cubes, _ = run("sieve", "--n", "1", "--take", "5")
    ok = squares.split() == ["1", "4", "9", "16", "25"] and cubes.split() == ["1", "8", "27", "64", "125"]
    assert record("2 sieve prefixes", ok, f"{squares.split()} {cubes.split()}")


def test_3_decomposition_three_ways():
    t0 = time.perf_counter()
    model = TriangleModel()
    grid = GridRange(k_max=8, n_max=8)
    decomposition = verify_grid(["I2"], grid, model=model)
    theorem = verify_grid(["I1"], grid, model=model)
    elapsed = time.perf_counter() - t0
    ok = (len(decomposition) == 81 and all(r.passed for r in decomposition)
          and all(r.passed for r in theorem) and elapsed < 30)
    assert record("3 sieve = oracle = A + sum Delta, k,n<=8", ok, f"{elapsed:.2f}s")


def test_4_identity_suite():
    ids = [f"I{j}" for j in range(3, 15)]
    reports = verify_grid(ids, GridRange(k_max=8, n_max=8), model=TriangleModel())
    failed = [r for r in reports if r.failed]
    bad_skips = [r for r in reports if r.status == "skip"
                 and not (r.identity in ("I11", "I13") and dict(r.cell)["m"] > dict(r.cell)["n"])]
    covered = {r.identity for r in reports if r.passed}
    ok = not failed and not bad_skips and covered == set(ids)
    assert record("4 identities I3-I14, k,n<=8", ok,
                  f"{sum(r.passed for r in reports)} pass, {len(failed)} fail, "
                  f"{sum(r.status == 'skip' for r in reports)} skip")


class BumpedBase(TriangleModel):
    def f_base(self, x):
        return x + 2


class NoCrossBlock(TriangleModel):
    def cross_block(self, i, m, n):
        return 0


@pytest.mark.parametrize("mutant", [BumpedBase, NoCrossBlock])
def test_5_mutation_sensitivity(mutant):
    reports = verify_grid(["I2", "I9", "I11", "I13"], model=mutant())
    failing = sorted({r.identity for r in reports if r.failed})
    assert record(f"5 mutation {mutant.__name__} detected", bool(failing), f"failing: {failing}")


def test_6_exactness_at_scale():
    expected = str(52 ** 12)
    code, out, _ = run("value", "--k", "50", "--n", "10")
    vals = dict(line.split("=", 1) for line in out.splitlines())
    ok = (code == 0 and len(expected) == 21
          and vals["M"] == vals["oracle"] == vals["A+B"] == expected
          and int(vals["A"]) + int(vals["B"]) == int(expected))
    assert record("6 value k=50 n=10 three paths", ok, vals.get("M", ""))
