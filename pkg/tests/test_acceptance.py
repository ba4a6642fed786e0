"""Shipping gate: one test per release criterion, each with a pinned
wall-clock budget.  Everything here is exact arithmetic; a failure means a
wrong value, never a tolerance issue."""

import csv
import io
import json
import subprocess
import sys
import time
from contextlib import contextmanager
from pathlib import Path

from eulerian_lab import (
    FTriangle,
    Poly,
    barycentric_f_triangle,
    f_triangle,
)
from eulerian_lab.cli import main
from eulerian_lab.suites import (
    build_geometry_family,
    conjecture_cases,
    counterexample_cases,
    d_interlacing_cases,
    derangement_sample_cases,
    equivalence_cases,
    geometry_cases,
    identity_cases,
    q_interlacing_cases,
    theorem1_sample_cases,
)

TESTS_DIR = Path(__file__).resolve().parent


@contextmanager
def budget(seconds: float):
    t0 = time.perf_counter()
    yield
    elapsed = time.perf_counter() - t0
    assert elapsed < seconds, f"took {elapsed:.1f}s, budget {seconds:.0f}s"


def assert_all_ok(cases) -> None:
    bad = [c for c in cases if not c.ok]
    assert not bad, "; ".join(f"{c.name}: {c.detail}" for c in bad[:20])


# frozen reference rows, n <= 4: 15 polynomials per family
REFERENCE_QNK = {
    (0, 0): "1",
    (1, 0): "1",
    (1, 1): "1+x",
    (2, 0): "1+x",
    (2, 1): "1+2x",
    (2, 2): "1+3x+x^2",
    (3, 0): "1+4x+x^2",
    (3, 1): "1+5x+2x^2",
    (3, 2): "1+6x+4x^2",
    (3, 3): "1+7x+7x^2+x^3",
    (4, 0): "1+11x+11x^2+x^3",
    (4, 1): "1+12x+15x^2+2x^3",
    (4, 2): "1+13x+20x^2+4x^3",
    (4, 3): "1+14x+26x^2+8x^3",
    (4, 4): "1+15x+33x^2+15x^3+x^4",
}

REFERENCE_DNK = {
    (0, 0): "1",
    (1, 0): "1",
    (1, 1): "0",
    (2, 0): "1+x",
    (2, 1): "x",
    (2, 2): "x",
    (3, 0): "1+4x+x^2",
    (3, 1): "3x+x^2",
    (3, 2): "2x+x^2",
    (3, 3): "x+x^2",
    (4, 0): "1+11x+11x^2+x^3",
    (4, 1): "7x+10x^2+x^3",
    (4, 2): "4x+9x^2+x^3",
    (4, 3): "2x+8x^2+x^3",
    (4, 4): "x+7x^2+x^3",
}


def _cli_table(capsys, family: str) -> dict[tuple[int, int], Poly]:
    code = main(["table", "--family", family, "--n", "4", "--format", "csv"])
    out = capsys.readouterr().out
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    return {
        (int(r["n"]), int(r["k"])): Poly.from_text(r["polynomial"]) for r in rows
    }


def test_criterion_1_cli_tables_match_reference(capsys):
    with budget(1):
        got_q = _cli_table(capsys, "qnk")
        got_d = _cli_table(capsys, "dnk")
    assert got_q == {key: Poly.from_text(t) for key, t in REFERENCE_QNK.items()}
    assert got_d == {key: Poly.from_text(t) for key, t in REFERENCE_DNK.items()}


def test_criterion_2_closed_forms_match_enumeration():
    with budget(120):
        assert_all_ok(equivalence_cases(6))


def test_criterion_3_identity_suite():
    with budget(120):
        assert_all_ok(identity_cases(8))


def test_criterion_4_q_interlacing_and_transform_samples():
    with budget(300):
        assert_all_ok(q_interlacing_cases(9))
        assert_all_ok(theorem1_sample_cases(8, 100, 0))


def test_criterion_5_derangement_interlacing_and_samples():
    with budget(300):
        assert_all_ok(d_interlacing_cases(9))
        assert_all_ok(derangement_sample_cases(8, 100, 0))


def test_criterion_6_geometry_suite():
    with budget(300):
        cases = []
        for m in range(6):
            cases.extend(geometry_cases("trivial", m))
            cases.extend(geometry_cases("barycentric", m))
        for m in range(5):
            cases.extend(geometry_cases("esd", m, 2))
            cases.extend(geometry_cases("colored", m, 2))
        assert_all_ok(cases)


def test_criterion_7_conjecture_families_and_ft_roundtrip(capsys, tmp_path):
    with budget(300):
        for n in range(1, 11):
            cases, summary = conjecture_cases(barycentric_f_triangle(n))
            assert summary["hypothesis"] is True, f"barycentric n={n}"
            assert_all_ok(cases)

        # the colored f-triangles come from the built complexes, not a formula
        for n in range(1, 7):
            triangle = f_triangle(build_geometry_family("colored", n, 2))
            cases, summary = conjecture_cases(triangle)
            assert summary["hypothesis"] is True, f"colored n={n}"
            assert_all_ok(cases)

        # external triangulations enter through files; exercise the full path
        path = tmp_path / "bary5.json"
        code = main(["ft-from-family", "--family", "barycentric", "--n", "5",
                     "--out", str(path)])
        capsys.readouterr()
        assert code == 0
        assert FTriangle.from_json(path.read_text()) == barycentric_f_triangle(5)

        code = main(["check-conjecture", "--ft-file", str(path),
                     "--format", "json"])
        out = capsys.readouterr().out
        assert code == 0
        doc = json.loads(out)
        assert doc["summary"]["hypothesis"] is True
        for part in ("part_a", "part_b"):
            assert all(doc["summary"][part]["real_rooted"])
            assert doc["summary"][part]["interlacing_pairs_failed"] == []


def test_criterion_8_binomial_counterexample():
    with budget(1):
        assert_all_ok(counterexample_cases())


def test_criterion_9_property_suites_green():
    source = (TESTS_DIR / "test_properties.py").read_text()
    assert "max_examples=1000" in source
    assert "derandomize=True" in source
    with budget(120):
        proc = subprocess.run(
            [sys.executable, "-m", "pytest", str(TESTS_DIR / "test_properties.py"),
             "-q", "--no-header"],
            capture_output=True,
            text=True,
        )
    assert proc.returncode == 0, proc.stdout[-2000:]
