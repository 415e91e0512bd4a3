"""Dumbbell certificates on thick complexes."""
import os
import subprocess  # noqa: S404
import sys
from dataclasses import replace
from fractions import Fraction
from pathlib import Path
from typing import Callable

import pytest

from recurrent_workbench.exceptions import NoThickBaseError
from recurrent_workbench.models.complex import ComplexSpec
from recurrent_workbench.repositories.certificate_repository import CertificateRepository
from recurrent_workbench.services.certifier import build_dumbbell, find_thick_base, verify_certificate
from recurrent_workbench.services.quadratic import ONE, QuadNumber

Loader = Callable[[str], ComplexSpec]


def test_thick_base_of_book(load_complex: Loader) -> None:
    """Tests that the base sits on the least thick edge with one token per page."""
    base = find_thick_base(load_complex("three-page"))
    assert base is not None
    assert base.edge == "e0"
    assert base.t == QuadNumber(Fraction(1, 4))
    assert [token.face for token in base.directions] == ["f1", "f2", "f3"]
    assert all(token.is_perpendicular for token in base.directions)


def test_no_base_without_thick_edges(load_complex: Loader) -> None:
    """Tests that a surface has no thick base."""
    assert find_thick_base(load_complex("pillow")) is None


def test_book_certificate_is_valid(load_complex: Loader) -> None:
    """Tests that the built certificate passes verification."""
    c = load_complex("three-page")
    cert = build_dumbbell(c)
    assert [path.name for path in cert.paths] == ["v2-to-v1", "v3-to-v1", "v3-to-v2"]
    for path, start in zip(cert.paths, (1, 2, 2)):
        assert path.tokens[0] == cert.directions[start]
        assert len(path.chords) == len(path.tokens) >= 1
        assert path.length == QuadNumber(len(path.chords))
    verdict = verify_certificate(c, cert)
    assert verdict.valid
    assert verdict.violations == ()


def test_tampered_length_is_rejected(load_complex: Loader) -> None:
    """Tests that a wrong total length is reported."""
    c = load_complex("three-page")
    cert = build_dumbbell(c)
    first = cert.paths[0]
    tampered = replace(cert, paths=(replace(first, length=first.length + ONE),) + cert.paths[1:])
    verdict = verify_certificate(c, tampered)
    assert not verdict.valid
    assert verdict.clauses == frozenset({"length mismatch"})


def test_repeated_direction_is_rejected(load_complex: Loader) -> None:
    """Tests that base directions must come from three face traversals."""
    c = load_complex("three-page")
    cert = build_dumbbell(c)
    first, second, _ = cert.directions
    verdict = verify_certificate(c, replace(cert, directions=(first, second, second)))
    assert "distinct classes" in verdict.clauses


def test_foreign_base_edge_is_rejected(load_complex: Loader) -> None:
    """Tests that the base edge must exist and be thick."""
    c = load_complex("three-page")
    verdict = verify_certificate(c, replace(build_dumbbell(c), base_edge="e9"))
    assert "base" in verdict.clauses


def test_truncated_path_misses_terminal(load_complex: Loader) -> None:
    """Tests that a path cut short does not return along its terminal direction."""
    c = load_complex("three-page")
    cert = build_dumbbell(c)
    path = cert.paths[0]
    assert len(path.tokens) == 2
    cut = replace(path, tokens=path.tokens[:-1], chords=path.chords[:-1], length=path.length - path.chords[-1].length)
    paths = tuple(cut if candidate is path else candidate for candidate in cert.paths)
    verdict = verify_certificate(c, replace(cert, paths=paths))
    assert "terminal direction" in verdict.clauses


def test_pillow_has_no_certificate(load_complex: Loader) -> None:
    """Tests the no thick base error."""
    with pytest.raises(NoThickBaseError):
        build_dumbbell(load_complex("pillow"))


def test_certificate_text_is_reproducible(load_complex: Loader, fixtures_dir: Path, tmp_path: Path) -> None:
    """Tests that the written certificate is byte identical across runs and hash seeds."""
    repository = CertificateRepository()
    first = repository.dumps(build_dumbbell(load_complex("three-page")))
    assert repository.dumps(build_dumbbell(load_complex("three-page"))) == first
    written = []
    for seed in ("1", "2"):
        target = tmp_path / f"seed{seed}.cert"
        command = ["certify-free", str(fixtures_dir / "three-page.cx"), "--out", str(target)]
        subprocess.run(  # noqa: S603
            [sys.executable, "-m", "recurrent_workbench", *command],
            cwd=Path(__file__).resolve().parents[2],
            env={**os.environ, "PYTHONHASHSEED": seed},
            check=True,
            capture_output=True,
        )
        written.append(target.read_text(encoding="utf-8"))
    assert written == [first, first]
