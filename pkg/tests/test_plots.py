"""Figure files render and land where asked; content is not inspected."""

from corpus import KNOWN_COUNTS_P3, P2_COEFFS
from wehler.plots import save_count_growth, save_cycle_spectrum, save_root_diagram

PNG_MAGIC = b"\x89PNG"


def _check(path):
    assert path.exists() and path.stat().st_size > 1000
    assert path.read_bytes()[:4] == PNG_MAGIC


def test_save_cycle_spectrum(tmp_path):
    out = tmp_path / "spectrum.png"
    got = save_cycle_spectrum({2: 1, 3: 1, 15: 1}, str(out), title="mod 5")
    assert got == str(out)
    _check(out)


def test_save_count_growth(tmp_path):
    out = tmp_path / "growth.png"
    save_count_growth(list(KNOWN_COUNTS_P3[:7]), 3, str(out))
    _check(out)


def test_save_root_diagram(tmp_path):
    out = tmp_path / "roots.png"
    save_root_diagram(list(P2_COEFFS), 3, str(out))
    _check(out)
