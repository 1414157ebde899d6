"""Smoke tests for the swtqft extension module."""

import os

import pytest

import swtqft

IDENTITY_WORD = """\
genus 2
degree 0
chamber +
eta 1/2
moves:
glue 1 0 0 0 0 1 0 0 0 0 1 0 0 0 0 1
"""

ROT = [[0, -1], [1, 0]]


def test_betti_tables():
    assert swtqft.betti(2, 1) == [1, 4, 1]
    assert swtqft.betti(2, 2) == [1, 4, 7, 4, 1]
    assert swtqft.betti(3, 0) == [1]
    assert swtqft.betti(2, -2) == []


def test_euler_characteristics():
    assert swtqft.euler_char(2, 1) == -2
    assert swtqft.euler_char(3, 2) == 6
    assert swtqft.euler_char(0, 2) == 3  # Sym^2(S^2) = CP^2


def test_basis_enumeration_order():
    keys = swtqft.enumerate_basis(2, 1)
    assert keys[:2] == [((), 0), ((), 1)]
    assert keys[2:] == [((1,), 0), ((2,), 0), ((3,), 0), ((4,), 0)]


def test_graded_trace_and_oracle_agree():
    assert swtqft.graded_trace(1, 1, ROT) == 2
    assert swtqft.macdonald_series(1, ROT, 4) == [1, 2, 4, 6, 8]
    ok, lhs, rhs = swtqft.alexander_check(1, ROT, 4)
    assert ok and lhs == rhs


def test_vortex_degree_and_errors():
    assert swtqft.vortex_degree(2, 0, "+", "1/2") == 1
    assert swtqft.vortex_degree(2, 3, "-", "0") == -2
    with pytest.raises(ValueError):
        swtqft.vortex_degree(2, 1, "+", "1")  # Morse-Bott violation
    with pytest.raises(ValueError):
        swtqft.graded_trace(1, 1, [[1, 1], [1, 1]])  # not symplectic


def test_sw_sum_report():
    report = swtqft.sw_sum(IDENTITY_WORD)
    assert report["value"] == -2
    assert report["empty"] is False
    assert report["k_trail"] == [(2, 1)]
    assert report["eta_bar"] == 0.5 or str(report["eta_bar"]) == "1/2"


def test_sw_series_sweep():
    values = swtqft.sw_series(IDENTITY_WORD, -3, 3)
    assert values == [(-3, 0), (-2, 0), (-1, 1), (0, -2), (1, 1), (2, 0), (3, 0)]


def test_canonical_word_round_trip():
    canonical = swtqft.canonical_word(IDENTITY_WORD)
    assert swtqft.canonical_word(canonical) == canonical
    with pytest.raises(ValueError):
        swtqft.canonical_word("genus 1\nnonsense\n")


def test_check_transverse():
    assert swtqft.check_transverse([["1", "0"]], [["0", "1"]], 2)
    assert not swtqft.check_transverse([["1", "0"]], [["2", "0"]], 2)


def test_corpus_files_parse():
    corpus = os.environ.get("SWTQFT_CORPUS")
    if not corpus:
        pytest.skip("SWTQFT_CORPUS not set")
    words = [f for f in os.listdir(corpus) if f.endswith(".word")]
    assert len(words) >= 10
    for name in words:
        with open(os.path.join(corpus, name), "r", encoding="utf-8") as fh:
            text = fh.read()
        report = swtqft.sw_sum(text)
        assert report["empty"] in (True, False)
