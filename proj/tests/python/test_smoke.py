import os

import numpy as np
import pytest

import carpets

DATA = os.environ.get("CARPETS_TEST_DATA", os.path.join(os.path.dirname(__file__), "..", "data"))


def test_field_arithmetic():
    f = carpets.Field("19^2/1,0,1")
    assert f.order == 361
    assert f.mul(19, 19) == 18
    assert f.frobenius(f.frobenius(19)) == 19
    assert carpets.Field("3^2/1,0,1").inv(3) == 6
    with pytest.raises(ValueError):
        carpets.Field("4")


def test_generate_sierpinski_step_two():
    m2 = carpets.generate("3", 1, 2)
    assert m2.shape == (9, 9)
    assert list(m2[4]) == [1, 0, 2, 0, 0, 0, 2, 0, 1]
    assert np.array_equal(m2, carpets.generate("3", 1, 2, method="tensor"))
    assert np.array_equal(m2, m2.T)


def test_random_access_agrees_with_dense():
    dense = carpets.generate("5", 2, 3)
    i = np.arange(125, dtype=np.uint64)
    j = (i * 7) % 125
    assert np.array_equal(carpets.entries("5", 2, 3, i, j), dense[i.astype(int), j.astype(int)])
    assert carpets.entry_at("5", 2, 10, 5**10 - 1, 0) == 1


def test_analysis_reports():
    assert carpets.classify("7", 3)["label"] == "KLEIN_K4"
    report = carpets.analyze("13", 1)
    assert report["sporadic"] == [[2, 2], [2, 10], [10, 2], [10, 10]]
    assert carpets.scan("19^2/1,0,1")[-1] == 168
    assert carpets.central_sum_S(2) == -2
    assert carpets.delannoy(2, 2) == 13


def test_tiles_and_render():
    assert len(carpets.tiles("3", 1)["tiles"]) == 29
    colors, ambiguous = carpets.assemble("3", 1, 2)
    assert ambiguous == 0
    assert np.array_equal(colors, carpets.generate("3", 1, 2))
    with open(os.path.join(DATA, "sierpinski_d3.pbm"), "rb") as fh:
        assert carpets.pbm("3", 1, 3) == fh.read()
    assert carpets.ppm("5", 1, 1, symmetric=True).startswith(b"P6\n5 5\n255\n")


def test_errors():
    with pytest.raises(carpets.CapacityError):
        carpets.generate("5", 1, 12)
    with pytest.raises(carpets.DomainError):
        carpets.tiles("3", 2)


def test_verify_subset():
    (result,) = carpets.verify("delannoy")
    assert result["passed"]
