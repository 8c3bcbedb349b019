from fractions import Fraction

import pytest

import weave


def test_coxeter_numbers():
    assert weave.coxeter_number("E8") == 30
    assert weave.coxeter_number("D4") == 6
    assert len(weave.positive_roots("A3")) == 6


@pytest.mark.parametrize(
    "type,seeds,variables",
    [("A3", 14, 9), ("D4", 50, 16), ("B3", 20, 12), ("G2", 8, 8)],
)
def test_enumerate_counts(type, seeds, variables):
    r = weave.enumerate_counts(type)
    assert r["num_seeds"] == seeds
    assert r["num_cluster_variables"] == variables


def test_cap_raises():
    with pytest.raises(weave.WeaveError):
        weave.enumerate_counts("E6", cap=10)


def test_bad_type_raises():
    with pytest.raises(weave.WeaveError):
        weave.coxeter_number("Z3")


def test_tripod_quiver_and_mutation():
    w = weave.tripod(2, 2, 2)
    q = weave.quiver(w)
    assert q["n"] == 4
    m = weave.mutate(w, 0)
    back = weave.mutate(m, 0)
    assert weave.quiver(back) == q


def test_y_seed_and_equivariance():
    w = weave.linear(1)
    y = weave.y_seed(w, seed=3)
    assert Fraction(y["y"][0]) != 0
    assert weave.equivariant(w, 0, seed=3)


def test_criterion():
    r = weave.run_criterion(3)
    assert r["ok"], r["failures"]
