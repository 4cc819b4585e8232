import pytest

from constakit import build_field, field_for_cardinality, run_grid_verification


def test_field_for_cardinality():
    assert field_for_cardinality(7) is build_field(7, [])
    assert field_for_cardinality(9) is build_field(3, [2])
    assert field_for_cardinality(8) is build_field(2, [3])
    for bad in (1, 6, 12, 0):
        with pytest.raises(ValueError):
            field_for_cardinality(bad)


def test_small_grid_clean():
    report = run_grid_verification(qs=(2, 3), n_max=4)
    assert report["failures"] == 0
    assert report["first_counterexample"] is None
    assert report["points"] == 8  # q=2: n in {1,3}; q=3: n in {1,2,4}, two lambdas
    assert report["pairs_checked"] > 0
    # every check family ran at least once
    for name in (
        "product_methods_agree",
        "pattern_methods_agree",
        "pattern_support_coset",
        "fills_iff_nondegenerate",
        "dual_space",
        "factorization_product",
        "square_fills",
        "regularity_bound",
    ):
        assert report["checks"][name] > 0, name


def test_degenerate_checks_fire():
    # n=4 over F_3 and n=4/8 over F_5 contain degenerate codes
    report = run_grid_verification(qs=(3, 5), n_max=8)
    assert report["failures"] == 0
    assert report["checks"]["factored_power"] > 0
    assert report["checks"]["core_nondegenerate"] > 0
    assert report["checks"]["product_pattern"] > 0
    assert report["checks"]["block_structure"] > 0


def test_trivial_grid():
    report = run_grid_verification(qs=(2,), n_max=1)
    assert report["failures"] == 0
    assert report["points"] == 1
    assert report["codes_checked"] == 2  # zero code and full space


def test_corruption_hook_counts_failures():
    report = run_grid_verification(qs=(2,), n_max=3, corrupt=True)
    assert report["failures"] >= 1
    first = report["first_counterexample"]
    assert first["check"] == "product_methods_agree"
    assert {"q", "n", "lam", "g1", "g2"} <= set(first)


def test_rejects_bad_grid():
    with pytest.raises(ValueError):
        run_grid_verification(qs=(6,), n_max=3)
    with pytest.raises(ValueError):
        run_grid_verification(qs=(2,), n_max=0)
