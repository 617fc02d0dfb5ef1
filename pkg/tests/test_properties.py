"""The randomized property suites at their full advertised instance counts."""

from suites import (
    factorization_partition,
    leading_coeff_divides_discriminant,
    deg1_standardness_equivalence,
    power_entry_identities,
    root_reconstruction,
)


def test_deg1_standardness_equivalence_500():
    assert deg1_standardness_equivalence(500) == 500


def test_leading_coeff_divides_discriminant_200():
    assert leading_coeff_divides_discriminant(200) == 200


def test_power_entry_identities_to_12():
    assert power_entry_identities(12) == 11


def test_root_reconstruction_200():
    assert root_reconstruction(200) == 200


def test_factorization_partition_100():
    assert factorization_partition(100) == 100
