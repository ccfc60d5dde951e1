"""Memoized tables must look compute-once to concurrent readers."""

from concurrent.futures import ThreadPoolExecutor

from fubini.apostol import apostol_bernoulli
from fubini.bernoulli_numbers import bernoulli
from fubini.combinat import stirling1_row, stirling2_row
from fubini.polynomials import fubini_poly_recurrence, fubini_two_var


def test_concurrent_readers_see_single_threaded_values():
    expected = {
        "s2": stirling2_row(120),
        "s1": stirling1_row(120),
        "bern": bernoulli(60),
        "fub": fubini_poly_recurrence(50),
        "two": fubini_two_var(25),
        "ab": apostol_bernoulli(22),
    }

    def worker(seed: int):
        return {
            "s2": stirling2_row(120),
            "s1": stirling1_row(120),
            "bern": bernoulli(60),
            "fub": fubini_poly_recurrence(50),
            "two": fubini_two_var(25),
            "ab": apostol_bernoulli(22),
        }

    with ThreadPoolExecutor(max_workers=8) as pool:
        results = list(pool.map(worker, range(16)))
    for result in results:
        assert result == expected


def test_cached_values_are_shared_not_recomputed():
    assert stirling2_row(40) is stirling2_row(40)
    assert fubini_poly_recurrence(30) is fubini_poly_recurrence(30)
    assert apostol_bernoulli(12) is apostol_bernoulli(12)
