import math
import time

from cubiccensus.abelian import (
    CyclicFieldLabel,
    conductor_csv_lines,
    conductors,
    count_cyclic_fields,
    count_cyclic_fields_matching,
    cyclic_count_at_disc,
    labels,
    splitting_in_cyclic,
)
from cubiccensus.forms import SplittingSymbol

# counts of cyclic cubic fields with disc <= 10^j, j = 2..11
PUBLISHED_CYCLIC_COUNTS = {
    2: 2, 3: 5, 4: 16, 5: 51, 6: 159, 7: 501, 8: 1592, 9: 5008, 10: 15851, 11: 50152,
}


def test_counts_against_published_grid():
    start = time.perf_counter()
    for j, expected in PUBLISHED_CYCLIC_COUNTS.items():
        assert count_cyclic_fields(10**j) == expected, j
    assert time.perf_counter() - start < 10.0


def test_small_conductor_list():
    # disc <= 10^3 comes from conductors 7, 9, 13, 19, 31
    assert [f for f, _ in conductors(31)] == [7, 9, 13, 19, 31]
    assert count_cyclic_fields(1000) == 5


def test_label_multiplicities():
    assert cyclic_count_at_disc(49) == 1
    assert cyclic_count_at_disc(100) == 0
    assert cyclic_count_at_disc(3969) == 2  # conductor 63 = 9*7
    assert cyclic_count_at_disc(8281) == 2  # conductor 91 = 7*13
    assert cyclic_count_at_disc(81) == 1
    assert cyclic_count_at_disc(729) == 0   # 27 is not a conductor


def test_count_matches_coefficient_sum():
    for x in (100, 1000, 10_000):
        total = sum(cyclic_count_at_disc(n) for n in range(1, x + 1))
        assert total == count_cyclic_fields(x)


def test_dirichlet_series_expansion_consistency():
    """Coefficients of -1 + (1 + 2/81^s) prod (1 + 2/p^2s) are twice the
    per-discriminant field counts, for every index up to 10^6."""
    N = 10**6
    from cubiccensus.abelian import _conductor_primes

    coeffs: dict[int, int] = {}

    def rec(idx, prod, coef, primes):
        if prod > 1:
            coeffs[prod] = coeffs.get(prod, 0) + coef
        for i in range(idx, len(primes)):
            pp = primes[i] * primes[i]
            if prod * pp > N:
                break
            rec(i + 1, prod * pp, coef * 2, primes)

    primes = [p for p in _conductor_primes(1000) if p * p <= N]
    rec(0, 1, 1, primes)
    for base in list(coeffs.keys()):
        if base * 81 <= N:
            coeffs[base * 81] = coeffs.get(base * 81, 0) + 2 * coeffs[base]
    if 81 <= N:
        coeffs[81] = coeffs.get(81, 0) + 2
    for n, c in coeffs.items():
        assert c == 2 * cyclic_count_at_disc(n), n
    # and nothing was missed going the other way
    for n in range(1, 10_000):
        assert coeffs.get(n, 0) == 2 * cyclic_count_at_disc(n), n


def test_splitting_examples():
    f7 = next(l for l in labels(7) if l.conductor == 7)
    assert splitting_in_cyclic(f7, 2) is SplittingSymbol.INERT
    assert splitting_in_cyclic(f7, 7) is SplittingSymbol.RAMIFIED_TOTAL
    assert splitting_in_cyclic(f7, 29) is SplittingSymbol.SPLIT
    # cubic residues mod 9 are {1, 8}
    f9 = next(l for l in labels(9) if l.conductor == 9)
    assert splitting_in_cyclic(f9, 2) is SplittingSymbol.INERT
    assert splitting_in_cyclic(f9, 5) is SplittingSymbol.INERT
    assert splitting_in_cyclic(f9, 17) is SplittingSymbol.SPLIT  # 17 = 8 mod 9
    assert splitting_in_cyclic(f9, 19) is SplittingSymbol.SPLIT  # 19 = 1 mod 9


def test_splitting_conjugation_invariance():
    # conjugate labels describe the same field, so unramified splitting must
    # not depend on which of the two conjugate characters was pinned
    for lab in labels(100):
        conj = CyclicFieldLabel(
            lab.conductor, lab.factors, tuple(3 - e for e in lab.exponents)
        )
        for p in (2, 3, 5, 7, 11, 13):
            if lab.conductor % p == 0:
                continue
            assert splitting_in_cyclic(lab, p) is splitting_in_cyclic(conj, p)


def test_refined_counts():
    assert count_cyclic_fields_matching(10**7, sign="-") == 0
    assert count_cyclic_fields_matching(10**7, {2: SplittingSymbol.PARTIAL}) == 0
    assert count_cyclic_fields_matching(10**7) == 501
    # conductors divisible by 7 up to sqrt(10^4) = 100: 7 (1 field),
    # 63 (2 fields), 91 (2 fields)
    assert count_cyclic_fields_matching(10**4, {7: SplittingSymbol.RAMIFIED_TOTAL}) == 5


def test_partition_over_symbols():
    x = 10**6
    total = count_cyclic_fields(x)
    for p in (2, 3, 5, 7):
        parts = sum(
            count_cyclic_fields_matching(x, {p: s})
            for s in (SplittingSymbol.SPLIT, SplittingSymbol.INERT, SplittingSymbol.RAMIFIED_TOTAL)
        )
        assert parts == total, p


def test_labels_count_matches_conductor_weights():
    bound = 1000
    from collections import Counter

    per_conductor = Counter(l.conductor for l in labels(bound))
    assert dict(per_conductor) == {f: n for f, n in conductors(bound)}


def test_splitting_density_sanity():
    """Unramified primes should split in about 1/3 of fields: for p = 2 over
    all conductors <= 2000, the split fraction lands near 1/3."""
    labs = [l for l in labels(2000) if l.conductor % 2]
    split = sum(splitting_in_cyclic(l, 2) is SplittingSymbol.SPLIT for l in labs)
    assert 0.25 < split / len(labs) < 0.42


def test_csv_dump():
    lines = list(conductor_csv_lines(63))
    assert lines[0] == "conductor,t,n_fields,disc"
    assert "63,2,2,3969" in lines
