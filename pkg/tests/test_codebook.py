import random
from fractions import Fraction

import numpy as np
import pytest

from conftest import rand_k
from unidiv.algebra import (
    STANDARD_ALGEBRA,
    inverse,
    involution,
    reduced_norm,
    subfield_element,
    to_zeta9,
    worked_example,
)
from unidiv.codebook import (
    Box,
    diversity_product,
    enumerate_subfield,
    generate_codebook,
    hilbert90_unit,
    iter_box_tuples,
    min_det_report,
    norm_witness_search,
    nu_generator,
    pairwise_determinants,
    reduce_generator_poly,
    subfield,
    subfield_table,
    subfield_table_row,
    unitary_matrix_numeric,
)
from unidiv.fields import KElem, LElem, ZETA3
from unidiv.polynomials import (
    Polynomial,
    discriminant_cubic,
    has_rational_root,
)

A = STANDARD_ALGEBRA
ONE = A.one()


def test_box_values_order():
    vals = Box(2, 2).values()
    assert vals[0] == 0
    assert set(vals) == {
        Fraction(n, d) for n in range(-2, 3) for d in (1, 2)
    }
    heights = [max(abs(v.numerator), v.denominator) if v else 0 for v in vals]
    assert heights == sorted(heights)


def test_box_validation():
    with pytest.raises(ValueError):
        Box(0, 1)
    with pytest.raises(ValueError):
        Box(1, 0)


def test_iter_box_tuples_counts_and_order():
    tuples = list(iter_box_tuples(Box(1, 1), 6))
    assert len(tuples) == 3**6 - 1
    assert len(set(tuples)) == len(tuples)
    # first coordinate varies fastest; the first candidate is the constant 1
    assert tuples[0] == (Fraction(1), 0, 0, 0, 0, 0)
    # height stratification: all height-1 tuples precede any height-2 tuple
    big = list(iter_box_tuples(Box(2, 1), 6))
    hts = [max(abs(f.numerator) for f in t) for t in big]
    assert hts == sorted(hts)


def test_enumerate_contains_worked_example_unit_source():
    sub = subfield("zeta9")
    stream = list(enumerate_subfield(sub, Box(1, 1)))
    assert worked_example().x in stream
    assert len(stream) == 728


def test_subfield_specs():
    for kind, k in (("zeta9", None), ("nu", 1), ("nu", 3), ("L", None)):
        sub = subfield(kind, k)
        g = sub.generator
        assert not g.is_in_k()
        # involution stability was checked at construction; spot-check closure
        assert sub.element([1, 0, 0, 0, 0, 0]) == ONE
    with pytest.raises(ValueError):
        subfield("nu")
    with pytest.raises(ValueError):
        subfield("unknown")


def test_nu_generators_are_involution_fixed():
    for k in range(1, 6):
        nu = nu_generator(k)
        assert involution(nu) == nu


def test_hilbert90_worked_example():
    w = worked_example()
    x = hilbert90_unit(w.x)
    assert to_zeta9(x) == w.unit_coeffs
    assert x * involution(x) == ONE


def test_hilbert90_gen():
    e = A.gen()
    x = hilbert90_unit(e)
    assert x == e * e
    assert x * involution(x) == ONE


def test_hilbert90_fixed_input_gives_identity():
    u = A.element(LElem(0, 2, 0), LElem(KElem(1, 1)), LElem(KElem(-1)))
    assert involution(u) == u
    assert hilbert90_unit(u) == ONE


def test_hilbert90_rejects_zero():
    with pytest.raises(ValueError):
        hilbert90_unit(A.zero())


def test_hilbert90_rejects_noncommuting():
    # theta + E does not commute with its involution image
    u = A.element(LElem(0, 1, 0), LElem(1), LElem(0))
    au = involution(u)
    assert u * au != au * u
    with pytest.raises(ValueError, match="commute"):
        hilbert90_unit(u)


def test_hilbert90_scaling_invariance():
    rng = random.Random(21)
    for _ in range(10):
        u = subfield_element(A, rand_k(rng, 3, 2), rand_k(rng, 3, 2), rand_k(rng, 3, 2))
        if u.is_zero():
            continue
        for c in (Fraction(2), Fraction(-1), Fraction(3, 4)):
            assert hilbert90_unit(u.scale(c)) == hilbert90_unit(u)


def test_unitary_matrix_numeric():
    w = worked_example()
    x = hilbert90_unit(w.x)
    m = np.array(unitary_matrix_numeric(x))
    assert np.max(np.abs(m @ m.conj().T - np.eye(3))) < 1e-12
    ident = np.array(unitary_matrix_numeric(ONE))
    assert np.max(np.abs(ident - np.eye(3))) == 0.0
    with pytest.raises(ValueError):
        unitary_matrix_numeric(w.x)  # x itself is not unitary


def test_generate_codebook_first_ten():
    cb = generate_codebook(subfield("zeta9"), Box(1, 1), 10)
    assert len(cb.elements) == 10
    assert cb.complete
    assert cb.elements[0] == ONE
    assert len(set(cb.elements)) == 10
    for x in cb.elements:
        assert x * involution(x) == ONE
    # brute-force oracle: ordered dedupe over the same stream
    seen = []
    for u in enumerate_subfield(subfield("zeta9"), Box(1, 1)):
        au = involution(u)
        if u * au != au * u:
            continue
        x = u * inverse(au)
        if x not in seen:
            seen.append(x)
        if len(seen) == 10:
            break
    assert seen == cb.elements


def test_generate_codebook_singleton():
    cb = generate_codebook(subfield("zeta9"), Box(1, 1), 1)
    assert cb.elements == [ONE]


def test_fixed_inputs_collapse_to_identity():
    # scalar rational u are involution-fixed; they all map to the identity
    sub = subfield("zeta9")
    units = {hilbert90_unit(sub.element([n, 0, 0, 0, 0, 0])) for n in (1, -1, 2)}
    assert units == {ONE}


def test_generate_codebook_partial_flag():
    cb = generate_codebook(subfield("zeta9"), Box(1, 1), 100000)
    assert not cb.complete
    assert len(cb.elements) == 182
    assert cb.candidates_scanned == 728
    assert cb.precondition_failures == 0


def test_generate_codebook_nu_subfield():
    cb = generate_codebook(subfield("nu", 1), Box(1, 1), 8)
    assert cb.complete
    assert cb.precondition_failures == 0
    for x in cb.elements:
        assert x * involution(x) == ONE


def test_diversity_pair_scalars():
    cb = generate_codebook(subfield("zeta9"), Box(1, 1), 2)
    cb.elements = [ONE, ONE.scale(-1)]
    cb.matrices = [unitary_matrix_numeric(x) for x in cb.elements]
    rep = diversity_product(cb)
    assert rep.exact_nonzero
    assert abs(rep.zeta - 1.0) < 1e-12
    assert abs(rep.min_abs_det - 8.0) < 1e-12


def test_diversity_requires_two_elements():
    with pytest.raises(ValueError):
        min_det_report([ONE])


def test_diversity_matches_numeric_oracle():
    cb = generate_codebook(subfield("zeta9"), Box(1, 1), 20)
    rep = diversity_product(cb)
    assert rep.exact_nonzero and rep.zeta > 0
    mats = [np.array(m) for m in cb.matrices]
    best = min(
        abs(np.linalg.det(mats[i] - mats[j]))
        for i in range(20)
        for j in range(i + 1, 20)
    )
    assert abs(best - rep.min_abs_det) <= 1e-9 * best


def test_diversity_zero_detected_exactly():
    rep = min_det_report([ONE, A.gen(), ONE])
    assert not rep.exact_nonzero
    assert rep.zeta == 0.0
    assert rep.pair == (0, 2)


def test_pairwise_determinants_lie_in_k():
    cb = generate_codebook(subfield("zeta9"), Box(1, 1), 6)
    for i, j, det in pairwise_determinants(cb.elements):
        assert isinstance(det, KElem)
        assert not det.is_zero()


def test_linear_family_form_of_diversity():
    # on a finite sample, the pairwise minimum equals the minimum of |det|
    # over the nonzero difference set
    cb = generate_codebook(subfield("zeta9"), Box(1, 1), 8)
    rep = min_det_report(cb.elements)
    diffs = [
        cb.elements[i] - cb.elements[j]
        for i in range(8)
        for j in range(8)
        if i != j
    ]
    best = min(abs(reduced_norm(d).to_complex()) for d in diffs if not d.is_zero())
    assert abs(best - rep.min_abs_det) < 1e-12


def test_norm_witness_positive_controls():
    assert norm_witness_search(KElem(1), Box(1, 1), method="exact") == LElem(1)
    assert norm_witness_search(KElem(8), Box(2, 1), method="exact") == LElem(2)
    k = KElem(Fraction(1, 8))
    found = norm_witness_search(k, Box(1, 2), method="exact")
    assert found is not None and found.norm_to_k() == k


def test_norm_witness_negative_small_box():
    assert norm_witness_search(ZETA3, Box(1, 1), method="exact") is None


def test_norm_witness_methods_agree():
    box = Box(1, 1)
    for target in (KElem(1), ZETA3, KElem(8)):
        exact = norm_witness_search(target, box, method="exact")
        filtered = norm_witness_search(target, box, method="filtered")
        assert exact == filtered
    with pytest.raises(ValueError):
        norm_witness_search(KElem(1), box, method="bogus")


def test_reduce_generator_poly_requires_integral_input():
    with pytest.raises(ValueError):
        reduce_generator_poly(Polynomial([Fraction(1, 2), 0, 0, 1]))


def test_table_rows_match_reference_values():
    expected = {
        1: ("X^3+X^2-5X-3", ((2, 2), (3, 1), (47, 1))),
        2: ("X^3-X^2-12X+1", ((11, 1), (659, 1))),
        3: ("X^3-6X-1", ((3, 3), (31, 1))),
        4: ("X^3-11X+9", ((3137, 1),)),
        5: ("X^3-X^2-61X-13", ((2, 2), (307, 1), (727, 1))),
    }
    for row in subfield_table():
        poly, factors = expected[row.k]
        assert str(row.poly) == poly
        assert row.factors == factors
        assert has_rational_root(row.poly) is None
        assert row.discriminant == discriminant_cubic(row.poly)


def test_table_row_same_field_invariant():
    # the reduced polynomial's discriminant differs from the generator's by
    # the square of a rational (same field, different order)
    from unidiv.algebra import char_poly_rational

    for k in range(1, 6):
        chi = char_poly_rational(nu_generator(k))
        row = subfield_table_row(k)
        ratio = Fraction(discriminant_cubic(chi), discriminant_cubic(row.poly))
        assert ratio > 0
        num_root = int(ratio.numerator ** 0.5 + 0.5)
        den_root = int(ratio.denominator ** 0.5 + 0.5)
        assert num_root**2 == ratio.numerator and den_root**2 == ratio.denominator


def test_table_row_bounds():
    with pytest.raises(ValueError):
        subfield_table_row(0)
    with pytest.raises(ValueError):
        subfield_table_row(6)
