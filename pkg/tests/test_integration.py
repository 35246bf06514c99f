"""Cross-module consistency: symbolic predictions against measured histograms.

These tests tie the intersection solver, the classification layer, and the
measure engines together: a crossing's address count predicts the local
dimension of the measure at that point, and the histogram-side estimator
must reproduce it.
"""

import math

import pytest

import bernconv as bc


def inside_record(pb, pc):
    recs = [r for r in bc.curve_intersection(bc.from_rational(*pb),
                                             bc.from_rational(*pc))
            if r.inside_D]
    assert len(recs) == 1
    return recs[0]


def test_two_address_point_has_maximal_local_dimension():
    # both sources preperiodic and the forward orbit stays outside the
    # overlap, so the crossing point has exactly two addresses and local
    # dimension log 2 / log(1/s)
    rec = inside_record((5, 12), (25, 48))
    assert bc.orbit_outside_D(rec)
    predicted = math.log(2) / math.log(1 / rec.s)
    table = bc.cdf(bc.transfer_measure(rec.s, 20000))
    measured = bc.local_dimension(table, rec.z, 1e-4, 0.01).slope
    assert measured == pytest.approx(predicted, abs=0.05)


def test_singular_crossing_has_sub_unit_local_dimension():
    # both sources periodic with cycle lengths (3, 4); the growth criterion
    # holds, so the local dimension at the crossing sits below 1, near the
    # growth-rate bound
    rec = inside_record((3, 7), (8, 15))
    verdict = bc.singularity_test(3, 4, rec.s)
    assert verdict.singular
    table = bc.cdf(bc.transfer_measure(rec.s, 20000))
    measured = bc.local_dimension(table, rec.z, 1e-4, 0.003).slope
    assert measured < 0.95
    assert measured == pytest.approx(verdict.dim_bound, abs=0.05)


def test_quantile_identity_fails_above_entry_parameter():
    # negative control: beyond t* the curve enters the overlap and stops
    # being the b-quantile, so the identity must break down visibly
    b = bc.from_rational(8, 15)
    ts = bc.t_star(b)
    assert ts == pytest.approx(0.5188, abs=1e-3)
    curve = bc.curve_of(b)
    t = 0.55
    assert t > ts
    table = bc.cdf(bc.transfer_measure(t, 20000))
    gap = abs(float(table(curve.eval(t))) - float(b.value()))
    assert gap > 0.003


def test_center_zero_parameter_ties_to_complement_crossing():
    # the complement pair (11/24, 13/24) crosses at z = 1/2 exactly at the
    # parameter whose reciprocal is the Garsia root of b^3 - 2b - 2, and the
    # histogram there dips at the center
    rec = inside_record((11, 24), (13, 24))
    nc = bc.classify_from_t_polynomial(rec.cleared_polynomial, t_root=rec.s)
    assert nc.tag == "Garsia"
    assert abs(nc.beta ** 3 - 2 * nc.beta - 2) < 1e-8
    h = bc.transfer_measure(rec.s, 20000)
    import numpy as np
    w = h.weights
    assert w[10000] < 0.5 * float(np.median(w))
