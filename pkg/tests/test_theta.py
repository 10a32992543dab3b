import pytest

from qdissect import theta
from qdissect.series import QSeries, equal_upto
from qdissect.theta import (
    Const,
    Dissect,
    Pow,
    Ref,
    Scale,
    Shift,
    Sub,
    Sum,
    build,
    catalog,
    catalog_entry,
    evaluate,
    jacobi_cube_sum,
    pentagonal_sum,
    phi_neg_sum,
    phi_sum,
    psi_sum,
    verify_entry,
)

UNIT_PRECISION = 80  # full default precisions are exercised by the suite


class TestNamedSeries:
    def test_psi_prefix(self):
        assert build("psi", 8).coeffs == (1, 1, 0, 1, 0, 0, 1, 0)

    def test_phi_prefix(self):
        assert build("phi", 5).coeffs == (1, 2, 0, 0, 2)

    def test_phi_neg_prefix(self):
        assert build("phi_neg", 5).coeffs == (1, -2, 0, 0, 2)

    def test_w_prefixes(self):
        assert build("w", 6, 4).coeffs == (1, 4, 9, 20, 42, 80)
        assert build("w", 5, 2).coeffs == (1, 4, 11, 28, 63)

    def test_c_prefixes(self):
        assert build("c", 9, 1).coeffs == (1, 2, 6, 12, 25, 46, 86, 148, 255)
        assert build("c", 9, 4).coeffs == (1, 0, 1, 0, 2, 0, 3, 0, 5)

    def test_d_prefix(self):
        assert build("d", 11).coeffs == (1, 0, -1, 0, -1, 0, 0, 0, 0, 0, 1)

    def test_p_is_partition_function(self):
        assert build("p", 8).coeffs == (1, 1, 2, 3, 5, 7, 11, 15)

    def test_f_parameter(self):
        assert build("f", 6, 2).coeffs == (1, 0, -1, 0, -1, 0)

    def test_parameter_validation(self):
        with pytest.raises(ValueError):
            build("w", 5)  # missing parameter
        with pytest.raises(ValueError):
            build("phi", 5, 3)  # spurious parameter
        with pytest.raises(ValueError):
            build("nope", 5)


class TestClosedSums:
    def test_dual_forms_agree(self):
        n = 300
        assert build("f", n, 1).coeffs == pentagonal_sum(n).coeffs
        assert build("f", n, 1).power(3).coeffs == jacobi_cube_sum(n).coeffs
        assert build("phi", n).coeffs == phi_sum(n).coeffs
        assert build("phi_neg", n).coeffs == phi_neg_sum(n).coeffs
        assert build("psi", n).coeffs == psi_sum(n).coeffs

    def test_pentagonal_sum_scaling(self):
        assert pentagonal_sum(30, k=3).coeffs == build("f", 30, 3).coeffs


class TestEvaluator:
    def test_const_and_shift(self):
        assert evaluate(Const(5), 3).coeffs == (5, 0, 0)
        assert evaluate(Shift(1, Const(2)), 3).coeffs == (0, 2, 0)

    def test_shift_past_precision_is_zero(self):
        assert evaluate(Shift(9, Const(1)), 3).coeffs == (0, 0, 0)

    def test_substitution(self):
        got = evaluate(Sub(3, Ref("psi")), 8)
        want = build("psi", 3).substitute_power(3).truncate(8)
        assert got.coeffs == want.coeffs

    def test_dissect_requests_enough_precision(self):
        got = evaluate(Dissect(Ref("w", 4), 2, 1), 3)
        w4 = build("w", 7, 4)
        assert got.coeffs == (w4[1], w4[3], w4[5])

    def test_sum_scale_pow(self):
        expr = Sum((Scale(2, Const(1)), Pow(Ref("f", 1), 2)))
        got = evaluate(expr, 5)
        want = build("f", 5, 1).power(2) + QSeries.one(5).scale(2)
        assert got.coeffs == want.coeffs

    def test_rejects_non_node(self):
        with pytest.raises(TypeError):
            evaluate("f1", 4)


class TestCatalog:
    def test_size_and_unique_ids(self):
        entries = catalog()
        assert len(entries) >= 14
        assert len({e.id for e in entries}) == len(entries)

    def test_lookup(self):
        assert catalog_entry("key-identity").id == "key-identity"
        with pytest.raises(KeyError):
            catalog_entry("missing")

    @pytest.mark.parametrize("entry", catalog(), ids=lambda e: e.id)
    def test_entry_passes(self, entry):
        report = verify_entry(entry, UNIT_PRECISION)
        assert report.status == "pass", (
            f"{entry.id} mismatch at {report.mismatch_index}: "
            f"{report.mismatch_left} != {report.mismatch_right}"
        )

    def test_precision_zero_is_vacuous_pass(self):
        report = verify_entry(catalog_entry("key-identity"), 0)
        assert report.status == "pass"
        assert report.note == "vacuous at precision 0"

    def test_broken_entry_reports_mismatch(self):
        entry = theta.IdentityEntry(
            "broken", "f1 = f2 (false)", Ref("f", 1), Ref("f", 2)
        )
        report = verify_entry(entry, 10)
        assert report.status == "fail"
        assert report.mismatch_index == 1
        assert (report.mismatch_left, report.mismatch_right) == (-1, 0)


class TestDissectionRecombination:
    def test_two_dissections_rebuild_w(self):
        for t in (2, 6):
            w = build("w", 60, t)
            even = evaluate(Dissect(Ref("w", t), 2, 0), 30)
            odd = evaluate(Dissect(Ref("w", t), 2, 1), 30)
            rebuilt = [0] * 60
            rebuilt[0::2] = even.coeffs
            rebuilt[1::2] = odd.coeffs
            assert tuple(rebuilt) == w.coeffs

    def test_three_dissection_rebuilds_a(self):
        a = build("a", 60)
        parts = [evaluate(Dissect(Ref("a"), 3, r), 20) for r in range(3)]
        rebuilt = [0] * 60
        for r, part in enumerate(parts):
            rebuilt[r::3] = part.coeffs
        assert tuple(rebuilt) == a.coeffs

    def test_w3_three_dissection_rebuilds(self):
        w3 = build("w", 60, 3)
        parts = [evaluate(Dissect(Ref("w", 3), 3, r), 20) for r in range(3)]
        rebuilt = [0] * 60
        for r, part in enumerate(parts):
            rebuilt[r::3] = part.coeffs
        assert tuple(rebuilt) == w3.coeffs
