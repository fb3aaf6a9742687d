"""
Exact numerics: rationals, polynomials, algebraic numbers and symmetric matrices.
"""

import pickle
from fractions import Fraction

import pytest
import sympy

from src.numerics.algebraic import (
    AlgebraicNumber,
    compare,
    distinct_root_count,
    evaluate,
    evaluate_ratio,
    merge_equal,
    multisets_equal,
    refine,
    sign_at,
    sturm_isolate,
)
from src.numerics.matrix import (
    SymmetricRationalMatrix,
    charpoly,
    charpoly_rows,
    inertia,
    ldl_psd_certificate,
    verify_ldl_certificate,
)
from src.numerics.polynomial import Poly, poly_gcd, squarefree_decomposition, trace_mod
from src.numerics.rationals import format_rational, parse_rational, parse_rational_list, parse_rational_range
from src.utils.errors import RationalParseError

SQRT2 = AlgebraicNumber(Poly([-2, 0, 1]), Fraction(1), Fraction(2))
SQRT5 = AlgebraicNumber(Poly([-5, 0, 1]), Fraction(2), Fraction(3))


class TestRationals:
    def test_parse(self):
        assert parse_rational("3/6") == Fraction(1, 2)
        assert parse_rational("-1/2") == Fraction(-1, 2)
        assert parse_rational(" 7 ") == 7
        assert parse_rational(4) == 4

    @pytest.mark.parametrize("text", ["1.5", "1/0", "abc", "", "1/-2"])
    def test_parse_rejects(self, text):
        with pytest.raises(RationalParseError):
            parse_rational(text)

    def test_floats_are_not_rationals(self):
        with pytest.raises(RationalParseError):
            parse_rational(0.5)

    def test_format(self):
        assert format_rational(Fraction(6, 3)) == "2"
        assert format_rational(Fraction(-3, 4)) == "-3/4"

    def test_list_and_range(self):
        assert parse_rational_list("9/10,1,2") == [Fraction(9, 10), 1, 2]
        values = parse_rational_range("1/10:9/10:1/10")
        assert len(values) == 9
        assert values[0] == Fraction(1, 10) and values[-1] == Fraction(9, 10)
        assert len(parse_rational_range("1/100:1:1/100")) == 100

    def test_range_needs_positive_step(self):
        with pytest.raises(RationalParseError):
            parse_rational_range("0:1:0")
        with pytest.raises(RationalParseError):
            parse_rational_range("0:1")


class TestPoly:
    def test_arithmetic(self):
        p = Poly.from_roots([1, 2])
        assert p.coeffs == (2, -3, 1)
        assert p(Fraction(1)) == 0
        q, r = divmod(p, Poly([-1, 1]))
        assert q == Poly([-2, 1]) and r.is_zero()
        assert Poly([0, 0, 0]).degree == -1

    def test_primitive_and_gcd(self):
        p = Poly([Fraction(1, 2), Fraction(-3, 2)])
        assert p.primitive() == Poly([-1, 3])
        g = poly_gcd(Poly.from_roots([1, 2, 3]), Poly.from_roots([2, 3, 5]))
        assert g == Poly.from_roots([2, 3])

    def test_squarefree_decomposition(self):
        p = Poly.from_roots([1, 1, -2])
        assert squarefree_decomposition(p) == [(Poly([2, 1]), 1), (Poly([-1, 1]), 2)]
        assert p.squarefree_part() == Poly.from_roots([1, -2])

    def test_trace_mod_sums_over_roots(self):
        # roots of x^2 - 5 are +-sqrt5; x^2 + x evaluates to 5 + sqrt5 and 5 - sqrt5
        assert trace_mod(Poly([0, 1, 1]), Poly([-5, 0, 1])) == 10

    def test_str(self):
        assert str(Poly([-1, 0, 2])) == "2*x^2 - 1"

    def test_ring_is_sympy_qq(self):
        p = Poly([Fraction(1, 2), 0, 3])
        assert isinstance(p.rep, sympy.Poly)
        assert p.rep.get_domain() == sympy.QQ
        assert p.rep.as_expr() == 3 * sympy.Symbol("x") ** 2 + sympy.Rational(1, 2)
        assert (p * p).rep == p.rep ** 2

    def test_survives_pickling(self):
        p = Poly([Fraction(-1, 3), 2, 1])
        copy = pickle.loads(pickle.dumps(p))
        assert copy == p and copy.rep == p.rep


class TestAlgebraic:
    def test_isolation_of_sqrt2(self):
        roots = sturm_isolate(Poly([-2, 0, 1]))
        assert len(roots) == 2
        assert all(r.minimal_polynomial == Poly([-2, 0, 1]) for r in roots)
        assert all(r.validate() for r in roots)
        assert roots[0] < 0 < roots[1]

    def test_rational_roots_are_split_off(self):
        roots = sturm_isolate(Poly.from_roots([1]) * Poly([-2, 0, 1]))
        assert [r.is_rational for r in roots] == [False, True, False]
        assert roots[1] == 1
        assert roots[2].minimal_polynomial == Poly([-2, 0, 1])

    def test_rational_roots_with_denominators(self):
        roots = sturm_isolate(Poly.from_roots([Fraction(-1, 3), 0, Fraction(5, 2)]))
        assert all(r.is_rational for r in roots)
        assert [r.value for r in roots] == [Fraction(-1, 3), 0, Fraction(5, 2)]

    def test_isolation_matches_sympy(self):
        x = sympy.symbols("x")
        coeffs = [1, 1, -4, 0, 1]
        expected = sorted(float(r.evalf()) for r in sympy.real_roots(sympy.Poly(list(reversed(coeffs)), x)))
        roots = sturm_isolate(Poly(coeffs))
        assert len(roots) == len(expected)
        for root, value in zip(roots, expected):
            assert abs(root.approx() - value) < 1e-9

    def test_distinct_root_count(self):
        assert distinct_root_count(Poly.from_roots([1, 1]) * Poly([1, 0, 1])) == 1
        assert distinct_root_count(Poly.from_roots([0, 1, 2, 2])) == 3
        with pytest.raises(ValueError):
            distinct_root_count(Poly())

    def test_refine(self):
        tight = refine(SQRT2, Fraction(1, 10**6))
        assert tight.width <= Fraction(1, 10**6)
        assert tight.lo ** 2 <= 2 <= tight.hi ** 2
        assert tight == SQRT2

    def test_refine_rejects_nonpositive_width(self):
        with pytest.raises(ValueError):
            refine(SQRT2, 0)

    def test_sign_at(self):
        assert sign_at(SQRT5, Poly([-3, 1])) == -1
        assert sign_at(SQRT2, Poly([-2, 0, 1])) == 0
        assert sign_at(SQRT2, Poly([-1, 1])) == 1
        assert sign_at(AlgebraicNumber.rational(Fraction(1, 2)), Poly([-1, 2])) == 0

    def test_compare(self):
        assert compare(SQRT2, AlgebraicNumber.rational(Fraction(3, 2))) == -1
        assert compare(SQRT5, SQRT2) == 1
        assert AlgebraicNumber.rational(3) == 3
        other = AlgebraicNumber(Poly([-2, 0, 1]), Fraction(5, 4), Fraction(3, 2))
        assert compare(SQRT2, other) == 0

    def test_evaluate(self):
        assert evaluate(SQRT2, Poly([0, 0, 1])) == 2
        golden = evaluate(SQRT5, Poly([Fraction(-1, 2), Fraction(1, 2)]))
        assert golden.minimal_polynomial == Poly([-1, 1, 1])
        assert abs(golden.approx() - 0.6180339887) < 1e-9

    def test_evaluate_ratio(self):
        half_root = evaluate_ratio(SQRT2, Poly.constant(1), Poly.x())
        assert half_root.minimal_polynomial == Poly([-1, 0, 2])
        assert abs(half_root.approx() - 0.7071067812) < 1e-9
        with pytest.raises(ZeroDivisionError):
            evaluate_ratio(SQRT2, Poly.constant(1), Poly([-2, 0, 1]))

    def test_json_round_trip(self):
        data = SQRT5.to_json()
        assert data["minimal_polynomial"] == [-5, 0, 1]
        assert AlgebraicNumber.from_json(data) == SQRT5
        assert AlgebraicNumber.rational(Fraction(-9, 2)).to_json() == "-9/2"

    def test_merge_and_multiset_equality(self):
        merged = merge_equal([(SQRT2, 1), (AlgebraicNumber.rational(1), 2), (SQRT2, 3)])
        assert [m for _, m in merged] == [4, 2]
        assert multisets_equal(merged, [(AlgebraicNumber.rational(1), 2), (SQRT2, 4)])
        assert not multisets_equal(merged, [(AlgebraicNumber.rational(1), 2), (SQRT2, 3)])


class TestMatrix:
    def test_symmetry_enforced(self):
        with pytest.raises(ValueError):
            SymmetricRationalMatrix.from_rows([[0, 1], [2, 0]])

    def test_charpoly_of_complete_graph(self):
        k3 = SymmetricRationalMatrix.ones(3) - SymmetricRationalMatrix.identity(3)
        assert charpoly(k3) == Poly([-2, -3, 0, 1])

    def test_charpoly_of_four_cycle_distance_matrix(self):
        rows = [[0, 1, 2, 1], [1, 0, 1, 2], [2, 1, 0, 1], [1, 2, 1, 0]]
        assert charpoly(SymmetricRationalMatrix.from_rows(rows)) == Poly([0, -16, -12, 0, 1])

    def test_charpoly_matches_sympy(self):
        rows = [
            [1, Fraction(1, 2), 0, -2],
            [Fraction(1, 2), -2, 3, 0],
            [0, 3, Fraction(1, 3), 1],
            [-2, 0, 1, 0],
        ]
        x = sympy.symbols("x")
        expected = sympy.Matrix([[sympy.Rational(v.numerator, v.denominator) for v in map(Fraction, row)] for row in rows])
        coeffs = [Fraction(int(c.p), int(c.q)) for c in expected.charpoly(x).all_coeffs()]
        assert charpoly_rows(rows) == list(reversed(coeffs))

    def test_inertia(self):
        assert inertia(SymmetricRationalMatrix.diagonal([2, 0, -5])).to_dict() == {"n_pos": 1, "n_zero": 1, "n_neg": 1}
        k4 = SymmetricRationalMatrix.ones(4) - SymmetricRationalMatrix.identity(4)
        assert inertia(k4).to_dict() == {"n_pos": 1, "n_zero": 0, "n_neg": 3}
        # zero diagonal forces a 2x2 pivot
        assert inertia(SymmetricRationalMatrix.from_rows([[0, 1], [1, 0]])).to_dict() == {"n_pos": 1, "n_zero": 0, "n_neg": 1}
        assert inertia(SymmetricRationalMatrix.from_rows([[0, 0], [0, 0]])).n_zero == 2

    def test_ldl_certificate(self):
        matrix = SymmetricRationalMatrix.from_rows([[2, 1], [1, 2]])
        cert = ldl_psd_certificate(matrix)
        assert cert is not None and verify_ldl_certificate(matrix, cert)
        singular = SymmetricRationalMatrix.ones(2)
        cert = ldl_psd_certificate(singular)
        assert cert.diagonal == (1, 0)
        assert verify_ldl_certificate(singular, cert)

    def test_ldl_rejects_indefinite(self):
        assert ldl_psd_certificate(SymmetricRationalMatrix.from_rows([[0, 1], [1, 0]])) is None
        assert ldl_psd_certificate(SymmetricRationalMatrix.diagonal([1, -1])) is None

    def test_row_sums(self):
        k4 = SymmetricRationalMatrix.ones(4) - SymmetricRationalMatrix.identity(4)
        assert k4.constant_row_sum() == 3
        assert SymmetricRationalMatrix.diagonal([1, 2]).constant_row_sum() is None
