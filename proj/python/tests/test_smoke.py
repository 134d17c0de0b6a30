import pytest

import parkgram as pg


def test_rational_arithmetic():
    half = pg.Rational("1/2")
    assert str(half + half) == "1"
    assert str(pg.Rational(3, 12)) == "1/4"
    assert pg.Rational("2/3").pow(-2) == pg.Rational("9/4")
    assert pg.Rational("7/2").floor() == 3


def test_polynomial_roundtrip():
    p = pg.Polynomial.parse("A^3*S + 1/2*x")
    assert pg.Polynomial.from_json(p.to_json()) == p
    assert str(p.substitute({"A": 1, "S": 2, "x": "4"})) == "4"


def test_grammar_derivative():
    g = pg.Grammar.builtin("G")
    d3 = g.derive_n(pg.Polynomial.var("S"), 3)
    assert str(d3.substitute({"A": 1, "S": 1})) == "16"
    assert pg.tree_coefficient_table(4) == {0: 24, 1: 46, 2: 40, 3: 15}


def test_counts_agree():
    assert pg.count_rational(4, 7) == 4096
    u = pg.ab_threshold_vector(3, 2, 4)
    assert len(pg.enumerate_u_parking(u)) == 243
    assert str(pg.count_u_incl_excl(u)) == "243"
    assert str(pg.count_periodic_specsum(3, 2, 2)) == "243"
    assert pg.count_periodic_scaled(3, 2, 2) == 3888
    assert pg.count_periodic_egf(3, 2, 2) == 243
    assert pg.count_periodic_grammar(3, 2, 2) == 3888


def test_parking_membership_and_paths():
    assert pg.is_u_parking([3, 1, 4, 1, 2, 3, 1], [1, 1, 2, 2, 3, 3, 4])
    assert pg.ab_to_u_pf([2, 0, 3, 0, 1, 2, 0]) == [3, 1, 4, 1, 2, 3, 1]
    path = pg.dyck_path_of([2, 0, 3, 0, 1, 2, 0], 4, 7)
    assert str(path) == "E[1]E[3]E[6]N E[4]N E[0]E[5]N E[2]N"
    assert path.heights() == [2, 0, 3, 0, 1, 2, 0]


def test_q_polynomials():
    assert pg.qpoly_str(pg.q_classical(2)) == "q^2 + 2*q"
    assert pg.q_periodic(3, 2, 2) == pg.q_bruteforce(pg.ab_threshold_vector(3, 2, 4))
    assert pg.qpoly_dense_coeffs(pg.q_classical(2)) == ["0", "2", "1"]


def test_decomposition():
    dec = pg.decompose_blocks([1, 2, 4, 5], 3, 2, 2)
    assert dec.lengths == [2, 2]
    assert dec.blocks == [[1, 2], [4, 5]]
    assert pg.normalize_block([4, 5], 2, [2, 2], 3, 2) == [1, 2]


def test_identities():
    lhs, rhs = pg.abel_identity_sides(["1/2", 3], 4)
    assert lhs == rhs
    assert pg.check_scaling(["1/3", "5/7"], 21)


def test_errors_surface_as_python_exceptions():
    with pytest.raises(pg.ParkgramError):
        pg.count_rational(2, 4)  # gcd violation
    with pytest.raises(pg.ParkgramError):
        pg.q_periodic(4, 2, 1)  # modulus violation
