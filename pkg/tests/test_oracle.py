"""
Explicit-graph oracle: constructions, distances, matrices, local graphs and witnesses.
"""

from fractions import Fraction

import networkx as nx
import numpy as np
import pytest

from src.drg.intersection_array import IntersectionArray
from src.drg.spectrum import spectrum_of_gamma
from src.numerics.algebraic import AlgebraicNumber, multisets_equal
from src.numerics.matrix import inertia
from src.oracle.families import FamilyDescriptor, build_family, clique_extension
from src.oracle.graph import Graph, all_pairs_distances, read_edge_list, write_edge_list
from src.oracle.local import local_graph, local_interlacing_check, local_min_eigenvalue_bound_check
from src.oracle.matrices import (
    adjacency_matrix,
    clique_extension_spectrum_check,
    default_order_limit,
    explicit_spectrum,
    interlacing_holds,
    negative_type_inequality,
    negative_type_test_vectors,
    q_distance_matrix,
    semimetric_check,
)
from src.oracle.regularity import contains_induced_krr, verify_distance_regular
from src.oracle.witness import approximate_witness_vectors, negative_type_witness, standard_representation_gram
from src.utils.config import reset_config
from src.utils.errors import (
    Disconnected,
    InvalidFamilyParameters,
    NotConstantRowSum,
    NotOnePositive,
    OrderLimitExceeded,
    PreconditionNotMet,
    SizeLimitExceeded,
    UsageError,
)


def spectrum_dict(spectrum):
    return {str(value): m for value, m in spectrum}


def q_matrix(family, q):
    return q_distance_matrix(all_pairs_distances(build_family(family)), Fraction(q))


class TestFamilies:
    @pytest.mark.parametrize(
        "family, n, edges",
        [
            ("johnson:6,3", 20, 90),
            ("hamming:3,3", 27, 81),
            ("hypercube:4", 16, 32),
            ("halved_cube:5", 16, 80),
            ("cycle:7", 7, 7),
            ("complete_bipartite:3,2", 5, 6),
            ("petersen", 10, 15),
            ("icosahedron", 12, 30),
            ("complete:4", 4, 6),
        ],
    )
    def test_sizes(self, family, n, edges):
        g = build_family(family)
        assert g.n == n and g.edge_count == edges
        assert g.is_connected()

    def test_descriptor_parsing(self):
        descriptor = FamilyDescriptor.parse(" Johnson:6,3 ")
        assert descriptor == FamilyDescriptor("johnson", (6, 3))
        assert str(descriptor) == "johnson:6,3"
        assert FamilyDescriptor.parse("halved-cube:5").family == "halved_cube"

    def test_hypercube_is_binary_hamming(self):
        assert build_family("hypercube:3").adjacency == build_family("hamming:3,2").adjacency

    def test_labels_are_deterministic(self):
        assert build_family("johnson:5,2").adjacency == build_family("johnson:5,2").adjacency
        # words in lexicographic order: 000 is adjacent to 001, 010, 100
        assert build_family("hypercube:3").neighbours(0) == (1, 2, 4)

    @pytest.mark.parametrize("family", ["johnson:3,3", "unknown:1", "cycle", "cycle:x", "cycle:2", "hamming:2,1"])
    def test_invalid(self, family):
        with pytest.raises(InvalidFamilyParameters):
            build_family(family)

    def test_clique_extension(self):
        g = clique_extension(build_family("complete:2"), 2)
        assert g.is_complete() and g.n == 4
        assert clique_extension(build_family("cycle:5"), 3).n == 15

    def test_clique_extension_labels(self):
        g = clique_extension(build_family("cycle:5"), 3)
        assert g.edge_count == 5 * 3 + 5 * 9
        assert g.is_regular() and g.degree(0) == 2 + 2 * 3
        # (x, t) is x*3 + t
        assert g.adjacent(0, 1) and g.adjacent(0, 3) and g.adjacent(2, 14)
        assert not g.adjacent(0, 6)


class TestGraph:
    def test_disconnected(self):
        with pytest.raises(Disconnected):
            Graph.from_edges(4, [(0, 1), (2, 3)])

    def test_distances(self):
        dm = all_pairs_distances(build_family("cycle:6"))
        assert dm.diameter == 3
        assert dm[0, 3] == 3
        assert dm.sphere(0, 2) == [2, 4]
        assert len(dm.pairs_at(3)) == 6

    def test_edge_list_round_trip(self, tmp_path):
        g = build_family("petersen")
        path = tmp_path / "graphs" / "petersen.txt"
        write_edge_list(g, str(path))
        assert path.read_text().splitlines()[0] == "10 15"
        again = read_edge_list(str(path))
        assert again.adjacency == g.adjacency
        assert again.name == "petersen"

    @pytest.mark.parametrize("content", ["", "3\n0 1\n", "3 2\n0 1\n", "3 1\n0 5\n", "3 1\n0 x\n"])
    def test_bad_edge_list(self, tmp_path, content):
        path = tmp_path / "bad.txt"
        path.write_text(content)
        with pytest.raises(UsageError):
            read_edge_list(str(path))


class TestRegularity:
    @pytest.mark.parametrize(
        "family, array",
        [
            ("johnson:6,3", "9,4,1;1,4,9"),
            ("hamming:3,3", "6,4,2;1,2,3"),
            ("halved_cube:5", "10,3;1,6"),
            ("cycle:7", "2,1,1;1,1,1"),
            ("petersen", "3,2;1,1"),
            ("icosahedron", "5,2,1;1,2,5"),
        ],
    )
    def test_intersection_array(self, family, array):
        assert verify_distance_regular(build_family(family)) == IntersectionArray.parse(array)

    @pytest.mark.parametrize("family", ["johnson:6,3", "hypercube:4", "petersen", "icosahedron", "cycle:6"])
    def test_agrees_with_networkx(self, family):
        g = build_family(family)
        b, c = nx.intersection_array(g.to_networkx())
        ia = verify_distance_regular(g)
        assert list(ia.b) == b and list(ia.c) == c

    def test_not_distance_regular(self):
        assert verify_distance_regular(build_family("path:4")) is None
        assert verify_distance_regular(build_family("complete:5")) is None

    def test_adjacency_spectrum_matches_array(self):
        g = build_family("johnson:6,3")
        explicit = explicit_spectrum(adjacency_matrix(g))
        assert spectrum_dict(explicit) == {"9": 1, "3": 5, "-1": 9, "-3": 5}
        assert multisets_equal(list(spectrum_of_gamma(verify_distance_regular(g))), explicit)

    def test_irrational_adjacency_spectrum(self):
        g = build_family("icosahedron")
        ia = verify_distance_regular(g)
        assert multisets_equal(list(spectrum_of_gamma(ia)), explicit_spectrum(adjacency_matrix(g)))

    @pytest.mark.slow
    def test_catalog_adjacency_spectra(self, catalog):
        for entry in catalog:
            if not entry.explicit:
                continue
            g = build_family(entry.family)
            ia = IntersectionArray.parse(entry.array)
            assert verify_distance_regular(g) == ia, entry.name
            assert multisets_equal(list(spectrum_of_gamma(ia)), explicit_spectrum(adjacency_matrix(g))), entry.name

    @pytest.mark.parametrize(
        "family, r, expected",
        [
            ("hypercube:3", 2, True),
            ("petersen", 2, False),
            ("complete_bipartite:3,3", 3, True),
            ("icosahedron", 2, False),
            ("hamming:2,3", 2, True),
        ],
    )
    def test_induced_krr(self, family, r, expected):
        assert contains_induced_krr(build_family(family), r) is expected

    def test_krr_size_limits(self):
        with pytest.raises(SizeLimitExceeded):
            contains_induced_krr(build_family("johnson:6,3"), 2, max_order=10)
        with pytest.raises(SizeLimitExceeded):
            contains_induced_krr(build_family("petersen"), 4)


class TestMatrices:
    def test_q_distance_matrix(self):
        matrix = q_matrix("cycle:4", 1)
        assert matrix.rows()[0] == [0, 1, 2, 1]
        assert matrix.constant_row_sum() == 4
        half = q_matrix("cycle:6", Fraction(-1, 2))
        assert half.rows()[0] == [0, 1, -1, 3, -1, 1]

    def test_complete_graph_spectrum_is_independent_of_q(self):
        for q in (Fraction(2), Fraction(-1, 2), Fraction(1, 3)):
            assert spectrum_dict(explicit_spectrum(q_matrix("complete:4", q))) == {"3": 1, "-1": 3}

    @pytest.mark.parametrize("r, s", [(3, 3), (3, 2), (4, 1)])
    def test_complete_bipartite_at_minus_half(self, r, s):
        spectrum = explicit_spectrum(q_matrix(f"complete_bipartite:{r},{s}", Fraction(-1, 2)))
        assert spectrum_dict(spectrum) == {"1": r + s - 1, str(-r - s + 1): 1}

    def test_order_limit(self):
        matrix = q_matrix("johnson:6,3", 1)
        with pytest.raises(OrderLimitExceeded):
            explicit_spectrum(matrix, order_limit=10)

    def test_order_limit_from_environment(self, monkeypatch):
        monkeypatch.setenv("DRGQ_ORDER_LIMIT", "8")
        reset_config()
        assert default_order_limit() == 8
        with pytest.raises(OrderLimitExceeded):
            explicit_spectrum(q_matrix("petersen", 1))

    def test_semimetric(self):
        dm = all_pairs_distances(build_family("johnson:6,3"))
        for q in (1, 2, -2, -3):
            assert semimetric_check(dm, Fraction(q)) == (True, True)
        assert semimetric_check(dm, Fraction(-1, 2))[0] is False
        assert semimetric_check(dm, Fraction(1, 2))[0] is True
        assert semimetric_check(all_pairs_distances(build_family("petersen")), Fraction(-1)) == (True, False)

    def test_negative_type_inequality(self):
        matrix = q_matrix("johnson:6,3", 1)
        assert all(negative_type_inequality(matrix, b) <= 0 for b in negative_type_test_vectors(20))
        with pytest.raises(ValueError):
            negative_type_inequality(matrix, [1] + [0] * 19)

    def test_test_vectors_sum_to_zero(self):
        for n in (5, 6):
            assert all(sum(v) == 0 and len(v) == n for v in negative_type_test_vectors(n))

    @pytest.mark.parametrize("family", ["cycle:5", "complete:2", "path:3"])
    @pytest.mark.parametrize("s", [2, 3])
    def test_clique_extension_spectrum(self, family, s):
        assert clique_extension_spectrum_check(build_family(family), s)

    def test_interlacing(self):
        g = build_family("icosahedron")
        matrix = q_distance_matrix(all_pairs_distances(g), Fraction(1))
        assert interlacing_holds(matrix, g.neighbours(0))


class TestLocal:
    def test_local_graphs(self):
        pentagon = local_graph(build_family("icosahedron"), 0)
        assert pentagon.n == 5 and pentagon.edge_count == 5 and pentagon.is_connected()
        assert local_graph(build_family("petersen"), 0).edge_count == 0

    def test_local_bound(self):
        assert local_min_eigenvalue_bound_check(build_family("icosahedron"), Fraction(1))
        assert local_min_eigenvalue_bound_check(build_family("petersen"), Fraction(1))
        with pytest.raises(PreconditionNotMet):
            local_min_eigenvalue_bound_check(build_family("icosahedron"), Fraction(1, 2))

    def test_local_interlacing(self):
        assert all(local_interlacing_check(build_family("icosahedron"), Fraction(2)))


class TestWitness:
    def test_witness(self):
        matrix = q_matrix("johnson:6,3", 1)
        witness = negative_type_witness(matrix)
        assert witness.row_sum == 30
        assert witness.identities_hold(matrix)
        assert witness.to_json()["order"] == 20

    def test_no_witness_without_one_positive(self):
        with pytest.raises(NotOnePositive):
            negative_type_witness(q_matrix("johnson:6,3", Fraction(-1, 2)))

    def test_constant_row_sum_required(self):
        with pytest.raises(NotConstantRowSum):
            negative_type_witness(q_matrix("path:3", 1))

    def test_approximate_vectors(self):
        witness = negative_type_witness(q_matrix("petersen", 1))
        vectors = approximate_witness_vectors(witness)
        gram = np.array([[float(v) for v in row] for row in witness.gram.entries])
        assert vectors.shape == (10, 10)
        assert np.allclose(vectors @ vectors.T, gram, atol=1e-9)

    def test_standard_representation(self):
        g = build_family("johnson:6,3")
        ia = verify_distance_regular(g)
        dm = all_pairs_distances(g)
        gram = standard_representation_gram(ia, dm, AlgebraicNumber.rational(3))
        signs = inertia(gram)
        assert signs.n_pos == 5 and signs.n_neg == 0
        # classical 1-type: 2 - 2 u_d = (2 (k - theta) / k) d
        assert all(2 - 2 * gram[0, y] == Fraction(4, 3) * dm[0, y] for y in range(g.n))
