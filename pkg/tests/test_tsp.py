"""Tests for the smuggler TSP tours"""

import pydantic
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from src.errors import NoAvailableTour, ParseError, TooLarge, ValidationError
from src.models.tsp import DistanceMatrix, Tour
from src.tsp.heuristics import (
    alternate_paths,
    best_tours,
    brute_force_optimum,
    nearest_neighbor_tour,
    replacement_tour,
    smuggler_all_starts,
    tour_weight,
)
from src.tsp.io import format_tours, parse_matrix, tours_to_csv
from tests.conftest import FIVE_CITY_CSV, FIVE_CITY_MATRIX

TWO_CITIES = DistanceMatrix(d=((0, 7), (7, 0)))
EQUILATERAL = DistanceMatrix(d=((0, 1, 1), (1, 0, 1), (1, 1, 0)))


@st.composite
def matrices(draw, min_n=2, max_n=8):
    n = draw(st.integers(min_n, max_n))
    return DistanceMatrix(
        d=tuple(
            tuple(0 if i == j else draw(st.integers(1, 20)) for j in range(n)) for i in range(n)
        )
    )


def assert_hamiltonian(m: DistanceMatrix, tour: Tour):
    assert tour.sequence[0] == tour.sequence[-1] == tour.start
    assert sorted(tour.sequence[:-1]) == list(m.cities)
    assert tour.weight == tour_weight(m, tour.sequence)


class TestDistanceMatrix:
    def test_asymmetry_is_allowed(self, five_city):
        assert five_city.distance(1, 5) == 14
        assert five_city.distance(5, 1) == 15

    @pytest.mark.parametrize(
        "d",
        [
            ((0,),),
            ((0, 1), (1, 1)),
            ((0, 0), (1, 0)),
            ((0, -2), (1, 0)),
            ((0, 1, 2), (1, 0)),
            ((0, float("inf")), (1, 0)),
        ],
    )
    def test_rejects_invalid(self, d):
        with pytest.raises(pydantic.ValidationError):
            DistanceMatrix(d=d)

    def test_tour_must_close(self):
        with pytest.raises(pydantic.ValidationError):
            Tour(start=1, sequence=[1, 2, 3], weight=3)


class TestNearestNeighbor:
    def test_five_city_start_1(self, five_city):
        tour = nearest_neighbor_tour(five_city, 1)
        assert tour.sequence == [1, 2, 5, 3, 4, 1]
        assert tour.weight == 52

    def test_five_city_start_4(self, five_city):
        tour = nearest_neighbor_tour(five_city, 4)
        assert tour.sequence == [4, 3, 1, 2, 5, 4]
        assert tour.weight == 55

    def test_two_cities(self):
        tour = nearest_neighbor_tour(TWO_CITIES, 1)
        assert tour.sequence == [1, 2, 1]
        assert tour.weight == 14

    def test_ties_go_to_lowest_city(self):
        tour = nearest_neighbor_tour(EQUILATERAL, 2)
        assert tour.sequence == [2, 1, 3, 2]

    def test_start_out_of_range(self, five_city):
        with pytest.raises(ValidationError):
            nearest_neighbor_tour(five_city, 6)


class TestAllStarts:
    def test_five_city_weights(self, five_city):
        tours = smuggler_all_starts(five_city)
        assert [tour.start for tour in tours] == [1, 2, 3, 4, 5]
        assert [tour.weight for tour in tours] == [52, 52, 52, 55, 52]

    def test_five_city_sequences(self, five_city):
        assert [tour.label() for tour in smuggler_all_starts(five_city)] == [
            "1 2 5 3 4 1",
            "2 5 3 4 1 2",
            "3 4 1 2 5 3",
            "4 3 1 2 5 4",
            "5 2 1 4 3 5",
        ]

    def test_five_city_best_starts(self, five_city):
        best = best_tours(smuggler_all_starts(five_city))
        assert [tour.start for tour in best] == [1, 2, 3, 5]
        assert {tour.weight for tour in best} == {52}

    def test_equilateral(self):
        assert [tour.weight for tour in smuggler_all_starts(EQUILATERAL)] == [3, 3, 3]

    def test_best_tours_of_nothing(self):
        assert best_tours([]) == []


class TestAlternatePaths:
    def test_five_city_start_1(self, five_city):
        tours = alternate_paths(five_city, 1)
        assert [tour.weight for tour in tours] == [52, 59, 56, 55]
        assert tours[1].sequence == [1, 3, 4, 2, 5, 1]

    def test_five_city_start_5(self, five_city):
        tours = alternate_paths(five_city, 5)
        assert [tour.weight for tour in tours] == [63, 52, 52, 55]
        assert tours[0].sequence == [5, 1, 2, 3, 4, 5]

    def test_two_cities(self):
        assert alternate_paths(TWO_CITIES, 2) == [nearest_neighbor_tour(TWO_CITIES, 2)]


class TestBruteForce:
    def test_five_city_optimum(self, five_city):
        tour = brute_force_optimum(five_city)
        assert tour.weight == 52
        assert tour.sequence == [1, 2, 5, 3, 4, 1]

    def test_small_instances(self):
        assert brute_force_optimum(TWO_CITIES).weight == 14
        assert brute_force_optimum(EQUILATERAL).weight == 3

    def test_refuses_large_instances(self):
        n = 13
        m = DistanceMatrix(d=tuple(tuple(0 if i == j else 1 for j in range(n)) for i in range(n)))
        with pytest.raises(TooLarge):
            brute_force_optimum(m)


class TestProperties:
    @given(matrices())
    @settings(max_examples=100, deadline=None)
    def test_smuggler_never_beats_the_optimum(self, m):
        optimum = brute_force_optimum(m)
        assert_hamiltonian(m, optimum)
        tours = smuggler_all_starts(m)
        for tour in tours:
            assert_hamiltonian(m, tour)
        assert min(tour.weight for tour in tours) >= optimum.weight

    @given(matrices(), st.data())
    def test_greedy_tour_is_among_alternates(self, m, data):
        start = data.draw(st.integers(1, m.n))
        alternates = alternate_paths(m, start)
        assert len(alternates) == m.n - 1
        for tour in alternates:
            assert_hamiltonian(m, tour)
        assert nearest_neighbor_tour(m, start) in alternates


class TestReplacementTour:
    def test_blocked_first_edge(self, five_city):
        tour = replacement_tour(five_city, 1, [(1, 2)])
        assert tour.sequence == [1, 5, 2, 3, 4, 1]
        assert tour.weight == 55

    def test_nothing_blocked_keeps_the_greedy_tour(self, five_city):
        assert replacement_tour(five_city, 1, []).weight == 52

    def test_inner_edge_blocks_every_tour_using_it(self, five_city):
        # only the hop via 5 avoids 2 -> 5
        tour = replacement_tour(five_city, 1, [(2, 5)])
        assert tour.sequence == [1, 5, 2, 3, 4, 1]

    def test_everything_blocked(self, five_city):
        with pytest.raises(NoAvailableTour):
            replacement_tour(five_city, 1, [(1, hop) for hop in range(2, 6)])

    def test_equal_weights_keep_first_hop(self):
        assert replacement_tour(EQUILATERAL, 1, []).sequence == [1, 2, 3, 1]


class TestMatrixIO:
    def test_parse_five_city(self):
        assert parse_matrix(FIVE_CITY_CSV).d == FIVE_CITY_MATRIX

    def test_comments_and_blank_lines(self):
        text = "# two cities\n\n0,7\n7,0\n"
        assert parse_matrix(text) == TWO_CITIES

    def test_bad_cell(self):
        with pytest.raises(ParseError) as excinfo:
            parse_matrix("0,7\n7,x\n")
        assert excinfo.value.line == 2
        assert excinfo.value.field == "row 2, column 2"

    def test_not_square(self):
        with pytest.raises(ParseError):
            parse_matrix("0,7,1\n7,0,1\n")

    def test_nonzero_diagonal(self):
        with pytest.raises(ValidationError):
            parse_matrix("1,7\n7,0\n")

    def test_empty(self):
        with pytest.raises(ParseError):
            parse_matrix("# nothing\n")

    def test_tours_csv(self, five_city):
        text = tours_to_csv([nearest_neighbor_tour(five_city, 1)])
        assert text == "start,sequence,weight\n1,1 2 5 3 4 1,52\n"

    def test_text_listing(self, five_city):
        text = format_tours(alternate_paths(five_city, 1)[:2], heading="Path {index} =")
        assert text == "Path 1 = 1 2 5 3 4 1 weight = 52\nPath 2 = 1 3 4 2 5 1 weight = 59\n"

    def test_default_heading(self, five_city):
        text = format_tours([nearest_neighbor_tour(five_city, 4)])
        assert text == "Path from city 4: 4 3 1 2 5 4 weight = 55\n"
