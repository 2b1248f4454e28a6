import pytest
from hypothesis import given, settings

from src.core.exceptions import ContractViolation, NotOuterplanarError, NotReducibleError
from src.core.extension import (
    ColorPermutation,
    IncidenceSolver,
    SolverConfig,
    apply_color_permutation,
    avoiding_permutation,
    color_base_component,
    extend_case1,
    extend_case2,
    extend_case3,
    extend_case4,
    solve,
)
from src.core.graph import build_graph, remove_vertex, subgraph
from src.core.incidence import (
    Incidence,
    IncidenceColoring,
    enumerate_incidences,
    incoming_color_set,
    verify_coloring,
)
from src.core.reduction import ConfigurationCase
from src.oracle import min_incidence_k
from src.toolkit.families import family
from src.toolkit.generators import gen_maximal_outerplanar

from .strategies import outerplanar_graphs


def assert_total_and_valid(g, c):
    report = verify_coloring(g, c, require_total=True)
    assert report.is_valid, report.describe()


def test_solver_config():
    assert SolverConfig.for_graph(family("star", 4)).k == 5
    assert SolverConfig.for_graph(build_graph([(0, 1)])).k == 3
    assert SolverConfig.for_graph(build_graph([], vertices=[0])).k == 3
    with pytest.raises(ContractViolation):
        SolverConfig(k=2)


def test_base_k2():
    c = color_base_component(build_graph([(0, 1)]), SolverConfig(k=3))
    assert c.items() == [(Incidence(0, 1), 0), (Incidence(1, 0), 2)]


def test_base_cycles(triangle, c5):
    """Test the base colorer on cycles of every residue mod 3."""
    cfg = SolverConfig(k=4)
    for n in range(3, 40):
        g = family("cycle", n)
        c = color_base_component(g, cfg)
        assert_total_and_valid(g, c)
        if n % 3 == 0:
            assert c.colors_used() <= {0, 1, 2}

    # C5 needs the fourth color
    assert color_base_component(c5, cfg).colors_used() == {0, 1, 2, 3}
    assert min_incidence_k(c5, 2) == 4


def test_base_paths_and_isolated_vertex():
    cfg = SolverConfig(k=4)
    for n in range(2, 30):
        g = family("path", n)
        assert_total_and_valid(g, color_base_component(g, cfg))
    assert len(color_base_component(build_graph([], vertices=[3]), cfg)) == 0


def test_base_contract(star, c5):
    with pytest.raises(ContractViolation):
        color_base_component(star, SolverConfig(k=5))
    with pytest.raises(ContractViolation):
        color_base_component(build_graph([(0, 1), (2, 3)]), SolverConfig(k=4))
    with pytest.raises(ContractViolation):
        color_base_component(c5, SolverConfig(k=3))


def test_extend_case1_path():
    """Test growing P3 from the edge 1-2 by the leaf 0."""
    g = family("path", 3)
    c = color_base_component(remove_vertex(g, 0), SolverConfig(k=4))
    extended = extend_case1(g, c, 0, 1)
    assert_total_and_valid(g, extended)
    assert len(c) == 2


def test_extend_case1_star(star):
    c = color_base_component(remove_vertex(star, 3), SolverConfig(k=5))
    extended = extend_case1(star, c, 3, 0)
    assert_total_and_valid(star, extended)
    assert len(incoming_color_set(star, extended, 0)) <= 2


def test_extend_case1_contract(k2):
    with pytest.raises(ContractViolation):
        extend_case1(k2, IncidenceColoring(3), 0, 1)
    with pytest.raises(ContractViolation):
        extend_case1(family("path", 3), IncidenceColoring(4), 1, 0)


def test_extend_case2():
    """Test the adjacent degree-2 pair in C6 with the chord 0-3."""
    g = build_graph([(i, (i + 1) % 6) for i in range(6)] + [(0, 3)])
    reduced = remove_vertex(g, 1)
    _, c = solve(reduced)
    assert c.k == 5

    extended = extend_case2(g, c, 1, 2, 0, 3)
    assert_total_and_valid(g, extended)
    assert len(incoming_color_set(g, extended, 2)) <= 2

    xv = c[Incidence(3, 2)]
    if xv not in {extended[Incidence(0, 1)], extended[Incidence(1, 0)]}:
        assert extended[Incidence(1, 2)] == xv


def test_extend_case2_contract():
    g = build_graph([(i, (i + 1) % 6) for i in range(6)] + [(0, 3)])
    with pytest.raises(ContractViolation):
        extend_case2(g, IncidenceColoring(4), 1, 2, 0, 3)
    with pytest.raises(ContractViolation):
        extend_case2(g, IncidenceColoring(5), 1, 2, 3, 0)


def test_extend_case3():
    """Test reattaching u to the triangle edge v-w."""
    g = build_graph([(1, 2), (2, 3), (1, 3), (0, 1), (0, 2)])
    triangle = remove_vertex(g, 0)
    c = color_base_component(triangle, SolverConfig(k=5))

    extended = extend_case3(g, c, 0, 1, 2)
    assert_total_and_valid(g, extended)
    assert extended[Incidence(0, 2)] == c[Incidence(1, 2)]
    assert extended[Incidence(0, 1)] == c[Incidence(2, 1)]
    assert len(incoming_color_set(g, extended, 0)) <= 2
    assert incoming_color_set(g, extended, 1) == incoming_color_set(triangle, c, 1)
    assert incoming_color_set(g, extended, 2) == incoming_color_set(triangle, c, 2)


def test_extend_case3_needs_the_edge():
    g = family("cycle", 4)
    with pytest.raises(ContractViolation):
        extend_case3(g, IncidenceColoring(5), 0, 1, 3)


def test_avoiding_permutation():
    """Test the worked permutations."""
    p = avoiding_permutation(0, 1, 0, 1, 4)
    assert p.mapping == (2, 3, 0, 1)

    assert avoiding_permutation(0, 0, 4, 4, 5).is_identity
    assert avoiding_permutation(0, 1, 2, 3, 4).is_identity

    p = avoiding_permutation(0, 0, 0, 4, 5)
    assert p(0) not in {0} and p(4) not in {0}

    with pytest.raises(ContractViolation):
        avoiding_permutation(0, 1, 0, 1, 3)


def test_avoiding_permutation_exhaustive():
    for k in (4, 5, 6):
        for alpha in range(k):
            for gamma in range(k):
                if gamma == alpha:
                    continue
                for beta in range(k):
                    for delta in range(k):
                        if delta == beta:
                            continue
                        p = avoiding_permutation(alpha, gamma, beta, delta, k)
                        assert sorted(p.mapping) == list(range(k))
                        assert p(beta) not in {alpha, gamma}
                        assert p(delta) not in {alpha, gamma}


def test_color_permutation_validation():
    with pytest.raises(ContractViolation):
        ColorPermutation((0, 0, 1))
    assert ColorPermutation.identity(3).size == 3


def test_apply_color_permutation(triangle):
    c = color_base_component(triangle, SolverConfig(k=4))
    assert apply_color_permutation(c, ColorPermutation.identity(4)) == c

    swapped = apply_color_permutation(c, ColorPermutation((1, 0, 2, 3)))
    assert_total_and_valid(triangle, swapped)
    for v in triangle:
        before = incoming_color_set(triangle, c, v)
        after = incoming_color_set(triangle, swapped, v)
        assert after == {(1, 0, 2, 3)[color] for color in before}

    with pytest.raises(ContractViolation):
        apply_color_permutation(c, ColorPermutation.identity(2))


def test_extend_case4(bowtie_subdivision):
    """Test joining two triangles through the degree-2 vertex 0."""
    g = bowtie_subdivision
    cfg = SolverConfig.for_graph(g)
    c_v = color_base_component(subgraph(g, [1, 2, 3]), cfg)
    c_w = color_base_component(subgraph(g, [4, 5, 6]), cfg)

    joined = extend_case4(g, c_v, c_w, 0, 1, 4)
    assert_total_and_valid(g, joined)
    assert len(incoming_color_set(g, joined, 0)) <= 2


def test_extend_case4_single_vertex_side():
    """Test the fallback when one side of the cut vertex is a single vertex."""
    g = build_graph([(1, 0), (0, 2), (2, 3), (3, 4), (2, 4)])
    cfg = SolverConfig(k=5)
    notes = []
    joined = extend_case4(g, IncidenceColoring(cfg.k), color_base_component(subgraph(g, [2, 3, 4]), cfg),
                          0, 1, 2, notes)
    assert_total_and_valid(g, joined)
    assert len(notes) == 1


def test_extend_case4_contract(bowtie_subdivision):
    with pytest.raises(ContractViolation):
        extend_case4(bowtie_subdivision, IncidenceColoring(5), IncidenceColoring(6), 0, 1, 4)
    with pytest.raises(ContractViolation):
        extend_case4(bowtie_subdivision, IncidenceColoring(5), IncidenceColoring(5), 0, 1, 2)


def test_solve_small_graphs(star):
    """Test solve on the worked examples."""
    k, c = solve(family("path", 5))
    assert k == 4
    assert c.colors_used() == {0, 1, 2}
    assert_total_and_valid(family("path", 5), c)

    k, c = solve(star)
    assert k == 5
    assert_total_and_valid(star, c)
    assert min_incidence_k(star, 2) == 4


def test_solve_rejects_obstructions(k4, k23):
    with pytest.raises(NotOuterplanarError) as excinfo:
        solve(k4)
    assert (excinfo.value.vertex_count, excinfo.value.edge_count) == (4, 6)

    with pytest.raises(NotReducibleError) as excinfo:
        solve(k23)
    assert excinfo.value.component == (0, 1, 2, 3, 4)


def test_solve_disconnected_graph():
    g = build_graph([(0, 1), (2, 3), (3, 4), (4, 2), (4, 5), (4, 6)], vertices=[9])
    k, c = solve(g)
    assert k == 6
    assert_total_and_valid(g, c)


def test_solve_maximal_outerplanar():
    g = gen_maximal_outerplanar(50, seed=1)
    k, c = solve(g)
    assert k == g.max_degree + 2
    assert_total_and_valid(g, c)


def test_solve_trace(fan5, bowtie_subdivision):
    result = IncidenceSolver().solve(fan5)
    assert result.configurations[0].case == ConfigurationCase.CASE3
    assert any(step.component for step in result.trace)
    assert all(step.describe() for step in result.trace)

    result = IncidenceSolver().solve(bowtie_subdivision)
    assert_total_and_valid(bowtie_subdivision, result.coloring)


def test_solve_is_deterministic():
    g = gen_maximal_outerplanar(120, seed=5)
    assert solve(g)[1] == solve(g)[1]


def test_solve_long_graph():
    """Test that reduction and replay stay iterative on large inputs."""
    g = gen_maximal_outerplanar(2000, seed=3)
    k, c = solve(g)
    assert len(c) == 2 * g.edge_count
    assert k == g.max_degree + 2


@settings(max_examples=150)
@given(outerplanar_graphs(max_n=80))
def test_solve_outerplanar_graphs(g):
    """Test that every generated outerplanar graph gets a (Δ+2, 2)-coloring."""
    k, c = solve(g)
    assert k == max(g.max_degree, 1) + 2
    assert c.l == 2
    assert_total_and_valid(g, c)
    assert set(c) == set(enumerate_incidences(g))
