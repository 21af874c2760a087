import pytest

from plantedclique.graph import Graph, GraphInputError
from plantedclique.harness import (
    ATTACKS,
    AttackSpec,
    invert_check,
    make_registry,
    run_all,
    run_distinguisher_game,
    run_experiment,
)
from plantedclique.instance import PlantedInstance, PlantParams, owf_evaluate
from plantedclique.oracle import max_clique_exact
from plantedclique.rng import RngState

FAST = dict(seconds=10.0)


def k8_instance():
    return PlantedInstance(Graph.complete(8), tuple(range(8)), PlantParams(8, 0.5, 8), 0)


def test_invert_check_cases():
    inst = owf_evaluate(PlantParams(120, 0.5, 12), RngState(0))
    assert invert_check(inst, inst.hidden_clique)
    assert invert_check(inst, max_clique_exact(inst.public_graph))
    g = inst.public_graph
    u, v = next((a, b) for a in range(g.n) for b in range(a + 1, g.n) if not g.has_edge(a, b))
    rest = [w for w in range(g.n) if w not in (u, v)][:10]
    assert not invert_check(inst, (u, v, *rest))
    with pytest.raises(GraphInputError):
        invert_check(inst, (0, 500))


def test_greedy_on_k8():
    best, reports = run_all(k8_instance(), [AttackSpec("greedy")], RngState(0))
    assert best == tuple(range(8)) and reports[0].inverted and reports[0].matched_hidden


def test_greedy_and_brute_on_planted_instance():
    inst = owf_evaluate(PlantParams(60, 0.5, 12), RngState(1))
    best, reports = run_all(inst, make_registry(["greedy", "brute"], **FAST), RngState(2))
    assert len(best) >= 12 and reports[1].inverted


def test_all_attacks_find_large_clique():
    inst = owf_evaluate(PlantParams(2500, 0.5, 250), RngState(5))
    registry = [AttackSpec(name, seconds=5.0) for name in ATTACKS]
    best, reports = run_all(inst, registry, RngState(9))
    assert best == inst.hidden_clique
    by_name = {rep.attack_name: rep for rep in reports}
    assert by_name["spectral"].matched_hidden or by_name["dekel"].matched_hidden


def test_crash_becomes_failed_report():
    inst = PlantedInstance(Graph.empty(0), (), PlantParams(0, 0.5, 0), 0)
    _, reports = run_all(inst, [AttackSpec("greedy")], RngState(0))
    assert reports[0].error and not reports[0].is_valid_clique and not reports[0].inverted


def test_ties_go_to_earlier_attack(monkeypatch):
    g = Graph.from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
    inst = PlantedInstance(g, (0, 1, 2), PlantParams(6, 0.5, 3), 0)
    monkeypatch.setitem(ATTACKS, "stub-low", lambda *a: ((0, 1, 2), 1))
    monkeypatch.setitem(ATTACKS, "stub-high", lambda *a: ((3, 4, 5), 1))
    best, _ = run_all(inst, [AttackSpec("stub-high"), AttackSpec("stub-low")], RngState(0))
    assert best == (3, 4, 5)
    best, _ = run_all(inst, [AttackSpec("stub-low"), AttackSpec("stub-high")], RngState(0))
    assert best == (0, 1, 2)


def test_invalid_candidate_never_counts(monkeypatch):
    monkeypatch.setitem(ATTACKS, "liar", lambda *a: ((0, 1, 2, 3, 4), 1))
    g = Graph.empty(8)
    inst = PlantedInstance(g, (), PlantParams(8, 0.5, 0), 0)
    best, reports = run_all(inst, [AttackSpec("liar")], RngState(0))
    assert best == () and not reports[0].is_valid_clique and not reports[0].inverted


def test_registry_validation():
    with pytest.raises(ValueError):
        AttackSpec("nope")
    with pytest.raises(ValueError):
        run_all(k8_instance(), [], RngState(0))
    assert [s.name for s in make_registry(["greedy", "all"])] == list(ATTACKS)


def test_seeds_follow_labels_not_positions():
    inst = owf_evaluate(PlantParams(80, 0.5, 8), RngState(0))
    _, a = run_all(inst, [AttackSpec("greedy")], RngState(4))
    _, b = run_all(inst, [AttackSpec("metropolis", options={"max_steps": 100}), AttackSpec("greedy")], RngState(4))
    assert a[0].seed == b[1].seed and a[0].candidate == b[1].candidate


def test_threads_give_same_reports():
    inst = owf_evaluate(PlantParams(100, 0.5, 14), RngState(3))
    registry = make_registry(["greedy", "metropolis", "spectral", "brute"], **FAST)
    one = [r.record() for r in run_all(inst, registry, RngState(1))[1]]
    many = [r.record() for r in run_all(inst, registry, RngState(1), threads=4)[1]]
    assert one == many


def test_experiment_single_trial_rates():
    summary = run_experiment(PlantParams(60, 0.5, 10), 1, make_registry(["greedy", "brute"], **FAST), RngState(0))
    assert all(st.success_rate in (0.0, 1.0) for st in summary.stats)
    assert summary.best_attack == "brute"


def test_experiment_is_deterministic():
    registry = make_registry(["greedy", "metropolis"], **FAST)
    a = run_experiment(PlantParams(80, 0.5, 10), 3, registry, RngState(7))
    b = run_experiment(PlantParams(80, 0.5, 10), 3, registry, RngState(7))
    assert a.records() == b.records()


def test_greedy_fails_near_twice_log():
    summary = run_experiment(PlantParams(1024, 0.5, 19), 30, make_registry(["greedy"]), RngState(0))
    assert summary.rate("greedy") <= 0.1


def test_distinguisher_game():
    game = run_distinguisher_game(PlantParams(60, 0.5, 14), 10, make_registry(["brute"], **FAST), RngState(0))
    assert 0 < game.planted_trials < 10
    assert game.accuracy == 1.0 and game.advantage == 1.0
    assert set(game.record()) == {"trials", "planted_trials", "accuracy", "advantage", "inversion_rate"}
