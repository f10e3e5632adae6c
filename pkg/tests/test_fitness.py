import itertools

from hypothesis import given, strategies as st

from evoc.domain import Action, BodyPart
from evoc.fitness import DEFAULT_WEIGHTS, FitnessWeights, enumerate_fitness_table, f1, optimal_actions

actions = st.lists(st.sampled_from([0, 1, 2]), min_size=6, max_size=6).map(lambda s: Action.of(*s))


def brute_force_max(w_move, w_sym):
    """Independent oracle: walk the product space directly, no encode/decode."""
    best, count = None, 0
    for s in itertools.product((0, 1, 2), repeat=6):
        moving = sum(x != 0 for x in s)
        pairs = sum(1 for a, b in ((0, 1), (2, 3)) if s[a] and s[b] and s[a] != s[b])
        v = w_move * moving + w_sym * pairs
        if best is None or v > best:
            best, count = v, 1
        elif v == best:
            count += 1
    return best, count


def test_oracle_values():
    # frozen from brute_force_max(1.0, 5.0)
    assert brute_force_max(1.0, 5.0) == (16.0, 16)


def test_examples():
    assert f1(Action.immobile()) == 0.0
    assert f1(Action.of(1, 2, 0, 0, 0, 0)) == 7.0


def test_optimum_matches_oracle():
    best, argmax = optimal_actions()
    assert (best, len(argmax)) == brute_force_max(1.0, 5.0) == (16.0, 16)
    assert best == DEFAULT_WEIGHTS.optimum


def test_optimum_other_weights():
    w = FitnessWeights(2.0, 1.5)
    best, argmax = optimal_actions(w)
    assert (best, len(argmax)) == brute_force_max(2.0, 1.5)


def test_table():
    table = enumerate_fitness_table()
    assert len(table) == 729
    assert table[0].fitness == 0.0
    assert [r.encoding for r in table] == list(range(729))
    assert sum(r.fitness == 16.0 for r in table) == 16


@given(actions)
def test_mirror_invariant(a):
    assert f1(a) == f1(a.mirrored())


@given(actions, st.integers(0, 5), st.sampled_from([1, 2]))
def test_monotone_in_movement(a, part, direction):
    if a[part] == 0:
        assert f1(a.with_part(part, direction)) >= f1(a)


def test_epistasis_witness():
    ra = BodyPart.RIGHT_ARM
    lone = Action.immobile()
    paired = Action.of(1, 0, 0, 0, 0, 0)
    gain_lone = f1(lone.with_part(ra, 2)) - f1(lone)
    gain_paired = f1(paired.with_part(ra, 2)) - f1(paired)
    assert gain_paired - gain_lone == DEFAULT_WEIGHTS.w_sym
