from fractions import Fraction

import pytest

from cevian.conics import DualConic, is_tangent
from cevian.core import Configuration, ModeKind
from cevian.errors import CevianError
from cevian.generators import (
    GeneratorSpec,
    conic_first_configuration,
    draw,
    gen_conic_first,
    gen_perspective_pair,
    gen_trace_config,
    mutate,
)
from cevian.rand import Rand, splitmix64
from cevian.references import InlineConfiguration, Reference, parse_rational
from cevian.triangle import signed_ratio

UNIT_CIRCLE_TANGENTS = DualConic(1, 1, -1, 0, 0, 0)


def test_splitmix64_stream():
    assert splitmix64(0) == 0xE220A8397B1DCDAF
    rng = Rand(0)
    assert rng.next_u64() == 0xE220A8397B1DCDAF
    assert rng.next_u64() == 0x6E789E6AA1B965F4


def test_cell_streams_are_independent():
    assert Rand.for_cell(1, "trace", 0).next_u64() == Rand.for_cell(1, "trace", 0).next_u64()
    assert Rand.for_cell(1, "trace", 0).next_u64() != Rand.for_cell(1, "trace", 1).next_u64()
    assert Rand.for_cell(1, "trace", 0).next_u64() != Rand.for_cell(2, "trace", 0).next_u64()


def test_rational_draws_are_bounded():
    rng = Rand(3)
    for _ in range(200):
        value = rng.rational(5)
        assert abs(value.numerator) <= 5 and value.denominator <= 5
        assert rng.nonzero_rational(5) != 0


@pytest.mark.parametrize(
    "kwargs",
    [
        dict(seed=1, count=-1),
        dict(seed=-1, count=1),
        dict(seed=1, count=1, bound=1),
        dict(seed=1, count=1, flavor="spiral"),
        dict(seed=1, count=1, mode="orthogonal"),
        dict(seed=1, count=1, mode="none"),
    ],
)
def test_generator_spec_validation(kwargs):
    with pytest.raises(ValueError):
        GeneratorSpec(**kwargs)


def test_flavor_fixes_the_mode():
    assert GeneratorSpec(seed=1, count=1, flavor="conic").mode == "free"
    assert GeneratorSpec(seed=1, count=1, mode="isotomic", flavor="pairs").mode == "none"


def test_generation_is_deterministic():
    spec = GeneratorSpec(seed=11, count=3)
    first = [gen_trace_config(spec, i).fingerprint for i in range(3)]
    second = [gen_trace_config(spec, i).fingerprint for i in range(3)]
    assert first == second
    assert len(set(first)) == 3


def test_generated_trace_configurations(generated_isogonal, generated_isotomic):
    for cfg in generated_isogonal + generated_isotomic:
        assert isinstance(cfg, Configuration)
        assert len(set(cfg.lines)) == 6
        assert cfg.feet is not None
    assert all(cfg.mode.kind is ModeKind.ISOTOMIC for cfg in generated_isotomic)


def test_generator_functions_check_the_flavor():
    with pytest.raises(ValueError):
        gen_conic_first(GeneratorSpec(seed=1, count=1), 0)
    with pytest.raises(ValueError):
        gen_trace_config(GeneratorSpec(seed=1, count=1, flavor="pairs"), 0)
    with pytest.raises(ValueError):
        gen_perspective_pair(GeneratorSpec(seed=1, count=1, flavor="conic"), 0)


def test_draw_reports_rejections():
    instance, rejections = draw(GeneratorSpec(seed=5, count=1), 0)
    assert rejections >= 0
    assert instance.fingerprint == gen_trace_config(GeneratorSpec(seed=5, count=1), 0).fingerprint


def test_conic_first_lines_touch_the_circle(conic_cfg):
    assert conic_cfg.mode.kind is ModeKind.FREE
    for line in conic_cfg.lines:
        assert is_tangent(line, UNIT_CIRCLE_TANGENTS)


def test_conic_first_rejects_repeated_parameters():
    with pytest.raises(CevianError):
        conic_first_configuration([0, 1, 2, 3, 4, 4])


def test_generated_conic_configurations(generated_conic):
    for cfg in generated_conic:
        for line in cfg.lines:
            assert is_tangent(line, UNIT_CIRCLE_TANGENTS)


def test_perspective_pairs_alternate(generated_pairs):
    from cevian.projective import bracket, join

    for index, (tri1, tri2) in enumerate(generated_pairs):
        perspector = bracket(*(join(p, q) for p, q in zip(tri1, tri2)))
        assert (perspector == 0) == (index % 2 == 0)


def test_mutate_changes_one_ratio(isogonal_cfg):
    mutated = mutate(isogonal_cfg, Rand(5))
    assert mutated.mode.kind is ModeKind.FREE
    assert mutated.traces == isogonal_cfg.traces
    changed = [
        signed_ratio(new) / signed_ratio(old)
        for new, old in zip(mutated.traces_prime, isogonal_cfg.traces_prime)
        if new != old
    ]
    assert changed == [Fraction(1001, 1000)]


def test_generated_cell_replays():
    spec = GeneratorSpec(seed=3, count=2, mode="isotomic")
    cell = spec.cell(1)
    assert cell.replay().fingerprint == gen_trace_config(spec, 1).fingerprint
    assert Reference.from_json(cell.to_json()) == cell


def test_inline_configuration(isogonal_cfg):
    ref = InlineConfiguration([["0", "0"], ["7", "0"], ["2", "5"]], [["1", "2"], ["3", "1"], ["2", "5"]])
    assert ref.replay().fingerprint == isogonal_cfg.fingerprint
    assert Reference.from_dict(ref.to_dict()) == ref


def test_parse_rational():
    assert parse_rational("-3/4") == Fraction(-3, 4)
    assert parse_rational(" 5 ") == 5
    assert parse_rational(2) == 2
    for bad in ("1/0", "a", "1.5", 1.5):
        with pytest.raises(ValueError):
            parse_rational(bad)
