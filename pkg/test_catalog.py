import pytest

from algebra import catalog, ringfile
from algebra.errors import ParseError, ValidationError
from algebra.groups import validate_automorphism
from algebra.invariants import make_context
from algebra.ring_core import validate_ring

NON_ASSOCIATIVE = """
ring bad
add 2 2
mul 1 1 -> 0 1
mul 2 1 -> 0 1
group trivial =
"""


def test_named_catalog_builds_without_tags():
    instances = catalog.named_instances(tags=False)
    assert len(instances) == 12
    frobenius = catalog.by_name(instances)["F4/frob"]
    assert frobenius.group.order == 2
    assert frobenius.generators[0].images == ((1, 0), (1, 1))


def test_named_instances_cover_the_catalog(named):
    expected = {
        "Z12/trivial", "F3xF3/swap", "F2xF2/swap", "2Z8/neg", "M2(F2)/inner", "F4_0/sym3", "F2[C2]/trivial",
        "M2(F3)/diag", "F2xF4_0/sym3",
    }
    assert expected <= set(named)
    assert all(instance.provenance == "constructed" for instance in named.values())


def test_tags_of_f4_zero(named):
    tags = set(named["F4_0/sym3"].tags)
    assert {"nilpotent", "bad-prime-2", "n1-hypotheses-hold", "fixed-zero"} <= tags
    assert "unital" not in tags


def test_tags_follow_fresh_computations(named):
    assert "semiprime" in named["F3xF3/swap"].tags
    assert "splitting-exists" in named["F3xF3/swap"].tags
    assert "order-invertible" in named["F3xF3/swap"].tags
    assert "semiprime" not in named["Z12/trivial"].tags
    assert "trivial-group" in named["Z12/trivial"].tags


def test_composite_instance_fixes_the_first_factor(named):
    instance = named["F2xF4_0/sym3"]
    ctx = make_context(instance.ring, instance.group)
    assert ctx.fixed.carrier == instance.ring.span([(1, 0, 0)])
    assert instance.group.order == 6
    # |G| A = 0
    assert all(not any(instance.ring.additive.scale(6, x)) for x in instance.ring.elements())


def test_fingerprint(named):
    print_ = catalog.fingerprint(named["F3xF3/swap"].ring)
    assert print_.order == 9
    assert print_.invariant_factors == [3, 3]
    assert print_.units == 4
    assert print_.prime_radical_order == 1
    assert print_.udim == 2
    assert print_.unital
    assert catalog.fingerprint(named["2Z8/neg"].ring).units == 0


def test_dedup_keeps_unique_fingerprints(named):
    batch = [named["F3xF3/swap"], named["F3xF3/swap"], named["Z12/trivial"]]
    kept, dropped = catalog.dedup(batch)
    assert [i.name for i in kept] == ["F3xF3/swap", "Z12/trivial"]
    assert dropped == 1


def test_random_instances_are_seeded():
    first, stats = catalog.random_instances(max_order=16, count=5, seed=11, tags=False)
    second, _ = catalog.random_instances(max_order=16, count=5, seed=11, tags=False)
    assert ringfile.dumps(first) == ringfile.dumps(second)
    assert all(instance.ring.order <= 16 for instance in first)
    assert stats.attempted >= stats.valid >= len(first)
    assert all(instance.provenance == "random(11)" for instance in first)


def test_found_automorphisms_are_automorphisms(named):
    ring = named["F2^3/sym3"].ring
    found = catalog.find_automorphisms(ring)
    assert len(found) == 6


def test_find_automorphisms_checks_products_placed_late():
    # e1e1 = e2 is only comparable once e2 has an image
    ring = validate_ring("sq", (3, 3), [[(0, 1), (0, 0)], [(0, 0), (0, 0)]])
    found = catalog.find_automorphisms(ring)
    assert len(found) == 6
    assert all(g.images[1] == (0, 1) for g in found)
    for g in found:
        validate_automorphism(ring, list(g.images))


@pytest.mark.parametrize("seed", range(40))
def test_random_instances_build_for_every_seed(seed):
    instances, stats = catalog.random_instances(max_order=16, count=25, seed=seed, tags=False)
    assert len(instances) == stats.valid
    for instance in instances:
        assert len({g.name for g in instance.generators}) == len(instance.generators)
        for g in instance.generators:
            validate_automorphism(instance.ring, list(g.images))


def test_round_trip_of_named_catalog(named):
    text = ringfile.dumps(named.values())
    again = ringfile.loads(text, tags=False)
    assert ringfile.dumps(again) == text
    assert [i.name for i in again] == list(named)
    assert all(i.provenance == "file" for i in again)


def test_same_named_automorphisms_keep_their_groups(named):
    ring = named["F2^3/sym3"].ring
    cycle = validate_automorphism(ring, [(0, 1, 0), (0, 0, 1), (1, 0, 0)], name="g")
    transposition = validate_automorphism(ring, [(0, 1, 0), (1, 0, 0), (0, 0, 1)], name="g")
    batch = [
        catalog.make_instance("F2^3/c3", ring, [cycle], "c3", tags=False),
        catalog.make_instance("F2^3/c2", ring, [transposition], "c2", tags=False),
    ]
    text = ringfile.dumps(batch)
    assert "aut g\n" in text and "aut g_2\n" in text
    again = ringfile.loads(text, tags=False)
    assert [i.group.order for i in again] == [3, 2]


def test_loaded_tags_are_recomputed(named):
    text = ringfile.dumps([named["F4_0/sym3"]]).replace("group sym3", "# tags: semiprime\ngroup sym3")
    loaded = ringfile.loads(text)
    assert loaded[0].tags == named["F4_0/sym3"].tags


def test_file_format_example():
    text = """
    # the two element field with its trivial group
    ring F2
    add 2
    mul 1 1 -> 1
    unit 1
    group trivial =
    """
    [instance] = ringfile.loads(text, tags=False)
    assert instance.name == "F2/trivial"
    assert instance.ring.identity == (1,)
    assert instance.group.order == 1


def test_malformed_mul_line_reports_line_number():
    with pytest.raises(ParseError) as exc:
        ringfile.parse_text("ring X\nadd 2\nmul 1 -> 1\n")
    assert exc.value.line == 3


def test_unknown_automorphism_in_group():
    with pytest.raises(ParseError) as exc:
        ringfile.parse_text("ring X\nadd 2\nmul 1 1 -> 1\ngroup g = missing\n")
    assert exc.value.line == 4


def test_non_associative_file_gives_witness():
    with pytest.raises(ValidationError) as exc:
        ringfile.loads(NON_ASSOCIATIVE)
    assert exc.value.witness == (0, 0, 0)


def test_invalid_automorphism_in_file():
    text = "ring Z12\nadd 12\nmul 1 1 -> 1\naut times5\ngen 1 -> 5\ngroup g = times5\n"
    with pytest.raises(ValidationError):
        ringfile.loads(text)


def test_manifest(tmp_path, named):
    path = tmp_path / "named.json"
    summaries = ringfile.write_manifest([named["2Z8/neg"]], path)
    assert summaries[0].fingerprint.order == 4
    assert "2Z8/neg" in path.read_text()
