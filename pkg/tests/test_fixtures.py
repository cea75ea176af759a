from edgepow import fixtures


def test_registry_size_and_names_unique():
    names = fixtures.names()
    assert len(names) == len(set(names))
    assert len([f for f in fixtures.REGISTRY if f.strong == "fail"]) >= 20
    assert len([f for f in fixtures.REGISTRY if f.strong == "pass"]) >= 5


def test_get_and_graph_of():
    f = fixtures.get("c4twopath")
    g = fixtures.graph_of(f)
    assert g.n == 8 and (7, 8) in g.edges


def test_every_fixture_passes():
    for fixture in fixtures.REGISTRY:
        result = fixtures.run_fixture(fixture)
        failed = [(l, i) for l, ok, i in result.checks if not ok]
        assert result.ok, (fixture.name, failed)


def test_swap_data_is_coherent():
    # the stored swap witnesses reference the stored members
    for fixture in fixtures.REGISTRY:
        if fixture.swap is None:
            continue
        assert fixture.swap.u in fixture.members
        assert fixture.swap.v in fixture.members
        assert len(fixture.swap.divisor) == len(fixture.caps)
