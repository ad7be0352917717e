"""Smoke test for the surfgeo Python module.

Build and install the module first, e.g. `pip install ./crates/py`
(or `maturin develop -m crates/py/Cargo.toml`), then run this script.
"""

import surfgeo


def main() -> None:
    tet = surfgeo.Surface([(1, 2, 3), (1, 2, 4), (1, 3, 4), (2, 3, 4)])
    assert tet.euler_characteristic == 2 and tet.kind() == "sphere"
    assert tet.vertex_faithful

    k4 = tet.face_graph()
    assert (k4.num_nodes, k4.num_arcs) == (4, 6)
    assert k4.count_cycle_double_covers() == 2
    kinds = sorted(s.kind() for s in k4.embeddings())
    assert kinds == ["projective-plane", "sphere"], kinds
    assert len(k4.embeddings(vertex_faithful_only=True)) == 1

    double = surfgeo.Surface.parse("1 2 3\n1 2 4\n1 3 4\n2 3 5\n2 4 5\n3 4 5\n")
    assert double.count_waists(3) == 1
    classes = surfgeo.reembeddings(double)
    summary = [(c.target, c.pattern, c.orbit_size) for c in classes]
    assert summary == [("projective-plane", "K4", 2), ("klein-bottle", "K2,3", 1)], summary
    for c in classes:
        assert c.surface.kind() == c.target
        assert not c.surface.vertex_faithful
        oracle = surfgeo.oracle_reembeddings(double, c.target)
        assert [s.canonical_form() for s in oracle] == [c.surface.canonical_form()]

    assert [len(surfgeo.generate_spheres(n)) for n in (4, 6, 8, 10)] == [1, 1, 2, 5]
    assert surfgeo.table(8) == [(4, 1, 1, 0, 0), (6, 1, 1, 0, 1), (8, 2, 2, 2, 4)]
    assert surfgeo.prop45_family(3).edge_graph().automorphism_group_order() == 1

    try:
        surfgeo.Surface.parse("1 2 3\n1 2\n")
    except ValueError as e:
        assert "line 2" in str(e)
    else:
        raise AssertionError("malformed input accepted")

    print("surfgeo smoke test passed")


if __name__ == "__main__":
    main()
