import random
from itertools import product

import pytest

from quhom.complex2 import (
    ClosedWalk,
    SignedEdge,
    TwoComplex,
    boundary1,
    boundary2,
    chain_complex,
    homology_cardinality,
    inverse_walk,
    is_orientable,
    is_orientable_integral,
    rp2,
    torus,
    torus_grid,
    validate,
)

from _corpus import two_complex_corpus


def brute_homology(complex2, D):
    """|ker d1| / |im d2| by direct enumeration; independent of the SNF path."""
    d1 = boundary1(complex2, D)
    d2 = boundary2(complex2, D)
    ne = len(complex2.edges)
    nf = len(complex2.faces)
    kernel = sum(1 for v in product(range(D), repeat=ne) if not any(d1.matvec(v)))
    image = {d2.matvec(c) for c in product(range(D), repeat=nf)}
    assert kernel % len(image) == 0
    return kernel // len(image)


def test_builder_counts():
    c = rp2()
    assert (len(c.vertices), len(c.edges), len(c.faces)) == (1, 1, 1)
    c = torus()
    assert (len(c.vertices), len(c.edges), len(c.faces)) == (1, 2, 1)
    c = torus_grid(2, 2)
    assert (len(c.vertices), len(c.edges), len(c.faces)) == (4, 8, 4)
    assert validate(c) == []


def test_builders_validate():
    assert validate(rp2()) == []
    assert validate(torus()) == []
    for k in range(1, 4):
        for l in range(1, 4):
            assert validate(torus_grid(k, l)) == []


def test_two_self_loop_walk_is_valid():
    # both edges loop at v, so every incidence lands at v
    c = TwoComplex(
        vertices=("v",),
        edges=("e1", "e2"),
        sources=("v", "v"),
        targets=("v", "v"),
        faces=("f",),
        walks=(ClosedWalk.of([SignedEdge("e1", 1), SignedEdge("e2", 1)]),),
    )
    assert validate(c) == []


def test_validate_reports_incidence_break():
    # e1 loops at u, e2 runs w -> u: only the 0->1 transition is broken
    c = TwoComplex(
        vertices=("u", "w"),
        edges=("e1", "e2"),
        sources=("u", "w"),
        targets=("u", "u"),
        faces=("f",),
        walks=(ClosedWalk.of([SignedEdge("e1", 1), SignedEdge("e2", 1)]),),
    )
    problems = validate(c)
    assert len(problems) == 1
    assert "face f" in problems[0] and "0->1" in problems[0]


def test_validate_reports_dangling_references():
    c = TwoComplex(
        vertices=("v",),
        edges=("e",),
        sources=("v",),
        targets=("ghost",),
        faces=("f",),
        walks=(ClosedWalk.of([SignedEdge("missing", 1)]),),
    )
    problems = validate(c)
    assert any("unknown target vertex" in p for p in problems)
    assert any("unknown edge" in p for p in problems)


def test_inverse_walk_examples():
    w = ClosedWalk.of([SignedEdge("e", 1), SignedEdge("e", 1)])
    assert inverse_walk(w) == ClosedWalk.of([SignedEdge("e", -1), SignedEdge("e", -1)])

    w = ClosedWalk.of(
        [SignedEdge("e1", 1), SignedEdge("e2", 1), SignedEdge("e1", -1), SignedEdge("e2", -1)]
    )
    expected = ClosedWalk.of(
        [SignedEdge("e2", 1), SignedEdge("e1", 1), SignedEdge("e2", -1), SignedEdge("e1", -1)]
    )
    assert inverse_walk(w) == expected


def test_inverse_walk_is_involution():
    rng = random.Random(3)
    for complex2, _ in two_complex_corpus(30, seed=99):
        for walk in complex2.walks:
            if walk.is_degenerate:
                continue
            assert inverse_walk(inverse_walk(walk)) == walk
        _ = rng  # corpus already random; rng kept for symmetry


def test_walk_canonical_rotation():
    a = ClosedWalk.of([SignedEdge("b", 1), SignedEdge("a", 1)])
    b = ClosedWalk.of([SignedEdge("a", 1), SignedEdge("b", 1)])
    assert a == b
    assert a.steps[0].edge == "a"


def test_boundary1_examples():
    assert boundary1(rp2(), 3).entries == ((0,),)
    assert boundary1(torus(), 5).entries == ((0, 0),)
    c = TwoComplex(("u", "w"), ("e",), ("u",), ("w",), (), ())
    mat = boundary1(c, 7)
    assert mat.column(0) == (6, 1)  # -1 at source, +1 at target


def test_boundary2_examples():
    for D in (2, 3, 4, 7):
        assert boundary2(rp2(), D).entries == ((2 % D,),)
    assert boundary2(torus(), 4).is_zero()
    c = TwoComplex(
        ("v",), ("e",), ("v",), ("v",), ("f",), (ClosedWalk.of([SignedEdge("e", 1)]),)
    )
    assert boundary2(c, 5).entries == ((1,),)


def test_chain_complex_property():
    for complex2, _ in two_complex_corpus(40, seed=5):
        for D in range(2, 7):
            chain = chain_complex(complex2, D)
            assert (chain.d1 @ chain.d2).is_zero()


def test_homology_paper_values():
    assert homology_cardinality(chain_complex(rp2(), 2)) == 2
    assert homology_cardinality(chain_complex(rp2(), 3)) == 1
    for D in (2, 3, 4, 5):
        assert homology_cardinality(chain_complex(torus(), D)) == D**2


def test_homology_grid_is_homotopy_invariant():
    for k in range(1, 4):
        for l in range(1, 4):
            grid = torus_grid(k, l)
            for D in range(2, 6):
                assert homology_cardinality(chain_complex(grid, D)) == D**2


def test_homology_matches_bruteforce():
    for complex2, _ in two_complex_corpus(40, seed=17):
        if len(complex2.edges) > 4:
            continue
        for D in (2, 3, 4):
            chain = chain_complex(complex2, D)
            assert homology_cardinality(chain) == brute_homology(complex2, D)


def test_homology_divides_full_space():
    for complex2, _ in two_complex_corpus(30, seed=29):
        for D in (2, 3, 4, 6):
            h = homology_cardinality(chain_complex(complex2, D))
            assert D ** len(complex2.edges) % h == 0


def test_inconsistent_chain_rejected():
    from quhom.complex2 import ChainComplexData
    from quhom.zmod import ZModMatrix

    d1 = ZModMatrix.from_rows([(1,)], 1, 3)
    d2 = ZModMatrix.from_rows([(1,)], 1, 3)
    with pytest.raises(ValueError):
        ChainComplexData(3, d1, d2)


def test_orientability():
    for D in (2, 3, 4, 5):
        assert is_orientable(torus(), D)
        for k in range(1, 4):
            for l in range(1, 4):
                assert is_orientable(torus_grid(k, l), D)
    assert is_orientable(rp2(), 2)
    assert not is_orientable(rp2(), 3)
    assert is_orientable_integral(torus())
    assert not is_orientable_integral(rp2())


def test_degenerate_walk():
    w = ClosedWalk.degenerate()
    assert w.is_degenerate
    assert inverse_walk(w) == w
    with pytest.raises(ValueError):
        ClosedWalk.of([])
    c = TwoComplex(("v",), (), (), (), ("f",), (w,))
    assert validate(c) == []
    assert boundary2(c, 3).nrows == 0
