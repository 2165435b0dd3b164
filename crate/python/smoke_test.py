"""Smoke test for the heffter_py extension.

Build and install first:
    pip install maturin
    pip install --no-build-isolation -e crates/py
"""

from pathlib import Path

import heffter_py as hp

FIXTURES = Path(__file__).resolve().parent.parent / "crates" / "core" / "fixtures"


def main():
    a = hp.nh_diagonal(11, 8)
    assert str(a) == (FIXTURES / "nh_11_8.txt").read_text()
    assert a.verify() == [] and a.globally_simple_violations() == []
    assert hp.Array.parse(str(a)) == a

    r = hp.nh_rectangular(9, 4)
    assert str(r) == (FIXTURES / "nh_9_4.txt").read_text()

    h = hp.Array.parse((FIXTURES / "h_7_5.txt").read_text())
    cells = [(1, 1), (2, 2), (3, 3), (4, 4), (5, 6), (6, 5), (7, 7)]
    assert str(hp.nh_from_heffter(h, cells)) == (FIXTURES / "nh_7_5.txt").read_text()

    bad = hp.Array.from_rows([[-1, 10, -11, 2], [8, 6, -3, 5], [-7, 12, 9, 4]], h=4, k=3)
    assert bad.verify() == ["row 1: sum=0", "column 1: sum=0"]

    rnd, attempts = hp.nh_random(2, 3, 3, 2, 1, seed=7)
    assert rnd.verify() == [] and attempts >= 1
    assert hp.nh_random(2, 3, 3, 2, 1, seed=7)[0] == rnd

    assert hp.partial_sums([1, 2, 10, -11], 25) == [1, 3, -12, 2]
    assert not hp.is_simple_ordering([1, 10, -11, 2], 25)
    status, order = hp.find_simple_ordering([1, 10, -11, 2], 25, nonzero=True)
    assert status == "found" and hp.is_simple_ordering(order, 25)

    nh34 = hp.Array.parse((FIXTURES / "nh_3_4.txt").read_text())
    o = hp.Orderings(
        nh34,
        rows=[[1, 2, 10, -11], [8, 6, -3, 5], [4, -7, 12, 9]],
        columns=[[1, 8, -7], [10, 6, 12], [-11, -3, 9], [2, 5, 4]],
    )
    assert sorted(hp.difference_family(nh34, o, "rows")) == [[0, 1, 3, 13, 2], [0, 4, 22, 9, 18], [0, 8, 14, 11, 16]]
    assert hp.decompose(nh34, o) == (300, 300, True)
    assert not hp.compatible(o, nh34)

    e = hp.embed_array(hp.nh_diagonal(5, 3))
    assert (e.vertices, e.edges, e.face_count, e.genus) == (31, 465, 10, 213)
    assert e.faces_match_circuits and len(e.rho0()) == 30
    assert all(len(walk) == 93 for _, walk in e.faces())
    assert hp.genus_closed_form(5, 5, 3, 3, "square") == 213
    assert hp.genus_closed_form(2, 3, 3, 2, "rectangular") == 31

    assert hp.compatible_orderings(hp.nh_k1(2)) is None
    try:
        hp.nh_diagonal(3, 4)
    except ValueError:
        pass
    else:
        raise AssertionError("expected ValueError")

    print("heffter_py smoke test passed")


if __name__ == "__main__":
    main()
