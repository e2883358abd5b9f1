import pytest

from relnorms.complexes import homology_dim
from relnorms.errors import InputError
from relnorms.families import by_name, circle, cylinder_grid, suite_pairs, torus_grid


def test_sizes():
    T = torus_grid(4, 4)
    assert [T.size(n) for n in range(3)] == [16, 48, 32]
    C = cylinder_grid(6, 2)
    assert [C.size(n) for n in range(3)] == [18, 42, 24]
    assert [len(C.sub_indices(n)) for n in range(3)] == [12, 12, 0]
    assert [circle(k).size(1) for k in (3, 6)] == [3, 6]


def test_euler_characteristic():
    T = torus_grid(2, 3)
    assert T.size(0) - T.size(1) + T.size(2) == 0
    assert [homology_dim(T, n) for n in range(3)] == [1, 2, 1]


def test_names():
    assert by_name("circle4").size(1) == 4
    assert by_name("torus_grid3x2").size(2) == 12
    assert set(suite_pairs()) == {"circle3", "circle4", "circle5", "circle6", "interval",
                                  "cylinder_grid6x2", "torus_grid4x4"}
    for bad in ("torus", "circle", "cylinder_gridAx2", "torus_grid1x4"):
        with pytest.raises(InputError):
            by_name(bad)
