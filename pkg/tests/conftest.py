import pytest

from semilat import OpTable, SemilatticeOrder


@pytest.fixture(scope="session")
def fig1_table():
    """Symmetric idempotent monotone table on {1..4} with zero 4 that is
    not associative; its 3-element corner block has no zero."""
    return OpTable.from_rows(
        [
            [1, 1, 2, 4],
            [1, 2, 3, 4],
            [2, 3, 3, 4],
            [4, 4, 4, 4],
        ]
    )


@pytest.fixture(scope="session")
def fig2_table():
    """Idempotent monotone table on {1..3} with deg(2) = 5 and no zero."""
    return OpTable.from_rows(
        [
            [1, 2, 2],
            [2, 2, 3],
            [2, 3, 3],
        ]
    )


@pytest.fixture(scope="session")
def fig3_table():
    """Join table of the vee 1 < 2 > 3: idempotent, symmetric, monotone,
    with deg(1) = deg(3) = 1 and no neutral element."""
    return OpTable.from_rows(
        [
            [1, 2, 2],
            [2, 2, 2],
            [2, 2, 3],
        ]
    )


@pytest.fixture(scope="session")
def fig4_order():
    """Five-element binary-tree semilattice: top 1, child 2; 2 has children
    3 and 4; 4 has child 5."""
    return SemilatticeOrder.from_pairs(5, [(2, 1), (3, 2), (4, 2), (5, 4)])
