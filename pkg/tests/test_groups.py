import pytest

from tameact.groups import GroupError, FiniteGroup, cyclic_group, symmetric_group


def test_cyclic_basics():
    C4 = cyclic_group(4)
    assert C4.order == 4
    assert C4.mul(3, 2) == 1
    assert C4.inv(1) == 3
    assert C4.is_abelian()


def test_symmetric_group_structure():
    S3 = symmetric_group(3)
    assert S3.order == 6
    assert not S3.is_abelian()
    tau = S3.names.index("021")
    H = S3.subgroup_generated([tau])
    assert len(H) == 2
    assert not S3.is_normal(H)
    cosets = S3.left_cosets(H)
    assert len(cosets) == 3
    assert S3.identity in cosets[0]


def test_quotient_of_c4():
    C4 = cyclic_group(4)
    Q, index = C4.quotient((0, 2))
    assert Q.order == 2
    assert index[0] == index[2]
    assert index[1] == index[3] != index[0]


def test_bad_table_rejected():
    with pytest.raises(GroupError):
        FiniteGroup(table=((0, 1), (1, 1)), names=("e", "g"))
