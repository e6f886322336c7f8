"""Branch data: signatures, braid moves, orbit dedup, quotients."""
import pytest

from prymsearch.covers import (admissible_signatures, braid_move, braid_orbit,
                               enumerate_prym_data, enumerate_vectors,
                               format_datum, genus_from_signature,
                               hurwitz_classes, hurwitz_partition, max_order,
                               parse_datum, quotient_datum, signature_of,
                               validate_datum)
from prymsearch.groups import FiniteGroup

from test_groups import QUAT, cyclic_table, dihedral_table


def test_max_order_formula():
    assert max_order(2, 4) == 12
    assert max_order(5, 4) == 48
    assert max_order(7, 4) == 72
    assert max_order(3, 5) == 8


def test_admissible_signatures_order4():
    # genus 2, group order 4: the only balanced 4-tuple of divisors
    assert admissible_signatures(2, 4, 4) == [(2, 2, 4, 4)]
    assert genus_from_signature(4, (2, 2, 4, 4)) == 2


def test_admissible_signatures_order8_genus5():
    sigs = admissible_signatures(5, 8, 4)
    assert sigs == [(2, 4, 8, 8), (4, 4, 4, 4)]
    for s in sigs:
        assert genus_from_signature(8, s) == 5
        assert all(m >= 2 and 8 % m == 0 for m in s)
        assert tuple(sorted(s)) == s


def test_admissible_signatures_riemann_hurwitz_exact():
    # non-integral branch arithmetic must yield nothing
    assert admissible_signatures(7, 64, 4) == []


def test_enumerate_vectors_c4():
    C4 = FiniteGroup(cyclic_table(4))
    vecs = enumerate_vectors(C4, (2, 2, 4, 4))
    assert sorted(vecs) == [(2, 2, 1, 3), (2, 2, 3, 1)]
    for v in vecs:
        assert signature_of(C4, v) == (2, 2, 4, 4)


def test_braid_move_identities():
    Q = FiniteGroup(QUAT)
    v = (1, 1, 4, 4)                     # i i j j has product 1
    validate_datum(Q, v, 2)
    for i in (1, 2, 3):
        w = braid_move(Q, v, i, 1)
        assert braid_move(Q, w, i, -1) == v
        prod = 0
        for x in w:
            prod = Q.table[prod][x]
        assert prod == 0


def test_braid_orbit_c4():
    # in an abelian group the orbit is exactly the set of reorderings
    C4 = FiniteGroup(cyclic_table(4))
    orbit = braid_orbit(C4, (2, 2, 1, 3))
    assert len(orbit) == 12
    assert {tuple(sorted(w)) for w in orbit} == {(1, 2, 2, 3)}


def test_hurwitz_classes_c4():
    C4 = FiniteGroup(cyclic_table(4))
    data = hurwitz_classes(C4, (2, 2, 4, 4))
    assert len(data) == 1
    d = data[0]
    assert d.sigma == 2
    part = hurwitz_partition(C4, (2, 2, 4, 4))
    assert len(part) == 1
    assert part[0][1] == 2              # both pattern-matching vectors


def test_hurwitz_classes_quaternion():
    Q = FiniteGroup(QUAT)
    data = hurwitz_classes(Q, (4, 4, 4, 4))
    assert len(data) >= 1
    for d in data:
        validate_datum(Q, d.vector, d.sigma)
        qd = quotient_datum(Q, d.vector, d.sigma)
        assert qd.genus == 1 and qd.branch_count == 8


def test_quotient_datum_genus_arithmetic():
    C4 = FiniteGroup(cyclic_table(4))
    qd = quotient_datum(C4, (2, 2, 1, 3), 2)
    assert (qd.genus, qd.branch_count) == (0, 6)
    # branch count: entries of order 2 equal to sigma contribute |G|/2 each,
    # order-4 entries contain sigma in their square
    assert qd.group.n == 2


def test_validate_datum_rejections():
    C4 = FiniteGroup(cyclic_table(4))
    with pytest.raises(ValueError):
        validate_datum(C4, (2, 2, 1, 1), 2)      # product is 2, not id
    with pytest.raises(ValueError):
        validate_datum(C4, (2, 2, 2, 2), 2)      # generates only C2
    with pytest.raises(ValueError):
        validate_datum(C4, (0, 2, 1, 3), 2)      # identity entry: unramified
    with pytest.raises(ValueError):
        validate_datum(C4, (2, 2, 1, 3), 1)      # sigma not an involution
    D3 = FiniteGroup(dihedral_table(3))
    with pytest.raises(ValueError):
        validate_datum(D3, (3, 4, 3, 4), 3)      # sigma not central


def test_parse_format_roundtrip(catalog):
    text = "G(8,4) [4,4,4,4] x=[1,1,4,4] sigma=2"
    G, vec, sigma = parse_datum(text, catalog)
    assert (G.id.order, G.id.index) == (8, 4)
    assert vec == (1, 1, 4, 4) and sigma == 2
    assert parse_datum(format_datum(G, vec, sigma), catalog)[1] == vec


def test_enumerate_prym_data_c4_genus2():
    C4 = FiniteGroup(cyclic_table(4))
    data = enumerate_prym_data(C4, 2)
    assert len(data) == 1
    assert signature_of(C4, data[0].vector) == (2, 2, 4, 4)


def test_enumerate_prym_data_quaternion_genus5():
    Q = FiniteGroup(QUAT)
    data = enumerate_prym_data(Q, 5)
    assert data
    for d in data:
        validate_datum(Q, d.vector, d.sigma)
        assert genus_from_signature(8, sorted(signature_of(Q, d.vector))) == 5
