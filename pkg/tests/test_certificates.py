from __future__ import annotations

import pytest
from hypothesis import given

from graphcert.certificates import (
    CliqueCertificate,
    CliqueCoverCertificate,
    ColoringCertificate,
    MatchingCertificate,
    StableSetCertificate,
    canonical_certificate,
    certificate_from_json,
    certificate_size,
    certificate_to_json,
    certificate_to_text,
    coloring_from_assignment,
    cover_from_masks,
    verify_certificate,
)
from graphcert.families import complete, cycle
from graphcert.graph import Graph
from graphcert.solvers import solve_all

from conftest import graphs


def test_stable_set_accept_reject():
    g = cycle(5)
    assert verify_certificate(g, StableSetCertificate((0, 2)))
    assert verify_certificate(g, StableSetCertificate(()))
    assert not verify_certificate(g, StableSetCertificate((0, 1)))
    assert not verify_certificate(g, StableSetCertificate((0, 0)))
    assert not verify_certificate(g, StableSetCertificate((0, 5)))


def test_clique_accept_reject():
    g = complete(4)
    assert verify_certificate(g, CliqueCertificate((0, 1, 2, 3)))
    assert not verify_certificate(cycle(5), CliqueCertificate((0, 1, 2)))
    assert not verify_certificate(g, CliqueCertificate((0, 4)))


def test_coloring_accept_reject():
    g = cycle(5)
    good = ColoringCertificate(((0, 2), (1, 3), (4,)))
    assert verify_certificate(g, good)
    # adjacent vertices in one class
    assert not verify_certificate(g, ColoringCertificate(((0, 1), (2, 4), (3,))))
    # vertex 4 missing
    assert not verify_certificate(g, ColoringCertificate(((0, 2), (1, 3))))
    # vertex 0 in two classes
    assert not verify_certificate(g, ColoringCertificate(((0, 2), (0, 3), (1, 4))))
    # empty class
    assert not verify_certificate(g, ColoringCertificate(((0, 2), (1, 3), (4,), ())))


def test_clique_cover_accept_reject():
    g = cycle(5)
    assert verify_certificate(g, CliqueCoverCertificate(((0, 1), (2, 3), (4,))))
    assert not verify_certificate(g, CliqueCoverCertificate(((0, 2), (1, 3), (4,))))
    assert not verify_certificate(g, CliqueCoverCertificate(((0, 1), (2, 3))))


def test_matching_accept_reject():
    g = cycle(6)
    assert verify_certificate(g, MatchingCertificate(((0, 1), (2, 3), (4, 5))))
    assert verify_certificate(g, MatchingCertificate(()))
    # shares vertex 1
    assert not verify_certificate(g, MatchingCertificate(((0, 1), (1, 2))))
    # not an edge
    assert not verify_certificate(g, MatchingCertificate(((0, 2),)))
    assert not verify_certificate(g, MatchingCertificate(((0, 6),)))


def test_empty_graph_certificates():
    g = Graph.empty(0)
    assert verify_certificate(g, ColoringCertificate(()))
    assert verify_certificate(g, CliqueCoverCertificate(()))
    assert not verify_certificate(g, ColoringCertificate(((),)))
    assert verify_certificate(g, StableSetCertificate(()))


def test_certificate_size():
    assert certificate_size(StableSetCertificate((1, 3, 5))) == 3
    assert certificate_size(ColoringCertificate(((0,), (1,)))) == 2
    assert certificate_size(MatchingCertificate(((0, 1),))) == 1


def test_canonicalisation():
    cert = ColoringCertificate(((3, 1), (2, 0)))
    canon = canonical_certificate(cert)
    assert canon.classes == ((0, 2), (1, 3))
    m = canonical_certificate(MatchingCertificate(((5, 4), (1, 0))))
    assert m.edges == ((0, 1), (4, 5))


def test_canonicalisation_preserves_validity():
    g = cycle(5)
    cert = ColoringCertificate(((2, 0), (3, 1), (4,)))
    assert verify_certificate(g, canonical_certificate(cert))


@pytest.mark.parametrize(
    "cert",
    [
        StableSetCertificate((2, 0)),
        CliqueCertificate((1, 0)),
        ColoringCertificate(((1,), (0, 2))),
        CliqueCoverCertificate(((0, 1), (2,))),
        MatchingCertificate(((3, 2),)),
    ],
)
def test_json_round_trip(cert):
    data = certificate_to_json(cert)
    back = certificate_from_json(data)
    assert back == canonical_certificate(cert)
    assert certificate_to_json(back) == data


def test_json_rejects_unknown_kind():
    with pytest.raises(ValueError):
        certificate_from_json({"kind": "mystery", "vertices": []})


def test_text_form_is_stable():
    cert = StableSetCertificate((2, 0, 4))
    assert certificate_to_text(cert) == '{"kind":"stable-set","vertices":[0,2,4]}'


def test_coloring_from_assignment():
    cert = coloring_from_assignment([0, 1, 0, 2])
    assert cert.classes == ((0, 2), (1,), (3,))
    assert verify_certificate(Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)]), cert)


def test_cover_from_masks():
    cert = cover_from_masks([0b011, 0b100])
    assert cert.cliques == ((0, 1), (2,))


@given(graphs(max_n=7))
def test_solver_certificates_survive_json_round_trip(g):
    for result in solve_all(g).values():
        data = certificate_to_json(result.certificate)
        back = certificate_from_json(data)
        assert verify_certificate(g, back)
        assert certificate_size(back) == result.value
