"""Certificate machinery: construction, serialization, re-checking, and the
rejection of corrupted certificates."""

import pytest

from t0space.certificates import (
    NotDSpaceCertificate,
    NotOmegaWFCertificate,
    NotSoberCertificate,
    certificate_from_json,
    recheck_certificate,
)
from t0space.chain_space import chain_not_dspace_certificate
from t0space.cofinite_space import not_omega_wf_certificate, not_sober_certificate
from t0space.docio import space_to_doc
from t0space.errors import ParseError
from t0space.fan_space import FanOpen, fan_diagonal_refuter
from t0space.generators import sierpinski, v_space


def all_catalog_certs():
    return [
        chain_not_dspace_certificate(),
        not_sober_certificate(),
        not_omega_wf_certificate(),
        fan_diagonal_refuter(lambda n: FanOpen(has_top=True, default=n), 16),
    ]


def test_catalog_certificates_roundtrip_and_recheck():
    for cert in all_catalog_certs():
        doc = cert.to_json()
        back = certificate_from_json(doc)
        assert recheck_certificate(back)
        assert back.to_json() == doc


def test_corrupted_fan_certificate_fails():
    cert = fan_diagonal_refuter(lambda n: FanOpen(has_top=True, default=n), 8)
    doc = cert.to_json()
    doc["witnesses"][3] = [3, 1]  # below candidate 3's threshold: no member
    assert not recheck_certificate(certificate_from_json(doc))


def test_corrupted_space_reference_fails():
    cert = chain_not_dspace_certificate()
    doc = cert.to_json()
    doc["space"] = "fan-lattice-scott"
    assert not recheck_certificate(certificate_from_json(doc))


def test_unknown_kind_rejected():
    with pytest.raises(ParseError):
        certificate_from_json({"kind": "no-such-kind"})
    with pytest.raises(ParseError):
        certificate_from_json({"witnesses": []})


def test_finite_not_sober_certificate_positive_and_negative():
    # Hand-built finite certificates exercise the machinery the classifier
    # never needs on valid inputs (finite T0 spaces are sober).
    v = v_space()
    doc = space_to_doc(v)
    good = NotSoberCertificate(space_ref=doc, closed_set=0b011)
    # {a,b} IS a point closure, so the certificate must fail to re-check
    assert not recheck_certificate(good)
    bogus = NotSoberCertificate(space_ref=doc, closed_set=0b110)
    # {b,c} is not closed, also rejected
    assert not recheck_certificate(bogus)


def test_finite_not_dspace_certificate_negative():
    s = sierpinski()
    cert = NotDSpaceCertificate(space_ref=space_to_doc(s), directed_set=0b11)
    # the closure of {0,1} is generated by 1, so this must fail
    assert not recheck_certificate(cert)


def test_finite_not_omega_wf_certificate():
    v = v_space()
    doc = space_to_doc(v)
    # descending chain {X, {b}} with intersection {b} inside open {b}: the
    # witness structure is fine but the claimed non-containment is false
    cert = NotOmegaWFCertificate(
        space_ref=doc,
        family=(0b111, 0b010),
        open_set=0b010,
        member_witnesses=((0, 0), (1, 1)),
    )
    assert not recheck_certificate(cert)
    # intersection {b} is NOT inside open {c}, so the premise fails too
    cert2 = NotOmegaWFCertificate(
        space_ref=doc,
        family=(0b111, 0b010),
        open_set=0b100,
        member_witnesses=((0, 0), (1, 1)),
    )
    assert not recheck_certificate(cert2)


def test_not_omega_wf_roundtrip_finite():
    v = v_space()
    cert = NotOmegaWFCertificate(
        space_ref=space_to_doc(v),
        family=(0b111, 0b010),
        open_set=0b010,
        member_witnesses=((0, 0), (1, 1)),
    )
    back = certificate_from_json(cert.to_json())
    assert back.family == cert.family
    assert back.member_witnesses == cert.member_witnesses
