import copy
import json

import pytest

from jmlat import (
    build_Lk,
    build_On,
    certify_radical,
    dumps,
    gorenstein_report,
    recheck,
    rank_order,
    verify_decomposition,
    verify_divisor_isomorphism,
)
from jmlat.claims import check_divisor_iso, check_l2_radical
from jmlat.cli import main


def roundtrip(obj):
    return json.loads(dumps(obj.to_dict()))


def test_radicality_rank_order_replays():
    L = build_On(6)
    cert = roundtrip(certify_radical(L, rank_order(L)))
    assert recheck(cert) == (True, "replayed")
    # the stored order is used: under the element-list order this basis is not closed
    cert["order_spec"]["blocks"][0][1] = list(L.elements)
    assert not recheck(cert)[0]


def test_radicality_false_squarefree_claim():
    cert = roundtrip(certify_radical(build_Lk(1, 1, 1)))
    assert recheck(cert)[0]
    cert["verdict"] = "RadicalBySquarefree"
    ok, why = recheck(cert)
    assert not ok and "squarefree" in why


def test_radicality_basis_of_other_ideal():
    cert = roundtrip(certify_radical(build_Lk(2, 1)))
    cert["basis"] = ["a1", "a2", "b1"]
    cert["initial_ideal"] = ["a1", "a2", "b1"]
    assert not recheck(cert)[0]


def test_decomposition_replays_and_tamper():
    cert = roundtrip(verify_decomposition(2, 1, 1))
    assert recheck(cert) == (True, "replayed")
    bad = copy.deepcopy(cert)
    bad["primes"][0]["method"] = "VariableIdeal"
    assert not recheck(bad)[0]
    bad = copy.deepcopy(cert)
    # the first entry is redundant as a generator; the last is not
    bad["intersection_basis"] = bad["intersection_basis"][1:]
    assert recheck(bad)[0]
    bad["intersection_basis"] = bad["intersection_basis"][:-1]
    assert not recheck(bad)[0]


def test_gorenstein_replays_and_tamper():
    cert = roundtrip(gorenstein_report(build_On(5)))
    assert recheck(cert) == (True, "replayed")
    bad = copy.deepcopy(cert)
    bad["rank"]["witness"]["chains"][0] = bad["rank"]["witness"]["chains"][1]
    assert not recheck(bad)[0]
    bad = copy.deepcopy(cert)
    bad["distributive"] = False
    assert not recheck(bad)[0]


def test_divisor_iso_replays_and_tamper():
    cert = roundtrip(verify_divisor_isomorphism(2, 3, 5))
    assert recheck(cert) == (True, "replayed")
    keys = sorted(cert["h1_map"])
    a, b = keys[1], keys[2]
    cert["h1_map"][a], cert["h1_map"][b] = cert["h1_map"][b], cert["h1_map"][a]
    assert not recheck(cert)[0]


def test_basis_check_replays(capsys):
    argv = ["verify-basis", "--set", "paper-glued", "--n1", "5", "--n2", "5", "--kp", "3", "--i1", "2", "--i2", "4"]
    main(argv)
    cert = json.loads(capsys.readouterr().out)
    assert recheck(cert)[0]
    cert["is_groebner"] = True
    assert not recheck(cert)[0]


@pytest.mark.parametrize("result", [check_l2_radical(3, 2), check_divisor_iso(1, 2, 3)], ids=["l2", "divisor"])
def test_claim_embeds_replayable_certificate(result):
    cert = roundtrip(result)
    assert cert["kind"] == "claim" and cert["passed"]
    assert recheck(cert)[0]


def test_unknown_kind():
    assert recheck({"schema": 1, "kind": "nope"}) == (False, "no recheck procedure for kind 'nope'")


def test_dumps_is_stable():
    a = dumps(certify_radical(build_Lk(3, 2)).to_dict())
    b = dumps(certify_radical(build_Lk(3, 2)).to_dict())
    assert a == b and a.endswith("}\n")
