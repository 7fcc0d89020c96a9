"""Smoke test for the adframe extension module. Run after building it with
`pip install --no-build-isolation -e crates/python`."""

import json

import adframe

TERM = '{"points":1,"opens":[[],[0]],"leq":[[0,0]]}'
INDISCRETE_2 = '{"points":2,"opens":[[],[0,1]],"leq":[]}'


def main():
    term = adframe.Space.from_json(TERM)
    frame = adframe.ado(term)
    assert frame.sizes == (2, 2), frame
    ok, failures = frame.validate()
    assert ok and not failures, failures
    tot = sorted(map(tuple, json.loads(frame.to_json())["tot"]))
    assert tot == [(0, 1), (1, 0), (1, 1)], tot
    assert adframe.adpt(frame) == term

    x = adframe.Space.from_json(INDISCRETE_2)
    assert len(adframe.ads(x)) == 2
    assert len(adframe.sobrify(x)) == 1
    assert all(adframe.is_ad_sober(x, v) for v in ("up", "down", "both"))
    verdict, witness = adframe.check("CEX-ADS", x)
    assert verdict == "expected-fail" and "2 points" in witness, (verdict, witness)

    spaces = adframe.spaces(2)
    assert len(spaces) == 16
    for s in spaces:
        for v in ("up", "down", "both"):
            assert adframe.check("IDEMPOTENT", s, v)[0] == "pass"
    assert len(adframe.theorem_ids()) == 19

    try:
        adframe.Space.from_json('{"points":2,"opens":[[0]],"leq":[]}')
    except ValueError as e:
        assert "not a topology" in str(e)
    else:
        raise AssertionError("broken space accepted")
    print("adframe smoke test: ok")


if __name__ == "__main__":
    main()
