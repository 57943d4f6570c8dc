"""Smoke test for the hyperpascal extension module.

Build and install first:  pip install --no-build-isolation ./crates/python
"""

import json

import hyperpascal as hp


def brute_power_sums(q, k, n_max):
    # independent row builder: pairs (value, is_a)
    row = [(1, False), (1, False)]
    sums = [sum(v**k for v, _ in row)]
    for _ in range(2, n_max + 1):
        nxt = [(1, False)]
        for i in range(len(row) - 1):
            if i > 0:
                v, is_a = row[i]
                nxt += [(v, False)] * (q - 4 if is_a else q - 3)
            nxt.append((row[i][0] + row[i + 1][0], True))
        nxt.append((1, False))
        row = nxt
        sums.append(sum(v**k for v, _ in row))
    return sums


def main():
    t = hp.Triangle(6)
    assert t.row_string(3) == "1B 3A 2B 2B 3A 1B", t.row_string(3)
    assert t.row(2) == [(1, "B"), (2, "A"), (1, "B")]
    assert t.row_counts(4) == (5, 12, 17)
    assert t.power_sums(2, 4) == [2, 6, 28, 160]
    assert t.state_vector(4, 2) == [98, 49, 62, 34]

    try:
        hp.Triangle(4)
    except ValueError as e:
        assert "q must be" in str(e)
    else:
        raise AssertionError("q=4 accepted")

    rec = hp.Recurrence(5)
    assert rec.order == 5
    assert rec.coefficients[0] == "q+11", rec.coefficients
    assert json.loads(rec.to_json())["variant"] == "full"

    for q in (5, 7, 9):
        for k in (2, 3, 4, 5):
            r = hp.Recurrence(k)
            expected = brute_power_sums(q, k, r.order + 4)
            assert r.extend(q, expected[: r.order], len(expected)) == expected, (q, k)

    folded = hp.Recurrence(6, reduced=True)
    assert folded.coefficients == hp.Recurrence(6).coefficients

    report = hp.verify(k_min=2, k_max=4, q_list=[5, 6], cap=20_000)
    assert report["all_exact"], report
    bad = hp.verify(k_min=3, k_max=3, q_list=[6], cap=2_000, reduced=True, form="as-printed")
    assert not bad["all_exact"]

    table = hp.reproduce_table(11)
    assert not table["diff"], table["diff"]
    findings = hp.conjecture(2, 11)
    assert all(f["printed_order_matches"] for f in findings)

    print("smoke test passed")


if __name__ == "__main__":
    main()
