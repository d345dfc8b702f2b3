"""Smoke test for the seidel_spectra extension module."""

import math

import seidel_spectra as ss


def main():
    p = ss.FamilyParams(3, 1, 2)
    assert (p.h, p.p, p.k, p.n) == (3, 1, 2, 4)
    assert repr(p) == "FamilyParams(h=3, p=1, k=2)"

    s = ss.seidel_matrix(p)
    assert s == [[0, -1, -1, 1], [-1, 0, -1, -1], [-1, -1, 0, -1], [1, -1, -1, 0]]
    assert ss.charpoly_oracle(s) == [5, 0, -6, 0, 1]

    closed = ss.charpoly_closed(p)
    assert closed["coefficients"] == [5, 0, -6, 0, 1]
    assert ss.cubic_s(p) == [5, 5, -1, -1]

    values = sorted(v for v, m, _ in ss.spectrum_closed(p) for _ in range(m))
    r5 = math.sqrt(5)
    assert all(abs(a - b) < 1e-9 for a, b in zip(values, [-r5, -1, 1, r5]))
    numeric = ss.eig_numeric([[float(x) for x in row] for row in s])
    assert all(abs(a - b) < 1e-9 for a, b in zip(sorted(numeric), values))

    star = ss.FamilyParams(2, 1, 3)
    report = ss.verify_instance(star)
    assert report["charpoly_exact_match"] and report["passed"]
    assert report["statement_audit"]["factor_eigenvalue"] == -1
    assert any("inconsistent" in f for f in report["findings"])
    assert len(ss.negative_edges(star)) == 3

    assert ss.det_exact([[0, 1, 1], [1, 0, -1], [1, -1, 0]]) == -2
    big = ss.charpoly_oracle(ss.seidel_matrix(ss.FamilyParams(7, 7, 5)))
    assert len(big) == 36 and big[-1] == -1

    summary = ss.sweep(3, 3)
    assert summary["passed"] == 10 and summary["failed"] == 0

    for bad in [(2, 3, 2), (1, 1, 2), (2, 1, 0)]:
        try:
            ss.FamilyParams(*bad)
        except ValueError:
            pass
        else:
            raise AssertionError(f"{bad} accepted")
    try:
        ss.charpoly_closed(ss.FamilyParams(2, 1, 1))
    except ValueError as e:
        assert "k >= 2" in str(e)
    else:
        raise AssertionError("k = 1 accepted")

    print("smoke test passed")


if __name__ == "__main__":
    main()
