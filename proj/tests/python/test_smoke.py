"""Smoke tests for the permlab python module."""

import sys

import permlab


def check(cond, msg):
    if not cond:
        print("FAIL:", msg)
        sys.exit(1)


def main():
    # Words.
    w = permlab.parse_word("a a^-1 b")
    check(str(permlab.free_reduce(w)) == "b", "free_reduce")
    check(str(permlab.invert(permlab.parse_word("a b"))) == "b^-1 a^-1",
          "invert")
    check(permlab.exponent_sum(permlab.parse_word("v a v^-1"), "v") == 0,
          "exponent_sum")

    # Permutations.
    sigma = permlab.sigma_line()
    pt = permlab.Point(0, 9)
    check(sigma(pt) == permlab.Point(1, 9), "sigma_line")
    tau = permlab.tau_triples()
    check(tau(permlab.Point(0, 4)) == permlab.Point(0, 5), "tau_triples")

    # Decider against a schedule-backed coded set.
    cs = permlab.CodedSet.from_schedule([(0, 4), (1, 7), (2, 0), (3, 2)])
    for x in range(60):
        v = permlab.decide_word(permlab.m_reduction_word(x), cs)
        check(v.equal_identity == cs.contains(x), f"m-reduction at {x}")
        check(permlab.brute_force_identity(permlab.m_reduction_word(x), cs)
              == v.equal_identity, f"brute force at {x}")

    # The documented divergence.
    w3 = permlab.parse_word("(b t)^3")
    check(not permlab.decide_word(w3, cs).equal_identity, "divergence decide")
    check(permlab.literal_case_decide(w3, cs).equal_identity,
          "divergence literal")

    # Coding equation with a python column function.
    rep = permlab.verify_code_equation("identity", 1, 2, 8)
    check(not rep.f_agrees_bounded and not rep.perms_agree_on_region,
          "verify_code_equation identity")
    rep2 = permlab.verify_code_equation(lambda x, n: 0, 3, 5, 8)
    check(rep2.f_agrees_bounded and rep2.perms_agree_on_region,
          "verify_code_equation trivial")

    # Abelian toolkit.
    p = permlab.Presentation("x\nx^2\n")
    inv = permlab.abelian_invariants(p)
    check(inv.free_rank == 0 and inv.invariant_factors == [2], "invariants")
    check(permlab.abelian_iso(permlab.Presentation("a b\na^2\nb^3\n"),
                              permlab.Presentation("c\nc^6\n")), "iso")
    d, u, v = permlab.smith_normal_form([[2, 0], [0, 3]])
    check(d[0][0] == 1 and d[1][1] == 6, "snf")
    delta = permlab.strong_diagonal([p])
    ok, witnesses = permlab.diagonal_check(delta, [p])
    check(ok and witnesses[0]["output_rank"] == 1, "diagonal")

    print("python smoke tests passed")


if __name__ == "__main__":
    main()
