"""argv fixtures for the CLI golden files (one JSON file per entry)."""

# the first three carry the expected result payload verbatim
WORKED_EXAMPLES = {
    "check_x_minus_1": (["check", "--domain", "QQ", "--family", "x - 1"],
                        {"status": "Bad", "witness": "x - 1"}),
    "norms_two_roots": (["norms", "--domain", "QQ", "--family", "x^2 - 3*x + 2", "--g", "x + 1"],
                        {"s": ["5", "6"], "cofactor": "1"}),
    "classify_transcendental": (["classify", "--domain", "QQ(u)", "--family", "x - u"],
                                {"status": "Good", "u": ["u"]}),
}

MORE = {
    "invert_two_roots": ["invert", "--domain", "QQ", "--family", "x^2 - 3*x + 2", "--g", "x + 1"],
    "invert_not_a_unit": ["invert", "--domain", "QQ", "--family", "x^2 - 3*x + 2", "--g", "x - 1"],
    "check_function_field_bad": ["check", "--domain", "QQ(u)", "--family", "x^2 - (1+u)*x + u"],
    "check_gf7_power": ["check", "--domain", "GF(7)", "--family", "x^3"],
    "classify_not_in_hilb": ["classify", "--domain", "QQ", "--family", "x^2 - 3*x + 2"],
    "point_test_origin": ["point-test", "--domain", "QQ", "--point", "0,0,0"],
    "point_test_function_field": ["point-test", "--domain", "QQ(u)", "--point", "u, 0"],
    "ideal_gen_strip_unit": ["ideal-gen", "--domain", "QQ", "--gens", "x^3 - x^2, x^2*(x - 1)"],
    "lemma22_gf4": ["lemma22", "--domain", "GF(2^2)", "--g", "x - y"],
    "strip_function_field": ["strip", "--domain", "QQ(u)", "--g", "(x - 1)*(x - u)"],
    "ebasis_power_sum": ["ebasis", "--g", "t1^2 + t2^2"],
    "delta_square": ["delta", "--domain", "QQ", "--g", "x^2", "--n", "1"],
    "hn_eval_inverse_norm": ["hn-eval", "--domain", "QQ(u)", "--n", "1", "--g", "1", "--gens", "x + 1",
                             "--point", "u"],
    "verify_seed_7": ["verify", "--seed", "7"],
    "syntax_error": ["norms", "--family", "x^-1", "--g", "x"],
    "pretty_norms": ["norms", "--domain", "GF(5)", "--family", "x^2 - x", "--g", "x + 1", "--pretty"],
}

ALL = {**{k: v[0] for k, v in WORKED_EXAMPLES.items()}, **MORE}
