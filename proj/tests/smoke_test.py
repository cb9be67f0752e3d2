"""Smoke tests for the pdring extension module."""
import json
import unittest

import pdring


class SmokeTest(unittest.TestCase):
    def test_hj_round_trip(self):
        self.assertEqual(pdring.hj_expand("7/5"), [2, 2, 3])
        self.assertEqual(pdring.hj_eval([2, 2, 3]), "7/5")
        self.assertEqual(pdring.hj_tails([2, 3]), ["5/3", "3"])
        self.assertEqual(pdring.t_signature([2, 3, 2, 4, 2, 2, 5]), [3, 4, 5])
        self.assertEqual(pdring.hj_closed_form("two_n_two", 1, 3, 1), "8/5")
        self.assertEqual(pdring.hj_closed_form("two3two3two", 0, 0, 0), "8/3")

    def test_parse_and_normalize(self):
        terms = pdring.parse_divisor("2 - 3/5 - 4/5 - 1/2")
        self.assertEqual(terms["P0"], "2")
        self.assertEqual(terms["P2"], "-4/5")
        d = pdring.normalize("2 - 3/5 - 4/5 - 1/2")
        self.assertEqual(d.s, 2)
        self.assertEqual(d.degree, "1/10")
        self.assertEqual(pdring.period(d), 10)

    def test_half_integer_family(self):
        d = pdring.normalize("2 - 3/5 - 4/5 - 1/2")
        self.assertTrue(pdring.is_rational_singularity(d)["rational"])
        self.assertEqual(pdring.multiplicity(d), 3)
        verdict = pdring.is_f_rational(d, 5)
        self.assertFalse(verdict["f_rational"])
        self.assertEqual(verdict["witness_n"], 1)
        self.assertEqual(pdring.failing_primes(d), [2, 5])
        cycle = pdring.fundamental_cycle(d)
        self.assertEqual(cycle.central, 5)
        # 5 central + (3) + (3,1) + (4,3,2,1)
        self.assertEqual(cycle.total(), 22)

    def test_graph_and_render(self):
        d = pdring.NormalizedDivisor(2, ["1/2", "2/3", "7/9"])
        g = pdring.dual_graph(d)
        self.assertEqual(g.central_weight, 2)
        self.assertEqual(g.branches, [[2], [2, 2], [2, 2, 2, 3]])
        text = pdring.render("2 - 1/2 - 2/3 - 7/9", "dot")
        self.assertTrue(text.startswith("graph dual_graph {"))

    def test_tables(self):
        self.assertEqual(len(pdring.family_ids(3)), 10)
        self.assertEqual(len(pdring.family_ids(4)), 39)
        d = pdring.instantiate_family("e3.4", [1, 0])
        self.assertEqual(d, pdring.NormalizedDivisor(2, ["1/2", "1/2", "5/7"]))
        matches = pdring.match_families(d, 3)
        self.assertIn(("e3.4", [1, 0]), matches)

    def test_analyze_json(self):
        report = json.loads(pdring.analyze("2 - 1/3 - 1/3 - 1/3", [2, 3, 5, 7], True))
        self.assertEqual(report["schema"], "pdring.analysis/1")
        self.assertEqual(report["multiplicity"], 5)
        self.assertTrue(all(v["verdict"] == "f_rational" for v in report["f_rationality"]))
        self.assertEqual(report["failing_primes"], [])

    def test_threshold_smoke(self):
        report = json.loads(pdring.threshold_report(3, [5, 7], max_param=1, max_denominator=30))
        self.assertGreater(report["failures_by_prime"]["5"]["count"], 0)
        self.assertEqual(report["failures_by_prime"]["7"]["count"], 0)

    def test_errors(self):
        with self.assertRaises(ValueError):
            pdring.hj_expand("1/2")
        with self.assertRaises(pdring.ParseError):
            pdring.parse_divisor("2 - x")
        with self.assertRaises(pdring.PreconditionError):
            pdring.fundamental_cycle(pdring.NormalizedDivisor(2, ["1/4", "1/4", "1/4", "1/4"]))


if __name__ == "__main__":
    unittest.main()
