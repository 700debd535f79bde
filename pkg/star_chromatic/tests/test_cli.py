"""
Tests for the command-line interface (CLI) functionality.

These tests run the subcommands end to end on small tree files and check the
exit codes and printed output.
"""

import json
import os
import shutil
import sys
import tempfile
import unittest
from io import StringIO
from unittest.mock import MagicMock, patch

sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), "..")))

from star_chromatic.cli import (
    EXIT_INPUT_ERROR,
    EXIT_INTERNAL,
    EXIT_INVALID,
    EXIT_OK,
    RunConfig,
    generate_tree_text,
    run,
    setup_parser,
)
from star_chromatic.errors import DomainError
from star_chromatic.selftest import CheckResult


class TestCLI(unittest.TestCase):
    """Tests for the CLI functionality."""

    def setUp(self):
        self.tmpdir = tempfile.mkdtemp()
        self.path_file = self.write("path.txt", "0 1\n1 2\n2 3\n3 4\n")

    def tearDown(self):
        shutil.rmtree(self.tmpdir)

    def write(self, name, text):
        path = os.path.join(self.tmpdir, name)
        with open(path, "w", encoding="utf-8") as f:
            f.write(text)
        return path

    def run_cli(self, argv):
        with patch("sys.stdout", new_callable=StringIO) as out:
            code = run(argv)
        return code, out.getvalue()

    def test_setup_parser(self):
        """Test that the argument parser is correctly set up."""
        parser = setup_parser()

        args = parser.parse_args(["index", "-i", "tree.txt"])
        self.assertEqual(args.command, "index")
        self.assertEqual(args.input, "tree.txt")
        self.assertEqual(args.output_format, "plain")

        args = parser.parse_args(["color", "-i", "tree.txt"])
        self.assertEqual(args.output_format, "json")

        args = parser.parse_args(["selftest", "--max-n", "6", "--threads", "2"])
        self.assertEqual(args.max_n, 6)
        self.assertEqual(args.thread_count, 2)

        args = parser.parse_args(["gen", "caterpillar", "5", "2", "--seed", "3"])
        self.assertEqual(args.kind, "caterpillar")
        self.assertEqual(args.params, [5, 2])

    def test_run_config_from_args(self):
        args = setup_parser().parse_args(["--verbose", "bounds", "-p", "2,3,3", "-f", "json"])
        config = RunConfig.from_args(args)
        self.assertTrue(config.verbose)
        self.assertEqual(config.profile, "2,3,3")
        self.assertEqual(config.output_format, "json")
        self.assertIsNone(config.input)

    def test_no_command_prints_help(self):
        code, out = self.run_cli([])
        self.assertEqual(code, EXIT_OK)
        self.assertIn("usage", out)

    def test_index(self):
        code, out = self.run_cli(["index", "-i", self.path_file])
        self.assertEqual(code, EXIT_OK)
        self.assertIn("index: 3", out)
        self.assertIn("attained_at: 2", out)

    def test_index_json(self):
        code, out = self.run_cli(["index", "-i", self.path_file, "-f", "json"])
        self.assertEqual(code, EXIT_OK)
        data = json.loads(out)
        self.assertEqual(data["index"], 3)

        rows = {row["vertex"]: row for row in data["per_vertex"]}
        self.assertEqual(sorted(rows), [0, 1, 2, 3, 4])
        self.assertEqual(rows[0], {"vertex": 0, "profile": [1], "lower": 2, "upper": 2, "local_index": 2})
        self.assertEqual(rows[1], {"vertex": 1, "profile": [0, 1], "lower": 2, "upper": 3, "local_index": 2})
        self.assertEqual(rows[2], {"vertex": 2, "profile": [1, 1], "lower": 3, "upper": 3, "local_index": 3})
        self.assertEqual(max(row["local_index"] for row in rows.values()), data["index"])

    def test_index_per_vertex_plain(self):
        labelled = self.write("labelled.txt", "10 11\n11 12\n12 13\n13 14\n")
        code, out = self.run_cli(["index", "-i", labelled])
        self.assertEqual(code, EXIT_OK)
        self.assertIn("vertex 12: profile 1,1 lower 3 upper 3 index 3", out)
        self.assertIn("vertex 10: profile 1 lower 2 upper 2 index 2", out)

    def test_color_then_validate(self):
        coloring_file = os.path.join(self.tmpdir, "coloring.json")
        code, out = self.run_cli(["color", "-i", self.path_file, "-o", coloring_file])
        self.assertEqual(code, EXIT_OK)
        self.assertIn("Results saved to", out)
        with open(coloring_file, encoding="utf-8") as f:
            self.assertEqual(json.load(f)["palette"], 3)

        code, out = self.run_cli(["validate", "-i", self.path_file, "-c", coloring_file])
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(out.strip(), "valid")

    def test_color_formats(self):
        code, out = self.run_cli(["color", "-i", self.path_file, "-f", "plain"])
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(len(out.strip().splitlines()), 4)

        code, out = self.run_cli(["color", "-i", self.path_file, "-f", "dot"])
        self.assertEqual(code, EXIT_OK)
        self.assertIn("graph", out)

    def test_validate_invalid(self):
        """Witnesses are printed with the file's own labels."""
        tree_file = self.write("labelled.txt", "10 11\n11 12\n12 13\n13 14\n")
        coloring_file = self.write(
            "bad.json",
            json.dumps({"palette": 2, "edges": {"10-11": 1, "11-12": 2, "12-13": 1, "13-14": 2}}),
        )
        code, out = self.run_cli(["validate", "-i", tree_file, "-c", coloring_file])
        self.assertEqual(code, EXIT_INVALID)
        self.assertEqual(out.strip(), "invalid: BiColoredP4 at 10-11-12-13-14")

    def test_validate_coverage_mismatch(self):
        coloring_file = self.write("short.json", json.dumps({"edges": {"0-1": 1}}))
        code, out = self.run_cli(["validate", "-i", self.path_file, "-c", coloring_file])
        self.assertEqual(code, EXIT_INPUT_ERROR)
        self.assertIn("Error", out)

    def test_bounds(self):
        code, out = self.run_cli(["bounds", "-p", "2,3,3"])
        self.assertEqual(code, EXIT_OK)
        self.assertIn("exact: 5 (ovs-search)", out)
        self.assertIn("lower: 5 (average-load)", out)

        code, out = self.run_cli(["bounds", "-p", "2,2,2", "-f", "json"])
        self.assertEqual(json.loads(out)["exact"], 4)

    def test_input_errors(self):
        code, _ = self.run_cli(["bounds", "-p", "x"])
        self.assertEqual(code, EXIT_INPUT_ERROR)

        code, _ = self.run_cli(["index", "-i", os.path.join(self.tmpdir, "missing.txt")])
        self.assertEqual(code, EXIT_INPUT_ERROR)

        cycle = self.write("cycle.txt", "0 1\n1 2\n2 0\n")
        code, out = self.run_cli(["color", "-i", cycle])
        self.assertEqual(code, EXIT_INPUT_ERROR)
        self.assertIn("cycle", out)

    def test_gen(self):
        first = generate_tree_text("random", [12], 5)
        self.assertEqual(first, generate_tree_text("random", [12], 5))
        self.assertEqual(len(first.splitlines()), 11)

        self.assertEqual(len(generate_tree_text("regular2h", [3, 3], 0).splitlines()), 9)
        self.assertEqual(len(generate_tree_text("profile", [2, 3, 3], 0).splitlines()), 11)
        with self.assertRaises(DomainError):
            generate_tree_text("caterpillar", [4], 0)

    def test_gen_command(self):
        out_file = os.path.join(self.tmpdir, "gen.txt")
        code, _ = self.run_cli(["gen", "caterpillar", "5", "2", "--seed", "1", "-o", out_file])
        self.assertEqual(code, EXIT_OK)
        code, out = self.run_cli(["index", "-i", out_file])
        self.assertEqual(code, EXIT_OK)
        self.assertIn("index:", out)

        code, _ = self.run_cli(["gen", "random"])
        self.assertEqual(code, EXIT_INPUT_ERROR)

    @patch("star_chromatic.cli.SelfTestRunner")
    def test_selftest(self, mock_runner_class):
        mock_runner = MagicMock()
        mock_runner.run_all_sync.return_value = [
            CheckResult("worked-example", "passed"),
            CheckResult("oracle-equivalence-n11", "skipped", "too-large"),
        ]
        mock_runner_class.return_value = mock_runner

        code, out = self.run_cli(["selftest", "--max-n", "11"])
        self.assertEqual(code, EXIT_OK)
        self.assertIn("1 passed, 0 failed, 1 skipped", out)
        config = mock_runner_class.call_args[0][0]
        self.assertEqual(config.max_n, 11)

        mock_runner.run_all_sync.return_value = [CheckResult("regular-formula", "failed", "boom")]
        code, _ = self.run_cli(["selftest"])
        self.assertEqual(code, EXIT_INTERNAL)

    def test_bench(self):
        code, out = self.run_cli(["bench", "5", "20", "--seed", "2"])
        self.assertEqual(code, EXIT_OK)
        lines = out.strip().splitlines()
        self.assertEqual(len(lines), 3)
        self.assertIn("seconds", lines[0])


if __name__ == "__main__":
    unittest.main()
