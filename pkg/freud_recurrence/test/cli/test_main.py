"""Test code for the command-line parser and the main module.

Copyright (C) 2025 Paulo Ferreira de Castro

Licensed under the Open Software License version 3.0, a copy of which can be
found in the LICENSE file.
"""

import io
import json
import logging
import tempfile
import unittest
from contextlib import redirect_stderr, redirect_stdout
from pathlib import Path

from ...cmdline_parser import CmdArgs, parse_command_line
from ...main import _log_level, build_config, main, run


class TestCmdlineParser(unittest.TestCase):
    def test_parse(self):
        args = parse_command_line(
            ["verify", "--family", "hahn", "--a", "1,-4", "--b=-5", "--n", "4",
             "--precision", "512", "--normalized", "-vv"]
        )
        self.assertEqual(args.command, "verify")
        self.assertEqual(args.b, "-5")
        self.assertEqual(args.n, 4)
        self.assertTrue(args.normalized)
        self.assertEqual(args.verbose, 2)
        values = args.config_values()
        self.assertNotIn("config_file", values)
        self.assertNotIn("precision", values)
        self.assertEqual(values["precision_bits"], 512)
        self.assertIsNone(values["z"])

    def test_negative_values(self):
        args = parse_command_line(
            ["table", "--family", "hahn", "--a", "-4,1", "--b", "-5", "--z", "-1/2", "--n", "3"]
        )
        self.assertEqual((args.a, args.b, args.z, args.n), ("-4,1", "-5", "-1/2", 3))
        self.assertEqual(parse_command_line(["table", "--z=-1/2"]).z, "-1/2")
        with redirect_stderr(io.StringIO()), self.assertRaises(SystemExit):
            parse_command_line(["table", "--z", "--n", "3"])

    def test_defaults(self):
        args = parse_command_line(["table"])
        self.assertEqual(args, CmdArgs(command="table"))

    def test_bad_arguments(self):
        for argv in (["plot"], ["table", "--mode", "fast"], ["table", "--n", "x"], []):
            with redirect_stderr(io.StringIO()), self.assertRaises(SystemExit) as ctx:
                parse_command_line(argv)
            self.assertEqual(ctx.exception.code, 2)

    def test_log_level(self):
        self.assertEqual(_log_level(0), logging.WARNING)
        self.assertEqual(_log_level(1), logging.INFO)
        self.assertEqual(_log_level(3), logging.DEBUG if __debug__ else logging.INFO)


class TestMain(unittest.TestCase):
    def test_config_file_with_overrides(self):
        with tempfile.TemporaryDirectory() as tmp:
            path = Path(tmp, "run.toml")
            path.write_text(
                "family = 'meixner'\na = [1]\nz = '1/2'\nn = 10\nmode = 'closed'\n",
                encoding="utf-8",
            )
            args = parse_command_line(["table", "-c", str(path), "--n", "2", "--format", "json"])
            cfg = build_config(args)
            self.assertEqual(cfg.n, 2)
            out = io.StringIO()
            self.assertEqual(run(args, out), 0)
            self.assertEqual([r["n"] for r in json.loads(out.getvalue())], [0, 1, 2])

    def test_missing_config_file(self):
        err = io.StringIO()
        with redirect_stderr(err):
            code = run(parse_command_line(["table", "-c", "/nonexistent/run.toml"]))
        self.assertEqual(code, 2)
        self.assertTrue(err.getvalue().startswith("ConfigError: Cannot read run file"))

    def test_main(self):
        out, err = io.StringIO(), io.StringIO()
        with redirect_stdout(out), redirect_stderr(err):
            code = main(["moments", "--family", "charlier", "--z", "2", "--n", "3", "--normalized"])
        self.assertEqual(code, 0)
        self.assertEqual(out.getvalue(), "n,mu\n0,1\n1,2\n2,6\n3,22\n")

    def test_main_negative_z(self):
        outputs = []
        for mode in ("closed", "lf"):
            out = io.StringIO()
            with redirect_stdout(out), redirect_stderr(io.StringIO()):
                code = main(
                    ["table", "--family", "meixner", "--a", "5/2", "--z", "-1/2", "--n", "2",
                     "--mode", mode]
                )
            self.assertEqual(code, 0, mode)
            outputs.append(out.getvalue())
        self.assertEqual(outputs[0], outputs[1])
        self.assertTrue(outputs[0].startswith("n,beta,gamma\n0,"))

    def test_main_missing_family(self):
        err = io.StringIO()
        with redirect_stdout(io.StringIO()), redirect_stderr(err):
            code = main(["table", "--n", "3"])
        self.assertEqual(code, 2)
        self.assertIn("family", err.getvalue())


# Tests can be run with the command line:
# python -m unittest freud_recurrence.test.cli.test_main
if __name__ == "__main__":
    unittest.main()
