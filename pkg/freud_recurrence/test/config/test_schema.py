"""Test code for the config schema.

Copyright (C) 2025 Paulo Ferreira de Castro

Licensed under the Open Software License version 3.0, a copy of which can be
found in the LICENSE file.
"""

import os
import tempfile
import unittest
from fractions import Fraction
from pathlib import Path
from unittest.mock import patch

from ...config.schema import (
    PRECISION_ENV_VAR,
    ArithmeticKind,
    Command,
    ConfigError,
    load_config_file,
    merge_config,
    validate_config,
)
from ...lfreud.factory import TableMode
from ...weights.families import Family

SAMPLE_CONFIG_DIR = Path(__file__).parents[3] / "sample_config"


def meixner(**values):
    base = {"command": "table", "family": "meixner", "a": "1", "z": "1/2", "n": 3}
    base.update(values)
    return base


class TestRunConfig(unittest.TestCase):
    def test_parsing(self):
        cfg = validate_config(
            {
                "command": "verify",
                "family": "hahn",
                "a": "1, -4",
                "b": [-5],
                "n": 4,
                "tolerance": "1e-20",
            }
        )
        self.assertIs(cfg.command, Command.VERIFY)
        self.assertIs(cfg.family, Family.HAHN)
        self.assertEqual(cfg.a, [Fraction(1), Fraction(-4)])
        self.assertEqual(cfg.b, [Fraction(-5)])
        self.assertEqual(cfg.tolerance, Fraction(1, 10**20))
        self.assertIs(cfg.mode, TableMode.LF)
        self.assertEqual(validate_config(meixner(z=0.25)).z, Fraction(1, 4))

    def test_auto_arithmetic(self):
        cases = [
            (meixner(), ArithmeticKind.RATIONAL),
            (meixner(command="moments"), ArithmeticKind.FLOAT),
            (meixner(command="moments", normalized=True), ArithmeticKind.RATIONAL),
            (
                {"command": "table", "family": "ghahn1", "a": "1,1", "b": "1", "z": "1/2", "n": 3},
                ArithmeticKind.FLOAT,
            ),
            (
                {
                    "command": "table", "family": "ghahn1", "a": "1,1", "b": "1", "z": "1/2",
                    "n": 3, "seeds": "1/2,1/4",
                },
                ArithmeticKind.RATIONAL,
            ),
            (
                {"command": "verify", "family": "gen-charlier", "b": "1", "z": "1/2", "n": 3},
                ArithmeticKind.FLOAT,
            ),
            (
                {"command": "moments", "family": "hahn", "a": "1,-4", "b": "-5", "n": 3},
                ArithmeticKind.RATIONAL,
            ),
        ]
        for values, kind in cases:
            self.assertIs(validate_config(values).arithmetic, kind, values)
        forced = validate_config(meixner(arithmetic="float"))
        self.assertIs(forced.arithmetic, ArithmeticKind.FLOAT)
        self.assertFalse(forced.make_arith().is_exact)

    def test_invalid(self):
        ghahn = {"command": "table", "family": "ghahn1", "a": "1,1", "b": "1", "n": 3}
        cases = [
            ({**ghahn, "z": "1/2", "arithmetic": "rational"}, "beta_0"),
            ({**ghahn, "z": "1"}, "--family hahn"),
            (meixner(seeds="1"), "--seeds"),
            (meixner(n=-1), "n:"),
            (meixner(tolerance="-1"), "non-negative"),
            (meixner(a="x"), "a:"),
            (meixner(family="nope"), "family:"),
            (meixner(precision_bits=10), "precision_bits:"),
            (meixner(colour="red"), "colour:"),
        ]
        for values, message in cases:
            with self.assertRaises(ConfigError, msg=values) as ctx:
                validate_config(values)
            self.assertIn(message, str(ctx.exception))
            self.assertEqual(ctx.exception.exit_code, 2)

    def test_precision_from_environment(self):
        with patch.dict(os.environ, {PRECISION_ENV_VAR: "512"}):
            self.assertEqual(validate_config(meixner()).precision_bits, 512)
            self.assertEqual(validate_config(meixner(precision_bits=128)).precision_bits, 128)
        with patch.dict(os.environ, {PRECISION_ENV_VAR: ""}):
            cfg = validate_config(meixner(arithmetic="float"))
            self.assertEqual(cfg.precision_bits, 256)
            self.assertEqual(cfg.make_arith().precision_bits, 256)
            self.assertEqual(cfg.make_arith(1024).precision_bits, 1024)
        for bad in ("many", "16"):
            with patch.dict(os.environ, {PRECISION_ENV_VAR: bad}):
                with self.assertRaises(ConfigError) as ctx:
                    validate_config(meixner())
                self.assertIn(PRECISION_ENV_VAR, str(ctx.exception))

    def test_params(self):
        cfg = validate_config(
            {"command": "table", "family": "hahn-classical", "a": "1,1", "n_points": 4, "n": 2}
        )
        self.assertEqual(cfg.params()["z"], Fraction(1))
        self.assertEqual(len(cfg.params()["a"]), 2)
        self.assertIsNone(cfg.seed_scalars(cfg.make_arith()))


class TestConfigFiles(unittest.TestCase):
    def test_load(self):
        with tempfile.TemporaryDirectory() as tmp:
            good = Path(tmp, "good.toml")
            good.write_text('family = "meixner"\na = [1]\nz = "1/2"\nn = 5\n', encoding="utf-8")
            self.assertEqual(
                load_config_file(str(good)), {"family": "meixner", "a": [1], "z": "1/2", "n": 5}
            )
            bad = Path(tmp, "bad.toml")
            bad.write_text("family = \n", encoding="utf-8")
            with self.assertRaisesRegex(ConfigError, "Failed to parse"):
                load_config_file(str(bad))
            with self.assertRaisesRegex(ConfigError, "Cannot read"):
                load_config_file(str(Path(tmp, "missing.toml")))

    def test_merge(self):
        merged = merge_config(
            {"family": "meixner", "n": 5, "z": "1/2"}, {"command": "table", "n": 7, "z": None}
        )
        self.assertEqual(merged, {"family": "meixner", "n": 7, "z": "1/2", "command": "table"})

    def test_sample_configs(self):
        files = sorted(SAMPLE_CONFIG_DIR.glob("*.toml"))
        self.assertTrue(files)
        for path in files:
            values = load_config_file(str(path))
            cfg = validate_config(merge_config(values, {"command": "verify"}))
            self.assertGreater(cfg.n, 0, path.name)


# Tests can be run with the command line:
# python -m unittest freud_recurrence.test.config.test_schema
if __name__ == "__main__":
    unittest.main()
