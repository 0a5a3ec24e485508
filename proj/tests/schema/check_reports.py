#!/usr/bin/env python3
# Copyright 2026 The graphgame Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Runs the CLI over the fixtures and validates every report, fixture and
strategy file against the shipped JSON schemas."""

import argparse
import json
import pathlib
import subprocess
import sys
import tempfile

import jsonschema


def load(path):
    with open(path, encoding="utf-8") as f:
        return json.load(f)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--cli", required=True)
    ap.add_argument("--fixtures", required=True, type=pathlib.Path)
    ap.add_argument("--schemas", required=True, type=pathlib.Path)
    args = ap.parse_args()

    validators = {}
    for name in ("game", "strategy", "report"):
        schema = load(args.schemas / f"{name}.schema.json")
        jsonschema.Draft202012Validator.check_schema(schema)
        validators[name] = jsonschema.Draft202012Validator(schema)

    failures = []

    def check(kind, document, label):
        errors = sorted(validators[kind].iter_errors(document), key=str)
        for e in errors:
            path = "/".join(str(p) for p in e.absolute_path)
            failures.append(f"{label}: {path}: {e.message}")

    games = sorted(args.fixtures.glob("*.game"))
    strategies = sorted((args.fixtures / "strategies").glob("*.strategy"))
    for g in games:
        check("game", load(g), g.name)
    for s in strategies:
        check("strategy", load(s), s.name)

    def run(argv, expect):
        proc = subprocess.run([args.cli, *argv], capture_output=True, text=True)
        label = " ".join(argv[:2]) + f" [{pathlib.Path(argv[1]).name}]"
        if proc.returncode != expect:
            failures.append(f"{label}: exit {proc.returncode}, expected {expect}")
        try:
            report = json.loads(proc.stdout)
        except json.JSONDecodeError as e:
            failures.append(f"{label}: report is not JSON ({e})")
            return None
        check("report", report, label)
        return report

    consistency = [g for g in games if load(g)["payoff"]["mode"] == "consistency"]
    targets = [g for g in games if load(g)["payoff"]["mode"] == "target"]
    quick = ["--restarts", "2"]
    for g in games:
        run(["validate", str(g)], 0)
    for g in consistency:
        run(["classify", str(g)], 0)
        run(["value", str(g), *quick], 0)
    for g in targets:
        run(["gyni", str(g), *quick], 0)
        run(["classify", str(g)], 6)
    chsh = str(args.fixtures / "chsh.game")
    for s in strategies:
        run(["simulate", chsh, "--strategy", str(s), "--rounds", "2000"], 0)
    run(["gyni", chsh], 6)
    run(["value", str(args.fixtures / "cube3.game"), "--classical", "--budget", "16"], 4)
    run(["simulate", str(args.fixtures / "star3.game"), "--strategy",
         str(strategies[0])], 5)

    with tempfile.TemporaryDirectory() as tmp:
        tmp = pathlib.Path(tmp)
        bad = tmp / "bad.game"
        bad.write_text("{\n  \"n\": ,\n}\n")
        report = run(["validate", str(bad)], 3)
        if report and report["error"].get("line") != 2:
            failures.append("parse error report lacks line 2")

        broken = load(args.fixtures / "chsh.game")
        broken["m"] = 2
        invalid = tmp / "invalid.game"
        invalid.write_text(json.dumps(broken))
        run(["validate", str(invalid)], 2)

        # canonical serialization: witness strategies written by value
        # parse back through simulate
        report = run(["value", chsh, *quick], 0)
        if report:
            for kind in ("classical", "quantum"):
                path = tmp / f"{kind}.strategy"
                path.write_text(json.dumps(report["strategies"][kind]))
                check("strategy", report["strategies"][kind], f"{kind} witness")
                run(["simulate", chsh, "--strategy", str(path), "--rounds", "500"], 0)

    for f in failures:
        print("FAIL", f)
    print(f"{len(games)} games, {len(strategies)} strategies checked; "
          f"{len(failures)} failures")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
