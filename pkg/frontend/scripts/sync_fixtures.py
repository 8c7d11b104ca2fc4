#!/usr/bin/env python3
"""Regenerate src/fixtures.ts from the backend package fixtures.

Run from anywhere after changing files under src/archsynth/fixtures/:

    python3 frontend/scripts/sync_fixtures.py
"""

from __future__ import annotations

import json
from pathlib import Path

import archsynth as a

OUT = Path(__file__).resolve().parent.parent / "src" / "fixtures.ts"


def indented(doc: object) -> str:
    return json.dumps(doc, indent=2).replace("\n", "\n    ")


def main() -> None:
    lines = [
        "// Bundled reference scenarios and cost models, copied verbatim from the",
        "// backend package fixtures (src/archsynth/fixtures). Regenerate with",
        "// scripts/sync_fixtures.py after changing them.",
        "",
        'import type { CostModelDoc, ScenarioDoc } from "./types.js";',
        "",
        "export interface FixtureBundle {",
        "  scenario: ScenarioDoc;",
        "  costs: CostModelDoc | null;",
        "}",
        "",
        "export const FIXTURES: Record<string, FixtureBundle> = {",
    ]
    for name in a.FIXTURE_NAMES:
        scenario = json.loads(a.fixture_text(name))
        try:
            costs = json.loads(a.fixture_text(name, "costs"))
        except FileNotFoundError:
            costs = None
        lines.append(f"  {json.dumps(name)}: {{")
        lines.append(f"    scenario: {indented(scenario)} as ScenarioDoc,")
        costs_ts = "null" if costs is None else f"{indented(costs)} as CostModelDoc"
        lines.append(f"    costs: {costs_ts},")
        lines.append("  },")
    lines += ["};", "", "export const FIXTURE_NAMES = Object.keys(FIXTURES);", ""]
    OUT.write_text("\n".join(lines), "utf-8")
    print(f"wrote {OUT}")


if __name__ == "__main__":
    main()
