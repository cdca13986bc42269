#!/usr/bin/env python3
"""Render the smell catalogue to docs/catalogue.md and docs/catalogue.json.

The markdown section numbers are the anchors that SmellDescriptor.section
points at; a snapshot test keeps the rendered files in sync with the
registry.
"""

from __future__ import annotations

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from smelt.catalogue import GROUP_ORDER, GROUP_NAMES, descriptor_as_dict, list_smells
from smelt.report import canonical_json

DOCS = Path(__file__).resolve().parent.parent / "docs"


def render_markdown() -> str:
    lines = [
        "# Data smell catalogue",
        "",
        "Fourteen data smells in five groups. Keys are stable identifiers",
        "used by `smelt scan`, `--disable`, and the JSON report.",
        "",
        "| key | name | group |",
        "| --- | --- | --- |",
    ]
    for d in list_smells():
        lines.append(f"| `{d.key}` | {d.name} | {d.group_name} ({d.group}) |")
    lines.append("")
    for gi, group in enumerate(GROUP_ORDER, start=1):
        lines.append(f"## {gi}. {GROUP_NAMES[group]} ({group})")
        lines.append("")
        in_group = [d for d in list_smells() if d.group == group]
        for d in in_group:
            lines.append(f"### {d.section}. `{d.key}` — {d.name}")
            lines.append("")
            lines.append(d.description)
            lines.append("")
            lines.append(f"**Why it matters.** {d.rationale}")
            lines.append("")
            lines.append(f"**Suggested refactoring.** {d.mitigation}")
            lines.append("")
            lines.append(
                f"Default severity: `{d.default_severity}`; "
                f"default confidence: `{d.default_confidence}`."
            )
            lines.append("")
    return "\n".join(lines)


def main() -> None:
    DOCS.mkdir(parents=True, exist_ok=True)
    (DOCS / "catalogue.md").write_text(render_markdown(), encoding="utf-8")
    payload = canonical_json([descriptor_as_dict(d) for d in list_smells()])
    (DOCS / "catalogue.json").write_bytes(payload + b"\n")
    print(f"wrote {DOCS / 'catalogue.md'}")
    print(f"wrote {DOCS / 'catalogue.json'}")


if __name__ == "__main__":
    main()
