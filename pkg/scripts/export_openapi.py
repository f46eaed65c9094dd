#!/usr/bin/env python3
"""Regenerate docs/workbench-openapi.json from the live app definition."""

import json
from pathlib import Path

from polymin.workbench import create_app


def main() -> None:
    spec = create_app().openapi()
    out = Path(__file__).resolve().parents[1] / "docs" / "workbench-openapi.json"
    out.write_text(json.dumps(spec, indent=2, sort_keys=True) + "\n")
    print(f"wrote {out}")


if __name__ == "__main__":
    main()
