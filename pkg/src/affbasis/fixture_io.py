"""Loading helpers for the plain-text fixture tables shipped with the
package.  Format: one colored partition per line as color:degree tokens,
with `|` separating a partition from a marked embedding where applicable;
blank lines and `#` comments are skipped."""

from __future__ import annotations

import importlib.resources as resources
import json

from .partitions import Part, parse_partition


def _fixture_text(name: str) -> str:
    return resources.files("affbasis").joinpath(f"fixtures/{name}").read_text()


def _data_lines(name: str) -> list[str]:
    out = []
    for line in _fixture_text(name).splitlines():
        line = line.strip()
        if line and not line.startswith("#"):
            out.append(line)
    return out


def load_color_pairs(name: str) -> list[tuple[int, int]]:
    return [(int(line[0]), int(line[1])) for line in _data_lines(name)]


def load_partitions(name: str) -> list:
    return [parse_partition(line) for line in _data_lines(name)]


def load_lemma12_fixture() -> set[tuple[tuple[Part, ...], tuple[Part, ...]]]:
    out = set()
    for line in _data_lines("lemma12_overlaps.txt"):
        pi_text, rho_text = line.split("|")
        out.add((parse_partition(pi_text).parts, parse_partition(rho_text).parts))
    return out


def load_report_schema() -> dict:
    return json.loads(_fixture_text("report_schema.json"))
