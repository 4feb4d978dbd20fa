"""Collects one result line per acceptance criterion for the terminal summary."""

from __future__ import annotations

RESULTS: dict[int, str] = {}


def record(number: int, title: str, ok: bool, detail: str) -> None:
    RESULTS[number] = f"[{'PASS' if ok else 'FAIL'}] criterion {number:>2} {title}: {detail}"
