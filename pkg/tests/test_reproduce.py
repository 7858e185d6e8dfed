"""Worked-example items of the reproduction registry."""

from __future__ import annotations

import pytest

from symquot.errors import ArgumentError
from symquot.models import ItemStatus
from symquot.reproduce import ITEM_DEFINITIONS, list_items, run_item, run_items


def test_items_are_listed_once():
    names = [item["name"] for item in list_items()]
    assert len(names) == len(set(names))
    assert names[0] == "ex3.6"
    assert "ansatz" in names
    assert list_items() is ITEM_DEFINITIONS


def test_unknown_item():
    with pytest.raises(ArgumentError):
        run_item("sec9")


@pytest.mark.parametrize("name", ["ex3.6", "cor5.2", "sec6.abprime"])
def test_quick_items_pass(name):
    result = run_item(name)
    failed = [c.name for c in result.checks if not c.passed]
    assert result.status is ItemStatus.PASS, failed
    assert result.checks


@pytest.mark.slow
@pytest.mark.parametrize("name", ["prop4.x", "thm4.5", "sec6.ab", "sec6.abdoubleprime", "ansatz"])
def test_slow_items_pass(name):
    result = run_item(name)
    failed = [c.name for c in result.checks if not c.passed]
    assert result.status is ItemStatus.PASS, failed


def test_summary_counts():
    summary = run_items("ex3.6")
    assert (summary.passed, summary.failed) == (1, 0)
    assert summary.items[0].description.startswith("Type II_4")
