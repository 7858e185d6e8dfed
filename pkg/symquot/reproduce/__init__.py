"""Reproduction of the worked examples as named, self-checking items."""

from symquot.reproduce.registry import ITEM_DEFINITIONS, list_items, run_item, run_items

__all__ = ["ITEM_DEFINITIONS", "list_items", "run_item", "run_items"]
