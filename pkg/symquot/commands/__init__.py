"""CLI subcommands; each module exposes ``register(subparsers)``."""

from symquot.commands import analyze, brackets, classify, invariants, reduce, relations, reproduce, series, verify_map

COMMANDS = (analyze, reduce, invariants, relations, brackets, series, classify, verify_map, reproduce)

__all__ = ["COMMANDS"]
