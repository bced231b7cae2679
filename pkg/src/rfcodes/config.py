"""Run settings shared by the experiment scripts."""

from __future__ import annotations

import argparse
from dataclasses import dataclass, fields

from .dimension import DEFAULT_BUDGET, DEFAULT_DUP_BOUND


@dataclass(frozen=True)
class SearchConfig:
    dup_bound: int = DEFAULT_DUP_BOUND
    budget: int = DEFAULT_BUDGET

    def __post_init__(self):
        if self.dup_bound < 1 or self.budget < 1:
            raise ValueError("dup_bound and budget must be positive")


@dataclass(frozen=True)
class CensusConfig:
    n: int = 3
    search: SearchConfig = SearchConfig()
    jobs: int = 1
    cert_dir: str | None = None
    output: str | None = None


@dataclass(frozen=True)
class SampleConfig:
    n: int = 4
    count: int = 200
    seed: int = 0
    search: SearchConfig = SearchConfig()


def add_arguments(parser: argparse.ArgumentParser, cls) -> None:
    """One ``--flag`` per scalar field of ``cls``, plus the nested search fields."""
    for f in fields(cls):
        if f.name == "search":
            add_arguments(parser, SearchConfig)
            continue
        flag = "--" + f.name.replace("_", "-")
        kind = int if isinstance(f.default, int) else str
        parser.add_argument(flag, type=kind, default=f.default)


def from_namespace(cls, ns: argparse.Namespace):
    kw = {}
    for f in fields(cls):
        if f.name == "search":
            kw["search"] = from_namespace(SearchConfig, ns)
        else:
            kw[f.name] = getattr(ns, f.name)
    return cls(**kw)
