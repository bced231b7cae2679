import argparse

import pytest

from rfcodes.config import CensusConfig, SampleConfig, SearchConfig, add_arguments, from_namespace


def test_defaults_round_trip():
    ap = argparse.ArgumentParser()
    add_arguments(ap, CensusConfig)
    assert from_namespace(CensusConfig, ap.parse_args([])) == CensusConfig()


def test_flags():
    ap = argparse.ArgumentParser()
    add_arguments(ap, SampleConfig)
    cfg = from_namespace(SampleConfig, ap.parse_args(["--n", "5", "--dup-bound", "1", "--seed", "9"]))
    assert cfg == SampleConfig(n=5, seed=9, search=SearchConfig(dup_bound=1))


def test_validation():
    with pytest.raises(ValueError):
        SearchConfig(dup_bound=0)
