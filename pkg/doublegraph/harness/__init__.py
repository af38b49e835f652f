"""Verification harness: corpora, the check registry, and the suite runner."""

from .checks import CheckId, replay_counterexample
from .corpus import CorpusSpec, iter_corpus
from .suite import probe_midband_max_lambda, run_suite

__all__ = ["CheckId", "CorpusSpec", "iter_corpus", "probe_midband_max_lambda",
           "replay_counterexample", "run_suite"]
