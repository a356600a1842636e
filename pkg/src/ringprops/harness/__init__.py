"""Corpus generation, the theorem suite, separation search and the CLI."""

from .corpus import (Corpus, CorpusEntry, CorpusSpec, corpus_from_descriptions, generate_corpus,
                     named_ring)
from .separation import Separation, find_separation
from .theorems import REGISTRY, THEOREM_IDS, report_violations, run_theorem_suite

__all__ = ["Corpus", "CorpusEntry", "CorpusSpec", "corpus_from_descriptions", "generate_corpus",
           "named_ring", "Separation", "find_separation", "REGISTRY", "THEOREM_IDS",
           "report_violations", "run_theorem_suite"]
