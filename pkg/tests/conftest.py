import os
import sys

import pytest
from hypothesis import settings

sys.path.insert(0, os.path.dirname(__file__))

settings.register_profile("ci", deadline=None, derandomize=True)
settings.load_profile("ci")


@pytest.fixture(scope="session")
def corpus_instances():
    """Every corpus variant at its suggested numeric bindings."""
    import homsuper.corpus as corpus

    out = {}
    for entry_id in corpus.ENTRY_IDS:
        bindings = corpus.suggested_bindings(entry_id)
        for variant in corpus.variant_names(entry_id):
            out[(entry_id, variant)] = corpus.build(entry_id, variant, bindings)
    return out
