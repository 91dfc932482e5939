#!/usr/bin/env python3
"""Regenerate the shipped session files in sessions/ from the corpus."""

import os
import sys

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

from coringlab.corpus import corpus_sessions
from coringlab.session import write_session


def main():
    out_dir = os.path.join(os.path.dirname(__file__), "..", "sessions")
    os.makedirs(out_dir, exist_ok=True)
    for fname, raw in corpus_sessions().items():
        path = os.path.join(out_dir, fname)
        write_session(raw, path)
        print(f"wrote {path}")


if __name__ == "__main__":
    main()
