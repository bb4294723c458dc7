"""Anchors this directory on sys.path so tests can import the shared oracles."""
